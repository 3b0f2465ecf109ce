"""Exact maximum clique search with lazy, filtered neighbor sets."""
from .driver import PhaseReport, SolverConfig, choose_algorithm, lazy_mc, must_may_stats
from .graph import (ComplementAdjacency, CsrGraph, GraphParseError, InducedSubgraph,
                    complement_adjacency, induced_subgraph, is_clique, load_binary,
                    load_edge_list, load_graph, save_binary)
from .incumbent import Incumbent
from .lazygraph import LazyGraph
from .ordering import CorenessInfo, VertexOrder, determine_sort_order, kcore

__all__ = [
    "ComplementAdjacency", "CorenessInfo", "CsrGraph", "GraphParseError", "Incumbent",
    "InducedSubgraph", "LazyGraph", "PhaseReport", "SolverConfig", "VertexOrder",
    "choose_algorithm", "complement_adjacency", "determine_sort_order", "induced_subgraph",
    "is_clique", "kcore", "lazy_mc", "load_binary", "load_edge_list", "load_graph",
    "must_may_stats", "save_binary",
]
