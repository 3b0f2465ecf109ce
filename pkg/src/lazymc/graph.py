"""Input graph handling: CSR storage, loaders, induced subgraphs, complements."""
from __future__ import annotations

import io
import os
import struct
from dataclasses import dataclass, field
from typing import Iterable, Sequence, TextIO

import numpy as np

BINARY_MAGIC = b"LZMCCSR1"
_HEADER = struct.Struct("<8sQQ")


class GraphParseError(ValueError):
    """Raised when an edge list line cannot be parsed."""

    def __init__(self, lineno: int, line: str, reason: str = "expected two integer tokens"):
        self.lineno = lineno
        self.line = line
        super().__init__(f"line {lineno}: {reason}: {line.strip()!r}")


@dataclass(frozen=True, eq=False)
class CsrGraph:
    """Immutable undirected simple graph in compressed sparse rows.

    ``labels[v]`` is the id vertex ``v`` carried in the input file.
    """

    offsets: np.ndarray
    neighbors: np.ndarray
    labels: np.ndarray = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.labels is None:
            object.__setattr__(self, "labels", np.arange(self.n, dtype=np.int64))

    @property
    def n(self) -> int:
        return len(self.offsets) - 1

    @property
    def m(self) -> int:
        """Directed edge count (twice the number of undirected edges)."""
        return int(self.offsets[-1])

    @property
    def num_edges(self) -> int:
        return self.m // 2

    def degrees(self) -> np.ndarray:
        return np.diff(self.offsets)

    def degree(self, v: int) -> int:
        return int(self.offsets[v + 1] - self.offsets[v])

    def neighbors_of(self, v: int) -> np.ndarray:
        return self.neighbors[self.offsets[v]:self.offsets[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.neighbors_of(u)
        i = np.searchsorted(nb, v)
        return bool(i < len(nb) and nb[i] == v)

    def edges(self) -> np.ndarray:
        """Undirected edges as an (E, 2) array with u < v."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees())
        dst = self.neighbors.astype(np.int64)
        keep = src < dst
        return np.stack([src[keep], dst[keep]], axis=1)

    def check(self) -> None:
        """Full structural audit; raises AssertionError on any violation."""
        off, nb = self.offsets, self.neighbors
        assert off[0] == 0 and off[-1] == len(nb)
        assert np.all(np.diff(off) >= 0)
        src = np.repeat(np.arange(self.n), self.degrees())
        assert not np.any(src == nb), "self-loop"
        if len(nb):
            same_row = src[1:] == src[:-1]
            assert np.all(nb[1:][same_row] > nb[:-1][same_row]), "unsorted or duplicate neighbors"
        fwd = set(zip(src.tolist(), nb.tolist()))
        assert all((v, u) in fwd for u, v in fwd), "asymmetric adjacency"

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] | np.ndarray,
                   labels: np.ndarray | None = None) -> "CsrGraph":
        """Build from dense-id edges; drops self-loops and duplicates, symmetrizes."""
        e = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
        e = e.reshape(-1, 2)
        e = e[e[:, 0] != e[:, 1]]
        both = np.concatenate([e, e[:, ::-1]])
        if len(both):
            key = np.unique(both[:, 0] * max(n, 1) + both[:, 1])
            src, dst = key // max(n, 1), key % max(n, 1)
        else:
            src = dst = np.zeros(0, dtype=np.int64)
        offsets = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=offsets[1:])
        return cls(offsets, dst.astype(np.int32), labels)


def _parse_lines(lines: Sequence[str]) -> np.ndarray:
    pairs = []
    for lineno, line in enumerate(lines, 1):
        s = line.strip()
        if not s or s[0] in "#%":
            continue
        tok = s.split()
        if len(tok) < 2:
            raise GraphParseError(lineno, line)
        try:
            pairs.append((int(tok[0]), int(tok[1])))
        except ValueError:
            raise GraphParseError(lineno, line) from None
    return np.asarray(pairs, dtype=np.int64).reshape(-1, 2)


def _parse_text(text: str) -> np.ndarray:
    lines = text.splitlines()
    body = [ln for ln in lines if ln.strip() and ln.lstrip()[0] not in "#%"]
    tokens = " ".join(body).split()
    if len(tokens) == 2 * len(body):
        # fast path: every data line has exactly two tokens
        try:
            return np.array(tokens, dtype=np.int64).reshape(-1, 2)
        except ValueError:
            pass
    return _parse_lines(lines)


def load_edge_list(source: TextIO | str | os.PathLike) -> CsrGraph:
    """Read a whitespace separated ``u v`` edge list.

    Lines starting with ``#`` or ``%`` are comments. Tokens after the first
    two on a line (weights, timestamps) are ignored. Input ids may be sparse;
    they are compacted to ``0..n-1`` in ascending order of the original id.
    """
    if isinstance(source, (str, os.PathLike)):
        with open(source, "r", encoding="utf-8", errors="replace") as fh:
            text = fh.read()
    else:
        text = source.read()
    pairs = _parse_text(text)
    if pairs.size == 0:
        return CsrGraph(np.zeros(1, dtype=np.int64), np.zeros(0, dtype=np.int32),
                        np.zeros(0, dtype=np.int64))
    labels, dense = np.unique(pairs, return_inverse=True)
    return CsrGraph.from_edges(len(labels), dense.reshape(-1, 2), labels)


def load_binary(path: str | os.PathLike) -> CsrGraph:
    """Read the binary CSR format written by :func:`save_binary`."""
    with open(path, "rb") as fh:
        raw = fh.read()
    if len(raw) < _HEADER.size:
        raise GraphParseError(0, "", "truncated binary header")
    magic, n, m = _HEADER.unpack_from(raw)
    if magic != BINARY_MAGIC:
        raise GraphParseError(0, "", "bad magic in binary graph")
    pos = _HEADER.size
    need = pos + 8 * (n + 1) + 4 * m
    if len(raw) < need:
        raise GraphParseError(0, "", "truncated binary graph")
    offsets = np.frombuffer(raw, dtype="<u8", count=n + 1, offset=pos).astype(np.int64)
    neighbors = np.frombuffer(raw, dtype="<u4", count=m, offset=pos + 8 * (n + 1)).astype(np.int32)
    return CsrGraph(offsets, neighbors)


def save_binary(G: CsrGraph, path: str | os.PathLike) -> None:
    with open(path, "wb") as fh:
        fh.write(_HEADER.pack(BINARY_MAGIC, G.n, G.m))
        fh.write(G.offsets.astype("<u8").tobytes())
        fh.write(G.neighbors.astype("<u4").tobytes())


def load_graph(path: str | os.PathLike, fmt: str = "edgelist") -> CsrGraph:
    if fmt == "binary":
        return load_binary(path)
    if fmt == "edgelist":
        return load_edge_list(path)
    raise ValueError(f"unknown graph format {fmt!r}")


def edge_list_graph(text: str) -> CsrGraph:
    """Convenience for tests and demos."""
    return load_edge_list(io.StringIO(text))


def is_clique(G: CsrGraph, vertices: Iterable[int]) -> bool:
    return first_non_edge(G, vertices) is None


def first_non_edge(G: CsrGraph, vertices: Iterable[int]) -> tuple[int, int] | None:
    vs = list(vertices)
    for i, u in enumerate(vs):
        rest = np.asarray(vs[i + 1:], dtype=np.int64)
        if not len(rest):
            break
        ok = np.isin(rest, G.neighbors_of(u))
        if not ok.all():
            return u, int(rest[np.argmin(ok)])
    return None


@dataclass(frozen=True, eq=False)
class InducedSubgraph:
    """``G[S]`` with adjacency kept both as id lists and as bitmasks.

    ``masks[i]`` has bit ``j`` set when ``members[i]`` and ``members[j]``
    are adjacent.
    """

    members: tuple[int, ...]
    masks: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.members[j] for j in _bits(mask)) for mask in self.masks)

    @property
    def directed_edges(self) -> int:
        return sum(mask.bit_count() for mask in self.masks)

    @property
    def density(self) -> float:
        k = len(self.members)
        if k < 2:
            return 0.0
        return self.directed_edges / (k * (k - 1))

    def edge_set(self) -> set[tuple[int, int]]:
        mem = self.members
        return {(mem[i], mem[j]) for i, mask in enumerate(self.masks) for j in _bits(mask) if i < j}


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def induced_subgraph(G, S: Iterable[int]) -> InducedSubgraph:
    """Cut ``G[S]`` out of a CsrGraph or a LazyGraph.

    On a LazyGraph the hashed neighborhoods are used, so filtering applied
    when those were built carries over.
    """
    members = tuple(sorted(int(s) for s in S))
    index = {v: i for i, v in enumerate(members)}
    masks = []
    if isinstance(G, CsrGraph):
        for v in members:
            mask = 0
            for u in G.neighbors_of(v).tolist():
                j = index.get(u)
                if j is not None:
                    mask |= 1 << j
            masks.append(mask)
    else:
        for v in members:
            nb = G.get_hashed_neighborhood(v)
            mask = 0
            for j, u in enumerate(members):
                if u in nb:
                    mask |= 1 << j
            masks.append(mask)
    return InducedSubgraph(members, tuple(masks))


@dataclass(frozen=True, eq=False)
class ComplementAdjacency:
    """Non-edges of an induced subgraph as bit-rows over member indices."""

    members: tuple[int, ...]
    rows: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2


def complement_adjacency(H: InducedSubgraph | ComplementAdjacency) -> ComplementAdjacency:
    rows = H.masks if isinstance(H, InducedSubgraph) else H.rows
    full = (1 << len(rows)) - 1
    return ComplementAdjacency(
        H.members, tuple(full & ~row & ~(1 << i) for i, row in enumerate(rows)))
