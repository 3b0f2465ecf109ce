import json
import subprocess
import sys

import pytest

from lazymc import cli
from lazymc.graph import load_edge_list, save_binary

TRIANGLE_PLUS = "# a triangle with a tail\n10 20\n20 30\n10 30\n30 40\n"


@pytest.fixture
def graph_file(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text(TRIANGLE_PLUS)
    return p


def run(argv, capsys):
    code = cli.main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_prints_omega_and_clique(graph_file, capsys):
    code, out, _ = run(["solve", "--input", graph_file], capsys)
    assert code == cli.EXIT_OK
    assert out.splitlines() == ["omega=3", "clique=10 20 30"]


def test_solve_json(graph_file, tmp_path, capsys):
    target = tmp_path / "r.json"
    code, _, _ = run(["solve", "--input", graph_file, "--threads", 2, "--phi", 0.3,
                      "--json", target], capsys)
    assert code == 0
    data = json.loads(target.read_text())
    assert {"omega", "exact", "clique", "config", "phases", "filters", "dispatch",
            "heuristics", "degeneracy"} <= set(data)
    assert data["omega"] == 3 and data["exact"] is True
    assert data["config"]["threads"] == 2 and data["config"]["phi"] == 0.3


def test_solve_then_verify_round_trip(graph_file, tmp_path, capsys):
    _, out, _ = run(["solve", "--input", graph_file], capsys)
    clique = tmp_path / "c.txt"
    clique.write_text(out)
    code, out, _ = run(["verify", "--input", graph_file, "--clique", clique], capsys)
    assert code == cli.EXIT_OK and out.startswith("PASS")


def test_verify_reports_missing_edge(graph_file, tmp_path, capsys):
    clique = tmp_path / "c.txt"
    clique.write_text("10 20 40\n")
    code, out, _ = run(["verify", "--input", graph_file, "--clique", clique], capsys)
    assert code == cli.EXIT_NOT_CLIQUE
    assert "(10, 40)" in out or "(20, 40)" in out


def test_verify_unknown_vertex(graph_file, tmp_path, capsys):
    clique = tmp_path / "c.txt"
    clique.write_text("10 99\n")
    code, out, _ = run(["verify", "--input", graph_file, "--clique", clique], capsys)
    assert code == cli.EXIT_NOT_CLIQUE and "99" in out


def test_stats(graph_file, capsys):
    code, out, _ = run(["stats", "--input", graph_file], capsys)
    assert code == 0
    kv = dict(line.split("=", 1) for line in out.splitlines())
    assert kv["omega"] == "3" and kv["degeneracy"] == "2"
    assert float(kv["may_vertices"]) == pytest.approx(0.75)
    code, out, _ = run(["stats", "--input", graph_file, "--omega", 2], capsys)
    assert "omega=2" in out


def test_binary_format(graph_file, tmp_path, capsys):
    b = tmp_path / "g.bin"
    save_binary(load_edge_list(graph_file), b)
    code, out, _ = run(["solve", "--input", b, "--format", "binary"], capsys)
    assert code == 0 and out.startswith("omega=3")


def test_missing_file(tmp_path, capsys):
    code, _, err = run(["solve", "--input", tmp_path / "nope.txt"], capsys)
    assert code == cli.EXIT_MISSING_FILE and "error" in err


def test_parse_error_names_the_line(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("1 2\n3 x\n")
    code, _, err = run(["solve", "--input", p], capsys)
    assert code == cli.EXIT_PARSE_ERROR and "2" in err


@pytest.mark.parametrize("argv", [
    ["solve"],
    ["solve", "--input", "g", "--phi", "2"],
    ["solve", "--input", "g", "--threads", "0"],
    ["solve", "--input", "g", "--prepopulate", "some"],
    ["frobnicate"],
])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(argv)
    assert exc.value.code == cli.EXIT_USAGE


def test_bench_runs(capsys):
    code, out, _ = run(["bench", "--size", 32, "--universe", 64, "--trials", 20], capsys)
    assert code == 0
    assert out.count("us/op") == 6


def test_module_entry_point(graph_file):
    proc = subprocess.run([sys.executable, "-m", "lazymc", "solve", "--input", str(graph_file)],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("omega=3")


@pytest.mark.parametrize("graph, clique, code, text", [
    ("0 1\n1 2\n0 2\n", "0 1 2\n", cli.EXIT_OK, "PASS"),
    ("0 1\n1 2\n", "0 2\n", cli.EXIT_NOT_CLIQUE, "(0, 2)"),
])
def test_verify_examples(tmp_path, capsys, graph, clique, code, text):
    g, c = tmp_path / "g.txt", tmp_path / "c.txt"
    g.write_text(graph)
    c.write_text(clique)
    got, out, _ = run(["verify", "--input", g, "--clique", c], capsys)
    assert got == code and text in out
