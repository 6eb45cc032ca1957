import json
import subprocess
import sys
from dataclasses import replace
from fractions import Fraction

import pytest

from plandec import cli
from plandec.decomposition import quadratic_decomp
from plandec.drawing import Drawing
from plandec.graph import Graph, complete_graph, format_edge_list, grid_graph, octahedron, v8_graph


def write_graph(tmp_path, g: Graph, name="g.txt") -> str:
    p = tmp_path / name
    p.write_text(format_edge_list(g))
    return str(p)


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_quadratic_k6_order(tmp_path, capsys):
    code, out, err = run(["decompose", "--quadratic", "--in", write_graph(tmp_path, complete_graph(6))], capsys)
    assert code == 0
    assert len(json.loads(out)["bags"]) == 21
    assert "order" in err


def test_empty_graph(tmp_path, capsys):
    code, out, _ = run(["decompose", "--in", write_graph(tmp_path, Graph(0))], capsys)
    assert code == 0 and json.loads(out)["bags"] == []


def test_out_file_puts_table_on_stdout(tmp_path, capsys):
    dest = tmp_path / "d.json"
    code, out, _ = run(["decompose", "--in", write_graph(tmp_path, grid_graph(3, 3)), "--out", str(dest)], capsys)
    assert code == 0 and "quantity" in out
    assert json.loads(dest.read_text())["host"]["n"] == 9


def test_deterministic_output(tmp_path, capsys):
    path = write_graph(tmp_path, octahedron())
    outs = [run(["draw", "--in", path, "--seed", "5"], capsys)[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_parse_errors(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 1\n0 7\n")
    assert run(["decompose", "--in", str(bad)], capsys)[0] == 2
    assert run(["decompose", "--in", str(tmp_path / "missing.txt")], capsys)[0] == 2
    junk = tmp_path / "junk.json"
    junk.write_text("{not json")
    assert run(["verify", "--in", str(junk)], capsys)[0] == 2
    junk.write_text('{"something": 1}')
    assert run(["verify", "--in", str(junk)], capsys)[0] == 2


def test_precondition_k5_input(tmp_path, capsys):
    path = write_graph(tmp_path, complete_graph(5))
    assert run(["k5-decomp", "--in", path], capsys)[0] == 3
    assert run(["k5-draw", "--in", path, "--verify", "full"], capsys)[0] == 3


def test_full_verification_respects_cap(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("PLANDEC_ORACLE_CAP", "6")
    path = write_graph(tmp_path, v8_graph())
    assert run(["k5-draw", "--in", path, "--verify", "full"], capsys)[0] == 3
    monkeypatch.setenv("PLANDEC_ORACLE_CAP", "18/25")
    assert run(["k5-draw", "--in", path, "--verify", "full"], capsys)[0] == 0


def test_verify_round_trip_and_removed_bag(tmp_path, capsys):
    d = quadratic_decomp(complete_graph(4))
    good = tmp_path / "d.json"
    good.write_text(json.dumps(d.to_json()))
    assert run(["verify", "--in", str(good)], capsys)[0] == 0
    data = d.to_json()
    # dropping a bag that holds an edge breaks the decomposition
    victim = next(i for i, b in enumerate(data["bags"]) if len(b) == 2)
    data["bags"].pop(victim)
    data["dedges"] = [[a - (a > victim), b - (b > victim)] for a, b in data["dedges"]
                      if victim not in (a, b)]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    assert run(["verify", "--in", str(bad)], capsys)[0] != 0


def test_verify_triple_point_drawing(tmp_path, capsys):
    g = Graph(6, [(0, 1), (2, 3), (4, 5)])
    pts = [(-1, 0), (1, 0), (0, -1), (0, 1), (-1, -1), (1, 1)]
    dr = Drawing(g, tuple((Fraction(x), Fraction(y)) for x, y in pts), ((), (), ()))
    p = tmp_path / "dr.json"
    p.write_text(json.dumps(dr.to_json()))
    assert run(["verify", "--in", str(p)], capsys)[0] == 4


def test_drawn_artifact_verifies_full(tmp_path, capsys):
    dest = tmp_path / "dr.json"
    svg = tmp_path / "dr.svg"
    code, _, _ = run(["k33-draw", "--in", write_graph(tmp_path, complete_graph(5)), "--out", str(dest),
                      "--svg", str(svg)], capsys)
    assert code == 0 and svg.read_text().startswith("<svg")
    assert run(["verify", "--in", str(dest), "--verify", "full"], capsys)[0] == 0


@pytest.mark.parametrize("argv", [
    ["k5-decomp"], ["k5-draw"], ["k33-draw"], ["tree-partition"], ["convex-draw"],
    ["decompose", "--class", "k5"], ["decompose", "--class", "k5", "--strong"],
    ["decompose", "--class", "k5", "--strong", "--p", "3"], ["decompose", "--class", "treewidth"],
])
def test_subcommands_on_octahedron(tmp_path, capsys, argv):
    assert run(argv + ["--in", write_graph(tmp_path, octahedron())], capsys)[0] == 0


def test_fault_injection_exits_4(tmp_path, capsys, monkeypatch):
    real = cli.validate

    def broken(d):
        rep = real(d)
        return replace(rep, ok=False, violations=rep.violations + ["injected fault"])
    monkeypatch.setattr(cli, "validate", broken)
    assert run(["decompose", "--in", write_graph(tmp_path, grid_graph(2, 3))], capsys)[0] == 4


def test_console_entry_point(tmp_path):
    res = subprocess.run([sys.executable, "-m", "plandec.cli", "decompose", "--quadratic",
                          "--in", write_graph(tmp_path, complete_graph(3))], capture_output=True, text=True)
    assert res.returncode == 0 and len(json.loads(res.stdout)["bags"]) == 6
