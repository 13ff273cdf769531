import io
import sys
from pathlib import Path

import pytest

from urvkit.cli import run
from urvkit.formats import read_graph, read_layout
from urvkit.geometry import extract_graph

GOLDEN = Path(__file__).resolve().parent.parent / "golden"


def call(argv, stdin="", monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def cli(monkeypatch, capsys):
    return lambda argv, stdin="": call(argv, stdin, monkeypatch, capsys)


def test_extract_golden_dot(cli):
    code, out, _ = cli(["extract", str(GOLDEN / "k4.layout"), "--dot"])
    assert code == 0 and out.count("--") == 6


def test_complete_five_fails_with_reason(cli):
    code, _, err = cli(["synth", "complete", "--n", "5"])
    assert code == 1 and "K_5" in err and "monotone" in err


def test_dense_pipes_into_audit(cli):
    code, layout, _ = cli(["gen", "dense", "--n", "64"])
    assert code == 0
    code, out, _ = cli(["audit"], stdin=layout)
    assert code == 0 and "edges 294" in out


def test_audit_failure_status(cli):
    code, _, err = cli(["audit"], stdin="a 0 0\nb 1/2 0\n")
    assert code == 1 and "disjoint" in err


def test_usage_and_format_errors(cli):
    assert cli(["extract", "--nope"])[0] == 2
    code, _, err = cli(["extract"], stdin="a 0\n")
    assert code == 2 and "<stdin>:1:" in err
    assert cli(["extract", "/no/such/file"])[0] == 2
    assert cli(["search", "--target", "-", "--step", "1/4"], stdin="1 2\n")[0] == 2


def test_synth_tree_and_weak(cli, tmp_path):
    dec = tmp_path / "t.dec"
    code, out, _ = cli(["synth", "tree", "--decomposition", str(dec)], stdin="0 1\n0 2\n0 3\n0 4\n0 5\n0 6\n")
    assert code == 0 and len(extract_graph(read_layout(out)).edges) == 6
    assert len(dec.read_text().splitlines()) == 6
    star7 = "".join(f"0 {i}\n" for i in range(1, 8))
    assert cli(["synth", "tree"], stdin=star7)[0] == 1
    code, out, _ = cli(["synth", "tree", "--weak"], stdin=star7)
    assert code == 0 and len(read_layout(out)) == 8


def test_synth_variants(cli):
    code, out, _ = cli(["synth", "cycle", "--n", "7"])
    assert code == 0 and len(extract_graph(read_layout(out)).edges) == 7
    assert cli(["synth", "kmn", "--kmn", "3", "4"])[0] == 0
    assert cli(["synth", "kmn", "--kmn", "2", "9"])[0] == 1
    assert cli(["synth", "kmn", "--kmn", "2", "9", "--weak"])[0] == 0
    assert cli(["synth", "kmn", "--kmn", "4", "4", "--weak"])[0] == 1
    code, out, _ = cli(["synth", "linarb2"], stdin="1 2\n2 3\n3 4\n4 1\n1 3\n2 4\n")
    assert code == 0 and len(extract_graph(read_layout(out)).edges) == 6
    assert cli(["synth", "linarb2"], stdin="".join(f"{a} {b}\n" for a in range(5) for b in range(a + 1, 5)))[0] == 1


def test_gen_trees(cli, tmp_path):
    code, out, _ = cli(["gen", "tbs", "--s", "3"])
    assert code == 0 and len(read_graph(out).edges) == 15
    dec = tmp_path / "trs.dec"
    code, out, _ = cli(["gen", "trs", "--s", "2", "--layout", "--decomposition", str(dec)])
    assert code == 0 and len(extract_graph(read_layout(out)).edges) == 34
    assert len(dec.read_text().splitlines()) == 34


def test_bounds_split_render_search(cli, tmp_path):
    code, out, _ = cli(["bounds", "--n", "81", "--json"])
    assert code == 0 and '"bipartite_bound": 311' in out
    k4 = (GOLDEN / "k4.layout").read_text()
    code, out, _ = cli(["split"], stdin=k4)
    assert code == 0 and "# gx" in out and "# gy" in out
    svg = tmp_path / "k4.svg"
    assert cli(["render", "-o", str(svg), "--edges"], stdin=k4)[0] == 0
    assert svg.read_text().count("<rect") == 4
    code, out, _ = cli(["search", "--target", "-", "--step", "1", "--extent", "4"], stdin="1 2\n2 3\n3 4\n4 1\n")
    assert code == 0 and len(read_layout(out)) == 4
    k5 = "".join(f"{a} {b}\n" for a in range(5) for b in range(a + 1, 5))
    code, _, err = cli(["search", "--target", "-", "--step", "1/2", "--extent", "4"], stdin=k5)
    assert code == 1 and "evidence only" in err


def test_refute_command(cli):
    code, out, _ = cli(["refute-k5", "--trials", "200", "--seed", "3"])
    assert code == 0 and '"k5_found": 0' in out
