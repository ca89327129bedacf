import csv
import json
import subprocess
import sys
from pathlib import Path

import pytest

from ordsub.cli import main
from ordsub.core import BIPARTITE, OrderedGraph, complete_graph, cycle_graph
from ordsub.instances import random_instance
from ordsub.io import read_og, write_og

GOLDEN = Path(__file__).parent / "golden"
C6 = OrderedGraph(6, BIPARTITE, cycle_graph(6).edges, tuple("XY" * 3))


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def files(tmp_path):
    def write(name, G):
        path = tmp_path / name
        write_og(G, path)
        return path
    return write


def test_verify(capsys, files):
    code, out, _ = run(capsys, "verify", "--kind", "interval", files("k4.og", complete_graph(4)))
    assert (code, out) == (0, "OK\n")
    code, out, _ = run(capsys, "verify", "--kind", "interval", files("c4.og", cycle_graph(4)))
    assert (code, out) == (1, "FAIL witness=(1,2,4) reason=interval\n")
    code, out, _ = run(capsys, "verify", "--kind", "interval", "--json", files("c4.og", cycle_graph(4)))
    assert json.loads(out)["witness"] == [1, 2, 4]


def test_malformed_file(capsys, tmp_path, files):
    bad = tmp_path / "bad.og"
    bad.write_text("og 1\nkind undirected\nn 2\nm 1\ne 2 1\n")
    code, _, err = run(capsys, "verify", "--kind", "interval", bad)
    assert code == 3 and err.startswith("invalid input")
    code, _, _ = run(capsys, "verify", "--kind", "bogus", files("k2.og", complete_graph(2)))
    assert code == 2


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as err:
        main(["solve", "--problem", "tsp", "a", "b"])
    assert err.value.code == 2
    capsys.readouterr()
    assert run(capsys, "reduce", "--from", "ops", "--to", "spider", "--pi", "1,x", "--rho", "1")[0] == 2
    assert run(capsys, "reduce", "--from", "ops", "--to", "split", "--pi", "1", "--rho", "1")[0] == 2
    assert run(capsys, "bench", "--suite", "nope", "--out", "/dev/null")[0] == 2


def test_solve_outputs(capsys, files):
    K = files("k3.og", complete_graph(3))
    C = files("c4.og", cycle_graph(4))
    code, out, _ = run(capsys, "solve", "--problem", "mcois", K, K)
    assert code == 0 and out.splitlines()[0] == "VALUE 3"
    assert out.splitlines()[1:] == ["pair 1 1", "pair 2 2", "pair 3 3"]
    code, out, _ = run(capsys, "solve", "--problem", "osi", "--algo", "brute", C, K)
    assert (code, out) == (1, "NO\n")
    code, out, _ = run(capsys, "solve", "--problem", "oisi", "--algo", "brute", K, K)
    assert code == 0 and out.splitlines()[0] == "YES"


@pytest.mark.parametrize("problem", ["osi", "oisi", "mcos", "mcois"])
def test_json_agrees_with_text(capsys, files, problem):
    G = files("g.og", random_instance("arbitrary", 6, 0.5, 8))
    H = files("h.og", random_instance("arbitrary", 3, 0.5, 9))
    code, text, _ = run(capsys, "solve", "--problem", problem, "--algo", "brute", G, H)
    code_j, raw, _ = run(capsys, "solve", "--problem", problem, "--algo", "brute", "--json", G, H)
    rec = json.loads(raw)
    assert code == code_j
    first = text.splitlines()[0]
    if problem in ("osi", "oisi"):
        assert first == ("YES" if rec["decision"] else "NO")
    else:
        assert first == f"VALUE {rec['value']}"


def test_shift2dor_agrees_with_brute(capsys, files):
    for seed in range(15):
        G = files("g.og", random_instance("2dor", 12, 0.4, seed))
        H = files("h.og", random_instance("arbitrary", 3, 0.5, seed + 50))
        fast = run(capsys, "solve", "--problem", "osi", "--algo", "shift2dor", G, H)
        slow = run(capsys, "solve", "--problem", "osi", "--algo", "brute", G, H)
        assert fast[0] == slow[0]
        assert fast[1] == slow[1] or fast[0] == 0


def test_precondition_and_guard(capsys, files):
    C = files("c6.og", C6)
    bad = OrderedGraph(4, BIPARTITE, frozenset({(1, 3), (3, 4)}), ("X", "X", "Y", "X"))
    code, _, err = run(capsys, "solve", "--problem", "osi", "--algo", "shift2dor", files("bad.og", bad), C)
    assert code == 3 and "witness" in err
    big = files("big.og", random_instance("arbitrary", 40, 0.5, 1))
    assert run(capsys, "solve", "--problem", "mcos", "--algo", "brute", big, big)[0] == 4


def test_gen_and_reduce(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "--class", "threshold", "--n", "0")
    assert code == 0 and out == "og 1\nkind undirected\nn 0\nm 0\n"
    dest = tmp_path / "t.og"
    assert run(capsys, "gen", "--class", "interval", "--n", "6", "--seed", "3", "--out", dest)[0] == 0
    assert read_og(dest).n == 6
    bb = tmp_path / "c6.og"
    write_og(C6, bb)
    prefix = tmp_path / "bb"
    assert run(capsys, "reduce", "--from", "bb", "--to", "split", "--graph", bb, "--k", "2",
               "--out", prefix)[0] == 0
    code, out, _ = run(capsys, "solve", "--problem", "osi", "--algo", "brute",
                       f"{prefix}.G.og", f"{prefix}.H.og")
    assert (code, out) == (1, "NO\n")


def test_bench(capsys, tmp_path):
    out = tmp_path / "b.csv"
    code, _, _ = run(capsys, "bench", "--suite", "inclusion", "--size", 3, "--out", out)
    rows = list(csv.DictReader(out.open()))
    assert code == 0 and len(rows) == 3 * 2
    assert list(rows[0]) == ["instance", "problem", "algo", "value_or_decision", "millis",
                             "states_visited"]
    by_inst = {}
    for r in rows:
        by_inst.setdefault(r["instance"], set()).add(r["value_or_decision"])
    assert all(len(v) == 1 for v in by_inst.values())


def test_sample_golden(capsys, tmp_path):
    prefix = tmp_path / "sample"
    assert run(capsys, "reduce", "--from", "ops", "--to", "spider", "--pi", "4,2,1,6,3,5",
               "--rho", "2,3,1", "--out", prefix)[0] == 0
    for part in ("G", "H"):
        assert Path(f"{prefix}.{part}.og").read_bytes() == (GOLDEN / f"sample.{part}.og").read_bytes()
    code, out, _ = run(capsys, "solve", "--problem", "osi", "--algo", "brute",
                       f"{prefix}.G.og", f"{prefix}.H.og")
    assert code == 0 and out.encode() == (GOLDEN / "sample.solve.txt").read_bytes()


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "ordsub", "gen", "--class", "chain", "--n", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("og 1\n")
