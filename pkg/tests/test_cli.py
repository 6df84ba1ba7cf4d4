import csv
import subprocess
import sys

import pytest

from domdyn import bench
from domdyn.cli import main
from domdyn.dbs import DepthBasedSearch
from domdyn.graph import read_graph


@pytest.fixture
def files(tmp_path):
    g = tmp_path / "g.txt"
    s = tmp_path / "s.txt"
    assert main(["gen", "--kind", "random", "--n", "40", "--m", "150", "--seed", "2",
                 "-o", str(g)]) == 0
    assert main(["seq", "--graph", str(g), "--ifrac", "20", "--dfrac", "20", "--seed", "1",
                 "-o", str(s)]) == 0
    return g, s


def test_gen_writes_family(tmp_path, capsys):
    out = tmp_path / "fig1.txt"
    assert main(["gen", "--kind", "fig1", "--n", "8", "-o", str(out)]) == 0
    n, s, edges = read_graph(out)
    assert (n, s, len(edges)) == (8, 1, 12)
    assert "m=12" in capsys.readouterr().out


def test_seq_header(files):
    _, s = files
    assert s.read_text().splitlines()[0] == "s 1 20 20 120"
    seq = bench.read_sequence(s)
    assert seq.count(bench.OpKind.INSERT) == 30


@pytest.mark.parametrize("algo", ["slt", "dsnca", "dbs", "sgl"])
def test_run_appends_csv(files, tmp_path, algo, capsys):
    g, s = files
    out = tmp_path / "out.csv"
    assert main(["run", "--graph", str(g), "--seq", str(s), "--algo", algo,
                 "--verify-every", "1", "--csv", str(out)]) == 0
    rows = list(csv.DictReader(out.read_text().splitlines()))
    assert rows[0]["algo"] == algo and rows[0]["verified"] == "ok"
    assert rows[0]["graph"] == "g" and rows[0]["insertions"] == "30"
    assert f"algo={algo}" in capsys.readouterr().out


def test_verify_lockstep(files, capsys):
    g, s = files
    assert main(["verify", "--graph", str(g), "--seq", str(s), "--algos", "slt,dsnca,dbs,sgl"]) == 0
    assert capsys.readouterr().out.startswith("ok:")


class _Lazy(DepthBasedSearch):
    def after_insert(self, x, y):
        pass


def test_mismatch_exits_nonzero(files, monkeypatch, capsys):
    g, s = files
    monkeypatch.setitem(bench.ENGINES, "dbs", _Lazy)
    assert main(["run", "--graph", str(g), "--seq", str(s), "--algo", "dbs",
                 "--verify-every", "1"]) == 1
    err = capsys.readouterr().err
    assert "mismatch after update" in err and "expected parent" in err


def test_bad_input_exits_nonzero(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("p 3 2 1\na 1 2\n")
    assert main(["seq", "--graph", str(bad), "-o", str(tmp_path / "s")]) == 2
    assert main(["run", "--graph", str(tmp_path / "missing"), "--seq", str(bad),
                 "--algo", "dbs"]) == 2
    assert "error:" in capsys.readouterr().err


def test_unknown_algorithm_in_verify(files):
    g, s = files
    assert main(["verify", "--graph", str(g), "--seq", str(s), "--algos", "dbs,nope"]) == 2


def test_module_entry_point(tmp_path):
    out = tmp_path / "d.txt"
    r = subprocess.run([sys.executable, "-m", "domdyn.cli", "gen", "--kind", "randdag",
                        "--n", "10", "--m", "20", "-o", str(out)], capture_output=True, text=True)
    assert r.returncode == 0
    assert read_graph(out)[0] == 10
