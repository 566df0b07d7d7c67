import csv
import io
import json
import subprocess
import sys

import pytest

from spectramin import cli, fixtures, formulas
from spectramin.search import CSV_COLUMNS, MinimizerReport


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


def test_rho_on_seventeen_edge_fixture():
    code, text = run("rho", fixtures.graph6("n8e17_min"))
    assert code == 0
    d = json.loads(text)
    assert d["rho"] == pytest.approx(4.281, abs=1e-3)
    assert (d["n"], d["e"]) == (8, 17)
    assert d["error_bound"] <= 1e-9
    assert len(d["char_poly"]) == 9


def test_rho_from_file(tmp_path):
    f = tmp_path / "g.g6"
    f.write_text("# triangle\nBw\n")
    code, text = run("rho", f"@{f}", "--format", "text")
    assert code == 0 and "rho: 2.0" in text


def test_construct_and_transform():
    code, text = run("construct", "g2g3even:n=8,p=1")
    assert code == 0 and text.strip()
    code, text = run("construct", "alon:t=2,n=9", "--format", "json")
    rows = [json.loads(x) for x in text.splitlines()]
    assert code == 0 and len(rows) == 2 and all(r["connected"] for r in rows)
    code, text = run("transform", "Cr", "kelmans:u=1,v=2")
    d = json.loads(text)
    assert code == 0 and d["rho_after"] >= d["rho_before"]


def test_minimize_json_and_text():
    code, text = run("minimize", "--n", "6", "--e", "8")
    rep = MinimizerReport.from_json(text)
    assert code == 0 and len(rep.minimizers) == 2
    code, text = run("minimize", "--n", "6", "--e", "8", "--format", "text")
    assert code == 0 and "minimizers=2" in text


def test_table_is_deterministic_and_csv(tmp_path):
    path = tmp_path / "t.csv"
    code, first = run("table", "--nmax", "6", "--csv", str(path))
    _, second = run("table", "--nmax", "6")
    assert code == 0 and first == second
    for line in first.splitlines():
        MinimizerReport.from_json(line)
    with open(path) as fh:
        rows = list(csv.reader(fh))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert len(rows) == 1 + len(first.splitlines())


def test_verify_ok():
    code, text = run("verify", "--nmax", "6")
    assert code == 0
    assert "MISMATCH" not in text and "hong=NO" not in text


@pytest.mark.parametrize("argv", [
    ("bogus",),
    ("rho",),
    ("rho", "not-graph6!"),
    ("minimize", "--n", "6"),
    ("table",),
    ("table", "--nmax", "10"),
    ("rho", "Bw", "--tol", "0"),
    ("rho", "Bw", "--workers", "0"),
    ("table", "--nmax", "4", "--e-range", "3-x"),
])
def test_usage_errors_exit_1(argv):
    assert run(*argv)[0] == cli.EXIT_USAGE


@pytest.mark.parametrize("argv", [
    ("construct", "regular:n=7"),
    ("construct", "circulant:n=7,d=3"),
    ("minimize", "--n", "5", "--e", "11"),
    ("rho", "B?"),  # three isolated vertices
    ("transform", "Cr", "rotate:r=0,s=1,t=1"),
])
def test_infeasible_exit_2(argv):
    assert run(*argv)[0] == cli.EXIT_INFEASIBLE


def test_budget_exit_3(monkeypatch):
    monkeypatch.setenv(cli.BUDGET_ENV, "0")
    code, _ = run("table", "--nmax", "6")
    assert code == cli.EXIT_BUDGET


def test_contradicted_formula_exits_4(monkeypatch):
    real = formulas._r11

    def wrong(n, e):
        p = real(n, e)
        if p is None or n != 5:
            return p
        return formulas.RegimePrediction(p.regime, n, e, p.rho_min_value + 0.5, None, p.families,
                                         p.constraints)

    monkeypatch.setattr(formulas, "_DISPATCH", (wrong,))
    code, text = run("verify", "--nmax", "5")
    assert code == cli.EXIT_VERIFY
    assert "MISMATCH" in text


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "spectramin", "minimize", "--n", "4", "--e", "3"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    d = json.loads(res.stdout)
    assert (d["n"], d["e"], len(d["minimizers"])) == (4, 3, 1)
