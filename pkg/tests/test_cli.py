import csv
import io
import json
import subprocess
import sys
from collections import Counter

import pytest

from qcatalan.cli import build_table, format_table, main, parse_latex_table, OutputFormat
from qcatalan.poly import parse_multipoly, parse_unipoly


def run(capsys, *args):
    code = main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def test_table_classical_csv(capsys):
    code, out, _ = run(capsys, "table", "--kind", "classical", "--n-max", "6", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows[0][0] == "n"
    assert rows[5][:6] == ["4", "1", "4", "9", "14", "14"]
    assert rows[7] == ["6", "1", "6", "20", "48", "90", "132", "132"]


def test_table_q_latex(capsys):
    code, out, _ = run(capsys, "table", "--kind", "q", "--n-max", "4", "--format", "latex")
    assert code == 0
    assert "1{+}3q{+}3q^2{+}3q^3{+}2q^4{+}q^5{+}q^6" in out
    cells = parse_latex_table(out)
    assert cells[4][3] == "1{+}3q{+}3q^2{+}3q^3{+}2q^4{+}q^5{+}q^6"


def test_table_mirror_small(capsys):
    _, out, _ = run(capsys, "table", "--kind", "mirror", "--n-max", "1")
    assert out.splitlines()[1:] == ["0,1", "1,1,1"]


@pytest.mark.parametrize("kind,mu", [("q", None), ("mirror", None), ("qp", None), ("multi", 3)])
def test_latex_roundtrip(kind, mu):
    table = build_table(kind, 6, mu)
    cells = parse_latex_table(format_table(table, OutputFormat.LATEX))
    for n in range(7):
        for k in range(n + 1):
            text = cells[n][k]
            if kind in ("q", "mirror"):
                assert parse_unipoly(text) == table[n, k]
            else:
                assert parse_multipoly(text, table.mu) == table[n, k]


@pytest.mark.parametrize("kind,mu", [("classical", None), ("q", None), ("cyclotomic", 3),
                                     ("qp", None)])
def test_csv_and_json_carry_same_cells(kind, mu):
    table = build_table(kind, 6, mu)
    rows = list(csv.reader(io.StringIO(format_table(table, OutputFormat.CSV))))[1:]
    from_csv = Counter(v for r in rows for v in r[1:] if v != "")
    doc = json.loads(format_table(table, OutputFormat.JSON))
    from_json = Counter(str(v) for r in doc["rows"] for v in r)
    assert from_csv == from_json


def test_table_requires_mu(capsys):
    code, _, err = run(capsys, "table", "--kind", "multi", "--n-max", "3")
    assert code == 2 and "--mu" in err


def test_enumerate_paths(capsys):
    _, out, _ = run(capsys, "enumerate", "--family", "path", "--n", "3", "--k", "2", "--with-stats")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["path"] for r in rows] == ["EEENN", "EENEN", "EENNE", "ENEEN", "ENENE"]
    assert [int(r["area"]) for r in rows] == [0, 1, 2, 2, 3]
    assert [int(r["complement"]) for r in rows] == [3, 2, 1, 1, 0]


def test_enumerate_perms(capsys):
    _, out, _ = run(capsys, "enumerate", "--family", "perm:312", "--n", "3", "--k", "2",
                    "--with-stats", "--format", "json")
    rows = json.loads(out)
    assert len(rows) == 5
    assert {"perm", "cell", "inv", "coinv", "sigma"} <= set(rows[0])
    assert all(r["inv"] + r["coinv"] == 3 for r in rows)


def test_enumerate_single_and_trees(capsys):
    _, out, _ = run(capsys, "enumerate", "--family", "path", "--n", "1", "--k", "0")
    assert out.splitlines() == ["path", "E"]
    _, out, _ = run(capsys, "enumerate", "--family", "tree", "--n", "3", "--k", "3",
                    "--with-stats")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert sorted(int(r["stat"]) for r in rows) == [0, 1, 1, 2, 3]


def test_enumerate_bounds(capsys):
    code, _, err = run(capsys, "enumerate", "--family", "path", "--n", "3", "--k", "4")
    assert code == 2 and "error" in err


def test_verify_commands(capsys):
    code, out, _ = run(capsys, "verify", "--check", "CHK-QINV", "--n-max", "6")
    assert code == 0 and json.loads(out)["status"] == "pass"
    code, out, _ = run(capsys, "verify", "--check", "CHK-CYCLO2", "--n-max", "5")
    assert code == 0 and json.loads(out)["status"] == "report-only"
    code, _, err = run(capsys, "verify", "--check", "CHK-BOGUS")
    assert code == 2 and "unknown check" in err
    code, out, _ = run(capsys, "verify", "--check", "CHK-MIRROR", "--n-max", "4",
                       "--format", "csv")
    assert code == 0 and out.startswith("check_id,status,n,k,tag")


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--check", "all", "--n-max", "4", "--n-max-poly", "8")
    docs = json.loads(out)
    assert code == 0 and len(docs) == 19


def test_verify_exit_status_on_failure(capsys, monkeypatch):
    from qcatalan import verify

    def broken(n_max, mu):
        return [verify.Cell(0, 0, "x", "1", "2", False)], []

    patched = dict(verify.REGISTRY)
    patched["CHK-QINV"] = verify._Check(broken, "perm", verify._ALL)
    monkeypatch.setattr(verify, "REGISTRY", patched)
    code, _, _ = run(capsys, "verify", "--check", "CHK-QINV", "--n-max", "2")
    assert code == 1


def test_bijection_commands(capsys):
    assert run(capsys, "bijection", "--map", "phi", "--input", "21", "--n", "3", "--k", "1")[1] \
        == "231\n"
    assert run(capsys, "bijection", "--map", "path-word", "--input", "EENEN")[1] == "00101\n"
    assert run(capsys, "bijection", "--map", "psi", "--input", "321", "--n", "3", "--k", "0")[1] \
        == "EEE\n"
    assert run(capsys, "bijection", "--map", "psi-inverse", "--input", "EEE")[1] == "321\n"
    assert run(capsys, "bijection", "--map", "word-path", "--input", "00101")[1] == "EENEN\n"
    assert run(capsys, "bijection", "--map", "path-tree", "--input", "EEENNN")[1] == \
        "(((.,.),.),.)\n"
    code, _, err = run(capsys, "bijection", "--map", "phi", "--input", "12", "--n", "3",
                       "--k", "0")
    assert code == 2 and "cell index" in err
    code, _, _ = run(capsys, "bijection", "--map", "word-path", "--input", "10")
    assert code == 2
    code, _, _ = run(capsys, "bijection", "--map", "psi", "--input", "321")
    assert code == 2


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "qcatalan", "table", "--kind", "classical",
                          "--n-max", "2"], capture_output=True, text=True, check=True)
    assert out.stdout.splitlines()[-1] == "2,1,2,2"
