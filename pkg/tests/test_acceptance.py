"""Acceptance gate: ten criteria, one PASS/FAIL line each (run with -s to see them)."""
import time
from math import comb

from oracles import gf
from qcatalan.bijections import psi, psi_inverse
from qcatalan.lattice import _path_strings, area, gen_paths
from qcatalan.perms import coinv, inv, phi_insert, s_cell, s_prime
from qcatalan.poly import UniPoly, parse_multipoly, parse_unipoly
from qcatalan.triangles import (catalan, classical_triangle, mirror_triangle, q_triangle,
                                qp_triangle, randrianarivony)
from qcatalan.verify import REPORT_ONLY, run_check

CLASSICAL = [
    [1],
    [1, 1],
    [1, 2, 2],
    [1, 3, 5, 5],
    [1, 4, 9, 14, 14],
    [1, 5, 14, 28, 42, 42],
    [1, 6, 20, 48, 90, 132, 132],
]

Q_TABLE = [
    ["1"],
    ["1", "1"],
    ["q", "1+q", "1+q"],
    ["q^3", "q+q^2+q^3", "1+2q+q^2+q^3", "1+2q+q^2+q^3"],
    ["q^6", "q^3+q^4+q^5+q^6", "q+2q^2+2q^3+2q^4+q^5+q^6", "1+3q+3q^2+3q^3+2q^4+q^5+q^6",
     "1+3q+3q^2+3q^3+2q^4+q^5+q^6"],
]


def best_of(fn, runs=20, before=None):
    """Minimum wall time in seconds over several runs, plus the last result."""
    best, out = float("inf"), None
    for _ in range(runs):
        if before:
            before()
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def timed(fn):
    t = time.perf_counter()
    out = fn()
    return time.perf_counter() - t, out


def report(num, ok, elapsed, limit, detail):
    ok = ok and elapsed < limit
    print(f"\n{'PASS' if ok else 'FAIL'} criterion {num}: {detail} "
          f"({elapsed * 1000:.3f} ms, limit {limit * 1000:.0f} ms)")
    return ok


def test_criterion_1_classical_table():
    elapsed, t = best_of(lambda: classical_triangle(6))
    got = [t.row(n) for n in range(7)]
    assert report(1, got == CLASSICAL, elapsed, 1e-3, "classical triangle, 28 entries exact")


def test_criterion_2_q_table():
    elapsed, t = best_of(lambda: q_triangle(4))
    want = [[parse_unipoly(s) for s in row] for row in Q_TABLE]
    got = [t.row(n) for n in range(5)]
    ok = got == want and sum(len(r) for r in got) == 15
    ok = ok and t[4, 2] == parse_unipoly("q+2q^2+2q^3+2q^4+q^5+q^6")
    assert report(2, ok, elapsed, 1e-3, "q-triangle, 15 polynomial entries exact")


def test_criterion_3_worked_path_example():
    def run():
        paths = gen_paths(3, 2)
        areas = [area(g) for g in paths]
        return [str(g) for g in paths], areas

    elapsed, (paths, areas) = best_of(run, before=_path_strings.cache_clear)
    ok = paths == ["EEENN", "EENEN", "EENNE", "ENEEN", "ENENE"]
    ok = ok and areas == [0, 1, 2, 2, 3]
    ok = ok and [3 - a for a in areas] == [3, 2, 1, 1, 0]
    ok = ok and UniPoly(gf(3 - a for a in areas)) == q_triangle(3)[3, 2]
    assert report(3, ok, elapsed, 1e-3, "five paths of (3,2) with areas and complements")


def test_criterion_4_qinv():
    elapsed, rep = timed(lambda: run_check("CHK-QINV", 8))
    ok = rep.status == "pass" and rep.all_ok and len(rep.cells) == 45
    assert report(4, ok, elapsed, 10.0, f"CHK-QINV n<=8, {len(rep.cells)} cells")


def test_criterion_5_mirror():
    elapsed, rep = timed(lambda: run_check("CHK-MIRROR", 25))
    tags = {c.tag for c in rep.cells}
    ok = rep.status == "pass" and rep.all_ok and tags == {"reverse", "at-one"}
    assert report(5, ok, elapsed, 5.0, f"CHK-MIRROR n<=25, {len(rep.cells)} cells")


def test_criterion_6_area_equals_word_inversions():
    elapsed, rep = timed(lambda: run_check("CHK-AREAEQ", 10))
    ok = rep.status == "pass" and rep.all_ok
    assert report(6, ok, elapsed, 30.0, f"area = word inversions n<=10, {len(rep.cells)} cells")


def _transport():
    bad = []
    for n in range(8):
        for k in range(n + 1):
            members = s_prime(n, k, "312")
            images = [psi(p, n, k) for p in members]
            if sorted(images) != gen_paths(n, k):
                bad.append(("psi-image", n, k))
            for p, g in zip(members, images):
                if area(g) != coinv(p) or psi_inverse(g, n, k) != p:
                    bad.append(("psi", n, k, str(p)))
    for n in range(1, 9):
        for k in range(n):
            src = s_prime(n - 1, k, "312")
            image = [phi_insert(p, n, k) for p in src]
            if sorted(image) != s_cell(n, k, "312") or len(set(image)) != len(image):
                bad.append(("phi-image", n, k))
            for p, x in zip(src, image):
                if inv(x) - inv(p) != n - k - 1:
                    bad.append(("phi-shift", n, k, str(p)))
    return bad


def test_criterion_7_bijection_transport():
    elapsed, bad = timed(_transport)
    assert report(7, not bad, elapsed, 30.0,
                  "psi bijective with area = coinv (n<=7), phi shifts inv by n-k-1 (n<=8)"), bad[:5]


def test_criterion_8_report_only_ranges():
    t0 = time.perf_counter()
    lines, ok = [], True
    for check_id in ("CHK-CLASSIF", "CHK-INVSTAR", "CHK-QP-CONJ", "CHK-UNIV"):
        rep = run_check(check_id, 5)
        failing = rep.failing()
        # every deviation must carry an explicit counterexample naming its cell
        explained = all(any(f"n={c.n} k={c.k}" in s for s in rep.counterexamples)
                        for c in failing)
        ok = ok and rep.status == REPORT_ONLY and bool(rep.cells) and explained
        lines.append(f"{check_id} {len(rep.cells) - len(failing)}/{len(rep.cells)} cells confirmed"
                     + (f", {len(failing)} deviations with counterexamples" if failing else ""))
        if check_id != "CHK-INVSTAR":
            ok = ok and not failing
        else:
            ok = ok and all(c.tag == "attained" for c in failing)
    elapsed = time.perf_counter() - t0
    assert report(8, ok, elapsed, 60.0, "; ".join(lines))


def test_criterion_9_specializations():
    def run():
        qp, mt = qp_triangle(12), mirror_triangle(12)
        first = all(qp[n, k].specialize(1) == mt[n, k] for n in range(13) for k in range(n + 1))
        second = all(qp[n, n].collapse() == UniPoly.monomial(comb(n, 2), catalan(n))
                     for n in range(11))
        third = (qp[2, 2] == parse_multipoly("p+q", 2)
                 and randrianarivony(2)[2] == parse_multipoly("q+1", 2))
        return first, second, third

    elapsed, parts = timed(run)
    assert report(9, all(parts), elapsed, 5.0,
                  "C(1,p) = mirror n<=12, C_nn(q,q) = C_n q^binom(n,2) n<=10, "
                  "p+q vs q+1 at (2,2)"), parts


def test_criterion_10_cyclotomic_reporting(capsys):
    from qcatalan.cli import main

    t0 = time.perf_counter()
    codes = [main(["verify", "--check", c, "--n-max", "5", "--mu", "2"])
             for c in ("CHK-CYCLO", "CHK-CYCLO2")]
    elapsed = time.perf_counter() - t0
    capsys.readouterr()
    cyc = run_check("CHK-CYCLO", 5, mu=2)
    cyc2 = run_check("CHK-CYCLO2", 5, mu=2)
    conj = next(c for c in cyc.cells if c.tag == "binomial" and c.n == 3)
    sign = next(c for c in cyc2.cells if (c.n, c.k) == (3, 3))
    ok = codes == [0, 0] and conj.actual == sign.actual == "-1"
    ok = ok and conj.expected.endswith("= 3") and sign.expected.endswith("= -5")
    ok = ok and len(cyc2.cells) == 21
    with capsys.disabled():
        print("\n  n k  computed   sign formula   binomial formula")
        for c in cyc2.cells:
            other = next((d.expected.split("= ")[-1] for d in cyc.cells
                          if d.tag == "binomial" and (d.n, d.n) == (c.n, c.k)), "")
            print(f"  {c.n} {c.k}  {c.actual:>8}   {c.expected.split('= ')[-1]:>12}   {other:>16}")
        assert report(10, ok, elapsed, 1.0,
                      "C_{n,k}(-1) for n<=5 beside both claimed formulas, exit status 0")
