from math import comb

import pytest

from oracles import ballot, catalan, fh_qcatalan
from qcatalan.poly import MultiPoly, UniPoly, eval_at_root, parse_multipoly, parse_unipoly
from qcatalan.triangles import (carlitz_qcatalan, classical_triangle, cyclotomic_triangle,
                                e_exponent, mirror_triangle, multi_triangle, q_triangle,
                                qp_triangle, randrianarivony)

# printed table of the q-triangle, rows 0..4
Q_TABLE = [
    ["1"],
    ["1", "1"],
    ["q", "1+q", "1+q"],
    ["q^3", "q+q^2+q^3", "1+2q+q^2+q^3", "1+2q+q^2+q^3"],
    ["q^6", "q^3+q^4+q^5+q^6", "q+2q^2+2q^3+2q^4+q^5+q^6",
     "1+3q+3q^2+3q^3+2q^4+q^5+q^6", "1+3q+3q^2+3q^3+2q^4+q^5+q^6"],
]


def test_classical_rows():
    t = classical_triangle(6)
    assert t.row(4) == [1, 4, 9, 14, 14]
    assert t.row(6) == [1, 6, 20, 48, 90, 132, 132]


def test_classical_matches_ballot_closed_form():
    t = classical_triangle(15)
    for (n, k), v in t:
        assert v == ballot(n, k)
    assert [t[n, n] for n in range(16)] == [catalan(n) for n in range(16)]


def test_out_of_range_is_zero():
    t = q_triangle(3)
    assert t[2, 3] == UniPoly()
    assert classical_triangle(3)[1, 2] == 0
    with pytest.raises(KeyError):
        t[4, 0]


def test_q_table():
    t = q_triangle(4)
    for n, row in enumerate(Q_TABLE):
        assert t.row(n) == [parse_unipoly(s) for s in row]


def test_q_at_one_and_cells_immutable():
    t, c = q_triangle(10), classical_triangle(10)
    for (n, k), v in t:
        assert v(1) == c[n, k]
    with pytest.raises(TypeError):
        t.cells[0, 0] = UniPoly([2])


def test_mirror_examples():
    m = mirror_triangle(8)
    assert all(m[n, 0] == UniPoly([1]) for n in range(9))
    assert m[3, 2] == UniPoly([1, 1, 2, 1])
    c = classical_triangle(8)
    assert all(v(1) == c[n, k] for (n, k), v in m)


def test_mirror_equals_reversal():
    q, m = q_triangle(25), mirror_triangle(25)
    for (n, k), v in m:
        assert v == q[n, k].reverse(comb(n, 2))


def test_carlitz_sequence():
    fh = carlitz_qcatalan(12)
    assert fh[0] == fh[1] == UniPoly([1])
    assert fh[2] == UniPoly([1, 1])
    assert fh[3] == UniPoly([1, 2, 1, 1])
    q = q_triangle(12)
    assert all(q[n, n] == fh[n] for n in range(13))


def test_carlitz_matches_enumeration():
    fh = carlitz_qcatalan(7)
    for n in range(8):
        assert list(fh[n].coeffs) == fh_qcatalan(n)


def test_qp_examples():
    t = qp_triangle(3)
    assert t[2, 2] == parse_multipoly("p+q", 2)
    assert t[3, 3] == parse_multipoly("p^3+2qp^2+q^2p+q^3", 2)
    assert t[3, 2] == parse_multipoly("q^3+q^2p+2qp^2+p^3", 2)


def test_qp_specializations_and_homogeneity():
    qp, m = qp_triangle(12), mirror_triangle(12)
    for (n, k), v in qp:
        assert v.specialize(1) == m[n, k]
        if n <= 10:
            assert v.is_homogeneous(comb(n, 2))
    for n in range(13):
        assert qp[n, n].collapse() == UniPoly.monomial(comb(n, 2), catalan(n))


def test_randrianarivony():
    r = randrianarivony(8)
    one = MultiPoly.constant(2, 1)
    assert r[0] == r[1] == one
    assert r[2] == parse_multipoly("q+1", 2)
    assert [x.at_ones() for x in r] == [catalan(n) for n in range(9)]
    assert qp_triangle(2)[2, 2] != r[2]


def test_e_exponent():
    for n in range(10):
        assert e_exponent(1, n, 1) == comb(n, 2)
        for i in (1, 2, 3):
            assert e_exponent(i, 0, 3) == e_exponent(i, 1, 3) == 0
    assert e_exponent(1, 3, 2) == 2
    assert e_exponent(2, 3, 2) == 1
    with pytest.raises(ValueError):
        e_exponent(3, 4, 2)


def test_multi_reductions():
    q, c = q_triangle(8), classical_triangle(8)
    one = multi_triangle(8, 1)
    for (n, k), v in one:
        assert v.collapse() == q[n, k]
    for mu in (2, 3, 4):
        for (n, k), v in multi_triangle(8, mu):
            assert v.at_ones() == c[n, k]
            assert v.collapse() == q[n, k]


def test_multi_mu2_is_not_the_qp_triangle():
    # The multivariate recurrence at mu = 2 differs from the (q,p) triangle already at (2,1).
    m, qp = multi_triangle(4, 2), qp_triangle(4)
    assert m[2, 1] == parse_multipoly("1+q", 2)
    assert qp[2, 1] == parse_multipoly("p+q", 2)


def test_cyclotomic_triangle():
    c = classical_triangle(6)
    for (n, k), v in cyclotomic_triangle(6, 1):
        assert v == c[n, k]
    t2 = cyclotomic_triangle(5, 2)
    assert t2[3, 3] == -1
    assert t2[2, 0] == -1
    q = q_triangle(6)
    for mu in (3, 4, 6):
        for (n, k), v in cyclotomic_triangle(6, mu):
            assert v == eval_at_root(q[n, k], mu)
