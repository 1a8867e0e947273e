"""Recurrence engines for the Catalan triangle and its q, (q,p), multivariate
and cyclotomic refinements, plus two single-index reference sequences."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from types import MappingProxyType
from typing import Any, Callable, Mapping

from .poly import CycInt, MultiPoly, UniPoly, eval_at_root

MAX_N = 200


@dataclass(frozen=True)
class TriangleTable:
    """Cells (n, k) for 0 <= k <= n <= n_max; k > n reads as zero."""

    kind: str
    n_max: int
    cells: Mapping[tuple[int, int], Any]
    mu: int | None = None
    zero: Any = field(default=0, repr=False)

    def __getitem__(self, nk: tuple[int, int]):
        n, k = nk
        if not 0 <= n <= self.n_max or k < 0:
            raise KeyError(nk)
        if k > n:
            return self.zero
        return self.cells[n, k]

    def row(self, n: int) -> list:
        return [self.cells[n, k] for k in range(n + 1)]

    def rows(self) -> list[list]:
        return [self.row(n) for n in range(self.n_max + 1)]

    def __iter__(self):
        for n in range(self.n_max + 1):
            for k in range(n + 1):
                yield (n, k), self.cells[n, k]


def _check(n_max):
    if not 0 <= n_max <= MAX_N:
        raise ValueError(f"n_max={n_max} outside 0..{MAX_N}")


def _build(kind, n_max, base, step, zero, mu=None) -> TriangleTable:
    """Row-major DP: C[n,0] = base(n); C[n,k] = C[n,k-1] + step(n, k, C[n-1,k]).

    ``step`` is only called when the cell (n-1, k) exists, i.e. k <= n-1.
    """
    _check(n_max)
    cells: dict[tuple[int, int], Any] = {}
    for n in range(n_max + 1):
        cells[n, 0] = base(n)
        for k in range(1, n + 1):
            value = cells[n, k - 1]
            if k <= n - 1:
                value = value + step(n, k, cells[n - 1, k])
            cells[n, k] = value
    return TriangleTable(kind, n_max, MappingProxyType(cells), mu=mu, zero=zero)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def classical_triangle(n_max: int) -> TriangleTable:
    return _build("classical", n_max, lambda n: 1, lambda n, k, up: up, 0)


def q_triangle(n_max: int) -> TriangleTable:
    return _build(
        "q", n_max,
        lambda n: UniPoly.monomial(comb(n, 2)),
        lambda n, k, up: up.shift(n - k - 1),
        UniPoly(),
    )


def mirror_triangle(n_max: int) -> TriangleTable:
    return _build(
        "mirror", n_max,
        lambda n: UniPoly.constant(1),
        lambda n, k, up: up.shift(k),
        UniPoly(),
    )


def qp_triangle(n_max: int) -> TriangleTable:
    """Bivariate triangle over (q, p): the (n-1, k) term carries q^(n-k-1) p^k."""
    return _build(
        "qp", n_max,
        lambda n: MultiPoly.monomial((comb(n, 2), 0)),
        lambda n, k, up: up.mul_monomial((n - k - 1, k)),
        MultiPoly(2),
        mu=2,
    )


def e_exponent(i: int, n: int, mu: int) -> int:
    """Number of pairs a < b <= n with a congruent to i mod mu (classes 1..mu)."""
    if not 1 <= i <= mu:
        raise ValueError(f"residue class {i} outside 1..{mu}")
    return sum(n - a for a in range(1, n + 1) if (a - 1) % mu + 1 == i)


def multi_triangle(n_max: int, mu: int) -> TriangleTable:
    if mu < 1:
        raise ValueError(f"mu must be positive, got {mu}")

    def base(n):
        return MultiPoly.monomial(tuple(e_exponent(i, n, mu) for i in range(1, mu + 1)))

    def step(n, k, up):
        exps = [0] * mu
        exps[(n - 1) % mu] = n - k - 1
        return up.mul_monomial(exps)

    return _build("multi", n_max, base, step, MultiPoly(mu), mu=mu)


def cyclotomic_triangle(n_max: int, mu: int) -> TriangleTable:
    """Every variable of the multivariate triangle set to a primitive mu-th root of unity."""
    multi = multi_triangle(n_max, mu)
    cells = {nk: eval_at_root(v, mu) for nk, v in multi}
    return TriangleTable("cyclotomic", n_max, MappingProxyType(cells), mu=mu,
                         zero=CycInt.from_int(mu, 0))


def _sequence(n_max: int, first: list, rule: Callable[[list, int], Any]) -> list:
    _check(n_max)
    seq = list(first[: n_max + 1])
    for n in range(len(seq), n_max + 1):
        seq.append(rule(seq, n))
    return seq


def carlitz_qcatalan(n_max: int) -> list[UniPoly]:
    """C_n(q) = sum_k q^k C_k(q) C_{n-1-k}(q), C_0 = 1."""
    def rule(c, n):
        acc = UniPoly()
        for k in range(n):
            acc = acc + (c[k] * c[n - 1 - k]).shift(k)
        return acc

    return _sequence(n_max, [UniPoly.constant(1)], rule)


def randrianarivony(n_max: int) -> list[MultiPoly]:
    """C_n(q,p) = C_{n-1} + sum_{k<=n-2} q p^k C_k C_{n-1-k}, C_0 = C_1 = 1."""
    one = MultiPoly.constant(2, 1)

    def rule(c, n):
        acc = c[n - 1]
        for k in range(n - 1):
            acc = acc + (c[k] * c[n - 1 - k]).mul_monomial((1, k))
        return acc

    return _sequence(n_max, [one, one], rule)
