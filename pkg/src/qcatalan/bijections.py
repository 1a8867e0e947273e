"""Statistic-preserving bijections between the families, and the universal statistic."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Any

from . import kernels
from .lattice import (LatticePath, area, complete_path, gen_paths, path_to_tree,
                      path_to_word, tree_stat, word_inv)
from .perms import Pattern, Perm, _cell, coinv, inv, phi_insert, render_perm, s_prime

__all__ = ["phi_insert", "psi", "psi_inverse", "Member", "COMPONENTS",
           "universal_family", "universal_sigma"]

_P312 = Pattern.P312


def psi(pi, n: int, k: int) -> LatticePath:
    """Map S'_{n,k}(312) onto D'_{n,k} with area(psi(pi)) == coinv(pi).

    A permutation of cell index below k is sent to psi_{n,k-1} followed by N;
    one of cell index exactly k loses its maximum and is sent to psi_{n-1,k}
    followed by E.
    """
    vals = tuple(pi)
    if len(vals) != n or not 0 <= k <= n:
        raise ValueError(f"need a length-{n} permutation and 0 <= k <= n, got k={k}")
    Perm(vals)
    if kernels.contains_pattern(vals, _P312.digits):
        raise ValueError(f"{render_perm(vals)} contains 312")
    if _cell(vals, _P312) > k:
        raise ValueError(f"{render_perm(vals)} has cell index {_cell(vals, _P312)} > {k}")
    steps: list[str] = []
    while n > 0:
        if _cell(vals, _P312) <= k - 1:
            steps.append("N")
            k -= 1
        else:
            steps.append("E")
            vals = tuple(v for v in vals if v != n)
            n -= 1
    # n == 0 forces k == 0 because the cell index never exceeds n - 1
    return LatticePath("".join(reversed(steps)))


def psi_inverse(gamma, n: int, k: int) -> Perm:
    path = gamma if isinstance(gamma, LatticePath) else LatticePath(str(gamma))
    if (path.n, path.k) != (n, k):
        raise ValueError(f"path {path.steps} ends at ({path.n},{path.k}), not ({n},{k})")
    vals: tuple[int, ...] = ()
    m, j = 0, 0
    for s in path.steps:
        if s == "N":
            j += 1
        else:
            m += 1
            vals = phi_insert(vals, m, j).vals
    return Perm(vals)


COMPONENTS = ("perm:312", "perm:231", "perm:213", "perm:132", "path", "word", "tree")


@dataclass(frozen=True)
class Member:
    """An element of the universal family tagged with its component."""

    component: str
    obj: Any

    def __post_init__(self):
        if self.component not in COMPONENTS:
            raise ValueError(f"unknown component {self.component!r}")


def universal_family(n: int, k: int) -> dict[str, list[Member]]:
    out: dict[str, list[Member]] = {}
    for tau in ("312", "231", "213", "132"):
        out[f"perm:{tau}"] = [Member(f"perm:{tau}", p) for p in s_prime(n, k, tau)]
    paths = gen_paths(n, k)
    out["path"] = [Member("path", g) for g in paths]
    out["word"] = [Member("word", path_to_word(g)) for g in paths]
    out["tree"] = [Member("tree", path_to_tree(complete_path(g))) for g in paths]
    return out


def universal_sigma(x: Member, n: int, k: int) -> int:
    if not isinstance(x, Member):
        raise TypeError(f"expected a tagged Member, got {type(x).__name__}")
    c = x.component
    if c in ("perm:312", "perm:231"):
        return inv(x.obj)
    if c in ("perm:213", "perm:132"):
        return coinv(x.obj)
    if c == "path":
        return comb(n, 2) - area(x.obj)
    if c == "word":
        return comb(n, 2) - word_inv(x.obj)
    return tree_stat(x.obj)
