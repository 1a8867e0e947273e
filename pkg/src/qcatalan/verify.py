"""Named checks confronting recurrence output with independent enumeration.

Every check returns a :class:`CheckReport`.  Checks whose identity is proved
(or elementary) are *gated*: a false cell makes the report ``fail``.  The rest
are ``report-only``: each cell still records whether the claim held there.
"""

from __future__ import annotations

import json
import time
from collections import Counter
from dataclasses import asdict, dataclass, field
from math import comb
from typing import Callable, Iterable

from . import lattice, perms
from .bijections import COMPONENTS, universal_family, universal_sigma
from .poly import CycInt, MultiPoly, UniPoly, eval_at_root, parse_multipoly
from .triangles import (carlitz_qcatalan, catalan, classical_triangle, cyclotomic_triangle,
                        mirror_triangle, multi_triangle, q_triangle, qp_triangle,
                        randrianarivony)

PASS, FAIL, REPORT_ONLY = "pass", "fail", "report-only"
MAX_EXAMPLES = 12


@dataclass
class Cell:
    n: int
    k: int
    tag: str
    expected: str
    actual: str
    ok: bool


@dataclass
class CheckReport:
    check_id: str
    params: dict
    status: str
    cells: list[Cell] = field(default_factory=list)
    counterexamples: list[str] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.cells)

    def failing(self) -> list[Cell]:
        return [c for c in self.cells if not c.ok]

    def to_dict(self, with_elapsed: bool = True) -> dict:
        d = {
            "check_id": self.check_id,
            "params": dict(self.params),
            "status": self.status,
            "cells": [asdict(c) for c in self.cells],
            "counterexamples": list(self.counterexamples),
        }
        if with_elapsed:
            d["elapsed_ms"] = round(self.elapsed_ms, 3)
        return d

    def to_json(self, with_elapsed: bool = True) -> str:
        return json.dumps(self.to_dict(with_elapsed), indent=2, ensure_ascii=False)


class CheckError(ValueError):
    pass


@dataclass(frozen=True)
class _Check:
    func: Callable
    scope: str  # "perm", "path" or "poly": which size bound applies
    gated: frozenset  # tags whose cells decide pass/fail; empty means report-only
    uses_mu: bool = False
    default_mu: int | None = None


LIMITS = {"perm": perms.MAX_N, "path": lattice.MAX_N, "poly": 40}


def _gf(exponents: Iterable[int]) -> UniPoly:
    counts = Counter(exponents)
    if not counts:
        return UniPoly()
    return UniPoly(counts.get(i, 0) for i in range(max(counts) + 1))


def _gf2(pairs: Iterable[tuple[int, int]]) -> MultiPoly:
    return MultiPoly(2, Counter(pairs))


def _cell(n, k, tag, expected, actual, ok=None) -> Cell:
    if ok is None:
        ok = expected == actual
    return Cell(n, k, tag, _text(expected), _text(actual), bool(ok))


def _text(v) -> str:
    if isinstance(v, (UniPoly, MultiPoly, CycInt)):
        return v.render()
    return str(v)


def _listing(objs, stat, limit=MAX_EXAMPLES) -> str:
    items = [f"{o}:{stat(o)}" for o in objs[:limit]]
    if len(objs) > limit:
        items.append(f"... ({len(objs)} total)")
    return "{" + ", ".join(items) + "}"


# -- permutation checks -----------------------------------------------------

def _chk_perm6(n_max, mu):
    table = classical_triangle(n_max)
    cells, bad = [], []
    for tau in perms.ALL_PATTERNS:
        for n in range(n_max + 1):
            for k in range(n + 1):
                got = len(perms.s_prime(n, k, tau))
                c = _cell(n, k, tau.value, table[n, k], got)
                cells.append(c)
                if not c.ok:
                    bad.append(f"[{tau.value}] n={n} k={k}: |S'|={got}, expected {table[n, k]}")
    return cells, bad


_STATS = {"inv": perms.inv, "coinv": perms.coinv}


def _weighted_cells(n_max, pairs):
    """Cells comparing sum q^stat over S'_{n,k}(tau) with C_{n,k}(q)."""
    qt = q_triangle(n_max)
    cells, bad = [], []
    for tau, stat in pairs:
        f = _STATS[stat]
        tag = f"{tau}/{stat}"
        for n in range(n_max + 1):
            for k in range(n + 1):
                members = perms.s_prime(n, k, tau)
                got = _gf(f(p) for p in members)
                c = _cell(n, k, tag, qt[n, k], got)
                cells.append((c, members, f, tag))
    return cells


def _chk_qinv(n_max, mu):
    out = _weighted_cells(n_max, [("312", "inv")])
    bad = [f"n={c.n} k={c.k}: {_listing(m, f)}" for c, m, f, _ in out if not c.ok]
    return [c for c, *_ in out], bad


def _chk_classif(n_max, mu):
    pairs = [("312", "inv"), ("231", "inv"), ("213", "coinv"), ("132", "coinv")]
    out = _weighted_cells(n_max, pairs)
    bad = [f"[{t}] n={c.n} k={c.k}: {_listing(m, f)}" for c, m, f, t in out if not c.ok]
    return [c for c, *_ in out], bad


def _chk_neg(n_max, mu):
    pairs = [(tau, st) for tau in ("123", "321") for st in ("inv", "coinv")]
    out = _weighted_cells(n_max, pairs)
    bad = []
    for tau, st in pairs:
        tag = f"{tau}/{st}"
        first = next((x for x in out if x[3] == tag and not x[0].ok), None)
        if first is None:
            bad.append(f"[{tag}] no counterexample for n <= {n_max}")
        else:
            c, m, f, _ = first
            bad.append(f"[{tag}] minimal counterexample n={c.n} k={c.k}: "
                       f"{_listing(m, f)} gives {c.actual}, C_{{n,k}}(q) = {c.expected}")
    return [c for c, *_ in out], bad


def _chk_invstar(n_max, mu):
    qt = q_triangle(max(n_max - 1, 0))
    cells, bad = [], []
    for n in range(1, n_max + 1):
        for k in range(n):
            shift = n - k - 1
            cell = perms.s_cell(n, k, "312")
            invs = [perms.inv(p) for p in cell]
            low = min(invs)
            below = [p for p, v in zip(cell, invs) if v < shift]
            cells.append(_cell(n, k, "bound", f"min inv >= {shift}", f"min inv = {low}",
                               ok=not below))
            for p in below[:MAX_EXAMPLES]:
                bad.append(f"[bound] n={n} k={k}: inv({p}) = {perms.inv(p)} < {shift}")
            cells.append(_cell(n, k, "attained", f"min inv = {shift}", f"min inv = {low}",
                               ok=low == shift))
            if low != shift:
                argmin = [p for p, v in zip(cell, invs) if v == low]
                bad.append(f"[attained] n={n} k={k}: minimum {low} > {shift}, "
                           f"reached at {_listing(argmin, perms.inv)}")
            got = _gf(v - shift for v in invs) if not below else UniPoly()
            c = _cell(n, k, "identity", qt[n - 1, k], got)
            cells.append(c)
            if not c.ok:
                bad.append(f"[identity] n={n} k={k}: sum q^inv* = {c.actual}, "
                           f"C_{{n-1,k}}(q) = {c.expected}")
    return cells, bad


def _chk_coinv(n_max, mu):
    mt = mirror_triangle(n_max)
    cells, bad = [], []
    for n in range(n_max + 1):
        for k in range(n + 1):
            members = perms.s_prime(n, k, "312")
            c = _cell(n, k, "coinv", mt[n, k], _gf(perms.coinv(p) for p in members))
            cells.append(c)
            if not c.ok:
                bad.append(f"n={n} k={k}: {_listing(members, perms.coinv)}")
    return cells, bad


def _chk_qp_conj(n_max, mu):
    qp = qp_triangle(n_max)
    cells, bad = [], []
    for n in range(n_max + 1):
        for k in range(n + 1):
            members = perms.s_prime(n, k, "312")
            got = _gf2((perms.inv(p), perms.coinv(p)) for p in members)
            c = _cell(n, k, "inv-coinv", qp[n, k], got)
            cells.append(c)
            if not c.ok:
                bad.append(f"n={n} k={k}: sum q^inv p^coinv = {c.actual}")
    return cells, bad


def _chk_multi(n_max, mu):
    mt = multi_triangle(n_max, mu)
    qt = q_triangle(n_max)
    ct = classical_triangle(n_max)
    qp = qp_triangle(n_max) if mu == 2 else None
    cells, bad = [], []
    for n in range(n_max + 1):
        for k in range(n + 1):
            members = perms.s_prime(n, k, "312")
            got = MultiPoly(mu, Counter(perms.inv_vector(p, mu) for p in members))
            c = _cell(n, k, "enumeration", mt[n, k], got)
            cells.append(c)
            if not c.ok:
                bad.append(f"[enumeration] n={n} k={k}: recurrence {c.expected}, "
                           f"sum over S' = {c.actual}; "
                           + _listing(members, lambda p: perms.inv_vector(p, mu)))
            ones = _cell(n, k, "ones", ct[n, k], mt[n, k].at_ones())
            ident = _cell(n, k, "identified", qt[n, k], mt[n, k].collapse())
            cells += [ones, ident]
            if not (ones.ok and ident.ok):
                bad.append(f"[specialization] n={n} k={k}: {mt[n, k].render()}")
            if qp is not None:
                c = _cell(n, k, "qp", qp[n, k], mt[n, k])
                cells.append(c)
                if not c.ok:
                    bad.append(f"[qp] n={n} k={k}: multivariate {c.actual} != (q,p) {c.expected}")
    return cells, bad


# -- path, word and tree checks ---------------------------------------------

def _chk_dyck(n_max, mu):
    qt, mt = q_triangle(n_max), mirror_triangle(n_max)
    cells, bad = [], []
    for n in range(n_max + 1):
        top = comb(n, 2)
        for k in range(n + 1):
            paths = lattice.gen_paths(n, k)
            areas = [lattice.area(g) for g in paths]
            for tag, want, got in (("complement", qt[n, k], _gf(top - a for a in areas)),
                                   ("area", mt[n, k], _gf(areas))):
                c = _cell(n, k, tag, want, got)
                cells.append(c)
                if not c.ok:
                    bad.append(f"[{tag}] n={n} k={k}: {_listing(paths, lattice.area)}")
    return cells, bad


def _chk_word(n_max, mu):
    qt = q_triangle(n_max)
    cells, bad = [], []
    for n in range(n_max + 1):
        top = comb(n, 2)
        for k in range(n + 1):
            words = lattice.gen_words(n, k)
            c = _cell(n, k, "complement", qt[n, k], _gf(top - lattice.word_inv(w) for w in words))
            cells.append(c)
            if not c.ok:
                bad.append(f"n={n} k={k}: {_listing(words, lattice.word_inv)}")
    return cells, bad


def _chk_tree(n_max, mu):
    qt, ct = q_triangle(n_max), classical_triangle(n_max)
    cells, bad = [], []
    for n in range(n_max + 1):
        top = comb(n, 2)
        for k in range(n + 1):
            paths = lattice.gen_paths(n, k)
            trees = [lattice.path_to_tree(lattice.complete_path(g)) for g in paths]
            stats = [lattice.tree_stat(t) for t in trees]
            cells.append(_cell(n, k, "stat", qt[n, k], _gf(stats)))
            off = [(g, t, s) for g, t, s in zip(paths, trees, stats)
                   if s != top - lattice.area(g)]
            cells.append(_cell(n, k, "bridge", f"stat = {top} - area on {len(paths)} paths",
                               f"{len(paths) - len(off)}/{len(paths)} agree", ok=not off))
            for g, t, s in off[:MAX_EXAMPLES]:
                bad.append(f"[bridge] n={n} k={k}: path {g} tree {lattice.render_tree(t)} "
                           f"stat {s} != {top - lattice.area(g)}")
            tris = {tuple(lattice.tree_to_triangulation(t, n)) for t in trees}
            cells.append(_cell(n, k, "triangulations", ct[n, k], len(tris)))
    return cells, bad


def _chk_areaeq(n_max, mu):
    cells, bad = [], []
    for n in range(n_max + 1):
        for k in range(n + 1):
            paths = lattice.gen_paths(n, k)
            off_word = [g for g in paths
                        if lattice.area(g) != lattice.word_inv(lattice.path_to_word(g))]
            off_cells = [g for g in paths if lattice.area(g) != lattice.area_by_cells(g)]
            total = len(paths)
            cells.append(_cell(n, k, "word", f"{total}/{total} agree",
                               f"{total - len(off_word)}/{total} agree"))
            cells.append(_cell(n, k, "cells", f"{total}/{total} agree",
                               f"{total - len(off_cells)}/{total} agree"))
            bad += [f"[word] path {g}: area {lattice.area(g)} != "
                    f"{lattice.word_inv(lattice.path_to_word(g))}" for g in off_word[:MAX_EXAMPLES]]
            bad += [f"[cells] path {g}" for g in off_cells[:MAX_EXAMPLES]]
    return cells, bad


def _chk_univ(n_max, mu):
    qt = q_triangle(n_max)
    cells, bad = [], []
    for n in range(n_max + 1):
        for k in range(n + 1):
            family = universal_family(n, k)
            for comp in COMPONENTS:
                members = family[comp]
                got = _gf(universal_sigma(x, n, k) for x in members)
                c = _cell(n, k, comp, qt[n, k], got)
                cells.append(c)
                if not c.ok:
                    bad.append(f"[{comp}] n={n} k={k}: sigma sum {c.actual}")
    return cells, bad


# -- polynomial-only checks ---------------------------------------------------

def _chk_mirror(n_max, mu):
    qt, mt, ct = q_triangle(n_max), mirror_triangle(n_max), classical_triangle(n_max)
    cells, bad = [], []
    for (n, k), m in mt:
        c = _cell(n, k, "reverse", qt[n, k].reverse(comb(n, 2)), m)
        cells.append(c)
        if not c.ok:
            bad.append(f"[reverse] n={n} k={k}: mirror {c.actual} vs reversal {c.expected}")
        c = _cell(n, k, "at-one", ct[n, k], m(1), ok=m(1) == ct[n, k] == qt[n, k](1))
        cells.append(c)
        if not c.ok:
            bad.append(f"[at-one] n={n} k={k}")
    return cells, bad


def _chk_spec(n_max, mu):
    qt, fh = q_triangle(n_max), carlitz_qcatalan(n_max)
    cells = [_cell(n, n, "diagonal", fh[n], qt[n, n]) for n in range(n_max + 1)]
    bad = [f"n={c.n}: C_{{n,n}}(q) = {c.actual}, C_n(q) = {c.expected}"
           for c in cells if not c.ok]
    return cells, bad


def _chk_qp_spec(n_max, mu):
    qp, mt = qp_triangle(n_max), mirror_triangle(n_max)
    cells, bad = [], []
    for (n, k), v in qp:
        c = _cell(n, k, "i", mt[n, k].render("p"), v.specialize(1).render("p"))
        cells.append(c)
        if not c.ok:
            bad.append(f"[i] n={n} k={k}: C(1,p) = {c.actual}")
    for n in range(n_max + 1):
        want = UniPoly.monomial(comb(n, 2), catalan(n))
        c = _cell(n, n, "ii", want, qp[n, n].collapse())
        cells.append(c)
        if not c.ok:
            bad.append(f"[ii] n={n}: C_{{n,n}}(q,q) = {c.actual}")
    return cells, bad


def _chk_rand(n_max, mu):
    if n_max < 2:
        raise CheckError("CHK-RAND needs n_max >= 2")
    qp, rd = qp_triangle(n_max), randrianarivony(n_max)
    cells = [
        _cell(2, 2, "triangle", parse_multipoly("p+q", 2), qp[2, 2]),
        _cell(2, 2, "sequence", parse_multipoly("q+1", 2), rd[2]),
        _cell(2, 2, "distinct", "C_{2,2}(q,p) != C_2(q,p)",
              f"{qp[2, 2].render()} vs {rd[2].render()}", ok=qp[2, 2] != rd[2]),
    ]
    for n in range(n_max + 1):
        a, b = qp[n, n].at_ones(), rd[n].at_ones()
        cells.append(_cell(n, n, "at-one", catalan(n), f"{a}, {b}",
                           ok=a == b == catalan(n)))
    bad = [f"[{c.tag}] n={c.n}: expected {c.expected}, got {c.actual}"
           for c in cells if not c.ok]
    return cells, bad


def _chk_cyclo(n_max, mu):
    cyc = cyclotomic_triangle(n_max, mu)
    qt = q_triangle(n_max)
    cells, bad = [], []
    for n in range(n_max + 1):
        if (n + 1) % mu == 0:
            claim = comb(n + 1, (n + 1) // mu) // mu
            got = cyc[n, n]
            c = _cell(n, n, "binomial",
                      f"binom({n + 1},{(n + 1) // mu})/{mu} = {claim}", got.render(),
                      ok=got == claim)
            cells.append(c)
            if not c.ok:
                bad.append(f"[binomial] mu={mu} n={n}: computed {got.render()}, claimed {claim}")
    for (n, k), v in cyc:
        c = _cell(n, k, "q-route", eval_at_root(qt[n, k], mu), v)
        cells.append(c)
        if not c.ok:
            bad.append(f"[q-route] n={n} k={k}: multivariate route {c.actual}, "
                       f"q-route {c.expected}")
    return cells, bad


def _chk_cyclo2(n_max, mu):
    if mu != 2:
        raise CheckError("CHK-CYCLO2 is defined for mu = 2 only")
    cyc, ct = cyclotomic_triangle(n_max, 2), classical_triangle(n_max)
    cells, bad = [], []
    for (n, k), v in cyc:
        claim = (-1) ** (n // 2) * ct[n, k]
        c = _cell(n, k, "sign", f"(-1)^{n // 2}*{ct[n, k]} = {claim}", v.render(), ok=v == claim)
        cells.append(c)
        if not c.ok:
            bad.append(f"n={n} k={k}: C_{{n,k}}(-1) = {v.render()}, claimed {claim}")
    return cells, bad


_ALL = frozenset({"*"})

REGISTRY: dict[str, _Check] = {
    "CHK-PERM6": _Check(_chk_perm6, "perm", _ALL),
    "CHK-QINV": _Check(_chk_qinv, "perm", _ALL),
    "CHK-CLASSIF": _Check(_chk_classif, "perm", frozenset()),
    "CHK-NEG": _Check(_chk_neg, "perm", frozenset()),
    "CHK-INVSTAR": _Check(_chk_invstar, "perm", frozenset()),
    "CHK-MIRROR": _Check(_chk_mirror, "poly", _ALL),
    "CHK-COINV": _Check(_chk_coinv, "perm", _ALL),
    "CHK-DYCK": _Check(_chk_dyck, "path", frozenset()),
    "CHK-WORD": _Check(_chk_word, "path", frozenset()),
    "CHK-TREE": _Check(_chk_tree, "path", frozenset()),
    "CHK-AREAEQ": _Check(_chk_areaeq, "path", _ALL),
    "CHK-UNIV": _Check(_chk_univ, "perm", frozenset()),
    "CHK-SPEC": _Check(_chk_spec, "poly", frozenset()),
    "CHK-QP-SPEC": _Check(_chk_qp_spec, "poly", frozenset({"i"})),
    "CHK-QP-CONJ": _Check(_chk_qp_conj, "perm", frozenset()),
    "CHK-RAND": _Check(_chk_rand, "poly", _ALL),
    "CHK-MULTI": _Check(_chk_multi, "perm", frozenset(), uses_mu=True, default_mu=2),
    "CHK-CYCLO": _Check(_chk_cyclo, "poly", frozenset(), uses_mu=True, default_mu=2),
    "CHK-CYCLO2": _Check(_chk_cyclo2, "poly", frozenset(), uses_mu=True, default_mu=2),
}

CHECK_IDS = tuple(REGISTRY)


def is_gated(check_id: str) -> bool:
    return bool(REGISTRY[check_id].gated)


def run_check(check_id: str, n_max: int, mu: int | None = None) -> CheckReport:
    try:
        entry = REGISTRY[check_id]
    except KeyError:
        raise CheckError(f"unknown check id {check_id!r}; known: {', '.join(CHECK_IDS)}") from None
    limit = LIMITS[entry.scope]
    if not 0 <= n_max <= limit:
        raise CheckError(f"{check_id}: n_max={n_max} outside 0..{limit}")
    params: dict = {"n_max": n_max}
    if entry.uses_mu:
        mu = entry.default_mu if mu is None else mu
        if not 1 <= mu <= 30:
            raise CheckError(f"{check_id}: mu={mu} outside 1..30")
        params["mu"] = mu
    start = time.perf_counter()
    cells, bad = entry.func(n_max, mu)
    elapsed = (time.perf_counter() - start) * 1000.0
    if not entry.gated:
        status = REPORT_ONLY
    else:
        gating = [c for c in cells if "*" in entry.gated or c.tag in entry.gated]
        status = PASS if all(c.ok for c in gating) else FAIL
    return CheckReport(check_id, params, status, cells, bad, elapsed)


def run_all(n_max_small: int = 6, n_max_poly: int = 20,
            stop_on_fail: bool = True) -> list[CheckReport]:
    """Run the registry in order; enumeration checks use ``n_max_small``."""
    if not 0 <= n_max_small <= 8:
        raise CheckError(f"n_max_small={n_max_small} outside 0..8")
    if not 2 <= n_max_poly <= LIMITS["poly"]:
        raise CheckError(f"n_max_poly={n_max_poly} outside 2..{LIMITS['poly']}")
    reports = []
    for cid, entry in REGISTRY.items():
        n_max = n_max_poly if entry.scope == "poly" else n_max_small
        rep = run_check(cid, n_max)
        reports.append(rep)
        if stop_on_fail and rep.status == FAIL:
            break
    return reports
