"""Pattern-avoiding permutations, their canonical cell partitions and statistics."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import permutations
from math import comb

from . import kernels

MAX_N = 11
FILTER_MAX_N = 9


class Pattern(str, Enum):
    P312 = "312"
    P321 = "321"
    P213 = "213"
    P123 = "123"
    P231 = "231"
    P132 = "132"

    @property
    def digits(self) -> tuple[int, int, int]:
        return tuple(int(c) for c in self.value)

    @classmethod
    def parse(cls, text) -> Pattern:
        if isinstance(text, Pattern):
            return text
        try:
            return cls(str(text))
        except ValueError:
            raise ValueError(f"unknown pattern {text!r}; expected one of "
                             f"{', '.join(p.value for p in cls)}") from None


ALL_PATTERNS = tuple(Pattern)


@dataclass(frozen=True, order=True)
class Perm:
    """A permutation of 1..n in one-line notation."""

    vals: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(self.vals)
        object.__setattr__(self, "vals", vals)
        if sorted(vals) != list(range(1, len(vals) + 1)):
            raise ValueError(f"{vals} is not a permutation of 1..{len(vals)}")

    def __len__(self) -> int:
        return len(self.vals)

    def __iter__(self):
        return iter(self.vals)

    def __getitem__(self, i):
        return self.vals[i]

    def __str__(self) -> str:
        return render_perm(self)

    @classmethod
    def parse(cls, text: str) -> Perm:
        text = text.strip()
        if text in ("", "()", "e"):
            return cls(())
        if "," in text:
            return cls(tuple(int(t) for t in text.split(",")))
        return cls(tuple(int(c) for c in text))

    @classmethod
    def identity(cls, n: int) -> Perm:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def decreasing(cls, n: int) -> Perm:
        return cls(tuple(range(n, 0, -1)))


def render_perm(pi) -> str:
    vals = tuple(pi)
    if not vals:
        return "()"
    if len(vals) <= 9:
        return "".join(str(v) for v in vals)
    return ",".join(str(v) for v in vals)


def contains_pattern(pi, tau) -> bool:
    return kernels.contains_pattern(tuple(pi), Pattern.parse(tau).digits)


def inv(pi) -> int:
    return kernels.inversions(tuple(pi))


def coinv(pi) -> int:
    n = len(pi)
    return comb(n, 2) - inv(pi)


def inv_i(pi, i: int, mu: int) -> int:
    """Inversions whose larger entry is congruent to i mod mu (classes 1..mu)."""
    if not 1 <= i <= mu:
        raise ValueError(f"residue class {i} outside 1..{mu}")
    return kernels.inversions_by_residue(tuple(pi), mu)[i - 1]


def inv_vector(pi, mu: int) -> tuple[int, ...]:
    return tuple(kernels.inversions_by_residue(tuple(pi), mu))


def _check_n(n: int):
    if not 0 <= n <= MAX_N:
        raise ValueError(f"n={n} outside supported range 0..{MAX_N}")


def _backtrack(n: int, digits):
    # Lexicographic DFS; a prefix avoids tau iff no occurrence ends at its last entry
    # given that the shorter prefix already avoided it.
    out = []
    prefix: list[int] = []
    used = [False] * (n + 1)

    def rec():
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            prefix.append(v)
            if not kernels.ends_with_pattern(prefix, digits):
                used[v] = True
                rec()
                used[v] = False
            prefix.pop()

    rec()
    return out


@lru_cache(maxsize=64)
def _avoider_tuples(n: int, tau: Pattern) -> tuple[tuple[int, ...], ...]:
    digits = tau.digits
    if n <= FILTER_MAX_N:
        found = [p for p in permutations(range(1, n + 1))
                 if not kernels.contains_pattern(p, digits)]
    else:
        found = _backtrack(n, digits)
    return tuple(found)


def gen_avoiders(n: int, tau) -> list[Perm]:
    """All tau-avoiders of length n in lexicographic order."""
    _check_n(n)
    return [Perm(p) for p in _avoider_tuples(n, Pattern.parse(tau))]


def cell_index(pi, tau) -> int:
    """The k with pi in S_{n,k}(tau), read off the position of n or of 1."""
    tau = Pattern.parse(tau)
    vals = tuple(pi)
    n = len(vals)
    if n == 0:
        return 0
    if kernels.contains_pattern(vals, tau.digits):
        raise ValueError(f"{render_perm(vals)} contains {tau.value}")
    return _cell(vals, tau)


def _cell(vals, tau: Pattern) -> int:
    n = len(vals)
    if n == 0:
        return 0
    if tau in (Pattern.P312, Pattern.P321):
        return vals.index(n)
    if tau in (Pattern.P213, Pattern.P123):
        return n - 1 - vals.index(n)
    if tau is Pattern.P231:
        return n - 1 - vals.index(1)
    return vals.index(1)


def s_cell(n: int, k: int, tau) -> list[Perm]:
    """The cell S_{n,k}(tau)."""
    tau = Pattern.parse(tau)
    _check_bounds(n, k)
    return [Perm(p) for p in _avoider_tuples(n, tau) if _cell(p, tau) == k]


def s_prime(n: int, k: int, tau) -> list[Perm]:
    """S'_{n,k}(tau): tau-avoiders whose cell index is at most k."""
    tau = Pattern.parse(tau)
    _check_bounds(n, k)
    return [Perm(p) for p in _avoider_tuples(n, tau) if _cell(p, tau) <= k]


def _check_bounds(n, k):
    _check_n(n)
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")


def phi_insert(pi_hat, n: int, k: int) -> Perm:
    """Insert the value n at position k+1 of a member of S'_{n-1,k}(312)."""
    vals = tuple(pi_hat)
    if len(vals) != n - 1:
        raise ValueError(f"expected a permutation of length {n - 1}, got {render_perm(vals)}")
    if not 0 <= k <= n - 1:
        raise ValueError(f"need 0 <= k <= n-1, got n={n}, k={k}")
    Perm(vals)
    if kernels.contains_pattern(vals, Pattern.P312.digits):
        raise ValueError(f"{render_perm(vals)} contains 312")
    if _cell(vals, Pattern.P312) > k:
        raise ValueError(f"{render_perm(vals)} has cell index "
                         f"{_cell(vals, Pattern.P312)} > {k}, not in S'_{{{n - 1},{k}}}(312)")
    return Perm(vals[:k] + (n,) + vals[k:])


def inv_star(pi, n: int, k: int) -> int:
    """inv(pi) - (n-k-1) for pi in S_{n,k}(312)."""
    vals = tuple(pi)
    if len(vals) != n or not 0 <= k <= n - 1:
        raise ValueError(f"need a length-{n} permutation and 0 <= k <= n-1")
    if cell_index(vals, Pattern.P312) != k:
        raise ValueError(f"{render_perm(vals)} is not in S_{{{n},{k}}}(312)")
    value = inv(vals) - (n - k - 1)
    if value < 0:
        raise ValueError(f"inv({render_perm(vals)}) = {inv(vals)} < n-k-1 = {n - k - 1}")
    return value
