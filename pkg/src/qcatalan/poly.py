"""Exact integer polynomials and an exact cyclotomic ring.

``UniPoly`` is dense (lowest degree first), ``MultiPoly`` is sparse over
exponent tuples, ``CycInt`` is an element of Z[x]/(Phi_mu).  All values are
immutable and all arithmetic uses Python integers, so nothing can overflow.
"""

from __future__ import annotations

import re
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping, Sequence

MAX_ROOT_ORDER = 30


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(int(c) for c in coeffs[:n])


class UniPoly:
    """Dense univariate polynomial; ``coeffs[i]`` is the coefficient of q^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(list(coeffs)))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> UniPoly:
        if exponent < 0:
            raise ValueError(f"negative exponent {exponent}")
        return cls([0] * exponent + [coeff])

    @classmethod
    def constant(cls, c: int) -> UniPoly:
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("UniPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        return self.render()

    def __add__(self, other) -> UniPoly:
        if isinstance(other, int):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> UniPoly:
        if isinstance(other, int):
            other = UniPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> UniPoly:
        return (-self) + other

    def __mul__(self, other) -> UniPoly:
        if isinstance(other, int):
            return UniPoly(c * other for c in self.coeffs)
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, m: int) -> UniPoly:
        if m < 0:
            raise ValueError(f"shift must be nonnegative, got {m}")
        if not self.coeffs:
            return self
        return UniPoly([0] * m + list(self.coeffs))

    def reverse(self, d: int) -> UniPoly:
        if d < self.degree:
            raise ValueError(f"cannot reverse degree-{self.degree} polynomial at degree {d}")
        padded = list(self.coeffs) + [0] * (d + 1 - len(self.coeffs))
        return UniPoly(reversed(padded))

    def min_degree(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def divmod_monic(self, divisor: UniPoly) -> tuple[UniPoly, UniPoly]:
        if not divisor.coeffs or divisor.coeffs[-1] != 1:
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        dd = divisor.degree
        if len(rem) - 1 < dd:
            return UniPoly(), self
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c:
                quot[i - dd] = c
                for j, b in enumerate(divisor.coeffs):
                    rem[i - dd + j] -= c * b
        return UniPoly(quot), UniPoly(rem)

    def render(self, var: str = "q", latex: bool = False) -> str:
        terms = [((i,), c) for i, c in enumerate(self.coeffs) if c]
        return _render_terms(terms, [var], latex=latex, sep="")


def poly_add(a: UniPoly, b: UniPoly) -> UniPoly:
    return a + b


def poly_shift_mul(a: UniPoly, m: int) -> UniPoly:
    """Multiply ``a`` by q^m."""
    return a.shift(m)


def poly_reverse(a: UniPoly, d: int) -> UniPoly:
    """Return q^d * a(1/q); requires ``deg a <= d``."""
    return a.reverse(d)


class MultiPoly:
    """Sparse polynomial in ``mu`` variables with integer coefficients.

    For ``mu == 2`` the variables are (q, p) in that order.
    """

    __slots__ = ("mu", "_terms", "_hash")

    def __init__(self, mu: int, terms: Mapping[tuple[int, ...], int] | None = None):
        if mu < 1:
            raise ValueError(f"mu must be positive, got {mu}")
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != mu:
                raise ValueError(f"exponent {exps} has length {len(exps)}, expected {mu}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if c:
                clean[exps] = clean.get(exps, 0) + int(c)
        clean = {e: c for e, c in clean.items() if c}
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: int = 1) -> MultiPoly:
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def constant(cls, mu: int, c: int) -> MultiPoly:
        return cls(mu, {(0,) * mu: c})

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.mu == other.mu and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.mu, frozenset(self._terms.items()))))
        return self._hash

    def __repr__(self) -> str:
        return f"MultiPoly({self.mu}, {dict(self.items())})"

    def __str__(self) -> str:
        return self.render()

    def _check(self, other: MultiPoly):
        if other.mu != self.mu:
            raise ValueError(f"variable count mismatch: {self.mu} vs {other.mu}")

    def __add__(self, other) -> MultiPoly:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.mu, out)

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self.mu, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> MultiPoly:
        return self + (-other)

    def __mul__(self, other) -> MultiPoly:
        if isinstance(other, int):
            return MultiPoly(self.mu, {e: c * other for e, c in self._terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.mu, out)

    __rmul__ = __mul__

    def mul_monomial(self, exps: Sequence[int]) -> MultiPoly:
        exps = tuple(exps)
        return MultiPoly(
            self.mu, {tuple(a + b for a, b in zip(e, exps)): c for e, c in self._terms.items()}
        )

    def at_ones(self) -> int:
        return sum(self._terms.values())

    def collapse(self) -> UniPoly:
        """Identify every variable with a single q."""
        out: dict[int, int] = {}
        for e, c in self._terms.items():
            d = sum(e)
            out[d] = out.get(d, 0) + c
        if not out:
            return UniPoly()
        return UniPoly(out.get(i, 0) for i in range(max(out) + 1))

    def specialize(self, keep: int) -> UniPoly:
        """Set every variable except number ``keep`` (0-based) to 1."""
        out: dict[int, int] = {}
        for e, c in self._terms.items():
            out[e[keep]] = out.get(e[keep], 0) + c
        if not out:
            return UniPoly()
        return UniPoly(out.get(i, 0) for i in range(max(out) + 1))

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {sum(e) for e in self._terms}
        if degree is None:
            return len(degs) <= 1
        return degs <= {degree}

    def render(self, names: Sequence[str] | None = None, latex: bool = False) -> str:
        names = list(names) if names is not None else default_names(self.mu)
        sep = "" if self.mu <= 2 else "*"
        return _render_terms(self.items(), names, latex=latex, sep=sep)


def default_names(mu: int) -> list[str]:
    if mu == 1:
        return ["q"]
    if mu == 2:
        return ["q", "p"]
    return [f"q{i}" for i in range(1, mu + 1)]


def _render_terms(terms, names, latex=False, sep=""):
    if not terms:
        return "0"
    plus, minus = ("{+}", "{-}") if latex else ("+", "-")
    out = []
    for idx, (exps, c) in enumerate(terms):
        factors = []
        for name, e in zip(names, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{{{e}}}" if latex and e > 9 else f"{name}^{e}")
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = sep.join(factors)
        else:
            body = sep.join([str(mag)] + factors)
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((minus if c < 0 else plus) + body)
    return "".join(out)


_TERM_SPLIT = re.compile(r"(?=[+-])")


def _parse_terms(text: str, names: Sequence[str]) -> dict[tuple[int, ...], int]:
    s = text.replace("{+}", "+").replace("{-}", "-").replace(" ", "")
    s = re.sub(r"\^\{(\d+)\}", r"^\1", s)
    if not s:
        raise ValueError("empty polynomial text")
    by_len = sorted(range(len(names)), key=lambda i: -len(names[i]))
    out: dict[tuple[int, ...], int] = {}
    for chunk in _TERM_SPLIT.split(s):
        if not chunk:
            continue
        sign = -1 if chunk[0] == "-" else 1
        body = chunk.lstrip("+-")
        m = re.match(r"\d+", body)
        coeff = int(m.group()) if m else 1
        rest = body[m.end():] if m else body
        if not rest and not m:
            raise ValueError(f"malformed term {chunk!r} in {text!r}")
        exps = [0] * len(names)
        while rest:
            rest = rest.lstrip("*")
            for i in by_len:
                if rest.startswith(names[i]):
                    rest = rest[len(names[i]):]
                    e = 1
                    em = re.match(r"\^(\d+)", rest)
                    if em:
                        e = int(em.group(1))
                        rest = rest[em.end():]
                    exps[i] += e
                    break
            else:
                raise ValueError(f"cannot parse {rest!r} in {text!r}")
        key = tuple(exps)
        out[key] = out.get(key, 0) + sign * coeff
    return out


def parse_unipoly(text: str, var: str = "q") -> UniPoly:
    out = _parse_terms(text, [var])
    if not out:
        return UniPoly()
    top = max(e[0] for e in out)
    return UniPoly(out.get((i,), 0) for i in range(top + 1))


def parse_multipoly(text: str, mu: int, names: Sequence[str] | None = None) -> MultiPoly:
    names = list(names) if names is not None else default_names(mu)
    return MultiPoly(mu, _parse_terms(text, names))


@lru_cache(maxsize=None)
def cyclotomic_polynomial(mu: int) -> UniPoly:
    """The mu-th cyclotomic polynomial, ``x^mu - 1`` divided by Phi_d for d | mu, d < mu."""
    if not 1 <= mu <= MAX_ROOT_ORDER:
        raise ValueError(f"root order {mu} outside supported range 1..{MAX_ROOT_ORDER}")
    num = UniPoly([-1] + [0] * (mu - 1) + [1])
    for d in range(1, mu):
        if mu % d == 0:
            num, rem = num.divmod_monic(cyclotomic_polynomial(d))
            assert rem.is_zero()
    return num


def totient(mu: int) -> int:
    return sum(1 for i in range(1, mu + 1) if gcd(i, mu) == 1)


@lru_cache(maxsize=None)
def _root_powers(mu: int) -> tuple[tuple[int, ...], ...]:
    # x^j mod Phi_mu for j < mu, padded to length phi(mu); x^mu == 1 in this ring
    phi = cyclotomic_polynomial(mu)
    width = phi.degree
    rows = []
    for j in range(mu):
        _, r = UniPoly.monomial(j).divmod_monic(phi)
        rows.append(tuple(r.coeffs) + (0,) * (width - len(r.coeffs)))
    return tuple(rows)


class CycInt:
    """Element of Z[w] with w a primitive mu-th root of unity.

    ``rep`` holds coordinates on the basis 1, w, ..., w^(phi(mu)-1).
    """

    __slots__ = ("mu", "rep")

    def __init__(self, mu: int, rep: Sequence[int]):
        width = cyclotomic_polynomial(mu).degree
        rep = tuple(int(c) for c in rep)
        if len(rep) < width:
            rep = rep + (0,) * (width - len(rep))
        elif len(rep) > width:
            _, r = UniPoly(rep).divmod_monic(cyclotomic_polynomial(mu))
            rep = tuple(r.coeffs) + (0,) * (width - len(r.coeffs))
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "rep", rep)

    def __setattr__(self, name, value):
        raise AttributeError("CycInt is immutable")

    @classmethod
    def from_int(cls, mu: int, c: int) -> CycInt:
        return cls(mu, [c])

    @classmethod
    def root_power(cls, mu: int, e: int) -> CycInt:
        return cls(mu, _root_powers(mu)[e % mu])

    def as_int(self) -> int | None:
        """The rational-integer value, or None if not in Z."""
        if all(c == 0 for c in self.rep[1:]):
            return self.rep[0]
        return None

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CycInt.from_int(self.mu, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.mu == other.mu and self.rep == other.rep

    def __hash__(self) -> int:
        return hash(("CycInt", self.mu, self.rep))

    def __add__(self, other) -> CycInt:
        if isinstance(other, int):
            other = CycInt.from_int(self.mu, other)
        if self.mu != other.mu:
            raise ValueError("root order mismatch")
        return CycInt(self.mu, [a + b for a, b in zip(self.rep, other.rep)])

    __radd__ = __add__

    def __neg__(self) -> CycInt:
        return CycInt(self.mu, [-a for a in self.rep])

    def __sub__(self, other) -> CycInt:
        return self + (-other)

    def __mul__(self, other) -> CycInt:
        if isinstance(other, int):
            return CycInt(self.mu, [a * other for a in self.rep])
        if self.mu != other.mu:
            raise ValueError("root order mismatch")
        prod = UniPoly(self.rep) * UniPoly(other.rep)
        return CycInt(self.mu, prod.coeffs)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"CycInt({self.mu}, {list(self.rep)})"

    def __str__(self) -> str:
        return self.render()

    def render(self, latex: bool = False) -> str:
        value = self.as_int()
        if value is not None:
            return str(value)
        return UniPoly(self.rep).render("w", latex=latex)


def eval_at_root(a: UniPoly | MultiPoly, mu: int) -> CycInt:
    """Substitute every variable by a primitive mu-th root of unity."""
    cyclotomic_polynomial(mu)  # range check
    powers = _root_powers(mu)
    acc = [0] * len(powers[0])
    if isinstance(a, UniPoly):
        pairs = ((i, c) for i, c in enumerate(a.coeffs) if c)
    elif isinstance(a, MultiPoly):
        pairs = ((sum(e), c) for e, c in a.items())
    else:
        raise TypeError(f"cannot evaluate {type(a).__name__}")
    for e, c in pairs:
        row = powers[e % mu]
        for j, v in enumerate(row):
            if v:
                acc[j] += c * v
    return CycInt(mu, acc)
