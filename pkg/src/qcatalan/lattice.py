"""Generalized Dyck paths, binary words, binary trees and triangulations."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Optional

from . import kernels

MAX_N = 14


@dataclass(frozen=True, order=True)
class LatticePath:
    """E/N path from the origin staying weakly below y = x."""

    steps: str

    def __post_init__(self):
        excess = 0
        for s in self.steps:
            if s == "E":
                excess += 1
            elif s == "N":
                excess -= 1
                if excess < 0:
                    raise ValueError(f"path {self.steps} rises above the diagonal")
            else:
                raise ValueError(f"invalid step {s!r} in {self.steps!r}")

    @property
    def n(self) -> int:
        return self.steps.count("E")

    @property
    def k(self) -> int:
        return self.steps.count("N")

    def __str__(self) -> str:
        return self.steps

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True, order=True)
class BinWord:
    """0/1 encoding of a path: 0 for East, 1 for North."""

    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        object.__setattr__(self, "bits", bits)
        zeros = ones = 0
        for b in bits:
            if b == 0:
                zeros += 1
            elif b == 1:
                ones += 1
                if ones > zeros:
                    raise ValueError(f"word {render_word(bits)} violates the prefix condition")
            else:
                raise ValueError(f"invalid bit {b!r}")

    @classmethod
    def parse(cls, text: str) -> BinWord:
        return cls(tuple(int(c) for c in text.strip()))

    def __str__(self) -> str:
        return render_word(self.bits)


def render_word(bits) -> str:
    return "".join(str(b) for b in bits)


@dataclass(frozen=True)
class Node:
    left: Optional[Node] = None
    right: Optional[Node] = None


# A binary tree is either None (the leaf) or a Node.
BinTree = Optional[Node]


def _check_bounds(n, k):
    if not 0 <= k <= n <= MAX_N:
        raise ValueError(f"need 0 <= k <= n <= {MAX_N}, got n={n}, k={k}")


@lru_cache(maxsize=128)
def _path_strings(n: int, k: int) -> tuple[str, ...]:
    out = []
    buf: list[str] = []

    def rec(e, m):
        if e == n and m == k:
            out.append("".join(buf))
            return
        if e < n:
            buf.append("E")
            rec(e + 1, m)
            buf.pop()
        if m < k and m < e:
            buf.append("N")
            rec(e, m + 1)
            buf.pop()

    rec(0, 0)
    return tuple(out)


def gen_paths(n: int, k: int) -> list[LatticePath]:
    """All paths in D'_{n,k}, lexicographic in the step string."""
    _check_bounds(n, k)
    return [LatticePath(s) for s in _path_strings(n, k)]


def area(gamma) -> int:
    return kernels.path_area(str(gamma))


def area_by_cells(gamma) -> int:
    """Area as a literal count of unit cells (x, y), y < x, under the path."""
    steps = str(gamma)
    heights = []
    h = 0
    for s in steps:
        if s == "N":
            h += 1
        else:
            heights.append(h)
    return sum(1 for x, hx in enumerate(heights) for y in range(hx) if y < x)


def path_to_word(gamma) -> BinWord:
    return BinWord(tuple(0 if s == "E" else 1 for s in str(gamma)))


def word_to_path(w) -> LatticePath:
    bits = w.bits if isinstance(w, BinWord) else tuple(int(b) for b in w)
    BinWord(bits)
    return LatticePath("".join("E" if b == 0 else "N" for b in bits))


def word_inv(w) -> int:
    bits = w.bits if isinstance(w, BinWord) else tuple(w)
    return kernels.word_inversions(bits)


def complete_path(gamma) -> LatticePath:
    """Append N steps until the path ends on the diagonal."""
    p = gamma if isinstance(gamma, LatticePath) else LatticePath(str(gamma))
    return LatticePath(p.steps + "N" * (p.n - p.k))


def path_to_tree(gamma) -> BinTree:
    """First-return decomposition E.alpha.N.beta -> Node(tree(alpha), tree(beta))."""
    steps = str(gamma)
    p = LatticePath(steps)
    if p.n != p.k:
        raise ValueError(f"path {steps} does not end on the diagonal")
    return _tree(steps, 0, len(steps))


def _tree(s: str, lo: int, hi: int) -> BinTree:
    if lo == hi:
        return None
    depth = 0
    for i in range(lo, hi):
        depth += 1 if s[i] == "E" else -1
        if depth == 0:
            return Node(_tree(s, lo + 1, i), _tree(s, i + 1, hi))
    raise ValueError(f"unbalanced segment {s[lo:hi]}")


def tree_size(t: BinTree) -> int:
    if t is None:
        return 0
    return 1 + tree_size(t.left) + tree_size(t.right)


def tree_stat(t: BinTree) -> int:
    """Sum over nodes of the size of the left subtree."""
    if t is None:
        return 0
    return tree_size(t.left) + tree_stat(t.left) + tree_stat(t.right)


def render_tree(t: BinTree) -> str:
    if t is None:
        return "."
    return f"({render_tree(t.left)},{render_tree(t.right)})"


def parse_tree(text: str) -> BinTree:
    text = text.strip()
    pos = 0

    def rec():
        nonlocal pos
        if pos >= len(text):
            raise ValueError(f"truncated tree text {text!r}")
        if text[pos] == ".":
            pos += 1
            return None
        if text[pos] != "(":
            raise ValueError(f"unexpected {text[pos]!r} at {pos} in {text!r}")
        pos += 1
        left = rec()
        if text[pos:pos + 1] != ",":
            raise ValueError(f"expected ',' at {pos} in {text!r}")
        pos += 1
        right = rec()
        if text[pos:pos + 1] != ")":
            raise ValueError(f"expected ')' at {pos} in {text!r}")
        pos += 1
        return Node(left, right)

    t = rec()
    if pos != len(text):
        raise ValueError(f"trailing text in {text!r}")
    return t


def tree_to_triangulation(t: BinTree, n: int) -> list[tuple[int, int]]:
    """Diagonals of the triangulation of the polygon on vertices 0..n+1.

    The root is the triangle on the side (0, n+1); a left subtree of size s
    triangulates the vertices 0..s+1 and the right one the remaining fan.
    """
    if tree_size(t) != n:
        raise ValueError(f"tree has {tree_size(t)} nodes, expected {n}")
    out: list[tuple[int, int]] = []

    def rec(node, a, b):
        if node is None:
            return
        m = a + tree_size(node.left) + 1
        if m - a >= 2:
            out.append((a, m))
        if b - m >= 2:
            out.append((m, b))
        rec(node.left, a, m)
        rec(node.right, m, b)

    rec(t, 0, n + 1)
    return sorted(out)


def gen_words(n: int, k: int) -> list[BinWord]:
    """M'_{n,k} generated directly from all 0/1 words with n zeros and k ones."""
    _check_bounds(n, k)
    out = []
    length = n + k
    for ones in combinations(range(length), k):
        bits = [0] * length
        for i in ones:
            bits[i] = 1
        try:
            out.append(BinWord(tuple(bits)))
        except ValueError:
            continue
    return sorted(out)
