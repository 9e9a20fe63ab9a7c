"""Root systems, root posets and the classical numerical invariants.

Roots are integer coefficient vectors over the simple roots.  Positive roots
are generated by closing the simple roots under simple reflections.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache, cached_property
from math import prod


class ConfigError(ValueError):
    """Bad type string, rank or word."""


_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


@dataclass(frozen=True, order=True)
class WeylType:
    family: str
    rank: int

    def __post_init__(self):
        f, n = self.family, self.rank
        if f in _MIN_RANK:
            ok = n >= _MIN_RANK[f]
        elif f == "E":
            ok = n in (6, 7, 8)
        elif f == "F":
            ok = n == 4
        elif f == "G":
            ok = n == 2
        else:
            raise ConfigError(f"unknown family {f!r}")
        if not ok:
            raise ConfigError(f"rank {n} is not valid for family {f}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def parse_type(text: str) -> WeylType:
    m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", text)
    if not m:
        raise ConfigError(f"cannot parse type {text!r}")
    return WeylType(m.group(1).upper(), int(m.group(2)))


def _dynkin(t: WeylType) -> tuple[list[tuple[int, int]], list[int]]:
    """Edges (0-based) and squared root lengths of the Dynkin diagram."""
    n, f = t.rank, t.family
    chain = [(i, i + 1) for i in range(n - 1)]
    if f == "A":
        return chain, [2] * n
    if f == "B":
        # alpha_n short
        return chain, [2] * (n - 1) + [1]
    if f == "C":
        return chain, [1] * (n - 1) + [2]
    if f == "D":
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
        return edges, [2] * n
    if f == "E":
        # Bourbaki: 1-3-4-5-6(-7-8), node 2 on node 4
        edges = [(0, 2), (1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n - 1)]
        return edges, [2] * n
    if f == "F":
        return chain, [2, 2, 1, 1]
    return chain, [1, 3]  # G2, alpha_1 short


def cartan_matrix(t: WeylType) -> tuple[tuple[int, ...], ...]:
    """a[i][j] = <alpha_i, alpha_j^vee>, so s_i(alpha_j) = alpha_j - a[j][i] alpha_i."""
    edges, lengths = _dynkin(t)
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        # (alpha_i, alpha_j) = -max(len)/2 for a single, double or triple bond
        ip = Fraction(-max(lengths[i], lengths[j]), 2)
        a[i][j] = int(2 * ip / lengths[j])
        a[j][i] = int(2 * ip / lengths[i])
    return tuple(tuple(r) for r in a)


Root = tuple[int, ...]


def simple_reflection(root: Root, i: int, cartan) -> Root:
    """Apply s_i (0-based i) to a root given by coefficients."""
    pairing = sum(c * cartan[j][i] for j, c in enumerate(root))
    out = list(root)
    out[i] -= pairing
    return tuple(out)


def is_positive(root: Root) -> bool:
    return all(c >= 0 for c in root) and any(root)


def _generate_positive(cartan) -> list[Root]:
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(n):
                s = simple_reflection(r, i, cartan)
                if is_positive(s) and s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    return sorted(seen, key=lambda r: (sum(r), r))


@dataclass(frozen=True)
class Invariants:
    exponents: tuple[int, ...]
    coxeter_number: int
    catalan: int
    weyl_order: int


@dataclass(eq=False)
class RootSystem:
    """Positive roots of a Weyl type, sorted by height then coefficients."""

    type: WeylType
    cartan: tuple = field(init=False)
    roots: list[Root] = field(init=False)

    def __post_init__(self):
        self.cartan = cartan_matrix(self.type)
        self.roots = _generate_positive(self.cartan)
        self.index = {r: k for k, r in enumerate(self.roots)}

    @property
    def rank(self) -> int:
        return self.type.rank

    def __len__(self) -> int:
        return len(self.roots)

    def height(self, k: int) -> int:
        return sum(self.roots[k])

    def leq(self, a: int, b: int) -> bool:
        return all(x <= y for x, y in zip(self.roots[a], self.roots[b]))

    @cached_property
    def comparable_masks(self) -> list[int]:
        """Bit k of mask[a] is set iff roots a and k are comparable (a included)."""
        m = len(self.roots)
        out = []
        for a in range(m):
            mask = 0
            for b in range(m):
                if self.leq(a, b) or self.leq(b, a):
                    mask |= 1 << b
            out.append(mask)
        return out

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges (a, b) with b covering a."""
        return [(a, b) for a in range(len(self)) for b in range(len(self))
                if self.height(b) == self.height(a) + 1 and self.leq(a, b)]

    def simple_index(self, i: int) -> int:
        return self.index[tuple(int(i == j) for j in range(self.rank))]

    @cached_property
    def invariants(self) -> Invariants:
        return invariants(self)

    def label(self, k: int) -> str:
        return root_label(self.roots[k])

    def find(self, text: str) -> int:
        """Index of the root written in segment shorthand, e.g. '14,44'."""
        r = parse_label(text, self.rank)
        if r not in self.index:
            raise ConfigError(f"{text!r} is not a positive root of {self.type}")
        return self.index[r]


@cache
def root_system(t: WeylType | str) -> RootSystem:
    """Shared, cached root system for a type."""
    return RootSystem(parse_type(t) if isinstance(t, str) else t)


def invariants(rs: RootSystem) -> Invariants:
    n = rs.rank
    heights = [0] * (max(sum(r) for r in rs.roots) + 1)
    for r in rs.roots:
        heights[sum(r)] += 1
    by_height = heights[1:]
    # exponents: conjugate of the partition formed by roots per height
    exps = sorted(sum(1 for c in by_height if c >= i) for i in range(1, n + 1))
    h, rem = divmod(2 * len(rs.roots), n)
    if rem:
        raise ArithmeticError("Coxeter number is not integral")
    cat = prod(Fraction(e + h + 1, e + 1) for e in exps)
    if cat.denominator != 1:
        raise ArithmeticError("Catalan number is not integral; root generation is broken")
    return Invariants(tuple(exps), h, int(cat), prod(e + 1 for e in exps))


def _segments(root: Root) -> list[tuple[int, int]]:
    # peel layers {k : c_k >= level} into maximal runs
    segs = []
    for level in range(1, max(root) + 1):
        k = 0
        while k < len(root):
            if root[k] >= level:
                start = k
                while k < len(root) and root[k] >= level:
                    k += 1
                segs.append((start + 1, k))
            else:
                k += 1
    return segs


def root_label(root: Root) -> str:
    """Segment shorthand: 'ij' is alpha_i + ... + alpha_j, commas add segments."""
    sep = "" if len(root) <= 9 else "."
    return ",".join(f"{i}{sep}{j}" for i, j in _segments(root))


def parse_label(text: str, rank: int) -> Root:
    text = text.strip().lstrip("αa").strip("_{}")
    out = [0] * rank
    for part in text.split(","):
        part = part.strip()
        if "." in part:
            i, j = (int(p) for p in part.split("."))
        elif len(part) == 2 and part.isdigit():
            i, j = int(part[0]), int(part[1])
        else:
            raise ConfigError(f"cannot parse root label {text!r}")
        if not 1 <= i <= j <= rank:
            raise ConfigError(f"segment {part!r} out of range for rank {rank}")
        for k in range(i - 1, j):
            out[k] += 1
    return tuple(out)


def format_root(root: Root) -> str:
    return "(" + ",".join(map(str, root)) + ")"
