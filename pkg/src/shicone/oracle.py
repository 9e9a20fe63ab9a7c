"""Brute-force references, independent of every closed form and determinant."""
from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field

from .digraph import Digraph, ShiDigraph
from .poly import Poly
from .rootsystem import RootSystem

ANTICHAIN_CAP = 40
PATH_CAP = 10**6


def count_antichains(rs: RootSystem, excluded: Iterable[int] = ()) -> tuple[int, tuple[int, ...]]:
    """Antichains of the root poset restricted to the complement of `excluded`.

    Returns the total and the count by cardinality.
    """
    m = len(rs)
    if m > ANTICHAIN_CAP:
        raise RuntimeError(f"{m} roots exceed the enumeration cap {ANTICHAIN_CAP}")
    comp = rs.comparable_masks
    allowed = (1 << m) - 1
    for r in excluded:
        allowed &= ~(1 << r)
    memo: dict[int, list[int]] = {0: [1]}

    def walk(s: int) -> list[int]:
        if s in memo:
            return memo[s]
        low = s & -s
        x = low.bit_length() - 1
        without = walk(s & ~low)
        with_x = walk(s & ~comp[x])
        out = list(without) + [0] * max(0, len(with_x) + 1 - len(without))
        for k, c in enumerate(with_x):
            out[k + 1] += c
        memo[s] = out
        return out

    by_size = walk(allowed)
    return sum(by_size), tuple(by_size)


def contains_subpath(path: Sequence, sub: Sequence) -> bool:
    """Contiguous containment of `sub` (a vertex sequence with at least one edge)."""
    k = len(sub)
    return any(tuple(path[i:i + k]) == tuple(sub) for i in range(len(path) - k + 1))


def count_avoiding_paths(g: ShiDigraph, forbidden: Sequence[Sequence], cap: int = PATH_CAP) -> tuple[int, Poly]:
    """Paths I->F containing no forbidden subpath, plus their corner generating polynomial."""
    total = 0
    coeffs: list[int] = []
    for path in g.paths(cap=cap):
        if any(contains_subpath(path, f) for f in forbidden):
            continue
        total += 1
        c = len(g.corners_in_path(path))
        coeffs += [0] * (c + 1 - len(coeffs))
        coeffs[c] += 1
    return total, Poly(coeffs)


@dataclass
class PathCatalogue:
    """Every I->F path of a Shi digraph with the set of roots whose corners it contains."""

    g: ShiDigraph
    cap: int = PATH_CAP
    masks: list[int] = field(init=False)
    sizes: list[int] = field(init=False)

    def __post_init__(self):
        self.masks, self.sizes = [], []
        for path in self.g.paths(cap=self.cap):
            cs = self.g.corners_in_path(path)
            mask = 0
            for c in cs:
                mask |= 1 << c.root
            self.masks.append(mask)
            self.sizes.append(len(cs))

    def avoiding(self, roots: Iterable[int]) -> tuple[int, Poly]:
        bad = 0
        for r in roots:
            bad |= 1 << r
        coeffs = [0] * (max(self.sizes, default=0) + 1)
        total = 0
        for mask, size in zip(self.masks, self.sizes):
            if not mask & bad:
                total += 1
                coeffs[size] += 1
        return total, Poly(coeffs)


def weighted_path_sum(dag: Digraph, forbidden: Sequence[Sequence], weight: Callable | dict | None = None,
                      cap: int = PATH_CAP):
    """Sum over avoiding I->F paths of the product of edge weights."""
    if weight is None:
        wt = lambda a, b: 1
    elif isinstance(weight, dict):
        wt = lambda a, b: weight[(a, b)]
    else:
        wt = weight
    total = 0
    for path in dag.paths(cap=cap):
        if any(contains_subpath(path, f) for f in forbidden):
            continue
        term = 1
        for a, b in zip(path, path[1:]):
            term = term * wt(a, b)
        total = total + term
    return total
