"""Determinant formulas for counting paths that avoid a set of forbidden subpaths."""
from __future__ import annotations

import os
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations

from .digraph import Corner, DataUnavailable, Digraph, ShiDigraph, build_digraph
from .pathcount import ballot_count, corner_poly_A, dp_corner_poly, dp_count, gamma_B, gamma_D
from .poly import T, Poly
from .rootsystem import WeylType, parse_type
from .weyl import WeylElement, element_of, enumerate_group


class OverlapError(ValueError):
    pass


# exact determinants

def determinant(m: Sequence[Sequence]):
    """Fraction-free Gaussian elimination; exact over the integers and Z[t]."""
    a = [list(row) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return a[k][k] * 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return a[-1][-1] if sign > 0 else -a[-1][-1]


def _perm_sign(p) -> int:
    s, seen = 1, [False] * len(p)
    for i in range(len(p)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            if length % 2 == 0:
                s = -s
    return s


def leibniz_determinant(m: Sequence[Sequence]):
    """Sum over permutations; only for cross-checking small matrices."""
    n = len(m)
    total = 0
    for p in permutations(range(n)):
        term = _perm_sign(p)
        for i in range(n):
            term = term * m[i][p[i]]
        total = total + term
    return total


# overlap

def _edges(path: Sequence) -> list[tuple]:
    return list(zip(path, path[1:]))


def _overlaps(p: Sequence, q: Sequence) -> tuple | None:
    """Shared run if q overlaps p: p inside q, or a tail of p equal to a head of q."""
    pe, qe = _edges(p), _edges(q)
    k = len(pe)
    for s in range(len(qe) - k + 1):
        if qe[s:s + k] == pe:
            return tuple(pe)
    for length in range(1, min(len(pe), len(qe)) + 1):
        if pe[-length:] == qe[:length]:
            return tuple(pe[-length:])
    return None


def check_nonoverlapping(paths: Sequence[Sequence]) -> tuple[bool, tuple | None]:
    """(True, None) if no path overlaps another, else (False, (i, j, shared edges))."""
    for i, p in enumerate(paths):
        if len(p) < 2:
            raise ValueError(f"path {i} has no edges")
        for j, q in enumerate(paths):
            if i != j:
                shared = _overlaps(p, q)
                if shared is not None:
                    return False, (i, j, shared)
    return True, None


# arbitrary DAGs

def _weighted_counts(dag: Digraph, start, wt: Callable) -> dict:
    order = dag.topological_order
    acc = {start: 1}
    for a in order[order.index(start):]:
        c = acc.get(a)
        if c is None:
            continue
        for b in dag.succ[a]:
            acc[b] = acc.get(b, 0) + c * wt(a, b)
    return acc


def forbidden_matrix(dag: Digraph, forbidden: Sequence[Sequence], weight=None) -> list[list]:
    if weight is None:
        wt = lambda a, b: 1
    elif isinstance(weight, dict):
        wt = lambda a, b: weight[(a, b)]
    else:
        wt = weight
    n = len(forbidden)
    starts = [p[0] for p in forbidden]
    ends = [p[-1] for p in forbidden]
    pw = []
    for p in forbidden:
        w = 1
        for a, b in _edges(p):
            w = w * wt(a, b)
        pw.append(w)
    from_end = [_weighted_counts(dag, e, wt) for e in ends]
    from_source = _weighted_counts(dag, dag.source, wt)
    m = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(n):
        for j in range(n):
            m[i][j] = 1 if i == j else pw[j] * from_end[j].get(starts[i], 0)
        m[i][n] = from_source.get(starts[i], 0)
    for j in range(n):
        m[n][j] = pw[j] * from_end[j].get(dag.sink, 0)
    m[n][n] = from_source.get(dag.sink, 0)
    return m


def forbidden_count(dag: Digraph, forbidden: Sequence[Sequence], weight=None, allow_overlap: bool = False):
    """Weighted count of source-to-sink paths containing none of `forbidden`.

    Each forbidden path is a vertex sequence.  Overlapping collections are
    rejected unless `allow_overlap` is set, in which case the determinant is
    returned anyway (and is generally wrong).
    """
    ok, witness = check_nonoverlapping(forbidden)
    if not ok and not allow_overlap:
        i, j, shared = witness
        raise OverlapError(f"path {j} overlaps path {i} along {shared}")
    return determinant(forbidden_matrix(dag, forbidden, weight))


# cone counts

def _entry_functions(g: ShiDigraph):
    layout, n = g.layout, g.rs.rank
    if layout == "A":
        return (lambda a, b: ballot_count((a.x, a.y), (b.x, b.y))), corner_poly_A
    poly = lambda a, b: dp_corner_poly(g, a, b)
    if layout == "B":
        return (lambda a, b: gamma_B(a, b, n)), poly
    if layout == "D":
        return (lambda a, b: gamma_D(a, b, n)), poly
    return (lambda a, b: dp_count(g, a, b)), poly


@dataclass
class ConeMatrix:
    roots: list[int]
    corners: list[Corner]
    matrix: list[list]

    def determinant(self):
        return determinant(self.matrix)


def cone_matrix(g: ShiDigraph, w: WeylElement, order: Sequence[int] | None = None,
                refined: bool = False) -> ConeMatrix:
    """Matrix whose determinant counts regions in the cone of w (or their Poincare polynomial)."""
    roots = list(order) if order is not None else w.ordered_inversions_of_inverse()
    if set(roots) != w.inversions_of_inverse() or len(roots) != len(set(roots)):
        raise ValueError("order must list the inversion set of w^-1 exactly once")
    corners = [c for r in roots for c in g.corners[r]]
    count, poly = _entry_functions(g)
    gamma = poly if refined else count
    scale = T if refined else 1
    n = len(corners)
    m = [[0] * (n + 1) for _ in range(n + 1)]
    for i, ci in enumerate(corners):
        for j, cj in enumerate(corners):
            m[i][j] = 1 if i == j else scale * gamma(cj.tr, ci.bl)
        m[i][n] = gamma(g.source, ci.bl)
    for j, cj in enumerate(corners):
        m[n][j] = scale * gamma(cj.tr, g.sink)
    m[n][n] = gamma(g.source, g.sink)
    if refined:
        m = [[x if isinstance(x, Poly) else Poly(x) for x in row] for row in m]
    return ConeMatrix(roots, corners, m)


def _resolve(t: WeylType | str, digraph: ShiDigraph | None) -> ShiDigraph:
    t = parse_type(t) if isinstance(t, str) else t
    if digraph is not None:
        return digraph
    try:
        return build_digraph(t)
    except DataUnavailable:
        raise DataUnavailable(
            f"no digraph data for {t}: pass a digraph file with --data, "
            f"or certify counts with `verify {t} --oracle-only`") from None


def count_regions(t: WeylType | str, word="", digraph: ShiDigraph | None = None, order=None) -> int:
    g = _resolve(t, digraph)
    return cone_matrix(g, element_of(g.rs, word), order).determinant()


def poincare_polynomial(t: WeylType | str, word="", digraph: ShiDigraph | None = None, order=None) -> Poly:
    g = _resolve(t, digraph)
    return cone_matrix(g, element_of(g.rs, word), order, refined=True).determinant()


# whole-group tables

@dataclass(frozen=True)
class TableRow:
    word: tuple[int, ...]
    length: int
    count: int
    poincare: tuple[int, ...] | None = None


def _rows_for(args) -> list[TableRow]:
    tname, words, refined, data = args
    g = _resolve(tname, data)
    out = []
    for word in words:
        w = element_of(g.rs, word)
        count = cone_matrix(g, w).determinant()
        poly = cone_matrix(g, w, refined=True).determinant().coeffs if refined else None
        out.append(TableRow(tuple(word), len(word), count, poly))
    return out


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("SHICONE_WORKERS", "1")))
    except ValueError:
        return 1


def region_table(t: WeylType | str, refined: bool = False, workers: int | None = None,
                 cap: int = 10**6, digraph: ShiDigraph | None = None) -> list[TableRow]:
    """One row per group element in breadth-first order."""
    g = _resolve(t, digraph)
    words = [w.word for w in enumerate_group(g.rs, cap)]
    workers = default_workers() if workers is None else workers
    if workers <= 1 or len(words) < 64:
        return _rows_for((str(g.type), words, refined, g))
    size = -(-len(words) // (workers * 4))
    chunks = [words[k:k + size] for k in range(0, len(words), size)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_rows_for, [(str(g.type), c, refined, digraph) for c in chunks])
    return [row for part in parts for row in part]
