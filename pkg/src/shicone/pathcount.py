"""Closed-form and dynamic-programming path counts used as matrix entries."""
from __future__ import annotations

from math import comb

from .digraph import Digraph, ShiDigraph, Vertex
from .poly import Poly


class ContractError(ValueError):
    pass


def binom(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def ballot_count(p1, p2) -> int:
    """North/east lattice paths from p1 to p2 staying weakly above x = y."""
    x1, y1 = p1[0], p1[1]
    x2, y2 = p2[0], p2[1]
    if x1 > x2 or y1 > y2:
        return 0
    d = (x2 - x1) + (y2 - y1)
    return binom(d, y2 - y1) - binom(d, y2 - x1 + 1)


def _xy(p) -> tuple[int, int]:
    return (p.x, p.y) if isinstance(p, Vertex) else (p[0], p[1])


# type B

def diag_sum_raw(p, n: int) -> int:
    a, b = _xy(p)
    if b == 2 * n - a + 1:
        return 1
    return sum(ballot_count((a, b), (i, 2 * n - i)) for i in range(0, n + 1))


def diag_sum_simplified(p, n: int) -> int:
    a, b = _xy(p)
    if b == 2 * n - a + 1:
        return 1
    j, m, c = 2 * n - a - b, min(n, 2 * n - b), b - a
    pos = sum(binom(j, j + a - i) for i in range(max(a, m - c), m + 1))
    neg = sum(binom(j, j + a - i) for i in range(a - c - 1, min(a, m - c)))
    return pos - neg


def diag_sum(p, n: int) -> int:
    """Paths from p to the sink (1, 2n) of the rank-n type-B digraph."""
    raw = diag_sum_raw(p, n)
    simple = diag_sum_simplified(p, n)
    if raw != simple:
        raise ArithmeticError(f"diagonal sum mismatch at {_xy(p)}, n={n}: {raw} != {simple}")
    return raw


def gamma_B(p1, p2, n: int) -> int:
    if _xy(p2) == (1, 2 * n):
        return diag_sum(p1, n)
    return ballot_count(_xy(p1), _xy(p2))


# type D

def _mu(j: int, n: int) -> int:
    # the last sink of a second-part copy is also reached around the far box
    return 2 if j == n - 1 else 1


def _lam(i: int, j: int, k: int, n: int, naive_boundary: bool = False) -> int:
    """Paths inside third-part copy j from bottom vertex k to top sink i."""
    if naive_boundary:
        if i == n - 2:
            return 2
        if i == j - 1:
            return j - k + 1
        return 1 if n - 2 > i > j - 1 else 0
    if i < j - 1:
        return 0
    return (j - k if i == j - 1 else 1) + (1 if i == n - 2 else 0)


def _to_first_sink(v1: Vertex, k: int, n: int, naive_boundary: bool = False) -> int:
    """Paths from a part-1 vertex to the part-1 sink in column k."""
    if not naive_boundary and (v1.x, v1.y) == (k, n - 1):
        return 1
    return ballot_count((v1.x, v1.y), (k, n - 2))


def gamma_D(v1: Vertex, v2: Vertex, n: int, naive_boundary: bool = False) -> int:
    """Path count between role-valid vertices of the four-part type-D digraph.

    v1 is the source or the top-right vertex of a corner; v2 the sink or a
    bottom-left vertex.  `naive_boundary` swaps in simpler boundary cases
    that over-count near the part boundaries; kept only for comparison.
    """
    m = n - 2
    u1, u2 = v1.u, v2.u
    if v1 == v2:
        return 1
    if u2 < u1:
        return 0

    def gB(x: int, y: int) -> int:
        return gamma_B((x, y), (v2.x, v2.y), m)

    if u1 == 1:
        if u2 == 1:
            return ballot_count((v1.x, v1.y), (v2.x, v2.y))
        if u2 == 2:
            return _to_first_sink(v1, v2.v - 1, n, naive_boundary) if v2.x >= v2.v - 1 else 0
        if u2 == 3:
            j = v2.v
            return sum(_mu(j, n) * _to_first_sink(v1, k, n, naive_boundary) for k in range(min(v2.x, j - 1) + 1))
        total = 0
        for i in range(n - 1):
            gi = gB(i, m)
            if not gi:
                continue
            for j in range(1, min(i + 1, n - 1) + 1):
                for k in range(j):
                    total += _to_first_sink(v1, k, n, naive_boundary) * _mu(j, n) * _lam(i, j, k, n, naive_boundary) * gi
        return total
    if u1 == 2:
        j = min(v1.x + 1, n - 1)
        k = v1.v - 1
        if u2 == 3:
            return 1 if v2.v == j and v2.x >= k else 0
        if u2 == 4:
            return sum(_lam(i, j, k, n, naive_boundary) * gB(i, m) for i in range(j - 1, n - 1))
        return 0
    if u1 == 3:
        if u2 != 4:
            return 0
        if v1.x <= v1.v - 1:
            s = v1.v - 1
        elif v1.x == n - 1:
            s = n - 2
        else:
            s = v1.x
        return gB(s, m)
    if u1 == 4:
        return gamma_B((v1.x, v1.y), (v2.x, v2.y), m)
    raise ContractError(f"vertex {v1} is not in a known part")


# corner-refined counts

def corner_poly_A(p1, p2) -> Poly:
    """Paths weakly above x = y counted by their number of east-then-north turns."""
    a, b = _xy(p1)
    c, d = _xy(p2)
    if a > c or b > d:
        return Poly()
    top = min(c - a, d - b)
    return Poly([binom(d - b, l) * binom(c - a, l) - binom(d - a - 1, l - 1) * binom(c - b + 1, l + 1)
                 for l in range(top + 1)])


def dp_count(g: Digraph, v1, v2) -> int:
    return g.counts_from(v1).get(v2, 0)


def corner_polys_from(g: ShiDigraph, v1) -> dict:
    """Corner generating polynomial from v1 to every reachable vertex."""
    if v1 in g._poly_cache:
        return g._poly_cache[v1]
    order = g.topological_order
    # state: vertex -> {previous vertex: coefficient list}
    state: dict = {v1: {None: [1]}}
    for a in order[order.index(v1):]:
        here = state.get(a)
        if not here:
            continue
        for b in g.succ[a]:
            slot = state.setdefault(b, {}).setdefault(a, [])
            for prev, coeffs in here.items():
                shift = 1 if prev is not None and g.corner_at(prev, a, b) else 0
                need = len(coeffs) + shift
                if len(slot) < need:
                    slot.extend([0] * (need - len(slot)))
                for k, c in enumerate(coeffs):
                    slot[k + shift] += c
    out = {}
    for v, by_prev in state.items():
        total = Poly()
        for coeffs in by_prev.values():
            total = total + Poly(coeffs)
        out[v] = total
    g._poly_cache[v1] = out
    return out


def dp_corner_poly(g: ShiDigraph, v1, v2) -> Poly:
    return corner_polys_from(g, v1).get(v2, Poly())
