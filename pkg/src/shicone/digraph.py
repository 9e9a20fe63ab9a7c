"""Acyclic digraphs whose source-to-sink paths encode antichains of a root poset.

Every positive root owns one or more *corners*: a length-two path
bottom-left -> bottom-right -> top-right through the box of that root.
"""
from __future__ import annotations

import json
import re
from collections import defaultdict
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cache
from pathlib import Path

from . import _exceptional
from .rootsystem import ConfigError, Root, RootSystem, WeylType, format_root, parse_label, parse_type, root_system


class DataUnavailable(LookupError):
    """No digraph is known for this type."""


@dataclass(frozen=True, order=True)
class Vertex:
    u: int
    v: int
    x: int
    y: int

    def __str__(self) -> str:
        return f"{self.x},{self.y}({self.u},{self.v})"


def V(x: int, y: int, u: int = 1, v: int = 0) -> Vertex:
    return Vertex(u, v, x, y)


@dataclass(frozen=True, order=True)
class Corner:
    bl: Vertex
    br: Vertex
    tr: Vertex
    root: int

    @property
    def path(self) -> tuple[Vertex, Vertex, Vertex]:
        return (self.bl, self.br, self.tr)


class Digraph:
    """A finite DAG with a designated source and sink."""

    def __init__(self, edges: Iterable[tuple], source, sink, vertices: Iterable = ()):
        self.succ: dict = defaultdict(list)
        self.pred: dict = defaultdict(list)
        verts = set(vertices) | {source, sink}
        self.edges = []
        for a, b in edges:
            if b in self.succ[a]:
                continue
            self.succ[a].append(b)
            self.pred[b].append(a)
            self.edges.append((a, b))
            verts.update((a, b))
        self.vertices = sorted(verts)
        for a in self.vertices:
            self.succ[a].sort()
            self.pred[a].sort()
        self.edges.sort()
        self.edge_set = set(self.edges)
        self.source, self.sink = source, sink
        self._topo = None
        self._count_cache: dict = {}

    def has_edge(self, a, b) -> bool:
        return (a, b) in self.edge_set

    @property
    def topological_order(self) -> list:
        if self._topo is None:
            indeg = {a: len(self.pred[a]) for a in self.vertices}
            ready = sorted(a for a in self.vertices if indeg[a] == 0)
            order = []
            while ready:
                a = ready.pop(0)
                order.append(a)
                for b in self.succ[a]:
                    indeg[b] -= 1
                    if indeg[b] == 0:
                        ready.append(b)
            if len(order) != len(self.vertices):
                raise ValueError("digraph has a cycle")
            self._topo = order
        return self._topo

    def is_acyclic(self) -> bool:
        try:
            self.topological_order
        except ValueError:
            return False
        return True

    def counts_from(self, v) -> dict:
        """Number of paths from v to every vertex reachable from it."""
        if v not in self._count_cache:
            order = self.topological_order
            cnt = {v: 1}
            for a in order[order.index(v):]:
                c = cnt.get(a)
                if c:
                    for b in self.succ[a]:
                        cnt[b] = cnt.get(b, 0) + c
            self._count_cache[v] = cnt
        return self._count_cache[v]

    def paths(self, start=None, end=None, cap: int | None = None) -> Iterator[tuple]:
        start = self.source if start is None else start
        end = self.sink if end is None else end
        count = 0
        stack = [(start, [start])]
        # depth-first; reversed push keeps lexicographic output order
        while stack:
            a, path = stack.pop()
            if a == end:
                count += 1
                if cap is not None and count > cap:
                    raise RuntimeError(f"more than {cap} paths")
                yield tuple(path)
                continue
            for b in reversed(self.succ[a]):
                stack.append((b, path + [b]))


class ShiDigraph(Digraph):
    """Digraph plus the map from positive roots to their corner instances."""

    def __init__(self, rs: RootSystem, edges, source, sink, corners: Iterable[Corner], vertices=(),
                 layout: str | None = None):
        super().__init__(edges, source, sink, vertices)
        self.rs = rs
        # which closed-form counter applies ("A", "B", "D"), None for digraph DP
        self.layout = layout
        self.corners: dict[int, list[Corner]] = defaultdict(list)
        for c in sorted(corners):
            self.corners[c.root].append(c)
        self.corners = dict(self.corners)
        self._corner_triples = {c.path: c for cs in self.corners.values() for c in cs}
        self._poly_cache: dict = {}

    @property
    def type(self) -> WeylType:
        return self.rs.type

    def all_corners(self) -> list[Corner]:
        return sorted(self._corner_triples.values())

    def corner_at(self, a, b, c) -> Corner | None:
        return self._corner_triples.get((a, b, c))

    def corners_in_path(self, path: Sequence) -> list[Corner]:
        return [c for k in range(len(path) - 2) if (c := self._corner_triples.get(tuple(path[k:k + 3])))]

    def relabel(self, rs: RootSystem, mapping: Sequence[int]) -> "ShiDigraph":
        """Same graph, corners reassigned via a root-index map into another system."""
        corners = [Corner(c.bl, c.br, c.tr, mapping[c.root]) for c in self.all_corners()]
        return ShiDigraph(rs, self.edges, self.source, self.sink, corners, self.vertices, self.layout)


def _boxes_to_corners(edges: set, boxes: Iterable[tuple[int, Vertex, Vertex, Vertex]]) -> list[Corner]:
    # a box contributes a corner only when both of its corner edges survive
    return [Corner(bl, br, tr, r) for r, bl, br, tr in boxes if (bl, br) in edges and (br, tr) in edges]


def _lattice_edges(verts: set, keep=lambda a, b: True) -> list:
    out = []
    for p in verts:
        for q in (Vertex(p.u, p.v, p.x, p.y + 1), Vertex(p.u, p.v, p.x + 1, p.y)):
            if q in verts and keep(p, q):
                out.append((p, q))
    return out


def build_digraph_A(n: int, rs: RootSystem | None = None) -> ShiDigraph:
    rs = rs or root_system(WeylType("A", n))
    verts = {V(x, y) for x in range(n + 1) for y in range(max(x, 1), n + 2)}
    edges = _lattice_edges(verts)
    boxes = []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            r = rs.index[parse_label(f"{i}.{j}", n)]
            boxes.append((r, V(i - 1, j), V(i, j), V(i, j + 1)))
    corners = _boxes_to_corners(set(edges), boxes)
    return ShiDigraph(rs, edges, V(0, 1), V(n, n + 1), corners, verts, layout="A")


def _b_vertices(n: int) -> set:
    # column 0 stops at 2n; the sink (1, 2n) closes the top
    out = {V(0, y) for y in range(1, 2 * n + 1)}
    out |= {V(x, y) for x in range(1, n + 1) for y in range(x, 2 * n - x + 2)}
    return out


def _b_edges(n: int, verts: set) -> list:
    def keep(p, q):
        # horizontal edges point east below the top boundary, west on it
        return q.x == p.x or p.y <= 2 * n - q.x or (p.x == 0 and p.y == 2 * n)

    edges = _lattice_edges(verts, keep)
    for x in range(2, n + 1):
        a, b = V(x, 2 * n - x + 1), V(x - 1, 2 * n - x + 1)
        if a in verts and b in verts:
            edges.append((a, b))
    return edges


def _b_boxes(n: int, label) -> list:
    """(segments, bl, br, tr) for the B_n layout; label() turns segments into a root index."""
    boxes = []
    for j in range(1, n + 1):
        for i in range(1, j + 1):
            boxes.append((label(((i, j),)), V(i - 1, j), V(i, j), V(i, j + 1)))
    for k in range(2, n + 1):
        r = 2 * n - k + 1
        for i in range(1, k):
            boxes.append((label(((i, n), (k, n))), V(i - 1, r), V(i, r), V(i, r + 1)))
    return boxes


def _segment_root(rank: int, segs) -> Root:
    out = [0] * rank
    for i, j in segs:
        for k in range(i - 1, j):
            out[k] += 1
    return tuple(out)


def build_digraph_B(n: int, rs: RootSystem | None = None) -> ShiDigraph:
    rs = rs or root_system(WeylType("B", n))
    verts = _b_vertices(n)
    edges = _b_edges(n, verts)
    boxes = _b_boxes(n, lambda segs: rs.index[_segment_root(n, segs)])
    corners = _boxes_to_corners(set(edges), boxes)
    return ShiDigraph(rs, edges, V(0, 1), V(1, 2 * n), corners, verts, layout="B")


def build_digraph_D(n: int, rs: RootSystem | None = None) -> ShiDigraph:
    if n < 4:
        raise ConfigError("the four-part D construction needs rank >= 4")
    rs = rs or root_system(WeylType("D", n))
    m = n - 2

    def root(*segs):
        return rs.index[_segment_root(n, segs)]

    edges, boxes, verts = [], [], set()

    # part 1: staircase of rank n-2 with its top row of edges removed
    p1 = {V(x, y) for x in range(m + 1) for y in range(max(x, 1), m + 2)}
    verts |= p1
    edges += _lattice_edges(p1, lambda p, q: q.x == p.x or p.y <= m)
    for i in range(1, m + 1):
        for j in range(i, m + 1):
            boxes.append((root((i, j)), V(i - 1, j), V(i, j), V(i, j + 1)))

    # parts (2,i): one row of n-1 boxes, first i-1 boxes stripped
    for i in range(1, n):
        P = lambda x, y: V(x, y, 2, i)
        for x in range(i - 1, n):
            verts |= {P(x, 0), P(x, 1)}
            edges.append((P(x, 0), P(x, 1)))
            if x < n - 1:
                edges.append((P(x, 0), P(x + 1, 0)))
        edges.append((P(n - 1, 1), P(n - 2, 1)))
        for k in range(1, n):
            boxes.append((root((k, n - 1)), P(k - 1, 0), P(k, 0), P(k, 1)))

    # parts (3,i): full row, first i-1 top edges point east
    for i in range(1, n):
        P = lambda x, y: V(x, y, 3, i)
        for x in range(n):
            verts |= {P(x, 0), P(x, 1)}
            edges.append((P(x, 0), P(x, 1)))
            if x < n - 1:
                edges.append((P(x, 0), P(x + 1, 0)))
        for x in range(i - 1):
            edges.append((P(x, 1), P(x + 1, 1)))
        edges.append((P(n - 1, 1), P(n - 2, 1)))
        for k in range(1, n - 1):
            boxes.append((root((k, n - 2), (n, n)), P(k - 1, 0), P(k, 0), P(k, 1)))
        boxes.append((root((n, n)), P(n - 2, 0), P(n - 1, 0), P(n - 1, 1)))

    # part 4: upper half of the B_{n-2} layout, in B_{n-2} coordinates
    bverts = {p for p in _b_vertices(m) if p.y >= m}
    p4 = {V(p.x, p.y, 4, 0) for p in bverts}
    verts |= p4
    edges += [(V(a.x, a.y, 4, 0), V(b.x, b.y, 4, 0)) for a, b in _b_edges(m, _b_vertices(m))
              if a in bverts and b in bverts]
    for i in range(1, m + 1):
        boxes.append((root((i, n)), V(i - 1, m, 4, 0), V(i, m, 4, 0), V(i, m + 1, 4, 0)))
    for r in range(1, m):
        k = m - r + 1
        for i in range(1, m - r + 1):
            y = m + r
            boxes.append((root((i, n), (k, n - 2)), V(i - 1, y, 4, 0), V(i, y, 4, 0), V(i, y + 1, 4, 0)))

    # links between parts
    for x in range(m + 1):
        edges.append((V(x, m + 1), V(x, 0, 2, x + 1)))
    for i in range(1, n):
        for x in range(i - 1, n - 1):
            edges.append((V(x, 1, 2, i), V(i - 1, 0, 3, x + 1)))
    for j in range(1, n):
        for x in range(j - 1, n - 1):
            edges.append((V(x, 1, 3, j), V(x, m, 4, 0)))

    corners = _boxes_to_corners(set(edges), boxes)
    return ShiDigraph(rs, edges, V(0, 1), V(1, 2 * m, 4, 0), corners, verts, layout="D")


_COORD = re.compile(r"\(([\d.]+),([\d.]+)\)-\(([\d.]+),([\d.]+)\)")


def _embedded_digraph(rs: RootSystem, edge_text: str, box_text: str, source, sink,
                    parts=None, relabel=None) -> ShiDigraph:
    def place(x: float, y: float) -> Vertex:
        if parts is None:
            return V(int(x), int(y))
        for (y0, y1), (x0, x1), (u, v), shift in parts:
            if y0 <= y <= y1 and x0 <= x <= x1:
                return V(int(x - shift), int(y), u, v)
        raise ValueError(f"point {(x, y)} outside every part")

    edges = [(place(float(a), float(b)), place(float(c), float(d)))
             for a, b, c, d in _COORD.findall(edge_text)]
    boxes = []
    for line in box_text.strip().splitlines():
        label, centre = line.split()
        cx, cy = (float(s) for s in centre.split(","))
        coeffs = parse_label(label, rs.rank)
        if relabel:
            coeffs = tuple(coeffs[k] for k in relabel)
        x, y = cx - 0.5, cy - 0.5
        boxes.append((rs.index[coeffs], place(x, y), place(x + 1, y), place(x + 1, y + 1)))
    corners = _boxes_to_corners(set(edges), boxes)
    return ShiDigraph(rs, edges, place(*source), place(*sink), corners)


def build_digraph_G2() -> ShiDigraph:
    f = _exceptional
    return _embedded_digraph(root_system("G2"), f.G2_EDGES, f.G2_BOXES, f.G2_SOURCE, f.G2_SINK)


def build_digraph_F4() -> ShiDigraph:
    f = _exceptional
    return _embedded_digraph(root_system("F4"), f.F4_EDGES, f.F4_BOXES, f.F4_SOURCE, f.F4_SINK,
                           parts=f.F4_PARTS, relabel=f.F4_RELABEL)


def poset_isomorphism(src: RootSystem, dst: RootSystem) -> list[int]:
    """Some order isomorphism between two root posets, found by backtracking."""
    if len(src) != len(dst):
        raise ValueError("posets differ in size")
    m = len(src)

    def sig(rs, a):
        return (rs.height(a), sum(rs.leq(b, a) for b in range(m)), sum(rs.leq(a, b) for b in range(m)))

    ssig = [sig(src, a) for a in range(m)]
    dsig = [sig(dst, a) for a in range(m)]
    image = [-1] * m
    used = [False] * m

    def extend(a: int) -> bool:
        if a == m:
            return True
        for b in range(m):
            if used[b] or dsig[b] != ssig[a]:
                continue
            if all(src.leq(c, a) == dst.leq(image[c], b) and src.leq(a, c) == dst.leq(b, image[c])
                   for c in range(a)):
                image[a], used[b] = b, True
                if extend(a + 1):
                    return True
                used[b] = False
        return False

    if not extend(0):
        raise ValueError(f"root posets of {src.type} and {dst.type} are not isomorphic")
    return image


@cache
def build_digraph(t: WeylType | str) -> ShiDigraph:
    """Digraph for any type with a known construction (A, B, C, D, F4, G2)."""
    t = parse_type(t) if isinstance(t, str) else t
    rs = root_system(t)
    f, n = t.family, t.rank
    if f == "A":
        return build_digraph_A(n)
    if f == "B":
        return build_digraph_B(n)
    if f == "C":
        g = build_digraph_B(n)
        return g.relabel(rs, poset_isomorphism(g.rs, rs))
    if f == "D":
        if n == 3:
            g = build_digraph_A(3)
            return g.relabel(rs, poset_isomorphism(g.rs, rs))
        return build_digraph_D(n)
    if f == "F":
        return build_digraph_F4()
    if f == "G":
        return build_digraph_G2()
    raise DataUnavailable(f"no digraph data for {t}; supply one with --data")


# serialization

def to_json(g: ShiDigraph) -> str:
    ids = {v: k for k, v in enumerate(g.vertices)}
    corners = {}
    for r in sorted(g.corners):
        key = " ".join(map(str, g.rs.roots[r]))
        corners[key] = [[ids[c.bl], ids[c.br], ids[c.tr]] for c in g.corners[r]]
    doc = {
        "type": str(g.type),
        "vertices": [{"id": ids[v], "x": v.x, "y": v.y, "u": v.u, "v": v.v} for v in g.vertices],
        "edges": [[ids[a], ids[b]] for a, b in g.edges],
        "source": ids[g.source],
        "sink": ids[g.sink],
        "corners": corners,
    }
    return json.dumps(doc, indent=1, sort_keys=True)


def from_json(text: str) -> ShiDigraph:
    doc = json.loads(text)
    try:
        rs = root_system(parse_type(doc["type"]))
        verts = {d["id"]: Vertex(d["u"], d["v"], d["x"], d["y"]) for d in doc["vertices"]}
        edges = [(verts[a], verts[b]) for a, b in doc["edges"]]
        corners = []
        for key, triples in doc["corners"].items():
            coeffs = tuple(int(c) for c in key.split())
            if coeffs not in rs.index:
                raise ValueError(f"{key!r} is not a positive root of {rs.type}")
            for a, b, c in triples:
                corners.append(Corner(verts[a], verts[b], verts[c], rs.index[coeffs]))
        return ShiDigraph(rs, edges, verts[doc["source"]], verts[doc["sink"]], corners, verts.values())
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed digraph document: {exc!r}") from None


def load_digraph(path: str | Path) -> ShiDigraph:
    return from_json(Path(path).read_text(encoding="utf-8"))


def to_dot(g: ShiDigraph) -> str:
    ids = {v: k for k, v in enumerate(g.vertices)}
    lines = [f'digraph "{g.type}" {{']
    for v in g.vertices:
        extra = ""
        if v == g.source:
            extra = ", shape=box"
        elif v == g.sink:
            extra = ", shape=doublecircle"
        lines.append(f'  v{ids[v]} [label="{v}"{extra}];')
    corner_edges = {(c.bl, c.br) for c in g.all_corners()} | {(c.br, c.tr) for c in g.all_corners()}
    for a, b in g.edges:
        style = " [color=red]" if (a, b) in corner_edges else ""
        lines.append(f"  v{ids[a]} -> v{ids[b]}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_digraph(g: ShiDigraph, fmt: str = "json") -> str:
    if fmt == "json":
        return to_json(g)
    if fmt == "dot":
        return to_dot(g)
    raise ConfigError(f"unknown digraph format {fmt!r}")


def same_digraph(a: ShiDigraph, b: ShiDigraph) -> bool:
    return (a.type == b.type and a.vertices == b.vertices and a.edges == b.edges
            and a.source == b.source and a.sink == b.sink and a.corners == b.corners)


def corner_label(c: Corner) -> str:
    return f"{c.bl} -> {c.br} -> {c.tr}"


def root_text(rs: RootSystem, r: int) -> str:
    return f"α_{{{rs.label(r)}}} {format_root(rs.roots[r])}"
