"""Structural and bijective checks of a Shi digraph against its root poset."""
from __future__ import annotations

from dataclasses import dataclass, field

from .digraph import ShiDigraph
from .oracle import count_antichains
from .rootsystem import RootSystem


@dataclass
class ValidationReport:
    paths: int = 0
    antichains: int = 0
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems

    def __str__(self) -> str:
        head = f"{'valid' if self.ok else 'INVALID'}: {self.paths} paths, {self.antichains} antichains"
        return "\n".join([head] + [f"  - {p}" for p in self.problems[:20]])


def validate_digraph(g: ShiDigraph, rs: RootSystem | None = None) -> ValidationReport:
    rs = rs or g.rs
    rep = ValidationReport()
    if not g.is_acyclic():
        rep.problems.append("digraph has a cycle")
        return rep
    sources = [v for v in g.vertices if not g.pred[v]]
    sinks = [v for v in g.vertices if not g.succ[v]]
    if sources != [g.source]:
        rep.problems.append(f"sources {sources[:5]} differ from I={g.source}")
    if sinks != [g.sink]:
        rep.problems.append(f"sinks {sinks[:5]} differ from F={g.sink}")
    for r in range(len(rs)):
        if not g.corners.get(r):
            rep.problems.append(f"root {rs.label(r)} has no corner")
    corners = g.all_corners()
    for c in corners:
        if not (g.has_edge(c.bl, c.br) and g.has_edge(c.br, c.tr)):
            rep.problems.append(f"corner {c} uses a missing edge")
    # distinct corners never share an edge, which rules out any overlap
    owner = {}
    for c in corners:
        for e in ((c.bl, c.br), (c.br, c.tr)):
            if e in owner and owner[e] != c:
                rep.problems.append(f"corners {owner[e]} and {c} share edge {e}")
            owner[e] = c

    comp = rs.comparable_masks
    seen: dict[int, tuple] = {}
    for path in g.paths():
        rep.paths += 1
        roots = sorted({c.root for c in g.corners_in_path(path)})
        mask = 0
        for r in roots:
            if comp[r] & mask:
                rep.problems.append(f"path {path} carries comparable roots {[rs.label(x) for x in roots]}")
            mask |= 1 << r
        if mask in seen:
            rep.problems.append(f"two paths give antichain {[rs.label(x) for x in roots]}")
        seen[mask] = path
    rep.antichains, _ = count_antichains(rs)
    if len(seen) != rep.antichains:
        rep.problems.append(f"{len(seen)} distinct antichains reached, expected {rep.antichains}")
    return rep
