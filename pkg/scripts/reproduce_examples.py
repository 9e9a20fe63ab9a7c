"""Print matrices, counts and polynomials for a handful of small cones."""
from __future__ import annotations

from dataclasses import dataclass

from shicone.det import cone_matrix
from shicone.digraph import build_digraph, corner_label
from shicone.oracle import count_antichains
from shicone.pathcount import gamma_B
from shicone.weyl import element_of


@dataclass(frozen=True)
class Example:
    type: str
    word: str
    order: tuple[str, ...] | None = None
    refined: bool = False


EXAMPLES = [
    Example("A2", "1 2", ("12", "22")),
    Example("A5", "5 2 4 3 1"),
    Example("B4", "2 3 4 1"),
    Example("A2", "1 2", refined=True),
    Example("A2", "", refined=True),
    Example("D4", "4 2 1"),
    Example("F4", "1 2 3 4"),
]


def show(ex: Example) -> None:
    g = build_digraph(ex.type)
    rs = g.rs
    w = element_of(rs, ex.word)
    order = [rs.find(x) for x in ex.order] if ex.order else None
    cm = cone_matrix(g, w, order, refined=ex.refined)
    print(f"== {ex.type} word '{ex.word or 'e'}'{' (refined)' if ex.refined else ''}")
    for c in cm.corners:
        print(f"   {rs.label(c.root):>8s}  {corner_label(c)}")
    for row in cm.matrix:
        print("   [" + ", ".join(str(x) for x in row) + "]")
    det = cm.determinant()
    anti, by_size = count_antichains(rs, w.inversions_of_inverse())
    print(f"   determinant {det}   oracle {by_size if ex.refined else anti}")
    if g.layout == "B":
        sums = [gamma_B(c.tr, g.sink, rs.rank) for c in cm.corners] + [gamma_B(g.source, g.sink, rs.rank)]
        print(f"   sink-row diagonal sums {sums}")


if __name__ == "__main__":
    for ex in EXAMPLES:
        show(ex)
