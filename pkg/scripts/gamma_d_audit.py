"""List vertex pairs where the naive type-D boundary cases disagree with DP counts.

    python scripts/gamma_d_audit.py 4 5 6 --show 10
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from shicone.digraph import build_digraph
from shicone.pathcount import dp_count, gamma_D


@dataclass
class AuditConfig:
    ranks: tuple[int, ...] = (4, 5)
    show: int = 5


def audit(n: int, cfg: AuditConfig) -> None:
    g = build_digraph(f"D{n}")
    starts = [g.source] + [c.tr for c in g.all_corners()]
    ends = [g.sink] + [c.bl for c in g.all_corners()]
    rows = []
    for a in starts:
        for b in ends:
            true = dp_count(g, a, b)
            fixed, naive = gamma_D(a, b, n), gamma_D(a, b, n, naive_boundary=True)
            assert fixed == true, (a, b)
            if naive != true:
                rows.append((a, b, naive, true))
    print(f"D{n}: {len(rows)} of {len(starts) * len(ends)} pairs differ; "
          f"source->sink naive {gamma_D(g.source, g.sink, n, naive_boundary=True)}, true {dp_count(g, g.source, g.sink)}")
    for a, b, naive, true in rows[:cfg.show]:
        print(f"   {a} -> {b}: naive {naive}, counted {true}")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("ranks", nargs="*", type=int)
    p.add_argument("--show", type=int, default=5)
    a = p.parse_args()
    cfg = AuditConfig(tuple(a.ranks) or AuditConfig.ranks, a.show)
    for n in cfg.ranks:
        audit(n, cfg)


if __name__ == "__main__":
    main()
