"""Sweep whole Weyl groups: determinant counts against both brute-force oracles.

    python scripts/sweep.py A2 A3 B3 D4 G2 F4 --refined --csv sweep.csv
"""
from __future__ import annotations

import argparse
import csv
import time
from dataclasses import dataclass, field

from shicone.det import cone_matrix
from shicone.digraph import build_digraph
from shicone.oracle import PathCatalogue, count_antichains
from shicone.weyl import enumerate_group


@dataclass
class SweepConfig:
    types: list[str] = field(default_factory=lambda: ["A2", "A3", "A4", "B2", "B3", "D4", "G2"])
    refined: bool = False
    paths: bool = True
    csv: str | None = None


@dataclass
class SweepResult:
    type: str
    elements: int = 0
    mismatches: int = 0
    total: int = 0
    seconds: float = 0.0


def sweep(name: str, cfg: SweepConfig) -> SweepResult:
    t0 = time.perf_counter()
    g = build_digraph(name)
    cat = PathCatalogue(g) if cfg.paths else None
    res = SweepResult(name)
    for w in enumerate_group(g.rs):
        inv = w.inversions_of_inverse()
        anti, by_size = count_antichains(g.rs, inv)
        ok = cone_matrix(g, w).determinant() == anti
        if cat is not None:
            ok = ok and cat.avoiding(inv)[0] == anti
        if cfg.refined:
            ok = ok and cone_matrix(g, w, refined=True).determinant().coeffs == by_size
        res.elements += 1
        res.mismatches += not ok
        res.total += anti
    res.seconds = time.perf_counter() - t0
    return res


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("types", nargs="*")
    p.add_argument("--refined", action="store_true", help="also compare Poincare polynomials")
    p.add_argument("--no-paths", action="store_true", help="skip the path-enumeration oracle")
    p.add_argument("--csv")
    a = p.parse_args()
    cfg = SweepConfig(refined=a.refined, paths=not a.no_paths, csv=a.csv)
    if a.types:
        cfg.types = a.types
    results = [sweep(t, cfg) for t in cfg.types]
    for r in results:
        print(f"{r.type:4s} |W|={r.elements:5d} mismatches={r.mismatches} regions={r.total} ({r.seconds:.2f}s)")
    if cfg.csv:
        with open(cfg.csv, "w", newline="") as fh:
            out = csv.writer(fh)
            out.writerow(["type", "elements", "mismatches", "regions", "seconds"])
            for r in results:
                out.writerow([r.type, r.elements, r.mismatches, r.total, f"{r.seconds:.3f}"])


if __name__ == "__main__":
    main()
