"""Shared fixtures and generators for the test suite."""
from __future__ import annotations

import random

from shicone.digraph import Digraph


def matrix_pairs(g):
    """Vertex pairs (start, end) that can appear as matrix entries for g."""
    starts = [g.source] + [c.tr for c in g.all_corners()]
    ends = [g.sink] + [c.bl for c in g.all_corners()]
    return [(a, b) for a in starts for b in ends]


def random_dag(rng: random.Random, max_vertices: int = 12, density: float = 0.4) -> Digraph:
    """Random DAG on 0..k-1 with every vertex on some 0 -> k-1 path."""
    k = rng.randint(3, max_vertices)
    edges = {(i, i + 1) for i in range(k - 1)}
    for i in range(k):
        for j in range(i + 2, k):
            if rng.random() < density:
                edges.add((i, j))
    return Digraph(sorted(edges), 0, k - 1)


def random_walk(rng: random.Random, dag: Digraph, min_edges: int = 1, max_edges: int = 4):
    start = rng.choice([v for v in dag.vertices if dag.succ[v]])
    path = [start]
    for _ in range(rng.randint(min_edges, max_edges)):
        nxt = dag.succ[path[-1]]
        if not nxt:
            break
        path.append(rng.choice(nxt))
    return tuple(path) if len(path) > 1 else None


def overlap_grid():
    """The 3x3 grid (minus one edge) used by both overlapping fixtures."""
    edges = [((0, 0), (1, 0)), ((1, 0), (1, 1)), ((1, 1), (1, 2)), ((1, 1), (2, 1)), ((2, 1), (2, 2)),
             ((0, 0), (0, 1)), ((0, 1), (1, 1)), ((0, 1), (0, 2)), ((0, 2), (1, 2)), ((1, 2), (2, 2))]
    return Digraph(edges, (0, 0), (2, 2))


# first fixture: the short path is a prefix of the long one
NESTED = [((0, 0), (1, 0), (1, 1), (1, 2)), ((0, 0), (1, 0), (1, 1), (1, 2), (2, 2))]
# second fixture: the last edge of one is the first edge of the other
CHAINED = [((0, 0), (1, 0), (1, 1)), ((1, 0), (1, 1), (1, 2))]
