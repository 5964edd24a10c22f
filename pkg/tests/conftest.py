"""Shared fixture graphs for the test suite.

Edge lists use 1-based vertex ids with u < v.  NAMED_GRAPHS maps a label to
(edges, known stats) where the stats were computed by hand or by exhaustive
enumeration, independently of the library code.
"""

import random

from tristream.stream_core import AdjacencyGraph


def adjacency(edges) -> AdjacencyGraph:
    g = AdjacencyGraph()
    for u, v in edges:
        g.insert(u, v)
    return g


def adj_dict(edges) -> dict[int, set[int]]:
    return adjacency(edges).adj


BULL = [(1, 2), (1, 3), (2, 3), (2, 4), (3, 5)]          # triangle + two horns
DIAMOND = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]       # K4 minus one edge
PAW = [(1, 2), (1, 3), (1, 4), (2, 3)]                   # triangle + pendant

# label -> (edges, dict(t3=, p2=, f2=, m=))
NAMED_STATS = {
    "bull": (BULL, dict(t3=1, p2=7, f2=24, m=5)),
    "diamond": (DIAMOND, dict(t3=2, p2=8, f2=26, m=5)),
    "paw": (PAW, dict(t3=1, p2=5, f2=18, m=4)),
}


def random_graph_edges(rng: random.Random, n_max: int = 40):
    """A random graph as (edges, n): gnp with random density, possibly empty."""
    n = rng.randint(2, n_max)
    p = rng.uniform(0.03, 0.6)
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < p
    ]
    return edges, n
