"""Exact graph statistics used as ground truth by the tests and the CLI.

All of these walk the materialized adjacency structure, so they are meant
for desk-scale graphs, not for the streaming path.
"""

from dataclasses import dataclass

from .stream_core import AdjacencyGraph


class NoTwoPathsError(ValueError):
    """Transitivity is undefined on a graph without 2-paths."""


@dataclass(frozen=True)
class GraphStats:
    t3: int
    p2: int
    f2: int
    m: int
    n_touched: int
    alpha: float | None  # None when p2 == 0


def exact_triangles(g: AdjacencyGraph) -> int:
    """Triangle count: sum of |N(u) ∩ N(v)| over edges, divided by 3."""
    total = 0
    for u, v in g.edges():
        total += len(g.adj[u] & g.adj[v])
    assert total % 3 == 0
    return total // 3


def exact_two_paths(g: AdjacencyGraph) -> int:
    """Number of paths on three distinct vertices: sum of C(d_v, 2)."""
    return sum(d * (d - 1) // 2 for d in map(len, g.adj.values()))


def exact_f2(g: AdjacencyGraph) -> int:
    """Second moment of the degree sequence: sum of d_v^2."""
    return sum(d * d for d in map(len, g.adj.values()))


def exact_transitivity(g: AdjacencyGraph) -> float:
    """Fraction of 2-paths closed by an edge: 3*T3 / P2."""
    p2 = exact_two_paths(g)
    if p2 == 0:
        raise NoTwoPathsError("graph has no 2-paths; transitivity undefined")
    return 3 * exact_triangles(g) / p2


def graph_stats(g: AdjacencyGraph) -> GraphStats:
    t3 = exact_triangles(g)
    p2 = exact_two_paths(g)
    return GraphStats(
        t3=t3,
        p2=p2,
        f2=exact_f2(g),
        m=g.m,
        n_touched=len(g.adj),
        alpha=(3 * t3 / p2) if p2 else None,
    )
