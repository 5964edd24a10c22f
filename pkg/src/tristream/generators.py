"""Edge-list and stream generators for tests, benchmarks, and the CLI.

Edge lists are plain ``list[tuple[int, int]]`` with u < v and vertices in
[1, n]; ``edges_to_events`` turns one into an insert-only stream, and
``with_churn`` wraps one in decoy insert/delete pairs so deletion handling
can be exercised without changing the final graph.
"""

import random

from .stream_core import EdgeEvent

# -- static edge lists -------------------------------------------------


def complete_edges(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]


def path_edges(n: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(1, n)]


def cycle_edges(n: int) -> list[tuple[int, int]]:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return path_edges(n) + [(1, n)]


def star_edges(n: int) -> list[tuple[int, int]]:
    """Hub vertex 1 joined to 2..n."""
    return [(1, v) for v in range(2, n + 1)]


def complete_bipartite_edges(a: int, b: int) -> list[tuple[int, int]]:
    """Sides {1..a} and {a+1..a+b}."""
    return [(u, v) for u in range(1, a + 1) for v in range(a + 1, a + b + 1)]


def gnp_edges(n: int, p: float, seed: int = 0) -> list[tuple[int, int]]:
    if not (0 <= p <= 1):
        raise ValueError(f"edge probability must be in [0, 1], got {p}")
    rng = random.Random(seed)
    return [e for e in complete_edges(n) if rng.random() < p]


def planted_cluster_edges(
    num_triangles: int, num_two_paths: int
) -> tuple[list[tuple[int, int]], int]:
    """Disjoint triangle gadgets followed by disjoint 2-path gadgets.

    Returns (edges, n).  Transitivity is exactly
    3*num_triangles / (3*num_triangles + num_two_paths), tunable at will.
    """
    edges = []
    v = 1
    for _ in range(num_triangles):
        a, b, c = v, v + 1, v + 2
        edges += [(a, b), (a, c), (b, c)]
        v += 3
    for _ in range(num_two_paths):
        a, b, c = v, v + 1, v + 2
        edges += [(a, b), (b, c)]
        v += 3
    return edges, max(v - 1, 2)


# -- streams -----------------------------------------------------------


def edges_to_events(edges) -> list[EdgeEvent]:
    return [EdgeEvent(u, v, +1) for u, v in edges]


def with_churn(
    edges, num_decoys: int, seed: int = 0, n_base: int | None = None
) -> tuple[list[EdgeEvent], int]:
    """Insert-only edge list plus decoy edges that are inserted and deleted.

    Decoys live on fresh vertices above n_base (default: max vertex in
    ``edges``), so the final graph is exactly ``edges`` and the extra
    vertices end at degree zero.  Insert order is shuffled with the decoys
    mixed in; all decoy deletions follow, shuffled.  Returns (events, n)
    with n covering the decoy vertices.
    """
    if n_base is None:
        n_base = max((v for _, v in edges), default=2)
    rng = random.Random(seed)
    decoys = [(n_base + 2 * j - 1, n_base + 2 * j) for j in range(1, num_decoys + 1)]
    inserts = [EdgeEvent(u, v, +1) for u, v in edges]
    inserts += [EdgeEvent(u, v, +1) for u, v in decoys]
    rng.shuffle(inserts)
    deletes = [EdgeEvent(u, v, -1) for u, v in decoys]
    rng.shuffle(deletes)
    return inserts + deletes, n_base + 2 * num_decoys


def mixed_update_stream(n: int, steps: int, seed: int = 0) -> list[EdgeEvent]:
    """Random valid turnstile stream: each step inserts an absent pair or
    deletes a present edge, half/half whenever both moves are available."""
    rng = random.Random(seed)
    present: set[tuple[int, int]] = set()
    events = []
    for _ in range(steps):
        delete = present and (len(present) == n * (n - 1) // 2 or rng.random() < 0.5)
        if delete:
            u, v = rng.choice(sorted(present))
            present.discard((u, v))
            events.append(EdgeEvent(u, v, -1))
        else:
            while True:
                u, v = rng.sample(range(1, n + 1), 2)
                if u > v:
                    u, v = v, u
                if (u, v) not in present:
                    break
            present.add((u, v))
            events.append(EdgeEvent(u, v, +1))
    return events
