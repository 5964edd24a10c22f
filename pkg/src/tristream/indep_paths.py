"""Pairwise independent 2-paths: greedy certification and exact search.

Two 2-paths are independent when they share at most one vertex.  The greedy
count certifies a lower bound on the maximum; the exact search is reserved
for tiny instances and backs the tests.  ``verify_lower_bounds`` checks a
graph against the structural floors used to size the sampling threshold:
ceil(|V|/2)-1 for connected graphs, floor(m/9) for connected bipartite
graphs, floor(m/18) in general.
"""

import heapq
from collections import deque
from dataclasses import dataclass

TwoPath = tuple[int, int, int]  # (u, center, w) with u < w


class BudgetExceededError(ValueError):
    """Exact search requested on an instance above its size budget."""


class NotConnectedError(ValueError):
    pass


class HasIsolatedEdgesError(ValueError):
    pass


def greedy_independent_count(adj: dict[int, set[int]], target: int | None = None) -> int:
    """Size of a maximal independent set of 2-paths, built greedily.

    Centers are visited by ascending vertex id and neighbor pairs in
    lexicographic order; a candidate is kept iff it shares at most one
    vertex with every path already selected.  Conflict checks go through a
    vertex -> selected-path incidence map.  Stops early at ``target``.
    """
    selected_at: dict[int, list[int]] = {}
    count = 0
    for v in sorted(adj):
        nbrs = adj[v]
        if len(nbrs) < 2:
            continue
        ordered = sorted(nbrs)
        for i in range(len(ordered) - 1):
            u = ordered[i]
            for j in range(i + 1, len(ordered)):
                w = ordered[j]
                ids = list(selected_at.get(u, ()))
                ids.extend(selected_at.get(v, ()))
                ids.extend(selected_at.get(w, ()))
                if len(ids) != len(set(ids)):
                    continue
                for x in (u, v, w):
                    selected_at.setdefault(x, []).append(count)
                count += 1
                if target is not None and count >= target:
                    return count
    return count


def enumerate_two_paths(adj: dict[int, set[int]]) -> list[TwoPath]:
    """All 2-paths of a graph, center in the middle, endpoints ascending."""
    paths = []
    for v in sorted(adj):
        ordered = sorted(adj[v])
        for i in range(len(ordered) - 1):
            for j in range(i + 1, len(ordered)):
                paths.append((ordered[i], v, ordered[j]))
    return paths


def max_independent_two_paths(adj: dict[int, set[int]], budget: int = 24) -> int:
    """Exact maximum via branch and bound over the conflict graph."""
    paths = enumerate_two_paths(adj)
    k = len(paths)
    if k > budget:
        raise BudgetExceededError(f"{k} 2-paths exceed the exact-search budget of {budget}")
    vsets = [frozenset(p) for p in paths]
    conflict = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if len(vsets[i] & vsets[j]) >= 2:
                conflict[i] |= 1 << j
                conflict[j] |= 1 << i
    best = 0

    def rec(avail: int, size: int) -> None:
        nonlocal best
        if size + avail.bit_count() <= best:
            return
        if avail == 0:
            best = max(best, size)
            return
        low = avail & -avail
        i = low.bit_length() - 1
        rec((avail ^ low) & ~conflict[i], size + 1)  # take path i
        rec(avail ^ low, size)  # skip path i

    rec((1 << k) - 1, 0)
    return best


def spanning_tree_two_paths(adj: dict[int, set[int]]) -> list[TwoPath]:
    """Constructive independent set of size >= ceil(n/2) - 1 (connected input).

    Root a BFS spanning tree, then repeatedly take a deepest leaf u with
    parent v: pair u with a sibling leaf w (removing u and w) when one
    exists, otherwise with v's parent w (removing u and v).  Every round
    consumes two vertices and emits one 2-path, and any two emitted paths
    share at most the one retained vertex.
    """
    if not adj:
        return []
    root = min(adj)
    parent: dict[int, int] = {root: 0}
    depth = {root: 0}
    children: dict[int, set[int]] = {v: set() for v in adj}
    order = deque([root])
    while order:
        x = order.popleft()
        for y in adj[x]:
            if y not in depth:
                depth[y] = depth[x] + 1
                parent[y] = x
                children[x].add(y)
                order.append(y)
    if len(depth) != len(adj):
        raise NotConnectedError("graph is not connected")

    alive = set(adj)
    heap = [(-depth[v], v) for v in adj if not children[v]]
    heapq.heapify(heap)
    paths: list[TwoPath] = []
    while len(alive) >= 3 and heap:
        _, u = heapq.heappop(heap)
        if u not in alive or children[u] or u == root:
            continue
        v = parent[u]
        siblings = children[v] - {u}
        if siblings:
            w = min(siblings)  # deepest-leaf rule makes every sibling a leaf
            paths.append((min(u, w), v, max(u, w)))
            alive.discard(u)
            alive.discard(w)
            children[v] -= {u, w}
            if not children[v]:
                heapq.heappush(heap, (-depth[v], v))
        else:
            if v == root:
                break  # only root and u left on this branch
            w = parent[v]
            a, b = sorted((u, w))
            paths.append((a, v, b))
            alive.discard(u)
            alive.discard(v)
            children[w].discard(v)
            if not children[w]:
                heapq.heappush(heap, (-depth[w], w))
    _assert_independent(paths)
    return paths


def _assert_independent(paths: list[TwoPath]) -> None:
    incidence: dict[int, list[int]] = {}
    for i, (u, v, w) in enumerate(paths):
        for x in (u, v, w):
            incidence.setdefault(x, []).append(i)
    shared: dict[tuple[int, int], int] = {}
    for ids in incidence.values():
        for a_pos in range(len(ids)):
            for b_pos in range(a_pos + 1, len(ids)):
                key = (ids[a_pos], ids[b_pos])
                shared[key] = shared.get(key, 0) + 1
                if shared[key] >= 2:
                    raise RuntimeError(f"paths {key} share two vertices")


def _bfs_component(adj: dict[int, set[int]], start: int) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def _bipartition(adj: dict[int, set[int]], start: int) -> bool:
    side = {start: 0}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in side:
                side[y] = side[x] ^ 1
                queue.append(y)
            elif side[y] == side[x]:
                return False
    return True


@dataclass(frozen=True)
class LowerBoundReport:
    n: int
    m: int
    greedy_count: int
    tree_witness: int             # size of the spanning-tree construction
    bound_connected: int          # ceil(n/2) - 1
    bound_general: int            # floor(m/18)
    bound_bipartite: int | None   # floor(m/9), only for bipartite graphs
    connected_ok: bool
    general_ok: bool
    bipartite_ok: bool | None


def verify_lower_bounds(adj: dict[int, set[int]]) -> LowerBoundReport:
    """Check the greedy witness against the structural floors.

    Requires a connected graph without isolated edges; a shortfall is
    reported in the flags, never raised, so sweeps can surface candidate
    counterexamples.
    """
    if not adj:
        raise NotConnectedError("empty graph")
    first = next(iter(adj))
    if _bfs_component(adj, first) != set(adj):
        raise NotConnectedError("graph is not connected")
    for u, nbrs in adj.items():
        if len(nbrs) == 1:
            v = next(iter(nbrs))
            if len(adj[v]) == 1:
                raise HasIsolatedEdgesError(f"edge ({u}, {v}) is an isolated edge")
    n = len(adj)
    m = sum(len(s) for s in adj.values()) // 2
    greedy = greedy_independent_count(adj)
    tree_witness = len(spanning_tree_two_paths(adj))
    # greedy builds a maximal set, which meets the m/9 and m/18 floors on
    # its own; the ceil(n/2)-1 floor needs the spanning-tree construction.
    best = max(greedy, tree_witness)
    bound_conn = (n + 1) // 2 - 1
    bound_gen = m // 18
    bipartite = _bipartition(adj, first)
    bound_bip = m // 9 if bipartite else None
    return LowerBoundReport(
        n=n,
        m=m,
        greedy_count=greedy,
        tree_witness=tree_witness,
        bound_connected=bound_conn,
        bound_general=bound_gen,
        bound_bipartite=bound_bip,
        connected_ok=best >= bound_conn,
        general_ok=best >= bound_gen,
        bipartite_ok=(best >= bound_bip) if bipartite else None,
    )
