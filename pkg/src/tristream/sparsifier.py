"""Color-based edge sparsification with uniform 2-path sampling.

A seeded coloring keeps exactly the monochromatic edges, so a triangle
survives whole with probability 1/colors^2.  The surviving subgraph is held
in degree-class buckets: bucket i stores vertices whose 2-path count
C(d,2) lies in [2^i, 2^(i+1)-1], vertices of degree 1 sit in a spillover
list, and isolated vertices are evicted.  Updates are O(1) per endpoint;
drawing a uniform 2-path costs O(log n) expected per draw with acceptance
probability above 1/2.
"""

import numpy as np

from .hashing import mix2, mix2_array
from .stream_core import DeleteAbsentError, DuplicateInsertError


class InconsistentDeleteError(ValueError):
    """A monochromatic delete for an edge the sparsified graph never kept."""


class ColoringFunction:
    """Deterministic vertex coloring with values in 1..colors."""

    def __init__(self, seed: int, colors: int):
        if colors < 1:
            raise ValueError(f"need at least one color, got {colors}")
        self.seed = seed
        self.colors = colors

    def color(self, v: int) -> int:
        return 1 + mix2(self.seed, v) % self.colors

    def colors_of(self, vs: np.ndarray) -> np.ndarray:
        """Vectorized form; agrees with ``color`` element for element."""
        if self.colors == 1:
            return np.ones(len(vs), dtype=np.uint64)
        return np.uint64(1) + mix2_array(seed=self.seed, xs=vs) % np.uint64(self.colors)

    def monochromatic(self, u: int, v: int) -> bool:
        return self.color(u) == self.color(v)


def _c2(d: int) -> int:
    return d * (d - 1) // 2


class SparsifiedGraph:
    """Monochromatic subgraph with bucketed degree classes.

    ``loc`` maps each live vertex to (bucket index, position); index -1 is
    the degree-1 spillover, which carries no 2-path mass.  ``p2_bucket``
    tracks the per-bucket totals of C(d,2) and ``p2_total`` their sum.
    """

    def __init__(self, n: int, coloring: ColoringFunction):
        if n < 2:
            raise ValueError(f"universe must hold at least 2 vertices, got n={n}")
        self.n = n
        self.coloring = coloring
        self.adj: dict[int, set[int]] = {}
        self.loc: dict[int, tuple[int, int]] = {}
        # floor(2*log2(n)) + 1 slots, computed exactly: C(d,2) < n^2 always
        self.num_buckets = (n * n).bit_length()
        self.buckets: list[list[int]] = [[] for _ in range(self.num_buckets)]
        self.degree_one: list[int] = []
        self.p2_bucket = [0] * self.num_buckets
        self.p2_total = 0
        self.m_prime = 0
        # sampler accounting, used by the uniformity and acceptance tests
        self.sample_draws = 0
        self.samples = 0

    # -- bucket plumbing ----------------------------------------------------

    def _array(self, b: int) -> list[int]:
        return self.degree_one if b == -1 else self.buckets[b]

    # -- updates ------------------------------------------------------------

    def apply(self, u: int, v: int, sign: int) -> bool:
        """Apply one normalized edge event; returns False for bichromatic no-ops."""
        coloring = self.coloring
        if coloring.colors > 1 and coloring.color(u) != coloring.color(v):
            return False
        self._apply_kept(u, v, sign)
        return True

    def _apply_kept(self, u: int, v: int, sign: int) -> None:
        """Update for an edge already known monochromatic.

        Hand-unrolled degree-class transitions; this is the hot loop of the
        whole estimator, so the helper calls are inlined.  A degree moves
        class only when C(d,2) crosses a power of two, so most updates touch
        just the per-bucket totals.
        """
        adj = self.adj
        loc = self.loc
        dp2 = 0
        if sign == 1:
            nbrs = adj.get(u)
            if nbrs is not None and v in nbrs:
                raise DuplicateInsertError(f"edge ({u}, {v}) already in the sparsified graph")
            for x, y in ((u, v), (v, u)):
                s = adj.get(x)
                if s is None:
                    adj[x] = {y}
                    arr = self.degree_one
                    loc[x] = (-1, len(arr))
                    arr.append(x)
                    continue
                s.add(y)
                d = len(s)
                c_new = d * (d - 1) >> 1
                if d == 2:
                    b_new = 0  # out of the degree-1 spillover
                    c_old = 0
                else:
                    c_old = c_new - d + 1
                    b_old = c_old.bit_length() - 1
                    b_new = c_new.bit_length() - 1
                    self.p2_bucket[b_old] -= c_old
                    if b_old == b_new:
                        self.p2_bucket[b_new] += c_new
                        dp2 += d - 1
                        continue
                # slot move: swap-remove from the old array, append to new
                b, pos = loc.pop(x)
                arr = self.degree_one if b == -1 else self.buckets[b]
                last = arr.pop()
                if last != x:
                    arr[pos] = last
                    loc[last] = (b, pos)
                arr = self.buckets[b_new]
                loc[x] = (b_new, len(arr))
                arr.append(x)
                self.p2_bucket[b_new] += c_new
                dp2 += c_new - c_old
            self.m_prime += 1
        else:
            nbrs = adj.get(u)
            if nbrs is None or v not in nbrs:
                raise InconsistentDeleteError(f"edge ({u}, {v}) not in the sparsified graph")
            for x, y in ((u, v), (v, u)):
                s = adj[x]
                s.discard(y)
                d = len(s)
                c_old = (d + 1) * d >> 1
                if d >= 2:
                    c_new = c_old - d
                    b_old = c_old.bit_length() - 1
                    b_new = c_new.bit_length() - 1
                    self.p2_bucket[b_old] -= c_old
                    self.p2_bucket[b_new] += c_new
                    dp2 -= d
                    if b_old == b_new:
                        continue
                elif d == 1:
                    b_new = -1  # back to the spillover; drops its C(2,2)=1
                    self.p2_bucket[0] -= 1
                    dp2 -= 1
                else:
                    del adj[x]
                    b_new = None
                b, pos = loc.pop(x)
                arr = self.degree_one if b == -1 else self.buckets[b]
                last = arr.pop()
                if last != x:
                    arr[pos] = last
                    loc[last] = (b, pos)
                if b_new is not None:
                    arr = self.degree_one if b_new == -1 else self.buckets[b_new]
                    loc[x] = (b_new, len(arr))
                    arr.append(x)
            self.m_prime -= 1
        self.p2_total += dp2

    def apply_events(self, us: np.ndarray, vs: np.ndarray, signs: np.ndarray) -> int:
        """Filter a whole event block by color, then apply the survivors.

        Same per-event semantics as ``apply``; returns the number applied.
        """
        if self.coloring.colors > 1:
            keep = np.nonzero(
                self.coloring.colors_of(us) == self.coloring.colors_of(vs)
            )[0]
            if keep.size == 0:
                return 0
            us, vs, signs = us[keep], vs[keep], signs[keep]
        kept = self._apply_kept
        for u, v, s in zip(us.tolist(), vs.tolist(), signs.tolist()):
            kept(u, v, s)
        return len(us)

    # -- queries ------------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.adj.get(u)
        return nbrs is not None and v in nbrs

    def degree(self, v: int) -> int:
        nbrs = self.adj.get(v)
        return 0 if nbrs is None else len(nbrs)

    def sample_two_path(self, rng) -> tuple[int, int, int] | None:
        """Draw a uniform 2-path (u, center, w), u < w; None if there are none.

        Rejection scheme: propose a bucket with weight |H_i| * q_i where
        q_i = 2^(i+1)-1, a member vertex uniformly, and accept with
        probability C(d,2)/q_i; every 2-path then carries identical per-draw
        mass 1/sum(|H_i| * q_i), and a rejection restarts the whole draw.
        Acceptance exceeds 1/2 per draw because C(d,2) >= 2^i > q_i/2.
        """
        if self.p2_total == 0:
            return None
        weights = []
        total = 0
        for i, arr in enumerate(self.buckets):
            if arr:
                w = len(arr) * ((1 << (i + 1)) - 1)
                total += w
                weights.append((i, w))
        while True:
            self.sample_draws += 1
            target = rng.random() * total
            cum = 0
            for i, w in weights:
                cum += w
                if target < cum:
                    break
            arr = self.buckets[i]
            v = arr[rng.randrange(len(arr))]
            q = (1 << (i + 1)) - 1
            if rng.randrange(q) >= _c2(len(self.adj[v])):
                continue
            nbrs = tuple(self.adj[v])
            a, b = rng.sample(nbrs, 2)
            self.samples += 1
            return (a, v, b) if a < b else (b, v, a)

    # -- integrity ----------------------------------------------------------

    def audit(self) -> None:
        """Rebuild the bucket state from ``adj`` and compare; raises on drift."""
        exp_p2_bucket = [0] * self.num_buckets
        exp_loc_bucket = {}
        exp_m2 = 0
        for x, nbrs in self.adj.items():
            d = len(nbrs)
            if d == 0:
                raise RuntimeError(f"audit: vertex {x} lingers with no neighbors")
            exp_m2 += d
            if d == 1:
                exp_loc_bucket[x] = -1
            else:
                b = _c2(d).bit_length() - 1
                exp_loc_bucket[x] = b
                exp_p2_bucket[b] += _c2(d)
        got_loc_bucket = {x: b for x, (b, _) in self.loc.items()}
        if got_loc_bucket != exp_loc_bucket:
            raise RuntimeError("audit: vertex-to-bucket map diverges from adjacency")
        if self.p2_bucket != exp_p2_bucket:
            raise RuntimeError("audit: per-bucket 2-path totals diverge")
        if self.p2_total != sum(exp_p2_bucket):
            raise RuntimeError("audit: p2_total diverges")
        if self.m_prime != exp_m2 // 2:
            raise RuntimeError("audit: edge count diverges")
        for b in range(-1, self.num_buckets):
            arr = self._array(b)
            for pos, x in enumerate(arr):
                if self.loc.get(x) != (b, pos):
                    raise RuntimeError(f"audit: slot ({b}, {pos}) inconsistent for vertex {x}")
