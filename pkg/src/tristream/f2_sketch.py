"""Linear sketch for the second frequency moment of a turnstile item stream.

Tug-of-war counters: each cell holds the signed sum of item weights under a
4-wise independent ±1 hash (degree-3 polynomial over a Mersenne prime field,
sign taken from the low bit of the canonical representative).  The estimate
is the median over rows of the mean over columns of the squared counters.

Linearity makes the sketch order-independent and mergeable, and lets
``update_many`` collapse repeated ±1 updates of one item into a single
weighted update with bit-identical counters.
"""

import math

import numpy as np

from .hashing import prime_for

try:
    import numba as _nb

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba present in normal installs
    _HAVE_NUMBA = False


class SeedMismatchError(ValueError):
    """Merging sketches with different hash families or shapes."""


class CounterOverflowError(OverflowError):
    """Accumulated weight could exceed the 64-bit counter range."""


def sketch_dims(epsilon: float, delta: float) -> tuple[int, int]:
    """(rows, cols) giving ±epsilon/6 relative error with confidence 1-delta/2.

    cols = ceil(216/eps^2) drives the per-row Chebyshev bound; rows =
    ceil(48*ln(2/delta)) amplifies it through the median.
    """
    if not (0 < epsilon <= 1):
        raise ValueError(f"epsilon must be in (0, 1], got {epsilon}")
    if not (0 < delta < 1):
        raise ValueError(f"delta must be in (0, 1), got {delta}")
    rows = math.ceil(48 * math.log(2 / delta))
    cols = math.ceil(216 / (epsilon * epsilon))
    return rows, cols


# ---------------------------------------------------------------------------
# sign-hash accumulation kernel
#
# For every cell j and item v: evaluate the cell's degree-3 polynomial at v
# over GF(p), p = 2^k - 1, using Horner steps with lazy shift-add folds
# (values stay < 2^32 after each fold for every supported p, so the uint64
# intermediates cannot wrap).  The counter moves by ±weight on the parity of
# the canonical representative.  The numba and numpy paths run the exact
# same operation sequence and produce identical integers.


def _accumulate_numpy(a0, a1, a2, a3, items, weights, counters, p, k):
    p64 = np.uint64(p)
    k64 = np.uint64(k)
    one = np.uint64(1)
    for t in range(items.shape[0]):
        v = np.uint64(items[t])
        x = a3 * v + a2
        x = (x & p64) + (x >> k64)
        x = x * v + a1
        x = (x & p64) + (x >> k64)
        x = x * v + a0
        x = (x & p64) + (x >> k64)
        x = (x & p64) + (x >> k64)
        x = np.where(x >= p64, x - p64, x)
        sign = ((x & one).astype(np.int64) << 1) - 1
        counters += weights[t] * sign


if _HAVE_NUMBA:

    @_nb.njit(cache=True)
    def _accumulate_numba(a0, a1, a2, a3, items, weights, counters, p, k):  # pragma: no cover
        p64 = np.uint64(p)
        k64 = np.uint64(k)
        for j in range(counters.shape[0]):
            acc = np.int64(0)
            for t in range(items.shape[0]):
                v = np.uint64(items[t])
                x = a3[j] * v + a2[j]
                x = (x & p64) + (x >> k64)
                x = x * v + a1[j]
                x = (x & p64) + (x >> k64)
                x = x * v + a0[j]
                x = (x & p64) + (x >> k64)
                x = (x & p64) + (x >> k64)
                if x >= p64:
                    x -= p64
                if x & np.uint64(1):
                    acc += weights[t]
                else:
                    acc -= weights[t]
            counters[j] += acc

    _accumulate = _accumulate_numba
else:  # pragma: no cover
    _accumulate = _accumulate_numpy


_WEIGHT_BUDGET = 1 << 62  # conservative: |counter| <= sum of |weight| always


class F2Sketch:
    """Seeded tug-of-war sketch over items in [1, n]."""

    def __init__(self, n: int, rows: int, cols: int, seed: int = 0):
        if n < 1:
            raise ValueError(f"universe must be positive, got n={n}")
        if rows < 1 or cols < 1:
            raise ValueError(f"need positive dimensions, got {rows}x{cols}")
        self.n = n
        self.rows = rows
        self.cols = cols
        self.seed = seed
        self.kbits, self.prime = prime_for(n)
        # One independent hash family per cell: 4 coefficients each, drawn
        # from a PCG stream keyed by the sketch seed.  Equal (n, rows, cols,
        # seed) therefore implies equal families, which is what merge checks.
        rng = np.random.default_rng(seed)
        coeffs = rng.integers(0, self.prime, size=(4, rows * cols), dtype=np.uint64)
        self._a0, self._a1, self._a2, self._a3 = coeffs
        self._counters = np.zeros(rows * cols, dtype=np.int64)
        self._abs_weight = 0

    @classmethod
    def from_accuracy(cls, n: int, epsilon: float, delta: float, seed: int = 0) -> "F2Sketch":
        rows, cols = sketch_dims(epsilon, delta)
        return cls(n, rows, cols, seed)

    @property
    def counters(self) -> np.ndarray:
        return self._counters.reshape(self.rows, self.cols).copy()

    def update(self, item: int, weight: int) -> None:
        """Apply one ±1 update of an item."""
        if weight not in (1, -1):
            raise ValueError(f"streaming updates carry weight +1 or -1, got {weight}")
        self.update_many([item], [weight])

    def update_many(self, items, weights) -> None:
        """Apply weighted updates in one pass.

        Equivalent, counter for counter, to repeating ``update`` |weight|
        times per item; zero weights are skipped.
        """
        items = np.ascontiguousarray(items, dtype=np.uint64)
        weights = np.ascontiguousarray(weights, dtype=np.int64)
        if items.shape != weights.shape:
            raise ValueError("items and weights must have matching length")
        live = weights != 0
        if not live.all():
            items, weights = items[live], weights[live]
        if items.size == 0:
            return
        if items.min() < 1 or items.max() > self.n:
            raise ValueError(f"item outside universe [1, {self.n}]")
        self._abs_weight += int(np.abs(weights).sum())
        if self._abs_weight >= _WEIGHT_BUDGET:
            raise CounterOverflowError("accumulated weight exceeds the 64-bit counter budget")
        _accumulate(
            self._a0, self._a1, self._a2, self._a3,
            items, weights, self._counters,
            self.prime, self.kbits,
        )

    def estimate(self) -> float:
        """Median over rows of the mean over columns of squared counters."""
        sq = self._counters.astype(np.float64) ** 2
        return float(np.median(sq.reshape(self.rows, self.cols).mean(axis=1)))

    def merge(self, other: "F2Sketch") -> "F2Sketch":
        """Sum of two sketches over the same hash family."""
        if (self.n, self.rows, self.cols, self.seed) != (
            other.n, other.rows, other.cols, other.seed,
        ):
            raise SeedMismatchError("sketches differ in shape, universe, or seed")
        out = F2Sketch(self.n, self.rows, self.cols, self.seed)
        out._counters = self._counters + other._counters
        out._abs_weight = self._abs_weight + other._abs_weight
        if out._abs_weight >= _WEIGHT_BUDGET:
            raise CounterOverflowError("merged weight exceeds the 64-bit counter budget")
        return out
