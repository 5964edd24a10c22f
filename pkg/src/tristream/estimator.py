"""End-to-end triangle and transitivity estimation over an edge stream.

One pass feeds a degree sketch (for the 2-path count) and K independently
seeded sparsifier copies.  Each copy that certifies enough pairwise
independent 2-paths contributes one indicator: whether a uniformly sampled
2-path of its sparsified graph closes into a triangle.  The mean indicator
estimates the transitivity alpha, and T3 = alpha * P2 / 3.
"""

import math
import random
from dataclasses import dataclass, field

from .hashing import mix2
from .indep_paths import greedy_independent_count
from .sparsifier import ColoringFunction, SparsifiedGraph
from .stream_core import events_to_arrays
from .two_path import TwoPathEstimator

_SKETCH_TAG = (1 << 40) + 1  # domain separation from copy indices
_SAMPLE_TAG = (1 << 40) + 2


class InvalidRangeError(ValueError):
    pass


class NoQualifiedCopiesError(RuntimeError):
    """No sparsifier copy certified enough 2-paths to sample from."""

    def __init__(self, message: str, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or []


@dataclass(frozen=True)
class EstimatorConfig:
    """User accuracy knobs plus the constants derived from them.

    Build through ``derive_config``; the derived fields follow
    b = floor(m_max/18), p = min(1, 5/(epsilon*sqrt(b))),
    colors = max(1, round(1/p)), s = ceil(18/epsilon^2),
    k = ceil((36/(epsilon^2*alpha_min))*ln(2/delta)).
    """

    n: int
    m_max: int
    epsilon: float
    delta: float
    alpha_min: float
    seed: int
    b: int
    p: float
    colors: int
    s: int
    k: int
    degenerate: bool  # m_max < 18 forces full retention


def derive_config(
    n: int,
    m_max: int,
    epsilon: float = 0.3,
    delta: float = 0.1,
    alpha_min: float = 0.05,
    seed: int = 0,
    k_override: int | None = None,
    s_override: int | None = None,
    colors_override: int | None = None,
) -> EstimatorConfig:
    if n < 2:
        raise InvalidRangeError(f"universe must hold at least 2 vertices, got n={n}")
    if m_max < 1:
        raise InvalidRangeError(f"m_max must be positive, got {m_max}")
    if not (0 < epsilon <= 1):
        raise InvalidRangeError(f"epsilon must be in (0, 1], got {epsilon}")
    if not (0 < delta < 1):
        raise InvalidRangeError(f"delta must be in (0, 1), got {delta}")
    if not (0 < alpha_min <= 1):
        raise InvalidRangeError(f"alpha_min must be in (0, 1], got {alpha_min}")
    for name, val in (("k", k_override), ("s", s_override), ("colors", colors_override)):
        if val is not None and val < 1:
            raise InvalidRangeError(f"{name}_override must be positive, got {val}")
    b = m_max // 18
    p = 1.0 if b == 0 else min(1.0, 5.0 / (epsilon * math.sqrt(b)))
    colors = colors_override if colors_override is not None else max(1, math.floor(1.0 / p + 0.5))
    s = s_override if s_override is not None else math.ceil(18.0 / (epsilon * epsilon))
    k = (
        k_override
        if k_override is not None
        else math.ceil((36.0 / (epsilon * epsilon * alpha_min)) * math.log(2.0 / delta))
    )
    return EstimatorConfig(
        n=n, m_max=m_max, epsilon=epsilon, delta=delta, alpha_min=alpha_min,
        seed=seed, b=b, p=p, colors=colors, s=s, k=k, degenerate=(b == 0),
    )


@dataclass(frozen=True)
class CopyDiagnostic:
    copy: int
    seed: int
    m_prime: int
    p2_total: int
    qualified: bool
    indicator: int | None


@dataclass(frozen=True)
class Report:
    p2_hat: float
    alpha_hat: float
    t3_hat: float
    ell: int
    k: int
    s: int
    p: float
    colors: int
    config: EstimatorConfig
    diagnostics: tuple[CopyDiagnostic, ...]
    warnings: tuple[str, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "p2_hat": self.p2_hat,
            "alpha_hat": self.alpha_hat,
            "t3_hat": self.t3_hat,
            "ell": self.ell,
            "K": self.k,
            "s": self.s,
            "p": self.p,
            "colors": self.colors,
            "diagnostics": [
                {
                    "copy": d.copy,
                    "m_prime": d.m_prime,
                    "p2_total": d.p2_total,
                    "qualified": d.qualified,
                    "indicator": d.indicator,
                }
                for d in self.diagnostics
            ],
            "warnings": list(self.warnings),
        }


def estimate_triangles(events, cfg: EstimatorConfig) -> Report:
    """Run the full estimator over a turnstile stream (deletions included).

    The input is consumed once.  Copies are processed sequentially so only
    one sparsified graph is held at a time; with a single color every copy
    retains the whole graph, so one shared structure serves all of them and
    every copy with any 2-path qualifies (sampling is then exactly uniform
    on the input graph, no certification threshold applies).
    """
    arrays = events_to_arrays(events)
    us, vs, signs = arrays

    tp = TwoPathEstimator(cfg.n, cfg.epsilon, cfg.delta, seed=mix2(cfg.seed, _SKETCH_TAG))
    tp.update_many(arrays)
    p2_hat = max(0.0, tp.estimate())

    full_retention = cfg.colors == 1
    shared = None
    if full_retention:
        shared = SparsifiedGraph(cfg.n, ColoringFunction(0, 1))
        shared.apply_events(us, vs, signs)

    diagnostics: list[CopyDiagnostic] = []
    x_sum = 0
    ell = 0
    for i in range(cfg.k):
        seed_i = mix2(cfg.seed, i)
        if full_retention:
            gs = shared
            qualified = gs.p2_total > 0
        else:
            gs = SparsifiedGraph(cfg.n, ColoringFunction(seed_i, cfg.colors))
            gs.apply_events(us, vs, signs)
            qualified = greedy_independent_count(gs.adj, cfg.s) >= cfg.s
        indicator = None
        if qualified:
            rng = random.Random(mix2(seed_i, _SAMPLE_TAG))
            u, center, w = gs.sample_two_path(rng)
            indicator = 1 if gs.has_edge(u, w) else 0
            x_sum += indicator
            ell += 1
        diagnostics.append(
            CopyDiagnostic(i, seed_i, gs.m_prime, gs.p2_total, qualified, indicator)
        )

    if ell == 0:
        raise NoQualifiedCopiesError(
            f"none of the {cfg.k} copies certified {cfg.s} independent 2-paths",
            diagnostics,
        )

    alpha_hat = x_sum / ell
    t3_hat = alpha_hat * p2_hat / 3.0

    warnings = []
    if cfg.degenerate:
        warnings.append("degenerate-stream: m_max < 18 forces full retention (p = 1)")
    if ell < cfg.k / 2:
        warnings.append(f"low-confidence: only {ell} of {cfg.k} copies qualified")
    if p2_hat == 0.0 and x_sum > 0:
        warnings.append("inconsistent: sampled closed 2-paths but the 2-path estimate is zero")

    return Report(
        p2_hat=p2_hat,
        alpha_hat=alpha_hat,
        t3_hat=t3_hat,
        ell=ell,
        k=cfg.k,
        s=cfg.s,
        p=cfg.p,
        colors=cfg.colors,
        config=cfg,
        diagnostics=tuple(diagnostics),
        warnings=tuple(warnings),
    )
