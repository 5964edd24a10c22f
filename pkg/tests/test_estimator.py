import random

import pytest

from tristream.estimator import (
    InvalidRangeError,
    NoQualifiedCopiesError,
    derive_config,
    estimate_triangles,
)
from tristream.generators import (
    complete_bipartite_edges,
    complete_edges,
    edges_to_events,
    gnp_edges,
)
from tristream.stream_core import events_to_arrays


def test_derive_config_frozen_examples():
    cfg = derive_config(n=100, m_max=1800, epsilon=1.0, delta=0.5, alpha_min=1.0)
    assert (cfg.b, cfg.p, cfg.colors, cfg.s, cfg.k) == (100, 0.5, 2, 18, 50)
    assert not cfg.degenerate

    cfg = derive_config(n=100, m_max=1800, epsilon=0.5, delta=0.5, alpha_min=1.0)
    assert (cfg.p, cfg.colors, cfg.s, cfg.k) == (1.0, 1, 72, 200)

    cfg = derive_config(n=20, m_max=190, epsilon=0.3, delta=0.2, alpha_min=1.0)
    assert (cfg.b, cfg.p, cfg.colors, cfg.s, cfg.k) == (10, 1.0, 1, 200, 922)

    cfg = derive_config(n=1000, m_max=100_000)  # library defaults
    assert (cfg.epsilon, cfg.delta, cfg.alpha_min) == (0.3, 0.1, 0.05)
    assert cfg.s == 200 and cfg.k == 23966

    cfg = derive_config(n=10, m_max=10)
    assert cfg.b == 0 and cfg.p == 1.0 and cfg.degenerate


def test_derive_config_validation():
    bad = [
        dict(n=1, m_max=10),
        dict(n=10, m_max=0),
        dict(n=10, m_max=10, epsilon=0.0),
        dict(n=10, m_max=10, epsilon=1.2),
        dict(n=10, m_max=10, delta=0.0),
        dict(n=10, m_max=10, delta=1.0),
        dict(n=10, m_max=10, alpha_min=0.0),
        dict(n=10, m_max=10, alpha_min=1.5),
        dict(n=10, m_max=10, k_override=0),
        dict(n=10, m_max=10, s_override=0),
        dict(n=10, m_max=10, colors_override=-1),
    ]
    for kwargs in bad:
        with pytest.raises(InvalidRangeError):
            derive_config(**kwargs)


def test_overrides_win():
    cfg = derive_config(n=10, m_max=100, k_override=7, s_override=3, colors_override=4)
    assert (cfg.k, cfg.s, cfg.colors) == (7, 3, 4)


def test_bipartite_graph_estimates_zero_triangles():
    edges = complete_bipartite_edges(5, 5)
    cfg = derive_config(n=10, m_max=25, epsilon=0.3, delta=0.1, k_override=50, seed=3)
    assert cfg.colors == 1
    report = estimate_triangles(edges_to_events(edges), cfg)
    assert report.alpha_hat == 0.0
    assert report.t3_hat == 0.0
    assert report.ell == 50
    assert all(d.indicator == 0 for d in report.diagnostics)


def test_complete_graph_full_retention_is_exact_on_alpha():
    edges = complete_edges(6)
    cfg = derive_config(n=6, m_max=15, k_override=40, seed=11)
    assert cfg.degenerate  # m_max < 18
    report = estimate_triangles(edges_to_events(edges), cfg)
    assert report.alpha_hat == 1.0
    assert report.t3_hat == report.p2_hat / 3.0
    assert any(w.startswith("degenerate-stream") for w in report.warnings)
    for d in report.diagnostics:
        assert d.qualified and d.indicator == 1
        assert d.m_prime == 15 and d.p2_total == 60


def test_p2_hat_is_order_invariant():
    edges = gnp_edges(30, 0.3, seed=5)
    events = edges_to_events(edges)
    shuffled = list(events)
    random.Random(9).shuffle(shuffled)
    cfg = derive_config(n=30, m_max=len(edges), k_override=5, seed=1)
    a = estimate_triangles(events, cfg)
    b = estimate_triangles(shuffled, cfg)
    # counter cells accumulate integers, so the sketch readout is exactly
    # permutation invariant; sampling internals are allowed to differ
    assert a.p2_hat == b.p2_hat


def test_no_qualified_copies():
    events = edges_to_events([(1, 2), (2, 3), (3, 4)])
    cfg = derive_config(n=4, m_max=3, k_override=10, colors_override=2, seed=0)
    assert cfg.s == 200  # unattainable on three edges
    with pytest.raises(NoQualifiedCopiesError) as err:
        estimate_triangles(events, cfg)
    diags = err.value.diagnostics
    assert len(diags) == 10
    assert not any(d.qualified for d in diags)


def test_low_confidence_warning_when_few_copies_qualify():
    # a lone triangle under two colors survives intact only when all three
    # vertices collide, so roughly a quarter of the copies qualify
    events = edges_to_events([(1, 2), (1, 3), (2, 3)])
    cfg = derive_config(
        n=3, m_max=3, k_override=40, s_override=1, colors_override=2, seed=2
    )
    report = estimate_triangles(events, cfg)
    assert 1 <= report.ell < 20
    assert report.alpha_hat == 1.0  # any surviving 2-path closes
    assert any(w.startswith("low-confidence") for w in report.warnings)


def test_report_shape_and_shared_structure():
    edges = complete_edges(5)
    cfg = derive_config(n=5, m_max=10, k_override=12, seed=7)
    report = estimate_triangles(edges_to_events(edges), cfg)
    assert len(report.diagnostics) == 12
    assert report.ell == sum(d.qualified for d in report.diagnostics)
    assert len({(d.m_prime, d.p2_total) for d in report.diagnostics}) == 1

    payload = report.to_dict()
    assert set(payload) == {
        "p2_hat", "alpha_hat", "t3_hat", "ell", "K", "s", "p", "colors",
        "diagnostics", "warnings",
    }
    assert payload["K"] == 12
    assert set(payload["diagnostics"][0]) == {
        "copy", "m_prime", "p2_total", "qualified", "indicator",
    }


def test_accepts_prebuilt_event_arrays():
    events = edges_to_events(complete_edges(6))
    cfg = derive_config(n=6, m_max=15, k_override=8, seed=4)
    a = estimate_triangles(events, cfg)
    b = estimate_triangles(events_to_arrays(events), cfg)
    assert a.to_dict() == b.to_dict()
