"""Skein and invariance properties on fresh seeds (the acceptance suite runs the default seeds)."""
from hypothesis import HealthCheck, given, settings, strategies as st

import properties as PROP

SLOW = settings(max_examples=8, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@SLOW
@given(st.integers(100, 10 ** 6))
def test_confluence(seed):
    ok, detail = PROP.check_confluence(n_diagrams=15, seed=seed)
    assert ok, detail


@SLOW
@given(st.integers(100, 10 ** 6))
def test_trace_preservation(seed):
    ok, detail = PROP.check_trace_preservation(n_diagrams=10, seed=seed)
    assert ok, detail


@SLOW
@given(st.integers(100, 10 ** 6))
def test_reidemeister(seed):
    ok, detail = PROP.check_reidemeister(seed=seed)
    assert ok, detail


@settings(max_examples=3, deadline=None)
@given(st.integers(100, 10 ** 6))
def test_gauge_invariance(seed):
    ok, detail = PROP.check_gauge_invariance(names=("4node", "2by3", "bwwww"), trials=2, seed=seed)
    assert ok, detail


def test_b_star_invariance():
    ok, detail = PROP.check_b_star_invariance(names=("bwwww", "www"), seed=40)
    assert ok, detail
