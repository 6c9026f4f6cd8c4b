import math

import numpy as np
import pytest
from scipy.optimize import brentq

from src.bounds import absorbed_entropy, certify, correlation_entropy, info_theoretic_bound
from src.dynamics import Protocol
from src.engine import Cycle, CycleTrace, Stroke, StrokeTrace, TraceSample, run_to_limit_cycle
from src.exceptions import TraceError
from src.thermocore import Bath, DiagonalState, LevelSpectrum, binary_entropy, fermi


def level_for(occupation, temperature):
    """Level energy at which a bath at `temperature` fills the dot with `occupation`."""
    return temperature * math.log((1.0 - occupation) / occupation)


def reversible_carnot_cycle():
    baths = [Bath("hot", 2.0), Bath("cold", 1.0)]
    strokes = [
        Stroke(Protocol.linear(4.0, 2.0, 1.0), "hot", quasistatic=True),
        Stroke(Protocol.linear(2.0, 1.0, 0.0)),
        Stroke(Protocol.linear(1.0, 2.0, 1.0), "cold", quasistatic=True),
        Stroke(Protocol.linear(2.0, 4.0, 0.0)),
    ]
    return Cycle(strokes, baths)


def reversible_three_bath_cycle():
    """Absorbs heat at T=4 and T=2 in the ratio 8:2 and releases it at T=1, all reversibly."""
    low, high = 0.1, 0.3
    target = (2.0 * binary_entropy(high) + binary_entropy(low)) / 3.0
    middle = brentq(lambda p: binary_entropy(p) - target, low, high, xtol=1e-15)
    baths = [Bath("T4", 4.0), Bath("T2", 2.0), Bath("T1", 1.0)]
    strokes = [
        Stroke(Protocol.linear(level_for(low, 4.0), level_for(middle, 4.0), 1.0), "T4", quasistatic=True),
        Stroke(Protocol.linear(level_for(middle, 4.0), level_for(middle, 2.0), 0.0)),
        Stroke(Protocol.linear(level_for(middle, 2.0), level_for(high, 2.0), 1.0), "T2", quasistatic=True),
        Stroke(Protocol.linear(level_for(high, 2.0), level_for(high, 1.0), 0.0)),
        Stroke(Protocol.linear(level_for(high, 1.0), level_for(low, 1.0), 1.0), "T1", quasistatic=True),
        Stroke(Protocol.linear(level_for(low, 1.0), level_for(low, 4.0), 0.0)),
    ]
    return Cycle(strokes, baths)


def finite_time_saturation_cycle():
    """Finite-time hot contact, reversible release at T_min matched to the hot-stroke exit state."""
    f_hot, f_release_end = float(fermi(3.0, 2.0)), float(fermi(2.5, 1.0))
    exit_occupation = f_hot + (f_release_end - f_hot) * math.exp(-1.0)
    release_start = level_for(exit_occupation, 1.0)
    baths = [Bath("hot", 2.0), Bath("cold", 1.0)]
    strokes = [
        Stroke(Protocol.constant(3.0, 1.0), "hot"),
        Stroke(Protocol.linear(3.0, release_start, 0.0)),
        Stroke(Protocol.linear(release_start, 2.5, 1.0), "cold", quasistatic=True),
        Stroke(Protocol.linear(2.5, 3.0, 0.0)),
    ]
    return Cycle(strokes, baths)


def two_point_trace(start, end):
    samples = (
        TraceSample(0.0, DiagonalState.from_occupation(start), LevelSpectrum.dot(1.0)),
        TraceSample(1.0, DiagonalState.from_occupation(end), LevelSpectrum.dot(1.0)),
    )
    return CycleTrace((StrokeTrace(Bath("b", 1.0), 0.1, samples),), 1.0)


# Tests for reversible cycles
def test_reversible_carnot_cycle_saturates_every_bound():
    report = run_to_limit_cycle(reversible_carnot_cycle(), 0.0)
    bounds = certify(report, report.trace)
    assert report.efficiency == pytest.approx(0.5, abs=1e-9)
    assert bounds.information == pytest.approx(0.5, abs=1e-9)
    assert bounds.clausius == pytest.approx(0.5, abs=1e-9)
    assert bounds.carnot == 0.5
    assert report.entropy_production == pytest.approx(0.0, abs=1e-12)
    assert bounds.ok
    assert bounds.saturated


def test_reversible_three_bath_cycle_reaches_seven_tenths():
    report = run_to_limit_cycle(reversible_three_bath_cycle(), 0.0)
    bounds = certify(report, report.trace)
    heat = report.heat_by_bath
    assert heat["T4"] / heat["T2"] == pytest.approx(4.0, rel=1e-9)
    assert report.efficiency == pytest.approx(0.7, abs=1e-9)
    assert bounds.clausius == pytest.approx(0.7, abs=1e-9)
    assert bounds.generalized_carnot == pytest.approx(0.7, abs=1e-9)
    assert bounds.information == pytest.approx(0.7, abs=1e-9)
    assert bounds.carnot == pytest.approx(0.75)
    assert bounds.ok


# Tests for finite-time saturation
def test_finite_time_cycle_saturates_information_bound():
    report = run_to_limit_cycle(finite_time_saturation_cycle(), 0.0)
    bounds = certify(report, report.trace)
    assert report.entropy_production > 1e-3
    assert report.efficiency == pytest.approx(0.296, abs=1e-3)
    assert abs(bounds.information - report.efficiency) < 1e-6
    assert bounds.information < bounds.clausius - 0.1
    assert bounds.saturated
    assert bounds.ok


def test_irreversible_release_leaves_a_gap(otto_cycle):
    report = run_to_limit_cycle(otto_cycle(), 0.0)
    bounds = certify(report, report.trace)
    assert bounds.efficiency < bounds.information - 1e-3
    assert bounds.information <= bounds.clausius + 1e-12
    assert not bounds.saturated


def test_random_cycles_respect_the_information_bound(random_cycle):
    rng = np.random.default_rng(77)
    for _ in range(20):
        report = run_to_limit_cycle(random_cycle(rng), 0.0)
        bounds = certify(report, report.trace)
        assert bounds.ok, bounds.violations
        if bounds.information is not None and bounds.efficiency is not None:
            assert bounds.efficiency <= bounds.information + 1e-9
            assert bounds.information <= bounds.clausius + 1e-9


# Tests for trace handling
def test_absorbed_entropy_counts_only_absorbing_baths(otto_cycle):
    report = run_to_limit_cycle(otto_cycle(), 0.0)
    hot_stroke = report.trace.strokes[1]
    assert hot_stroke.bath.label == "hot"
    assert absorbed_entropy(report.trace) == pytest.approx(hot_stroke.entropy_change, abs=1e-12)


def test_beta_star_heat_integral_matches_entropy_change(otto_cycle):
    report = run_to_limit_cycle(otto_cycle(duration=0.7, mu_hot=0.4, mu_cold=-0.3), 0.0)
    for stroke in report.trace.strokes:
        if stroke.bath is not None:
            assert correlation_entropy(stroke) == pytest.approx(stroke.entropy_change, abs=1e-12)


def test_beta_star_heat_integral_on_quasistatic_strokes():
    cycle = reversible_carnot_cycle()
    report = run_to_limit_cycle(cycle, 0.3)
    for stroke in report.trace.strokes:
        if stroke.bath is not None:
            assert correlation_entropy(stroke) == pytest.approx(stroke.entropy_change, abs=1e-12)


def test_beta_star_heat_integral_across_the_chemical_potential():
    bath = Bath("b", 1.0, 0.5)
    samples = tuple(
        TraceSample(t, DiagonalState.from_occupation(p), LevelSpectrum.dot(e))
        for t, e, p in [(0.0, 0.0, 0.3), (0.5, 0.5, 0.45), (1.0, 1.0, 0.2)]
    )
    stroke = StrokeTrace(bath, 0.0, samples)
    assert correlation_entropy(stroke) == pytest.approx(stroke.entropy_change, abs=1e-12)


def test_beta_star_heat_integral_needs_a_bath():
    with pytest.raises(TraceError):
        correlation_entropy(StrokeTrace(None, 0.0, two_point_trace(0.2, 0.4).strokes[0].samples))


def test_non_periodic_trace_is_rejected():
    with pytest.raises(TraceError):
        info_theoretic_bound(two_point_trace(0.2, 0.4))


def test_empty_trace_is_rejected():
    with pytest.raises(TraceError):
        info_theoretic_bound(CycleTrace((), 0.0))


def test_trace_without_absorbing_bath_is_undefined():
    samples = two_point_trace(0.2, 0.2).strokes[0].samples
    trace = CycleTrace((StrokeTrace(Bath("b", 1.0), -0.1, samples),), 1.0)
    assert info_theoretic_bound(trace) is None


def test_profile_only_certification_leaves_information_unevaluated(otto_cycle):
    report = run_to_limit_cycle(otto_cycle(), 0.0, record_trace=False)
    bounds = certify(report)
    assert bounds.information is None
    assert bounds.clausius == pytest.approx(0.5, abs=1e-12)
    assert bounds.ok
