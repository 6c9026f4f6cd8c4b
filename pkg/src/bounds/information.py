"""
Efficiency bound from the engine's state–Hamiltonian correlations.

Along any dot trajectory the entropy change is dS = β*·dQ, where β* is the
inverse temperature at which the instantaneous state is Gibbs-like for the
instantaneous Hamiltonian (a covariance ratio of −ln p and ε). Integrating
β* dQ over the strokes on baths that absorb net heat gives ΔS_in; Clausius
applied bath by bath to the releasing baths then yields

    η ≤ 1 − T_min·ΔS_in / Q_in.

Since ΔS_in ≥ Σ_in Q_b/T_b this never exceeds the Clausius multi-bath bound,
and it is attained whenever heat is released reversibly at T_min, however
irreversible the absorbing strokes are.
"""
import logging
import math
from collections import defaultdict
from typing import Dict, List, Optional

from scipy.integrate import quad

from src.engine.report import CycleTrace, StrokeTrace
from src.exceptions import TraceError
from src.thermocore.functionals import state_inverse_temperature
from src.thermocore.states import DiagonalState, LevelSpectrum
from src.thermocore.tolerances import TOLERANCES

logger = logging.getLogger(__name__)

# occupation step, relative to the distance from 0 and 1, handled by Simpson's rule
SIMPSON_STEP = 1e-2


def _entropy_per_particle(occupation: float, level: float, chemical_potential: float) -> float:
    """β*·(ε − μ) at one point of the trace, so that dS = β*·(ε − μ)·dp = β*·dQ."""
    gap = level - chemical_potential
    if gap == 0.0:
        # β* diverges at the chemical potential while β*·(ε − μ) stays finite
        return math.log((1.0 - occupation) / occupation)
    beta = state_inverse_temperature(DiagonalState.from_occupation(occupation), LevelSpectrum.dot(level),
                                     chemical_potential)
    return beta * gap


def _interval_entropy(p0: float, p1: float, e0: float, e1: float, mu: float,
                      ends: Optional[float] = None) -> float:
    step = p1 - p0
    if step == 0.0:
        return 0.0
    margin = min(p0, p1, 1.0 - p0, 1.0 - p1)
    if ends is not None and abs(step) <= SIMPSON_STEP * margin:
        middle = _entropy_per_particle(0.5 * (p0 + p1), 0.5 * (e0 + e1), mu)
        return step * (ends + 4.0 * middle) / 6.0
    # long or boundary-touching step: adaptive quadrature along the straight segment
    value, _ = quad(lambda s: _entropy_per_particle(p0 + s * step, e0 + s * (e1 - e0), mu),
                    0.0, 1.0, epsabs=1e-15, epsrel=1e-12, limit=200)
    return step * value


def correlation_entropy(stroke: StrokeTrace) -> float:
    """∫ β* dQ over the samples of one bath-coupled stroke."""
    if stroke.bath is None:
        raise TraceError("β*·dQ needs a bath-coupled stroke")
    mu = stroke.bath.chemical_potential
    occupations = [s.state.occupation for s in stroke.samples]
    levels = [float(s.spectrum.energies[1]) for s in stroke.samples]
    rates = [_entropy_per_particle(p, e, mu) if 0.0 < p < 1.0 else None for p, e in zip(occupations, levels)]
    pieces = []
    for i in range(len(occupations) - 1):
        ends = None if rates[i] is None or rates[i + 1] is None else rates[i] + rates[i + 1]
        pieces.append(_interval_entropy(occupations[i], occupations[i + 1], levels[i], levels[i + 1], mu, ends))
    return math.fsum(pieces)


def _strokes_by_bath(trace: CycleTrace) -> Dict[str, List[StrokeTrace]]:
    grouped = defaultdict(list)
    for stroke in trace.strokes:
        if stroke.bath is not None:
            grouped[stroke.bath.label].append(stroke)
    return grouped


def _absorbing_baths(trace: CycleTrace) -> Dict[str, List[StrokeTrace]]:
    grouped = _strokes_by_bath(trace)
    net = {label: math.fsum(s.heat for s in strokes) for label, strokes in grouped.items()}
    floor = TOLERANCES.heat_floor * max(1.0, math.fsum(abs(q) for q in net.values()))
    return {label: grouped[label] for label, heat in net.items() if heat > floor}


def absorbed_entropy(trace: CycleTrace) -> float:
    """System entropy gained while coupled to baths that absorb net heat, as ∫ β* dQ."""
    return math.fsum(correlation_entropy(stroke)
                     for strokes in _absorbing_baths(trace).values() for stroke in strokes)


def _check_periodic(trace: CycleTrace) -> None:
    if not trace.strokes or not trace.strokes[0].samples:
        raise TraceError("empty trace")
    first = trace.strokes[0].samples[0].state.occupation
    last = trace.strokes[-1].samples[-1].state.occupation
    if abs(first - last) > TOLERANCES.trace_periodicity:
        raise TraceError(f"trace is not periodic: occupation {first!r} at start, {last!r} at end")
    for before, after in zip(trace.strokes, trace.strokes[1:]):
        if abs(before.samples[-1].state.occupation - after.samples[0].state.occupation) > TOLERANCES.trace_periodicity:
            raise TraceError("trace occupation is discontinuous between strokes")


def info_theoretic_bound(trace: CycleTrace, t_min: Optional[float] = None) -> Optional[float]:
    """
    Evaluate 1 − T_min·ΔS_in/Q_in on one limit-cycle period.

    Returns None when no bath absorbs net heat.
    """
    _check_periodic(trace)
    grouped = _strokes_by_bath(trace)
    if not grouped:
        raise TraceError("trace has no bath-coupled stroke")
    if t_min is None:
        t_min = min(strokes[0].bath.temperature for strokes in grouped.values())

    absorbing = _absorbing_baths(trace)
    if not absorbing:
        return None
    heat_in = math.fsum(s.heat for strokes in absorbing.values() for s in strokes)
    entropy_in = absorbed_entropy(trace)
    bound = 1.0 - t_min * entropy_in / heat_in
    logger.debug("information bound: Q_in=%.6g, ΔS_in=%.6g, T_min=%.6g -> %.12g",
                 heat_in, entropy_in, t_min, bound)
    return bound
