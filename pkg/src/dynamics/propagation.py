"""
Stroke propagation for the two-level fermionic dot.

Sign conventions: W > 0 is work extracted from the dot, W = −∫ p dε;
Q > 0 is heat absorbed from the bath, Q = ∫ (ε − μ) dp; the chemical energy
carried in by particles is μ·Δp. With U = p·ε every stroke obeys
ΔU = Q + μΔp − W.
"""
import logging
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from src.dynamics.integrator import IntegratorConfig, integrate_piece
from src.dynamics.protocol import Protocol
from src.exceptions import IntegrationError, InvalidStateError, ProtocolError
from src.thermocore.functionals import fermi, fermi_occupation
from src.thermocore.states import Bath
from src.thermocore.tolerances import TOLERANCES

logger = logging.getLogger(__name__)


class Trajectory(NamedTuple):
    times: np.ndarray
    energies: np.ndarray
    occupations: np.ndarray


@dataclass(frozen=True)
class PropagationResult:
    initial_occupation: float
    final_occupation: float
    energy_start: float
    energy_end: float
    work: float
    heat: float
    chemical_work: float
    steps: int = 0
    trajectory: Optional[Trajectory] = None

    @property
    def energy_change(self) -> float:
        return self.final_occupation * self.energy_end - self.initial_occupation * self.energy_start

    def first_law_residual(self) -> float:
        return self.energy_change - (self.heat + self.chemical_work - self.work)


def _check_occupation(p0: float) -> None:
    if not (math.isfinite(p0) and 0.0 <= p0 <= 1.0):
        raise InvalidStateError(f"occupation {p0!r} outside [0, 1]")


def relax_constant(p0: float, energy: float, bath: Bath, t: float) -> float:
    """Closed-form relaxation at fixed level: p(t) = f + (p0 − f)·exp(−Γt)."""
    if t < 0.0:
        raise ProtocolError(f"relaxation time must be >= 0, got {t!r}")
    _check_occupation(p0)
    target = fermi_occupation(energy, bath)
    decay = bath.coupling * t
    if decay >= TOLERANCES.relaxation_saturation:
        return target
    return target + (p0 - target) * math.exp(-decay)


def _drive(p0: float, protocol: Protocol, record: bool) -> PropagationResult:
    # decoupled dot: occupation frozen, all energy change is work
    trajectory = None
    if record:
        times, energies = (np.array(column) for column in zip(*protocol.knots))
        trajectory = Trajectory(times, energies, np.full(times.shape, p0))
    return PropagationResult(
        initial_occupation=p0,
        final_occupation=p0,
        energy_start=protocol.start_energy,
        energy_end=protocol.end_energy,
        work=-p0 * (protocol.end_energy - protocol.start_energy),
        heat=0.0,
        chemical_work=0.0,
        trajectory=trajectory,
    )


def _integrate(p0: float, protocol: Protocol, bath: Bath, integrator: IntegratorConfig,
               refine: int = 1, record: bool = False) -> PropagationResult:
    p = p0
    work, heat, steps = [], [], 0
    segments = []
    for piece in protocol.pieces():
        n = integrator.steps_for(piece, bath) * refine
        outcome = integrate_piece(p, piece, bath, n, record=record)
        p = outcome.final_occupation
        work.append(outcome.work)
        heat.append(outcome.heat)
        steps += n
        if record:
            segments.append(outcome)

    trajectory = None
    if record:
        # drop the duplicated knot sample where consecutive pieces meet
        times = np.concatenate([s.times[:-1] for s in segments] + [segments[-1].times[-1:]])
        energies = np.concatenate([s.energies[:-1] for s in segments] + [segments[-1].energies[-1:]])
        occupations = np.concatenate([s.occupations[:-1] for s in segments] + [segments[-1].occupations[-1:]])
        trajectory = Trajectory(times, energies, occupations)

    return PropagationResult(
        initial_occupation=p0,
        final_occupation=p,
        energy_start=protocol.start_energy,
        energy_end=protocol.end_energy,
        work=math.fsum(work),
        heat=math.fsum(heat),
        chemical_work=bath.chemical_potential * (p - p0),
        steps=steps,
        trajectory=trajectory,
    )


def propagate_stroke(p0: float, protocol: Protocol, bath: Optional[Bath] = None,
                     integrator: Optional[IntegratorConfig] = None) -> PropagationResult:
    """
    Propagate the dot occupation through one stroke.

    Without a bath the stroke is a pure drive (any duration, including sudden
    quenches). With a bath the rate equation is integrated by fixed-step RK4.
    """
    _check_occupation(p0)
    integrator = integrator or IntegratorConfig()
    if bath is None:
        return _drive(p0, protocol, integrator.record_trajectory)
    if protocol.duration <= 0.0:
        raise ProtocolError("a stroke coupled to a bath needs a positive duration")

    result = _integrate(p0, protocol, bath, integrator, record=integrator.record_trajectory)
    if integrator.verify_step_halving:
        check = _integrate(p0, protocol, bath, integrator, refine=2)
        for name in ("final_occupation", "work", "heat"):
            coarse, fine = getattr(result, name), getattr(check, name)
            if abs(coarse - fine) > integrator.halving_tolerance * max(1.0, abs(fine)):
                raise IntegrationError(
                    f"step-halving mismatch in {name}: {coarse!r} vs {fine!r}", check.steps
                )
    logger.debug("stroke on bath '%s': %d steps, p %.6g -> %.6g",
                 bath.label, result.steps, p0, result.final_occupation)
    return result


def quasistatic_stroke(protocol: Protocol, bath: Bath, p0: Optional[float] = None,
                       record: bool = False) -> PropagationResult:
    """
    Infinitely slow limit: the occupation tracks f(ε(t)).

    The stroke starts at f(ε(0)) unless `p0` is given, in which case the dot
    first relaxes instantaneously to f(ε(0)) at fixed level.
    """
    mu, temperature = bath.chemical_potential, bath.temperature
    f_start = fermi_occupation(protocol.start_energy, bath)
    p_start = f_start if p0 is None else p0
    _check_occupation(p_start)

    jump = f_start - p_start
    work = [0.0]
    heat = [(protocol.start_energy - mu) * jump]
    chemical = [mu * jump]
    for piece in protocol.pieces():
        x0 = (piece.energy_start - mu) / temperature
        x1 = (piece.energy_end - mu) / temperature
        # −∫ f dε from the antiderivative −T·ln(1 + e^{−x})
        w = -temperature * (np.logaddexp(0.0, -x0) - np.logaddexp(0.0, -x1))
        f0 = float(fermi(piece.energy_start, temperature, mu))
        f1 = float(fermi(piece.energy_end, temperature, mu))
        du = f1 * piece.energy_end - f0 * piece.energy_start
        work.append(float(w))
        chemical.append(mu * (f1 - f0))
        heat.append(du - mu * (f1 - f0) + float(w))

    trajectory = None
    if record:
        times, energies = (np.array(column) for column in zip(*protocol.knots))
        occupations = fermi(energies, temperature, mu)
        trajectory = Trajectory(
            np.concatenate(([0.0], times)),
            np.concatenate(([protocol.start_energy], energies)),
            np.concatenate(([p_start], occupations)),
        )
    return PropagationResult(
        initial_occupation=p_start,
        final_occupation=fermi_occupation(protocol.end_energy, bath),
        energy_start=protocol.start_energy,
        energy_end=protocol.end_energy,
        work=math.fsum(work),
        heat=math.fsum(heat),
        chemical_work=math.fsum(chemical),
        trajectory=trajectory,
    )
