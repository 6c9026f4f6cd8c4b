"""
Fixed-step classical Runge-Kutta integration of the dot rate equation

    dp/dt = −Γ (p − f(ε(t)))

along one linear piece of a protocol, together with the work and heat
quadratures carried as extra components of the same RK4 scheme.

The equation is linear in p, so each RK4 step is an affine map
p_{n+1} = A p_n + B_n with a constant A. The whole step sequence is therefore
a first-order linear recurrence, evaluated by `scipy.signal.lfilter`; the
stage values and ledger increments are then computed vectorised.
"""
import logging
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np
from scipy.signal import lfilter

from src.dynamics.protocol import LinearPiece
from src.exceptions import IntegrationError
from src.thermocore.functionals import fermi
from src.thermocore.states import Bath

logger = logging.getLogger(__name__)

# occupations may leave [0, 1] by rounding only
_RANGE_SLACK = 1e-12


@dataclass(frozen=True)
class IntegratorConfig:
    """
    Step control for the RK4 propagator.

    Steps per piece are chosen so that max(Γ·Δt, |Δε|/T) <= max_step_fraction,
    unless `n_steps` fixes the count explicitly.
    """

    max_step_fraction: float = 0.01
    n_steps: Optional[int] = None
    min_steps: int = 1
    max_steps: int = 10_000_000
    verify_step_halving: bool = False
    halving_tolerance: float = 1e-8
    record_trajectory: bool = False

    def __post_init__(self):
        if not self.max_step_fraction > 0.0:
            raise ValueError("max_step_fraction must be positive")
        if self.n_steps is not None and self.n_steps < 1:
            raise ValueError("n_steps must be at least 1")

    def steps_for(self, piece: LinearPiece, bath: Bath) -> int:
        if self.n_steps is not None:
            return self.n_steps
        by_rate = bath.coupling * piece.duration / self.max_step_fraction
        by_drive = abs(piece.energy_end - piece.energy_start) / (bath.temperature * self.max_step_fraction)
        steps = max(self.min_steps, math.ceil(by_rate), math.ceil(by_drive))
        if steps > self.max_steps:
            raise IntegrationError("step budget exceeded", steps)
        return steps


class PieceOutcome(NamedTuple):
    final_occupation: float
    work: float
    heat: float
    times: Optional[np.ndarray]
    energies: Optional[np.ndarray]
    occupations: Optional[np.ndarray]


def _stability_factor(z: float) -> float:
    """RK4 amplification 1 + z + z²/2 + z³/6 + z⁴/24."""
    return 1.0 + z * (1.0 + z / 2.0 * (1.0 + z / 3.0 * (1.0 + z / 4.0)))


def integrate_piece(p0: float, piece: LinearPiece, bath: Bath, steps: int,
                    record: bool = False) -> PieceOutcome:
    """Integrate one linear piece with `steps` equal RK4 steps."""
    gamma, mu = bath.coupling, bath.chemical_potential
    h = piece.duration / steps
    slope = (piece.energy_end - piece.energy_start) / piece.duration

    offsets = h * np.arange(steps)
    eps_0 = piece.energy_start + slope * offsets
    eps_m = eps_0 + 0.5 * slope * h
    eps_1 = eps_0 + slope * h
    f_0 = fermi(eps_0, bath.temperature, mu)
    f_m = fermi(eps_m, bath.temperature, mu)
    f_1 = fermi(eps_1, bath.temperature, mu)

    def stages(p):
        k1 = -gamma * (p - f_0)
        p2 = p + 0.5 * h * k1
        k2 = -gamma * (p2 - f_m)
        p3 = p + 0.5 * h * k2
        k3 = -gamma * (p3 - f_m)
        p4 = p + h * k3
        k4 = -gamma * (p4 - f_1)
        return (k1, k2, k3, k4), (p2, p3, p4)

    (k1, k2, k3, k4), _ = stages(np.zeros(steps))
    forcing = h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    amplification = _stability_factor(-gamma * h)
    following, _ = lfilter([1.0], [1.0, -amplification], forcing, zi=[amplification * p0])
    occupations = np.concatenate(([p0], following))

    if np.any(occupations < -_RANGE_SLACK) or np.any(occupations > 1.0 + _RANGE_SLACK):
        raise IntegrationError("occupation left [0, 1]", steps)

    p_n = occupations[:-1]
    (k1, k2, k3, k4), (p2, p3, p4) = stages(p_n)
    work = -h / 6.0 * slope * (p_n + 2.0 * p2 + 2.0 * p3 + p4)
    heat = h / 6.0 * ((eps_0 - mu) * k1 + 2.0 * (eps_m - mu) * (k2 + k3) + (eps_1 - mu) * k4)

    times = energies = None
    if record:
        times = piece.t_start + np.concatenate((offsets, [piece.duration]))
        energies = np.concatenate((eps_0, [piece.energy_end]))
    logger.debug("RK4 piece: %d steps, Γh=%.3g", steps, gamma * h)
    return PieceOutcome(
        final_occupation=float(occupations[-1]),
        work=math.fsum(work),
        heat=math.fsum(heat),
        times=times,
        energies=energies,
        occupations=occupations if record else None,
    )
