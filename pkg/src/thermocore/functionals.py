"""
Thermodynamic functionals of diagonal states (k_B = 1).
"""
import math
from typing import Union

import numpy as np
from scipy.special import entr, expit, kl_div

from src.exceptions import DimensionMismatchError, InvalidStateError, SupportError
from src.thermocore.states import Bath, DiagonalState, LevelSpectrum

ArrayLike = Union[float, np.ndarray]


def _check_dimensions(state: DiagonalState, spectrum: LevelSpectrum) -> None:
    if state.dimension != spectrum.dimension:
        raise DimensionMismatchError(
            f"state has {state.dimension} levels, spectrum has {spectrum.dimension}"
        )


def fermi(energy: ArrayLike, temperature: float, chemical_potential: float = 0.0) -> ArrayLike:
    """Fermi-Dirac occupation, vectorised. Saturates to 0 or 1 without overflow."""
    return expit(-(np.asarray(energy, dtype=np.float64) - chemical_potential) / temperature)


def fermi_occupation(energy: float, bath: Bath) -> float:
    return float(fermi(energy, bath.temperature, bath.chemical_potential))


def thermal_state(spectrum: LevelSpectrum, temperature: float, chemical_potential: float = 0.0) -> DiagonalState:
    """Grand-canonical populations ∝ exp(−(ε_i − μ n_i)/T)."""
    exponents = -spectrum.grand_energies(chemical_potential) / temperature
    weights = np.exp(exponents - exponents.max())
    populations = weights / weights.sum()
    if spectrum.dimension == 2:
        # exact complement keeps the two-level normalization at machine precision
        populations[0] = 1.0 - populations[1]
    return DiagonalState(populations)


def shannon_entropy(state: DiagonalState) -> float:
    return math.fsum(entr(state.populations))


def binary_entropy(occupation: float) -> float:
    """Entropy of a two-level dot filled with probability `occupation`."""
    return float(entr(occupation) + entr(1.0 - occupation))


def mean_energy(state: DiagonalState, spectrum: LevelSpectrum) -> float:
    _check_dimensions(state, spectrum)
    return math.fsum(state.populations * spectrum.energies)


def state_hamiltonian_covariance(state: DiagonalState, spectrum: LevelSpectrum) -> float:
    """Σ_i (p_i − 1/d)(ε_i − ε̄): correlation between the state and the Hamiltonian."""
    _check_dimensions(state, spectrum)
    energies = spectrum.energies
    centered = energies - energies.mean()
    return math.fsum((state.populations - 1.0 / state.dimension) * centered)


def energy_variance(state: DiagonalState, spectrum: LevelSpectrum) -> float:
    _check_dimensions(state, spectrum)
    mean = mean_energy(state, spectrum)
    return math.fsum(state.populations * (spectrum.energies - mean) ** 2)


def relative_entropy(state: DiagonalState, reference: DiagonalState) -> float:
    """D(p‖q). Raises SupportError when q vanishes on the support of p."""
    p, q = state.populations, reference.populations
    if p.size != q.size:
        raise DimensionMismatchError(f"states have {p.size} and {q.size} levels")
    if np.any((q == 0.0) & (p > 0.0)):
        raise SupportError("reference state vanishes where the state is populated")
    # kl_div terms are non-negative individually
    return math.fsum(kl_div(p, q))


def nonequilibrium_free_energy(state: DiagonalState, spectrum: LevelSpectrum, bath: Bath) -> float:
    """F = Σ p_i (ε_i − μ n_i) − T·S."""
    _check_dimensions(state, spectrum)
    energy = math.fsum(state.populations * spectrum.grand_energies(bath.chemical_potential))
    return energy - bath.temperature * shannon_entropy(state)


def state_inverse_temperature(state: DiagonalState, spectrum: LevelSpectrum,
                              chemical_potential: float = 0.0) -> float:
    """
    β* = Cov_u(−ln p, ε − μn) / Cov_u(ε − μn, ε − μn), with uniform weights 1/d.

    A two-level state is always Gibbs-like at β*, so along any dot trajectory
    dS = β*·dQ.
    """
    _check_dimensions(state, spectrum)
    if np.any(state.populations <= 0.0):
        raise InvalidStateError("inverse temperature needs a full-rank state")
    energies = spectrum.grand_energies(chemical_potential)
    energies = energies - energies.mean()
    surprisal = -np.log(state.populations)
    spread = math.fsum(energies * energies)
    if spread == 0.0:
        raise InvalidStateError("inverse temperature needs a non-degenerate spectrum")
    return math.fsum((surprisal - surprisal.mean()) * energies) / spread
