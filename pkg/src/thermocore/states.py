"""
Immutable value types for the working medium: population vectors, level spectra
and fermionic reservoirs.
"""
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from src.exceptions import InvalidBathError, InvalidStateError
from src.thermocore.tolerances import TOLERANCES


def _frozen_array(values: Sequence[float]) -> np.ndarray:
    array = np.array(values, dtype=np.float64)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class DiagonalState:
    """Populations p_i of the energy levels (index 0 is the empty dot for d = 2)."""

    populations: np.ndarray

    def __post_init__(self):
        populations = _frozen_array(self.populations)
        if populations.ndim != 1 or populations.size < 2:
            raise InvalidStateError(f"expected a vector of length >= 2, got shape {populations.shape}")
        if not np.all(np.isfinite(populations)):
            raise InvalidStateError("populations must be finite")
        if np.any(populations < 0.0) or np.any(populations > 1.0):
            raise InvalidStateError(f"populations outside [0, 1]: {populations.tolist()}")
        total = math.fsum(populations)
        if abs(total - 1.0) > TOLERANCES.normalization:
            raise InvalidStateError(f"populations sum to {total!r}, not 1")
        object.__setattr__(self, "populations", populations)

    @classmethod
    def from_occupation(cls, occupation: float) -> "DiagonalState":
        """Two-level dot state with the level filled with probability `occupation`."""
        if not 0.0 <= occupation <= 1.0:
            raise InvalidStateError(f"occupation {occupation!r} outside [0, 1]")
        return cls(np.array([1.0 - occupation, occupation]))

    @classmethod
    def uniform(cls, dimension: int) -> "DiagonalState":
        return cls(np.full(dimension, 1.0 / dimension))

    @property
    def dimension(self) -> int:
        return int(self.populations.size)

    @property
    def occupation(self) -> float:
        """Filled-level probability of a two-level dot."""
        if self.dimension != 2:
            raise InvalidStateError("occupation is only defined for two-level states")
        return float(self.populations[1])


@dataclass(frozen=True, eq=False)
class LevelSpectrum:
    """
    Energy eigenvalues of the working-medium Hamiltonian.

    `particle_numbers` gives the particle content of each level and enters the
    grand-canonical weights; it defaults to zero (canonical ensemble).
    """

    energies: np.ndarray
    particle_numbers: Optional[np.ndarray] = field(default=None)

    def __post_init__(self):
        energies = _frozen_array(self.energies)
        if energies.ndim != 1 or energies.size < 2:
            raise InvalidStateError(f"expected a vector of length >= 2, got shape {energies.shape}")
        if not np.all(np.isfinite(energies)):
            raise InvalidStateError("energies must be finite")
        numbers = self.particle_numbers
        numbers = np.zeros_like(energies) if numbers is None else _frozen_array(numbers)
        if numbers.shape != energies.shape:
            raise InvalidStateError("particle numbers must match the energies")
        numbers.setflags(write=False)
        object.__setattr__(self, "energies", energies)
        object.__setattr__(self, "particle_numbers", numbers)

    @classmethod
    def dot(cls, level: float) -> "LevelSpectrum":
        """Single fermionic level at energy `level`: empty (0 particles) and filled (1)."""
        return cls(np.array([0.0, level]), np.array([0.0, 1.0]))

    @property
    def dimension(self) -> int:
        return int(self.energies.size)

    def grand_energies(self, chemical_potential: float) -> np.ndarray:
        """ε_i − μ·n_i, the energies measured against the reservoir."""
        return self.energies - chemical_potential * self.particle_numbers


@dataclass(frozen=True)
class Bath:
    """Fermionic reservoir: temperature T, chemical potential μ, coupling rate Γ."""

    label: str
    temperature: float
    chemical_potential: float = 0.0
    coupling: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.temperature) and self.temperature > 0.0):
            raise InvalidBathError(f"bath '{self.label}': temperature must be > 0, got {self.temperature!r}")
        if not (math.isfinite(self.coupling) and self.coupling > 0.0):
            raise InvalidBathError(f"bath '{self.label}': coupling must be > 0, got {self.coupling!r}")
        if not math.isfinite(self.chemical_potential):
            raise InvalidBathError(f"bath '{self.label}': chemical potential must be finite")
