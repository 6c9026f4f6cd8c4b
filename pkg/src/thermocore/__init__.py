"""
Foundational thermodynamic types and functionals.
"""

from .states import Bath, DiagonalState, LevelSpectrum
from .functionals import (
    binary_entropy,
    energy_variance,
    fermi,
    fermi_occupation,
    mean_energy,
    nonequilibrium_free_energy,
    relative_entropy,
    shannon_entropy,
    state_hamiltonian_covariance,
    state_inverse_temperature,
    thermal_state,
)
from .tolerances import TOLERANCES, Tolerances

__all__ = [
    'Bath', 'DiagonalState', 'LevelSpectrum', 'TOLERANCES', 'Tolerances',
    'binary_entropy', 'energy_variance', 'fermi', 'fermi_occupation', 'mean_energy',
    'nonequilibrium_free_energy', 'relative_entropy', 'shannon_entropy',
    'state_hamiltonian_covariance', 'state_inverse_temperature', 'thermal_state',
]
