# Numerical tolerances used across the package
from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    normalization: float = 1e-12
    continuity: float = 1e-12
    first_law: float = 1e-8
    second_law: float = 1e-10
    bound: float = 1e-9
    saturation: float = 1e-6
    heat_floor: float = 1e-12
    kelvin: float = 1e-12
    trace_periodicity: float = 1e-9
    # Γt beyond which a relaxation is taken as complete
    relaxation_saturation: float = 700.0


TOLERANCES = Tolerances()
