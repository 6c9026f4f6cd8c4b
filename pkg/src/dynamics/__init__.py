"""
Time evolution of the two-level fermionic dot under driving and bath coupling.
"""

from .integrator import IntegratorConfig
from .propagation import (
    PropagationResult,
    Trajectory,
    propagate_stroke,
    quasistatic_stroke,
    relax_constant,
)
from .protocol import LinearPiece, Protocol, ProtocolKind

__all__ = [
    'IntegratorConfig', 'LinearPiece', 'PropagationResult', 'Protocol', 'ProtocolKind',
    'Trajectory', 'propagate_stroke', 'quasistatic_stroke', 'relax_constant',
]
