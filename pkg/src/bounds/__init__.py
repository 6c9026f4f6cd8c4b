"""
Efficiency-bound hierarchy and its certification against simulated cycles.
"""

from .carnot import carnot_bound, clausius_multibath_bound, generalized_carnot_bound
from .certify import BoundReport, Violation, certify
from .information import absorbed_entropy, correlation_entropy, info_theoretic_bound
from .profile import HeatExchange, HeatProfile

__all__ = [
    'BoundReport', 'HeatExchange', 'HeatProfile', 'Violation', 'absorbed_entropy',
    'carnot_bound', 'certify', 'correlation_entropy', 'clausius_multibath_bound', 'generalized_carnot_bound',
    'info_theoretic_bound',
]
