"""
Cycle composition, limit-cycle solver and per-cycle ledger.
"""

from .cycle import Cycle, Stroke, StrokeOutcome
from .limit_cycle import LimitCycleConfig, run_to_limit_cycle
from .report import (
    CycleReport,
    CycleTrace,
    StrokeLedger,
    StrokeTrace,
    TraceSample,
    efficiency,
    entropy_production,
)

__all__ = [
    'Cycle', 'CycleReport', 'CycleTrace', 'LimitCycleConfig', 'Stroke', 'StrokeLedger',
    'StrokeOutcome', 'StrokeTrace', 'TraceSample', 'efficiency', 'entropy_production',
    'run_to_limit_cycle',
]
