"""
Config-driven runs, sweeps and self-checks.
"""

from .config import apply_sweep_value, build_cycle, load_config, sweep_values, validate_config
from .runner import CheckResult, evaluate, run_single, run_verify, verify
from .schema import RunConfig
from .sweep import SweepRow, run_sweep, write_sweep_csv

__all__ = [
    'CheckResult', 'RunConfig', 'SweepRow', 'apply_sweep_value', 'build_cycle', 'evaluate',
    'load_config', 'run_single', 'run_sweep', 'run_verify', 'sweep_values', 'validate_config',
    'verify', 'write_sweep_csv',
]
