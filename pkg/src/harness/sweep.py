"""
Parameter sweeps over a one-dimensional grid, optionally spread over worker processes.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import repeat
from typing import List, Sequence, Tuple

from src.exceptions import ConfigError
from src.harness.config import apply_sweep_value, sweep_values
from src.harness.runner import evaluate, format_number, ledger_cells, ledger_columns
from src.harness.schema import RunConfig
from src.storage.file_manager import FileManager

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepRow:
    value: float
    cells: Tuple[str, ...]
    violations: Tuple[str, ...]

    def as_csv(self) -> List[str]:
        return [format_number(self.value), *self.cells]


def sweep_columns(config: RunConfig) -> List[str]:
    return ["value", *ledger_columns(config.bath_labels)]


def evaluate_point(config: RunConfig, value: float) -> SweepRow:
    variant = apply_sweep_value(config, config.sweep.paths, value)
    report, bounds = evaluate(variant)
    logger.debug("sweep point %.17g: W=%.6g eta=%s", value, report.net_work, bounds.efficiency)
    return SweepRow(value, tuple(ledger_cells(report, bounds, config.bath_labels)),
                    tuple(v.name for v in bounds.violations))


def run_sweep(config: RunConfig, workers: int = 1) -> List[SweepRow]:
    """
    Evaluate every grid point. Rows come back in grid order whatever the
    number of workers, so the output is identical for any worker count.
    """
    if config.sweep is None:
        raise ConfigError("configuration has no sweep section")
    values = [float(v) for v in sweep_values(config.sweep)]
    logger.info("sweeping %s over %d points with %d worker(s)", config.sweep.paths, len(values), workers)
    if workers <= 1:
        return [evaluate_point(config, value) for value in values]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(evaluate_point, repeat(config), values))


def write_sweep_csv(rows: Sequence[SweepRow], config: RunConfig, out: str, manager: FileManager) -> str:
    return manager.write_csv(out, [row.as_csv() for row in rows], sweep_columns(config))
