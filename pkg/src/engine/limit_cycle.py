"""
Driving a cycle to its periodic steady state.
"""
import logging
import math
from dataclasses import dataclass
from typing import Optional

from src.dynamics import IntegratorConfig
from src.engine.cycle import Cycle
from src.engine.report import CycleReport, build_report
from src.exceptions import InvalidStateError, LimitCycleError

logger = logging.getLogger(__name__)

METHODS = ("affine", "iterate")


@dataclass(frozen=True)
class LimitCycleConfig:
    """
    `tolerance` bounds |p(start) − p(start + τ)|.

    method "affine" solves the period map p -> a·p + b exactly from two
    evaluations (the rate equation and its RK4 discretisation are linear in
    p); "iterate" applies the map until the residual drops below tolerance.
    """

    tolerance: float = 1e-12
    max_periods: int = 100_000
    method: str = "affine"

    def __post_init__(self):
        if not self.tolerance > 0.0:
            raise ValueError("tolerance must be positive")
        if self.max_periods < 1:
            raise ValueError("max_periods must be at least 1")
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}")


def _iterate(cycle: Cycle, p: float, cfg: LimitCycleConfig, integrator: IntegratorConfig,
             periods: int = 0, residual: float = math.inf):
    while periods < cfg.max_periods:
        following = cycle.period_map(p, integrator)
        periods += 1
        residual = abs(following - p)
        p = following
        if residual <= cfg.tolerance:
            return p, periods
    raise LimitCycleError(residual, periods)


AFFINE_PERIODS = 3


def _solve_affine(cycle: Cycle, p_init: float, cfg: LimitCycleConfig, integrator: IntegratorConfig):
    if cfg.max_periods < AFFINE_PERIODS:
        logger.info("budget of %d periods too small for the affine solve, iterating", cfg.max_periods)
        return _iterate(cycle, p_init, cfg, integrator)
    offset = cycle.period_map(0.0, integrator)
    slope = cycle.period_map(1.0, integrator) - offset
    if 1.0 - slope <= cfg.tolerance:
        # the map barely contracts; nothing to gain from the closed form
        logger.info("period map slope %.17g too close to 1, iterating", slope)
        return _iterate(cycle, p_init, cfg, integrator, periods=2)
    p = min(1.0, max(0.0, offset / (1.0 - slope)))
    following = cycle.period_map(p, integrator)
    if abs(following - p) <= cfg.tolerance:
        return p, AFFINE_PERIODS
    logger.info("affine fixed point residual %.3e, refining by iteration", abs(following - p))
    return _iterate(cycle, following, cfg, integrator, periods=AFFINE_PERIODS, residual=abs(following - p))


def run_to_limit_cycle(cycle: Cycle, p_init: float, cfg: Optional[LimitCycleConfig] = None,
                       integrator: Optional[IntegratorConfig] = None, record_trace: bool = True) -> CycleReport:
    """
    Converge to the limit cycle and measure one full period there.

    The measured period is sampled into `report.trace` unless `record_trace` is off.
    """
    cfg = cfg or LimitCycleConfig()
    integrator = integrator or IntegratorConfig()
    if not 0.0 <= p_init <= 1.0:
        raise InvalidStateError(f"initial occupation {p_init!r} outside [0, 1]")

    if cfg.method == "affine":
        start, periods = _solve_affine(cycle, p_init, cfg, integrator)
    else:
        start, periods = _iterate(cycle, p_init, cfg, integrator)

    outcomes = cycle.run_period(start, integrator, record=record_trace)
    residual = abs(outcomes[-1].result.final_occupation - start)
    logger.info("limit cycle after %d periods, occupation %.17g, residual %.3e", periods, start, residual)
    return build_report(outcomes, cycle.used_baths(), cycle.period, periods, residual)
