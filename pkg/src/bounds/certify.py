"""
Assemble the bound hierarchy for one cycle and check every ordering it implies.
"""
import logging
from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Tuple

from src.bounds.carnot import carnot_bound, clausius_multibath_bound, generalized_carnot_bound
from src.bounds.information import info_theoretic_bound
from src.bounds.profile import HeatProfile
from src.engine.report import CycleReport, CycleTrace
from src.exceptions import BoundError
from src.thermocore.tolerances import TOLERANCES

logger = logging.getLogger(__name__)


class Violation(NamedTuple):
    name: str
    magnitude: float


@dataclass(frozen=True)
class BoundReport:
    efficiency: Optional[float]
    carnot: float
    clausius: Optional[float]
    generalized_carnot: Optional[float]
    information: Optional[float]
    violations: Tuple[Violation, ...]
    saturated: bool = False
    chemically_driven: bool = False

    @property
    def ok(self) -> bool:
        return not self.violations


def _optional(evaluate, *args) -> Optional[float]:
    try:
        return evaluate(*args)
    except BoundError:
        return None


def _check_at_most(violations: List[Violation], name: str, lower: Optional[float],
                   upper: Optional[float], tolerance: float) -> None:
    if lower is None or upper is None:
        return
    excess = lower - upper
    if excess > tolerance:
        violations.append(Violation(name, excess))


def certify(report: CycleReport, trace: Optional[CycleTrace] = None) -> BoundReport:
    """
    Evaluate Carnot, Clausius, generalised Carnot and information bounds and
    record every breached inequality with its magnitude.

    Without a trace the information bound is not evaluated.
    """
    tol = TOLERANCES
    temperatures = [bath.temperature for bath in report.baths.values()]
    t_min, t_max = min(temperatures), max(temperatures)
    eta_carnot = carnot_bound(t_max, t_min)

    try:
        profile = HeatProfile.from_report(report)
    except BoundError:
        profile = None
    eta_clausius = _optional(clausius_multibath_bound, profile, t_min) if profile else None
    eta_generalized = _optional(generalized_carnot_bound, profile, t_min) if profile else None
    eta_info = info_theoretic_bound(trace, t_min) if trace is not None else None
    eta = report.efficiency

    violations: List[Violation] = []
    first_law = abs(report.first_law_residual())
    if first_law > tol.first_law * report.heat_scale:
        violations.append(Violation("first_law", first_law))
    if report.entropy_production < -tol.second_law:
        violations.append(Violation("second_law", -report.entropy_production))
    if len(report.baths) == 1 and report.net_work > tol.kelvin:
        violations.append(Violation("kelvin", report.net_work))

    chemically_driven = report.chemical_work < -tol.heat_floor * report.heat_scale
    if not chemically_driven:
        _check_at_most(violations, "efficiency<=information", eta, eta_info, tol.bound)
        _check_at_most(violations, "efficiency<=generalized_carnot", eta, eta_generalized, tol.bound)
        _check_at_most(violations, "efficiency<=clausius", eta, eta_clausius, tol.bound)
        _check_at_most(violations, "efficiency<=carnot", eta, eta_carnot, tol.bound)
    _check_at_most(violations, "information<=clausius", eta_info, eta_clausius, tol.bound)
    _check_at_most(violations, "generalized_carnot<=clausius", eta_generalized, eta_clausius, tol.bound)
    _check_at_most(violations, "clausius<=carnot", eta_clausius, eta_carnot, tol.bound)

    saturated = eta is not None and eta_info is not None and abs(eta_info - eta) < tol.saturation
    for violation in violations:
        logger.warning("bound violation %s by %.3e", violation.name, violation.magnitude)
    return BoundReport(
        efficiency=eta,
        carnot=eta_carnot,
        clausius=eta_clausius,
        generalized_carnot=eta_generalized,
        information=eta_info,
        violations=tuple(violations),
        saturated=saturated,
        chemically_driven=chemically_driven,
    )
