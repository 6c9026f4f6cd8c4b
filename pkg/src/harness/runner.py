"""
Single-run evaluation, reporting and the self-check suite behind `verify`.
"""
import logging
from dataclasses import replace
from typing import List, NamedTuple, Optional, Sequence, TextIO, Tuple

from src.bounds import BoundReport, certify
from src.dynamics import IntegratorConfig
from src.engine import CycleReport, run_to_limit_cycle
from src.engine.report import build_report
from src.exceptions import IntegrationError, TraceError
from src.harness.config import build_cycle, integrator_config, limit_cycle_config
from src.harness.schema import RunConfig
from src.storage.file_constants import CSV_FLOAT_FORMAT
from src.thermocore.tolerances import TOLERANCES

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NONCONVERGENCE = 2
EXIT_VIOLATION = 3

INDEPENDENCE_TOLERANCE = 1e-9


def evaluate(config: RunConfig, p_init: float = 0.0,
             integrator: Optional[IntegratorConfig] = None) -> Tuple[CycleReport, BoundReport]:
    """Run the configured cycle to its limit cycle and certify the bound hierarchy."""
    cycle = build_cycle(config)
    report = run_to_limit_cycle(cycle, p_init, limit_cycle_config(config), integrator or integrator_config(config))
    try:
        bounds = certify(report, report.trace)
    except TraceError as e:
        logger.warning("information bound not evaluated: %s", e)
        bounds = certify(report)
    return report, bounds


def format_number(value: Optional[float]) -> str:
    if value is None:
        return ""
    if isinstance(value, int):
        return str(value)
    return format(value, CSV_FLOAT_FORMAT)


def ledger_columns(labels: Sequence[str]) -> List[str]:
    return (["W_net"] + [f"Q_{label}" for label in labels]
            + ["eta", "sigma_irr", "eta_carnot", "eta_clausius", "eta_generalized", "eta_info", "converged_after"])


def ledger_cells(report: CycleReport, bounds: BoundReport, labels: Sequence[str]) -> List[str]:
    heats = [report.heat_by_bath.get(label, 0.0) for label in labels]
    values = ([report.net_work] + heats
              + [bounds.efficiency, report.entropy_production, bounds.carnot, bounds.clausius,
                 bounds.generalized_carnot, bounds.information, report.converged_after])
    return [format_number(value) for value in values]


def _describe(value: Optional[float]) -> str:
    return "undefined" if value is None else f"{value:.12g}"


def format_report(report: CycleReport, bounds: BoundReport) -> str:
    lines = [
        f"limit cycle after {report.converged_after} periods "
        f"(occupation {report.limit_state:.12g}, residual {report.residual:.3e})",
        f"  period              {report.period:.12g}",
        f"  net work            {report.net_work:.12g}",
    ]
    for label, heat in report.heat_by_bath.items():
        lines.append(f"  heat from {label:<9} {heat:.12g}  (T={report.baths[label].temperature:g})")
    lines += [
        f"  chemical work       {report.chemical_work:.12g}",
        f"  entropy production  {report.entropy_production:.12g}",
        f"  efficiency          {_describe(bounds.efficiency)}",
        "bounds",
        f"  carnot              {_describe(bounds.carnot)}",
        f"  clausius            {_describe(bounds.clausius)}",
        f"  generalized carnot  {_describe(bounds.generalized_carnot)}",
        f"  information         {_describe(bounds.information)}",
        f"  saturated           {'yes' if bounds.saturated else 'no'}",
    ]
    if report.net_work <= 0.0:
        lines.append("  no net work extracted")
    if bounds.chemically_driven:
        lines.append("  chemically driven: efficiency is not compared with heat-engine bounds")
    if bounds.violations:
        lines.append("violations")
        lines += [f"  {v.name} by {v.magnitude:.3e}" for v in bounds.violations]
    else:
        lines.append("violations          none")
    return "\n".join(lines)


def _ledger_gap(first: CycleReport, second: CycleReport) -> float:
    gaps = [abs(first.net_work - second.net_work),
            abs(first.chemical_work - second.chemical_work),
            abs(first.entropy_production - second.entropy_production)]
    gaps += [abs(q - second.heat_by_bath[label]) for label, q in first.heat_by_bath.items()]
    return max(gaps)


class CheckResult(NamedTuple):
    name: str
    passed: Optional[bool]
    detail: str


def verify(config: RunConfig) -> List[CheckResult]:
    """
    Self-checks on one configuration. `passed` is None for checks that do not
    apply (Kelvin needs one bath, Carnot needs at least two).
    """
    tol = TOLERANCES
    report, bounds = evaluate(config, p_init=0.0)
    other, _ = evaluate(config, p_init=1.0)
    scale = report.heat_scale
    results = []

    gap = _ledger_gap(report, other)
    results.append(CheckResult("initial-state independence", gap <= INDEPENDENCE_TOLERANCE * scale,
                               f"max ledger difference {gap:.3e}"))

    cycle = build_cycle(config)
    integrator = integrator_config(config)
    end = cycle.period_map(report.limit_state, integrator)
    repeat = build_report(cycle.run_period(end, integrator), cycle.used_baths(), cycle.period, 0, 0.0)
    gap = max(abs(end - report.limit_state), _ledger_gap(report, repeat))
    results.append(CheckResult("periodicity", gap <= tol.trace_periodicity * scale,
                               f"period-to-period difference {gap:.3e}"))

    residual = abs(report.first_law_residual())
    results.append(CheckResult("first law", residual <= tol.first_law * scale, f"residual {residual:.3e}"))
    results.append(CheckResult("second law", report.entropy_production >= -tol.second_law,
                               f"entropy production {report.entropy_production:.6e}"))

    if len(report.baths) == 1:
        results.append(CheckResult("kelvin", report.net_work <= tol.kelvin, f"net work {report.net_work:.6e}"))
    else:
        results.append(CheckResult("kelvin", None, "needs a single bath"))

    names = {v.name for v in bounds.violations}
    if len(report.baths) >= 2:
        results.append(CheckResult("carnot", "efficiency<=carnot" not in names,
                                   f"efficiency {_describe(bounds.efficiency)} vs {_describe(bounds.carnot)}"))
    else:
        results.append(CheckResult("carnot", None, "needs at least two baths"))

    ordering = sorted(names - {"first_law", "second_law", "kelvin", "efficiency<=carnot"})
    results.append(CheckResult("bound ordering", not ordering, ", ".join(ordering) or "consistent"))

    try:
        refined = replace(integrator, verify_step_halving=True)
        run_to_limit_cycle(cycle, 0.0, limit_cycle_config(config), refined, record_trace=False)
        results.append(CheckResult("step halving", True, f"agrees within {refined.halving_tolerance:g}"))
    except IntegrationError as e:
        results.append(CheckResult("step halving", False, str(e)))
    return results


def run_single(config: RunConfig, out: Optional[str], manager, stream: TextIO) -> int:
    report, bounds = evaluate(config)
    labels = config.bath_labels
    header, cells = ledger_columns(labels), ledger_cells(report, bounds, labels)
    print(format_report(report, bounds), file=stream)
    if out:
        written = manager.write_csv(out, [cells], header)
        print(f"ledger written to {written}", file=stream)
    else:
        print(",".join(header), file=stream)
        print(",".join(cells), file=stream)
    return EXIT_VIOLATION if bounds.violations else EXIT_OK


def run_verify(config: RunConfig, stream: TextIO) -> int:
    results = verify(config)
    for check in results:
        status = "SKIP" if check.passed is None else ("PASS" if check.passed else "FAIL")
        print(f"{status}  {check.name:<28} {check.detail}", file=stream)
    failed = [check.name for check in results if check.passed is False]
    print(f"{len(failed)} check(s) failed" if failed else "all checks passed", file=stream)
    return EXIT_VIOLATION if failed else EXIT_OK
