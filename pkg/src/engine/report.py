"""
Per-cycle thermodynamic ledger and the trace of the measured period.
"""
import math
from dataclasses import dataclass, replace
from typing import Dict, List, Mapping, NamedTuple, Optional, Tuple

import numpy as np

from src.engine.cycle import StrokeOutcome
from src.thermocore.functionals import binary_entropy
from src.thermocore.states import Bath, DiagonalState, LevelSpectrum
from src.thermocore.tolerances import TOLERANCES


class TraceSample(NamedTuple):
    time: float
    state: DiagonalState
    spectrum: LevelSpectrum


@dataclass(frozen=True)
class StrokeTrace:
    bath: Optional[Bath]
    heat: float
    samples: Tuple[TraceSample, ...]

    @property
    def entropy_change(self) -> float:
        return binary_entropy(self.samples[-1].state.occupation) - binary_entropy(self.samples[0].state.occupation)


@dataclass(frozen=True)
class CycleTrace:
    """Sampled (t, state, spectrum, bath) series covering one period."""

    strokes: Tuple[StrokeTrace, ...]
    period: float

    @classmethod
    def from_outcomes(cls, outcomes: List[StrokeOutcome]) -> "CycleTrace":
        strokes = []
        offset = 0.0
        for outcome in outcomes:
            trajectory = outcome.result.trajectory
            occupations = np.clip(trajectory.occupations, 0.0, 1.0)
            samples = tuple(
                TraceSample(offset + float(t), DiagonalState.from_occupation(float(p)), LevelSpectrum.dot(float(e)))
                for t, e, p in zip(trajectory.times, trajectory.energies, occupations)
            )
            strokes.append(StrokeTrace(outcome.bath, outcome.result.heat, samples))
            offset += outcome.stroke.protocol.duration
        return cls(tuple(strokes), offset)


@dataclass(frozen=True)
class StrokeLedger:
    bath_label: Optional[str]
    work: float
    heat: float
    chemical_work: float
    entropy_change: float


@dataclass(frozen=True)
class CycleReport:
    """
    Ledger of one period at the limit cycle.

    `chemical_work` is the chemical work extracted, −Σ μ_b Δp_b, so that the
    first law reads net_work + chemical_work = Σ_b heat_by_bath[b].
    """

    net_work: float
    heat_by_bath: Dict[str, float]
    chemical_work: float
    entropy_change: float
    entropy_production: float
    efficiency: Optional[float]
    period: float
    converged_after: int
    limit_state: float
    residual: float
    baths: Mapping[str, Bath]
    strokes: Tuple[StrokeLedger, ...]
    trace: Optional[CycleTrace] = None

    @property
    def heat_scale(self) -> float:
        return max(1.0, math.fsum(abs(q) for q in self.heat_by_bath.values()))

    def first_law_residual(self) -> float:
        return self.net_work + self.chemical_work - math.fsum(self.heat_by_bath.values())


def efficiency(report: CycleReport) -> Optional[float]:
    """η = W_net / Q_in, or None when no net work is produced or no heat enters."""
    floor = TOLERANCES.heat_floor * report.heat_scale
    heat_in = math.fsum(q for q in report.heat_by_bath.values() if q > floor)
    if heat_in <= floor or report.net_work <= TOLERANCES.kelvin * report.heat_scale:
        return None
    return report.net_work / heat_in


def entropy_production(report: CycleReport) -> float:
    """Σ_irr = ΔS_system − Σ_b Q_b / T_b."""
    flow = math.fsum(q / report.baths[label].temperature for label, q in report.heat_by_bath.items())
    return report.entropy_change - flow


def build_report(outcomes: List[StrokeOutcome], baths: Mapping[str, Bath], period: float,
                 converged_after: int, residual: float) -> CycleReport:
    heat_by_bath = {label: [] for label in baths}
    strokes, work, chemical = [], [], []
    for outcome in outcomes:
        result = outcome.result
        label = outcome.stroke.bath_label
        entropy_change = binary_entropy(result.final_occupation) - binary_entropy(result.initial_occupation)
        strokes.append(StrokeLedger(label, result.work, result.heat, result.chemical_work, entropy_change))
        work.append(result.work)
        chemical.append(result.chemical_work)
        if label is not None:
            heat_by_bath[label].append(result.heat)

    start = outcomes[0].result.initial_occupation
    end = outcomes[-1].result.final_occupation
    report = CycleReport(
        net_work=math.fsum(work),
        heat_by_bath={label: math.fsum(heats) for label, heats in heat_by_bath.items()},
        chemical_work=-math.fsum(chemical),
        entropy_change=binary_entropy(end) - binary_entropy(start),
        entropy_production=0.0,
        efficiency=None,
        period=period,
        converged_after=converged_after,
        limit_state=start,
        residual=residual,
        baths=dict(baths),
        strokes=tuple(strokes),
        trace=CycleTrace.from_outcomes(outcomes) if outcomes[0].result.trajectory is not None else None,
    )
    return _with_derived(report)


def _with_derived(report: CycleReport) -> CycleReport:
    return replace(report, entropy_production=entropy_production(report), efficiency=efficiency(report))
