"""
Cycles: ordered strokes, each attached to at most one bath.
"""
import logging
from dataclasses import dataclass, replace
from typing import Dict, List, Mapping, NamedTuple, Optional, Sequence

from src.dynamics import IntegratorConfig, PropagationResult, Protocol, propagate_stroke, quasistatic_stroke
from src.exceptions import CycleError
from src.thermocore.states import Bath
from src.thermocore.tolerances import TOLERANCES

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Stroke:
    protocol: Protocol
    bath_label: Optional[str] = None
    quasistatic: bool = False


class StrokeOutcome(NamedTuple):
    stroke: Stroke
    bath: Optional[Bath]
    result: PropagationResult


class Cycle:
    """A closed sequence of strokes with a registry of the baths they use."""

    def __init__(self, strokes: Sequence[Stroke], baths: Sequence[Bath]):
        self.strokes = tuple(strokes)
        self.baths: Dict[str, Bath] = {}
        for bath in baths:
            if bath.label in self.baths:
                raise CycleError(f"duplicate bath label '{bath.label}'")
            self.baths[bath.label] = bath
        self._validate()

    def _validate(self) -> None:
        if not self.strokes:
            raise CycleError("a cycle needs at least one stroke")
        if not any(stroke.bath_label is not None for stroke in self.strokes):
            raise CycleError("at least one stroke must be coupled to a bath")
        for index, stroke in enumerate(self.strokes):
            if stroke.bath_label is None:
                if stroke.quasistatic:
                    raise CycleError(f"stroke {index}: a quasistatic stroke needs a bath")
                continue
            if stroke.bath_label not in self.baths:
                raise CycleError(f"stroke {index}: unknown bath '{stroke.bath_label}'")
            if stroke.protocol.duration <= 0.0:
                raise CycleError(f"stroke {index}: a stroke coupled to a bath needs a positive duration")
        # ε must be continuous at every junction, including the wrap-around
        for index, stroke in enumerate(self.strokes):
            following = self.strokes[(index + 1) % len(self.strokes)]
            end, start = stroke.protocol.end_energy, following.protocol.start_energy
            if abs(end - start) > TOLERANCES.continuity * max(1.0, abs(end)):
                raise CycleError(
                    f"level energy jumps from {end!r} to {start!r} after stroke {index}; "
                    f"insert an explicit bath-free drive stroke"
                )

    @property
    def period(self) -> float:
        return sum(stroke.protocol.duration for stroke in self.strokes)

    @property
    def bath_labels(self) -> List[str]:
        """Labels of baths used by at least one stroke, in registry order."""
        used = {stroke.bath_label for stroke in self.strokes}
        return [label for label in self.baths if label in used]

    def used_baths(self) -> Mapping[str, Bath]:
        return {label: self.baths[label] for label in self.bath_labels}

    def run_period(self, p0: float, integrator: Optional[IntegratorConfig] = None,
                   record: bool = False) -> List[StrokeOutcome]:
        integrator = integrator or IntegratorConfig()
        if record != integrator.record_trajectory:
            integrator = replace(integrator, record_trajectory=record)
        outcomes = []
        p = p0
        for stroke in self.strokes:
            bath = self.baths[stroke.bath_label] if stroke.bath_label is not None else None
            if stroke.quasistatic:
                result = quasistatic_stroke(stroke.protocol, bath, p0=p, record=record)
            else:
                result = propagate_stroke(p, stroke.protocol, bath, integrator)
            outcomes.append(StrokeOutcome(stroke, bath, result))
            p = result.final_occupation
        return outcomes

    def period_map(self, p0: float, integrator: Optional[IntegratorConfig] = None) -> float:
        return self.run_period(p0, integrator)[-1].result.final_occupation
