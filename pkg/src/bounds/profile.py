"""
Heat profiles: the (temperature, heat) pairs a cycle exchanges with its baths.
"""
import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Tuple

from src.engine.report import CycleReport
from src.exceptions import BoundError
from src.thermocore.tolerances import TOLERANCES


class HeatExchange(NamedTuple):
    temperature: float
    heat: float


@dataclass(frozen=True)
class HeatProfile:
    """Heats are positive when absorbed by the engine."""

    entries: Tuple[HeatExchange, ...]

    def __post_init__(self):
        if not self.entries:
            raise BoundError("a heat profile needs at least one entry")
        for entry in self.entries:
            if not (math.isfinite(entry.temperature) and entry.temperature > 0.0):
                raise BoundError(f"temperature must be > 0, got {entry.temperature!r}")
            if not math.isfinite(entry.heat):
                raise BoundError("heats must be finite")

    @classmethod
    def of(cls, pairs: Iterable[Tuple[float, float]]) -> "HeatProfile":
        return cls(tuple(HeatExchange(float(t), float(q)) for t, q in pairs))

    @classmethod
    def from_report(cls, report: CycleReport) -> "HeatProfile":
        """Profile realised by a cycle, without baths that exchanged no heat."""
        floor = TOLERANCES.heat_floor * max(1.0, max(abs(q) for q in report.heat_by_bath.values()))
        entries = [
            HeatExchange(report.baths[label].temperature, heat)
            for label, heat in report.heat_by_bath.items()
            if abs(heat) >= floor
        ]
        if not entries:
            raise BoundError("the cycle exchanged no heat")
        return cls(tuple(entries))

    @property
    def t_min(self) -> float:
        return min(entry.temperature for entry in self.entries)

    @property
    def t_max(self) -> float:
        return max(entry.temperature for entry in self.entries)

    @property
    def absorbed(self) -> Tuple[HeatExchange, ...]:
        return tuple(entry for entry in self.entries if entry.heat > 0.0)

    @property
    def released(self) -> Tuple[HeatExchange, ...]:
        return tuple(entry for entry in self.entries if entry.heat < 0.0)
