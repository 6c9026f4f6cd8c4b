"""
Driving protocols ε(t) for a single stroke.
"""
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, NamedTuple, Sequence, Tuple

from src.exceptions import ProtocolError


class ProtocolKind(str, Enum):
    CONSTANT = "constant"
    LINEAR = "linear"
    SAMPLED = "sampled"


class LinearPiece(NamedTuple):
    t_start: float
    t_end: float
    energy_start: float
    energy_end: float

    @property
    def duration(self) -> float:
        return self.t_end - self.t_start


@dataclass(frozen=True)
class Protocol:
    """
    Piecewise-linear level energy over [0, duration].

    Every kind is stored as ordered (t, ε) knots. A zero duration is allowed
    for constant and linear drives (sudden quenches); whether it is usable
    depends on the stroke having no bath attached.
    """

    kind: ProtocolKind
    duration: float
    knots: Tuple[Tuple[float, float], ...]

    def __post_init__(self):
        if not (math.isfinite(self.duration) and self.duration >= 0.0):
            raise ProtocolError(f"duration must be >= 0, got {self.duration!r}")
        if len(self.knots) < 2:
            raise ProtocolError("a protocol needs at least two knots")
        for _, energy in self.knots:
            if not math.isfinite(energy):
                raise ProtocolError("protocol energies must be finite")
        times = [t for t, _ in self.knots]
        if times[0] != 0.0 or times[-1] != self.duration:
            raise ProtocolError(f"knots must span [0, {self.duration}], got [{times[0]}, {times[-1]}]")
        if self.kind == ProtocolKind.SAMPLED and any(b <= a for a, b in zip(times, times[1:])):
            raise ProtocolError("sampled knots must be strictly increasing in time")

    @classmethod
    def constant(cls, energy: float, duration: float) -> "Protocol":
        return cls(ProtocolKind.CONSTANT, float(duration), ((0.0, float(energy)), (float(duration), float(energy))))

    @classmethod
    def linear(cls, start: float, end: float, duration: float) -> "Protocol":
        return cls(ProtocolKind.LINEAR, float(duration), ((0.0, float(start)), (float(duration), float(end))))

    @classmethod
    def sampled(cls, knots: Sequence[Tuple[float, float]], duration: float) -> "Protocol":
        knots = tuple((float(t), float(e)) for t, e in knots)
        return cls(ProtocolKind.SAMPLED, float(duration), knots)

    @property
    def start_energy(self) -> float:
        return self.knots[0][1]

    @property
    def end_energy(self) -> float:
        return self.knots[-1][1]

    def pieces(self) -> Iterator[LinearPiece]:
        for (t0, e0), (t1, e1) in zip(self.knots, self.knots[1:]):
            yield LinearPiece(t0, t1, e0, e1)
