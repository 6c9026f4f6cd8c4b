"""
JSON schema of a run configuration. Unknown keys are rejected everywhere.

{
  "baths":   [{"label": "hot", "T": 2.0, "mu": 0.0, "Gamma": 1.0}, ...],
  "strokes": [{"duration": 1.0, "bath": "hot" | null, "quasistatic": false,
               "protocol": {"kind": "constant", "energy": 3.0}
                         | {"kind": "linear", "start": 2.0, "end": 3.0}
                         | {"kind": "sampled", "knots": [[0.0, 2.0], [1.0, 3.0]]}}, ...],
  "limit_cycle": {"tol": 1e-12, "max_periods": 100000, "method": "affine" | "iterate"},
  "integrator":  {"max_step_fraction": 0.01, "verify": false},
  "sweep":       {"path": "strokes[1].duration" | [...], "scale": "lin" | "log",
                  "from": 0.1, "to": 100.0, "count": 20}
}
"""
from typing import Annotated, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator


class _StrictModel(BaseModel):
    model_config = ConfigDict(extra='forbid', frozen=True, allow_inf_nan=False)


class BathSpec(_StrictModel):
    label: str = Field(min_length=1)
    T: float = Field(gt=0)
    mu: float = 0.0
    Gamma: float = Field(gt=0)


class ConstantProtocolSpec(_StrictModel):
    kind: Literal['constant']
    energy: float


class LinearProtocolSpec(_StrictModel):
    kind: Literal['linear']
    start: float
    end: float


class SampledProtocolSpec(_StrictModel):
    kind: Literal['sampled']
    knots: List[Tuple[float, float]] = Field(min_length=2)


ProtocolSpec = Annotated[
    Union[ConstantProtocolSpec, LinearProtocolSpec, SampledProtocolSpec],
    Field(discriminator='kind'),
]


class StrokeSpec(_StrictModel):
    duration: float = Field(ge=0)
    bath: Optional[str] = None
    protocol: ProtocolSpec
    quasistatic: bool = False

    @model_validator(mode='after')
    def _coupled_strokes_take_time(self) -> 'StrokeSpec':
        if self.bath is not None and self.duration <= 0:
            raise ValueError(f"stroke coupled to bath '{self.bath}' needs duration > 0")
        if self.bath is None and self.quasistatic:
            raise ValueError("a quasistatic stroke needs a bath")
        return self


class LimitCycleSpec(_StrictModel):
    tol: float = Field(1e-12, gt=0)
    max_periods: int = Field(100_000, ge=1)
    method: Literal['affine', 'iterate'] = 'affine'


class IntegratorSpec(_StrictModel):
    max_step_fraction: float = Field(0.01, gt=0, le=1)
    verify: bool = False


class SweepSpec(_StrictModel):
    model_config = ConfigDict(extra='forbid', frozen=True, allow_inf_nan=False, populate_by_name=True)

    path: Union[str, List[str]]
    scale: Literal['lin', 'log'] = 'lin'
    start: float = Field(alias='from')
    stop: float = Field(alias='to')
    count: int

    @property
    def paths(self) -> List[str]:
        return [self.path] if isinstance(self.path, str) else list(self.path)


class RunConfig(_StrictModel):
    baths: List[BathSpec] = Field(min_length=1)
    strokes: List[StrokeSpec] = Field(min_length=1)
    limit_cycle: LimitCycleSpec = LimitCycleSpec()
    integrator: IntegratorSpec = IntegratorSpec()
    sweep: Optional[SweepSpec] = None

    @property
    def bath_labels(self) -> List[str]:
        return [bath.label for bath in self.baths]
