"""
Loading, validating and rewriting run configurations.
"""
import json
import logging
import re
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Union

import numpy as np
from pydantic import ValidationError

from src.dynamics import IntegratorConfig, Protocol
from src.engine import Cycle, LimitCycleConfig, Stroke
from src.exceptions import (
    ConfigError,
    ConfigParseError,
    ConfigValidationError,
    InvalidGridError,
    QdotError,
    UnknownFieldError,
    UnresolvedBathError,
    UnsupportedSweepPathError,
)
from src.harness.schema import RunConfig, StrokeSpec, SweepSpec
from src.storage.file_manager import FileManager
from src.thermocore import Bath

logger = logging.getLogger(__name__)

SUPPORTED_SWEEP_PATHS = (
    "strokes[i].duration",
    "strokes[i].protocol.energy",
    "strokes[i].protocol.start",
    "strokes[i].protocol.end",
    "baths.<label>.T",
    "baths.<label>.mu",
    "baths.<label>.Gamma",
)

_STROKE_PATH = re.compile(r'^strokes\[(\d+)\]\.(duration|protocol\.(energy|start|end))$')
_BATH_PATH = re.compile(r'^baths\.([^.]+)\.(T|mu|Gamma)$')


def _location(loc: Iterable[Union[str, int]]) -> str:
    text = ""
    for part in loc:
        text += f"[{part}]" if isinstance(part, int) else (f".{part}" if text else str(part))
    return text or "<root>"


def load_config(path: Union[str, Path], manager: Optional[FileManager] = None) -> RunConfig:
    """Read and validate a JSON run configuration."""
    manager = manager or FileManager()
    try:
        text = manager.read_text(path)
    except (FileNotFoundError, OSError) as e:
        raise ConfigError(str(e)) from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigParseError(str(path), e.lineno, e.colno, e.msg) from e
    return validate_config(data, source=str(path))


def validate_config(data: Any, source: str = "<config>") -> RunConfig:
    try:
        config = RunConfig.model_validate(data)
    except ValidationError as e:
        errors = e.errors()
        unknown = [_location(error['loc']) for error in errors if error['type'] == 'extra_forbidden']
        if unknown:
            raise UnknownFieldError(f"{source}: unknown field(s): {', '.join(unknown)}") from e
        details = "; ".join(f"{_location(error['loc'])}: {error['msg']}" for error in errors)
        raise ConfigValidationError(f"{source}: {details}") from e

    labels = set(config.bath_labels)
    for index, stroke in enumerate(config.strokes):
        if stroke.bath is not None and stroke.bath not in labels:
            raise UnresolvedBathError(stroke.bath, f"{source}: strokes[{index}].bath")
    if config.sweep is not None:
        _check_grid(config.sweep, source)
        for path in config.sweep.paths:
            _assign(config.model_dump(by_alias=True), path, config.sweep.start)
    build_cycle(config, source)
    return config


def _check_grid(sweep: SweepSpec, source: str) -> None:
    if sweep.count < 2:
        raise InvalidGridError(f"{source}: sweep.count must be >= 2, got {sweep.count}")
    if not sweep.start < sweep.stop:
        raise InvalidGridError(f"{source}: sweep endpoints must satisfy from < to, got {sweep.start} and {sweep.stop}")
    if sweep.scale == 'log' and sweep.start <= 0:
        raise InvalidGridError(f"{source}: a logarithmic sweep needs from > 0, got {sweep.start}")


def sweep_values(sweep: SweepSpec) -> np.ndarray:
    if sweep.scale == 'log':
        return np.geomspace(sweep.start, sweep.stop, sweep.count)
    return np.linspace(sweep.start, sweep.stop, sweep.count)


def _assign(data: Dict[str, Any], path: str, value: float) -> None:
    stroke_match = _STROKE_PATH.match(path)
    bath_match = _BATH_PATH.match(path)
    if stroke_match:
        index = int(stroke_match.group(1))
        if index >= len(data['strokes']):
            raise UnsupportedSweepPathError(path, SUPPORTED_SWEEP_PATHS)
        stroke = data['strokes'][index]
        field = stroke_match.group(3)
        if field is None:
            stroke['duration'] = value
        elif field in stroke['protocol']:
            stroke['protocol'][field] = value
        else:
            raise UnsupportedSweepPathError(path, SUPPORTED_SWEEP_PATHS)
    elif bath_match:
        label, field = bath_match.groups()
        for bath in data['baths']:
            if bath['label'] == label:
                bath[field] = value
                break
        else:
            raise UnresolvedBathError(label, f"sweep path '{path}'")
    else:
        raise UnsupportedSweepPathError(path, SUPPORTED_SWEEP_PATHS)


def apply_sweep_value(config: RunConfig, paths: List[str], value: float) -> RunConfig:
    """Copy of `config` with every path set to `value` and the sweep section removed."""
    data = config.model_dump(by_alias=True, exclude={'sweep'})
    for path in paths:
        _assign(data, path, value)
    return validate_config(data, source=f"sweep point {value!r}")


def _protocol(stroke: StrokeSpec) -> Protocol:
    spec = stroke.protocol
    if spec.kind == 'constant':
        return Protocol.constant(spec.energy, stroke.duration)
    if spec.kind == 'linear':
        return Protocol.linear(spec.start, spec.end, stroke.duration)
    return Protocol.sampled(spec.knots, stroke.duration)


def build_cycle(config: RunConfig, source: str = "<config>") -> Cycle:
    try:
        baths = [Bath(spec.label, spec.T, spec.mu, spec.Gamma) for spec in config.baths]
        strokes = [Stroke(_protocol(spec), spec.bath, spec.quasistatic) for spec in config.strokes]
        return Cycle(strokes, baths)
    except QdotError as e:
        raise ConfigValidationError(f"{source}: {e}") from e


def limit_cycle_config(config: RunConfig) -> LimitCycleConfig:
    spec = config.limit_cycle
    return LimitCycleConfig(tolerance=spec.tol, max_periods=spec.max_periods, method=spec.method)


def integrator_config(config: RunConfig) -> IntegratorConfig:
    spec = config.integrator
    return IntegratorConfig(max_step_fraction=spec.max_step_fraction, verify_step_halving=spec.verify)
