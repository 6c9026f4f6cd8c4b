"""
Exception hierarchy shared by every qdot-engine module.

Errors with extra fields keep their constructor arguments in `args`, so they
unpickle when raised inside a sweep worker process.
"""
from typing import Iterable, Optional


class QdotError(Exception):
    """Base class for all errors raised by the package."""


class InvalidStateError(QdotError):
    """A population vector is not a probability distribution."""


class DimensionMismatchError(QdotError):
    """State and spectrum have different lengths."""


class SupportError(QdotError):
    """The reference distribution vanishes where the state does not."""


class InvalidBathError(QdotError):
    """Bath temperature or coupling is not strictly positive."""


class ProtocolError(QdotError):
    """A driving protocol or stroke is malformed."""


class IntegrationError(QdotError):
    """The fixed-step integrator could not deliver the requested accuracy."""

    def __init__(self, message: str, steps: int):
        super().__init__(message, steps)
        self.message = message
        self.steps = steps

    def __str__(self) -> str:
        return f"{self.message} (steps={self.steps})"


class CycleError(QdotError):
    """A cycle violates a structural invariant."""


class LimitCycleError(QdotError):
    """The period map did not reach its fixed point."""

    def __init__(self, residual: float, periods: int):
        super().__init__(residual, periods)
        self.residual = residual
        self.periods = periods

    def __str__(self) -> str:
        return f"limit cycle not reached after {self.periods} periods (last residual {self.residual:.3e})"


class BoundError(QdotError):
    """Inputs to a bound evaluator are out of its domain."""


class TraceError(QdotError):
    """A cycle trace does not describe exactly one period."""


class ConfigError(QdotError):
    """Base class for run-configuration problems."""


class ConfigParseError(ConfigError):
    """The configuration file is not valid JSON."""

    def __init__(self, path: str, line: int, column: int, reason: str):
        super().__init__(path, line, column, reason)
        self.path = path
        self.line = line
        self.column = column
        self.reason = reason

    def __str__(self) -> str:
        return f"{self.path}:{self.line}:{self.column}: {self.reason}"


class UnknownFieldError(ConfigError):
    """The configuration contains a key the schema does not define."""


class UnresolvedBathError(ConfigError):
    """A stroke references a bath label that is not declared."""

    def __init__(self, label: str, location: str):
        super().__init__(label, location)
        self.label = label
        self.location = location

    def __str__(self) -> str:
        return f"{self.location}: unknown bath '{self.label}'"


class InvalidGridError(ConfigError):
    """A sweep grid is empty, unordered or not representable."""


class ConfigValidationError(ConfigError):
    """A configuration value violates a physical or structural invariant."""


class UnsupportedSweepPathError(ConfigError):
    """A sweep targets a parameter that cannot be swept."""

    def __init__(self, path: str, supported: Optional[Iterable[str]] = None):
        supported = list(supported or [])
        super().__init__(path, supported)
        self.path = path
        self.supported = supported

    def __str__(self) -> str:
        return f"unsupported sweep path '{self.path}'; supported paths: {', '.join(self.supported)}"
