"""Exception hierarchy.

The CLI maps these onto its exit-code contract: validation, precondition,
parameter, shape and config failures exit 2; malformed input files exit 4;
a numeric bound violation is not an exception at all (exit 3 is decided by
comparing a computed ratio against its constant).
"""

from __future__ import annotations

__all__ = [
    "IneqForgeError",
    "ParameterError",
    "ShapeError",
    "ValidationError",
    "AdmissibilityError",
    "MonotonicityError",
    "PreconditionError",
    "InvariantError",
    "DegenerateFamilyError",
    "GridError",
    "ConfigError",
    "SchemaError",
]


class IneqForgeError(Exception):
    """Base class for every error raised by this package."""


class ParameterError(IneqForgeError, ValueError):
    """A scalar parameter is outside its documented domain."""


class ShapeError(IneqForgeError, ValueError):
    """Empty input or mismatched sequence lengths."""


class ValidationError(IneqForgeError, ValueError):
    """A value type rejected its data at construction."""


class AdmissibilityError(ValidationError):
    """Some partial sum P_k dropped below -tolerance."""

    def __init__(self, index: int, value: float, tolerance: float):
        self.index = index  # 1-based, first offending k
        self.value = value
        self.tolerance = tolerance
        super().__init__(
            f"weights inadmissible: P_{index} = {value!r} < -{tolerance!r}"
        )


class MonotonicityError(ValidationError):
    """A sequence violated its declared direction or [lo, hi] box."""

    def __init__(self, index: int, message: str):
        self.index = index  # 1-based position of the first violation
        super().__init__(f"at k={index}: {message}")


class PreconditionError(IneqForgeError):
    """The inputs fail a hypothesis of the operation's theorem."""


class InvariantError(IneqForgeError):
    """An internal quantity that must be non-negative came out negative.

    Signals a broken admissibility certificate, not bad user input.
    """


class DegenerateFamilyError(IneqForgeError):
    """A family construction collapsed (e.g. all pair-differences zero)."""


class GridError(IneqForgeError, ValueError):
    """Quadrature grid is not strictly increasing or is malformed."""


class ConfigError(ParameterError):
    """A search configuration is infeasible."""


class SchemaError(IneqForgeError, ValueError):
    """An input file does not match its documented schema."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"field {field!r}: {message}")
