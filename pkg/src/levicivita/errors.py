"""Exception types shared across the package."""

from levicivita.core import IndexLengthError, IndexRangeError, MultiIndexError


class UnsupportedDimensionError(ValueError):
    """A backend was asked to evaluate a dimension it does not cover."""


class DegenerateGeneratorError(ValueError):
    """A generator spec maps two of 1*lam, ..., n*lam to (numerically) the same value."""


class GeneratorDomainError(ValueError):
    """A generator parameter is outside what the generator family accepts."""


class PrecisionError(ArithmeticError):
    """A floating evaluation did not land within tolerance of an integer in {-1, 0, 1}."""

    def __init__(self, message, raw=None):
        super().__init__(message)
        self.raw = raw


class InexactDivisionError(ArithmeticError):
    """An exact-integer form did not divide evenly. Indicates a bug, never valid input."""


class EnumerationError(RuntimeError):
    """A backend failed part-way through a sweep; ``indices`` is the offending tuple."""

    def __init__(self, message, indices):
        super().__init__(message)
        self.indices = indices


class BenchError(RuntimeError):
    """Benchmark configuration or correctness spot-check failure."""


__all__ = [
    "MultiIndexError",
    "IndexLengthError",
    "IndexRangeError",
    "UnsupportedDimensionError",
    "DegenerateGeneratorError",
    "GeneratorDomainError",
    "PrecisionError",
    "InexactDivisionError",
    "EnumerationError",
    "BenchError",
]
