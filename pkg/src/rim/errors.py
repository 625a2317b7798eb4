"""Exception types shared across the package."""


class RimError(Exception):
    """Base class for every error raised by this package."""


class ParameterError(RimError, ValueError):
    """A numeric parameter is outside its documented domain."""


class DegenerateGeometryError(RimError, ValueError):
    """The geometry admits no answer (coincident points, non-positive distance)."""


class InvalidCoefficientError(RimError, ValueError):
    """An irregularity coefficient must be strictly positive."""


class NoRangeError(RimError, ValueError):
    """The link budget is non-positive: inaudible at any distance."""


class GenerationExhaustedError(RimError, RuntimeError):
    """Pattern rejection sampling hit its attempt limit.

    ``attempts`` records how many full sequences were tried.
    """

    def __init__(self, message: str, attempts: int):
        super().__init__(message)
        self.attempts = attempts


class ScenarioError(RimError, ValueError):
    """A scenario violates a structural invariant."""


class ScenarioFormatError(RimError, ValueError):
    """A scenario file was rejected: malformed JSON or schema violation."""
