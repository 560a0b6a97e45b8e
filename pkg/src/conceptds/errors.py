"""Exception types and the desk-scale capacity guard."""

from __future__ import annotations

import os

ENV_UNSAFE_SCALE = "CONCEPTDS_UNSAFE_SCALE"


class ConceptDSError(Exception):
    """Base class for every error raised by this package."""


class ParseError(ConceptDSError, ValueError):
    """Malformed input text.  Carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapacityError(ConceptDSError, ValueError):
    """Input exceeds a documented desk-scale bound."""


class MassError(ConceptDSError, ValueError):
    """A mass or belief table violates its defining constraints."""


class LabelError(ConceptDSError, ValueError):
    """A concept label cannot be resolved, or resolves ambiguously."""


class PreconditionError(ConceptDSError, ValueError):
    """A structural precondition of an operation does not hold."""


class TotalConflictError(ConceptDSError, ArithmeticError):
    """Combination is undefined: every pair of focal elements conflicts."""

    def __init__(self, message: str = "total conflict: combination undefined",
                 step: int | None = None):
        self.step = step
        super().__init__(message)


def check_capacity(what: str, actual: int, bound: int) -> None:
    """Raise CapacityError when a documented desk-scale bound is exceeded.

    Setting the environment variable CONCEPTDS_UNSAFE_SCALE to a nonempty
    value disables every bound, at your own risk.
    """
    if os.environ.get(ENV_UNSAFE_SCALE):
        return
    if actual > bound:
        raise CapacityError(
            f"{what}: {actual} exceeds the supported bound of {bound} "
            f"(set {ENV_UNSAFE_SCALE}=1 to override at your own risk)")
