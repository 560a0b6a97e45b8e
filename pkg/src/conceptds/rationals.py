"""Exact rational parsing, rounding, and fixed-point formatting.

Every quantity in this package is a fractions.Fraction; floats exist only at
the presentation boundary.  Rounding is half-away-from-zero, which is the
convention used by the bundled example tables.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import ParseError


def parse_rational(value: object) -> Fraction:
    """Parse "p/q" or decimal strings (and ints) into an exact Fraction.

    JSON floats are accepted through their shortest decimal repr, so a value
    written as 0.2 in a document means exactly 1/5.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParseError(f"expected a rational number, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        value = repr(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational number: {value!r}") from exc
    raise ParseError(f"expected a rational number, got {value!r}")


def round_half_away(x: Fraction, digits: int = 2) -> Fraction:
    """Round to `digits` decimal places, ties going away from zero."""
    scale = Fraction(10) ** digits
    n = math.floor(abs(x) * scale + Fraction(1, 2))
    return Fraction(-n if x < 0 else n) / scale


def format_fixed(x: Fraction, digits: int = 2) -> str:
    """Render x rounded half-away-from-zero with exactly `digits` decimals."""
    n = round_half_away(x, digits) * Fraction(10) ** digits
    units = abs(int(n))
    sign = "-" if n < 0 else ""
    if digits == 0:
        return f"{sign}{units}"
    return f"{sign}{units // 10 ** digits}.{units % 10 ** digits:0{digits}d}"


def format_exact(x: Fraction) -> str:
    """Render x as p/q (or a bare integer when q is 1)."""
    return str(x)
