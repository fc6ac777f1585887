"""Exact rational scalars: coercion and rendering helpers.

The scalar type throughout the package is `fractions.Fraction`
(arbitrary-precision integers, always lowest terms, positive denominator).
Floats are refused at every boundary so no rounding can leak in.
"""

from fractions import Fraction


def as_fraction(value) -> Fraction:
    """Coerce an int, a "p/q" string or a Fraction to Fraction.

    Floats (and anything else inexact) raise TypeError.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"exact rational expected, got {type(value).__name__}: {value!r}")


def format_rational(value) -> str:
    """Canonical lowest-terms rendering: "p/q", or "p" when q == 1."""
    return str(as_fraction(value))


def decimal_string(value, places: int) -> str:
    """Decimal approximation of a rational, rounded to `places` digits.

    Rounding is round-half-to-even on the scaled integer, computed without
    ever touching floating point.
    """
    if places < 0:
        raise ValueError("places must be >= 0")
    f = as_fraction(value)
    scale = 10 ** places
    q = round(f * scale)  # banker's rounding on an exact Fraction
    sign = "-" if q < 0 else ""
    q = abs(q)
    if places == 0:
        return f"{sign}{q}"
    whole, frac = divmod(q, scale)
    return f"{sign}{whole}.{str(frac).zfill(places)}"
