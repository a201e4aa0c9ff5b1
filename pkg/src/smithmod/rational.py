"""Exact rational scalars.

``fractions.Fraction`` already keeps numerator and denominator in lowest
terms with a positive denominator, so it is used directly as the scalar
type.  This module only adds coercion and the ``"num/den"`` wire format.
"""

from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import InvalidInput

Rational = Fraction


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"a/b"`` strings; floats are rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InvalidInput(f"not a rational: {value!r}")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise InvalidInput(f"not an exact rational: {value!r}")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    try:
        if "." in text or "e" in text.lower():
            raise ValueError
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InvalidInput(f"cannot parse rational {text!r}") from None


def format_rational(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def is_integer(value: Fraction) -> bool:
    return value.denominator == 1
