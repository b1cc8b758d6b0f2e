"""Exact rational scalars: coercion, literal parsing and formatting.

The scalar type is :class:`fractions.Fraction`.  Literals are restricted to
``"p"`` and ``"p/q"`` with integer ``p`` and positive integer ``q``; decimal
and exponent notations are rejected so that no float ever leaks in.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

from .errors import InvalidInputError

_LITERAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str) -> Fraction:
    match = _LITERAL.match(text)
    if match is None:
        raise InvalidInputError(f"not a rational literal: {text!r}")
    num, den = match.group(1), match.group(2)
    if den is not None and int(den) == 0:
        raise InvalidInputError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and rational literal strings; refuse floats."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InvalidInputError(f"not a rational: {value!r}")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise InvalidInputError(f"not an exact rational: {value!r}")
