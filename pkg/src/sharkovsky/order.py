"""The Sharkovsky ordering of the positive integers.

    3 ≺ 5 ≺ 7 ≺ ... ≺ 2·3 ≺ 2·5 ≺ ... ≺ 4·3 ≺ ... ≺ 8 ≺ 4 ≺ 2 ≺ 1

``m ≺ n`` means that a map with a point of least period ``m`` must also
have a point of least period ``n``.
"""

from __future__ import annotations

import enum
from math import gcd
from typing import NamedTuple

from .errors import InvalidInputError

__all__ = [
    "Relation",
    "SharkovskyKey",
    "decompose",
    "compare",
    "precedes",
    "sort_key",
    "enumerate_order",
    "tail",
    "least_period_under_power",
    "lift_periods",
]


class Relation(enum.Enum):
    PRECEDES = "≺"
    EQUAL = "="
    SUCCEEDS = "≻"


class SharkovskyKey(NamedTuple):
    """``n = 2**exponent * odd_part`` with ``odd_part`` odd."""

    exponent: int
    odd_part: int

    @property
    def pure_power(self) -> bool:
        return self.odd_part == 1

    @property
    def value(self) -> int:
        return self.odd_part << self.exponent


def _check_positive(*values: int) -> None:
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int) or v < 1:
            raise InvalidInputError(f"expected a positive integer, got {v!r}")


def decompose(n: int) -> SharkovskyKey:
    """Split ``n`` into its power of two and odd part.

    >>> decompose(12)
    SharkovskyKey(exponent=2, odd_part=3)
    """
    _check_positive(n)
    a = (n & -n).bit_length() - 1
    return SharkovskyKey(a, n >> a)


def sort_key(n: int) -> tuple[int, int, int]:
    """A tuple key whose natural order is the Sharkovsky order."""
    a, q = decompose(n)
    if q > 1:
        return (0, a, q)
    return (1, -a, 0)


def compare(m: int, n: int) -> Relation:
    km, kn = sort_key(m), sort_key(n)
    if km < kn:
        return Relation.PRECEDES
    if km == kn:
        return Relation.EQUAL
    return Relation.SUCCEEDS


def precedes(m: int, n: int) -> bool:
    """True iff ``m ≺ n`` (strictly)."""
    return sort_key(m) < sort_key(n)


def enumerate_order(bound: int) -> list[int]:
    """The integers ``1..bound`` listed in Sharkovsky order."""
    _check_positive(bound)
    return sorted(range(1, bound + 1), key=sort_key)


def tail(m: int, bound: int) -> set[int]:
    """Periods ``n <= bound`` forced by a period-``m`` point (``m`` included)."""
    _check_positive(m, bound)
    km = sort_key(m)
    return {n for n in range(1, bound + 1) if km <= sort_key(n)}


def least_period_under_power(m: int, n: int) -> int:
    """Least period under ``f**n`` of a point with least period ``m`` under ``f``."""
    _check_positive(m, n)
    return m // gcd(m, n)


def lift_periods(k: int, n: int) -> set[int]:
    """Possible least periods under ``f`` of a point with least period ``k`` under ``f**n``.

    These are ``k*n/s`` for divisors ``s`` of ``n`` coprime to ``k``.
    """
    _check_positive(k, n)
    return {k * n // s for s in range(1, n + 1) if n % s == 0 and gcd(s, k) == 1}
