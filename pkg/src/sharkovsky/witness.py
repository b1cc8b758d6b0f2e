"""Witness maps built from the tent map by clamping.

``tent_truncation(n)`` clamps the tent map to the hull of its
smallest-diameter period-``n`` orbit; the result keeps that orbit and loses
every period that precedes ``n`` in the Sharkovsky order.
``t_infinity_approx(depth)`` clamps to nested hulls of orbits of periods
3, 6, 12, ... and approximates a map whose periods are exactly the powers
of two.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInputError, NotFoundError, ResourceError
from .plmap import DEFAULT_PIECE_CAP, IntervalQ, OrbitRecord, PLMap, orbits
from .rational import as_rational

__all__ = [
    "TruncationRecord",
    "ApproximantRecord",
    "tent",
    "clamp_surgery",
    "minimal_diameter_orbit",
    "tent_truncation",
    "tent_truncation_record",
    "t_infinity_approx",
    "TRUNCATION_LIMIT",
    "DEPTH_LIMIT",
]

TRUNCATION_LIMIT = 14
DEPTH_LIMIT = 2

_TENT = PLMap([(0, 0), (Fraction(1, 2), 1), (1, 0)])


def tent() -> PLMap:
    """``T(x) = 1 - |2x - 1|`` on ``[0, 1]``."""
    return _TENT


@dataclass(frozen=True)
class TruncationRecord:
    base: PLMap
    lo: Fraction
    hi: Fraction
    result: PLMap
    orbit: OrbitRecord | None = None


def _clamp(f: PLMap, lo: Fraction, hi: Fraction) -> PLMap:
    xs, ys = f.xs, f.ys
    out = [(xs[0], min(max(ys[0], lo), hi))]
    for i in range(len(xs) - 1):
        xa, xb, ya, yb = xs[i], xs[i + 1], ys[i], ys[i + 1]
        levels = [v for v in (lo, hi) if min(ya, yb) < v < max(ya, yb)]
        if ya > yb:
            levels.reverse()
        for v in levels:
            out.append((xa + (v - ya) * (xb - xa) / (yb - ya), v))
        out.append((xb, min(max(yb, lo), hi)))
    return PLMap(out)


def clamp_surgery(f: PLMap, lo, hi) -> PLMap:
    """``max(lo, min(hi, f))`` with breakpoints inserted at the crossings."""
    lo, hi = as_rational(lo), as_rational(hi)
    if not lo < hi:
        raise InvalidInputError(f"clamp bounds must satisfy lo < hi, got {lo}, {hi}")
    if lo < f.domain.lo or hi > f.domain.hi:
        raise InvalidInputError(f"clamp bounds [{lo}, {hi}] leave the domain {f.domain}")
    return _clamp(f, lo, hi)


def minimal_diameter_orbit(
    f: PLMap, n: int, within: IntervalQ | None = None, cap: int = DEFAULT_PIECE_CAP
) -> OrbitRecord:
    """Smallest-diameter orbit of least period ``n`` inside ``within``.

    Ties go to the orbit with the smaller minimum point.
    """
    within = within if within is not None else f.domain
    candidates = [o for o in orbits(f, n, cap) if within.contains_interval(o.hull)]
    if not candidates:
        raise NotFoundError(f"no orbit of least period {n} inside {within}")
    return min(candidates, key=lambda o: (o.diameter, o.points[0]))


def _check_tent_budget(n: int, override: bool, cap: int) -> None:
    if n > TRUNCATION_LIMIT and not override:
        raise ResourceError(f"period {n} exceeds the default limit {TRUNCATION_LIMIT}; pass an override", n)
    # the n-th tent iterate has exactly 2**n + 1 nodes
    if 2**n + 1 > cap:
        raise ResourceError(f"tent iterate {n} needs {2**n + 1} nodes, cap is {cap}", 2**n + 1)


def tent_truncation_record(n: int, override: bool = False, cap: int = DEFAULT_PIECE_CAP) -> TruncationRecord:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidInputError(f"period must be a positive integer, got {n!r}")
    _check_tent_budget(n, override, cap)
    T = tent()
    orbit = minimal_diameter_orbit(T, n, cap=cap)
    lo, hi = orbit.points[0], orbit.points[-1]
    # n = 1 collapses the clamp window to a point: the constant map
    result = _clamp(T, lo, hi) if lo < hi else PLMap.constant(lo, T.domain)
    return TruncationRecord(T, lo, hi, result, orbit)


def tent_truncation(n: int, override: bool = False, cap: int = DEFAULT_PIECE_CAP) -> PLMap:
    return tent_truncation_record(n, override, cap).result


@dataclass(frozen=True)
class ApproximantRecord:
    """Finite-depth approximant of the power-of-two witness.

    ``bounds[i]`` is the hull of the chosen orbit of period ``3 * 2**i``;
    ``map`` is the tent map clamped to ``bounds[depth]``.
    """

    depth: int
    map: PLMap
    bounds: tuple
    orbits: tuple

    def __iter__(self):
        return iter((self.map, self.bounds))


def t_infinity_approx(depth: int, override: bool = False, cap: int = DEFAULT_PIECE_CAP) -> ApproximantRecord:
    if isinstance(depth, bool) or not isinstance(depth, int) or depth < 0:
        raise InvalidInputError(f"depth must be a non-negative integer, got {depth!r}")
    if depth > DEPTH_LIMIT and not override:
        raise ResourceError(f"depth {depth} exceeds the default limit {DEPTH_LIMIT}; pass an override", depth)
    _check_tent_budget(3 * 2**depth, True, cap)
    T = tent()
    chosen = [minimal_diameter_orbit(T, 3, cap=cap)]
    for i in range(1, depth + 1):
        chosen.append(minimal_diameter_orbit(T, 3 * 2**i, chosen[-1].hull, cap=cap))
    bounds = tuple(o.hull for o in chosen)
    return ApproximantRecord(depth, clamp_surgery(T, bounds[-1].lo, bounds[-1].hi), bounds, tuple(chosen))
