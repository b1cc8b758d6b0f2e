"""Exact continuous piecewise-linear self-maps of a closed rational interval.

A :class:`PLMap` is stored as its breakpoints ``(x_i, y_i)`` in canonical
form (strictly increasing abscissae, no three consecutive nodes collinear),
so two maps are equal exactly when their node lists are equal.
Composition and fixed-point solving run on the kernel selected in
:mod:`sharkovsky.kernel`; everything else works on ``Fraction`` nodes.
"""

from __future__ import annotations

from bisect import bisect_right
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from . import kernel
from .errors import (
    ConsistencyError,
    DegenerateError,
    DomainError,
    InvalidInputError,
)
from .rational import as_rational, format_rational

DEFAULT_PIECE_CAP = 10**6

__all__ = [
    "DEFAULT_PIECE_CAP",
    "IntervalQ",
    "PLMap",
    "OrbitRecord",
    "FixedPointReport",
    "SpectrumReport",
    "evaluate",
    "compose",
    "iterate",
    "image",
    "fixed_points",
    "periodic_points",
    "orbits",
    "spectrum",
    "conjugate",
    "restrict",
    "level_set",
    "fixed_points_in",
]


@dataclass(frozen=True, order=True)
class IntervalQ:
    """Closed interval ``[lo, hi]`` with rational endpoints (``lo == hi`` allowed)."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = as_rational(self.lo), as_rational(self.hi)
        if lo > hi:
            raise InvalidInputError(f"empty interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def contains_interval(self, other: IntervalQ) -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def intersection(self, other: IntervalQ) -> IntervalQ | None:
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        return IntervalQ(lo, hi) if lo <= hi else None

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    @classmethod
    def hull(cls, values: Iterable) -> IntervalQ:
        values = [as_rational(v) for v in values]
        return cls(min(values), max(values))

    def __str__(self):
        return f"[{format_rational(self.lo)}, {format_rational(self.hi)}]"


def _canonical(xs: list, ys: list) -> tuple[list, list]:
    rx, ry = [], []
    for x, y in zip(xs, ys):
        if len(rx) >= 2 and (ry[-1] - ry[-2]) * (x - rx[-1]) == (y - ry[-1]) * (rx[-1] - rx[-2]):
            rx[-1], ry[-1] = x, y
        else:
            rx.append(x)
            ry.append(y)
    return rx, ry


class PLMap:
    """Continuous piecewise-linear map of ``[lo, hi]`` into itself.

    >>> T = PLMap([(0, 0), ("1/2", 1), (1, 0)])
    >>> T(Fraction(3, 4))
    Fraction(1, 2)
    """

    __slots__ = ("_xs", "_ys", "_kernel")

    def __init__(self, points: Iterable[Sequence], domain: IntervalQ | None = None):
        pts = [(as_rational(x), as_rational(y)) for x, y in points]
        if not pts:
            raise InvalidInputError("a map needs at least one node")
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        for a, b in zip(xs, xs[1:]):
            if not a < b:
                raise InvalidInputError(f"node abscissae must increase strictly ({a} then {b})")
        if domain is not None and (domain.lo != xs[0] or domain.hi != xs[-1]):
            raise InvalidInputError(f"nodes span [{xs[0]}, {xs[-1]}] but domain is {domain}")
        lo, hi = xs[0], xs[-1]
        for y in ys:
            if not lo <= y <= hi:
                raise InvalidInputError(f"value {y} leaves the domain [{lo}, {hi}]")
        self._xs, self._ys = (tuple(v) for v in _canonical(xs, ys))
        self._kernel = None

    @classmethod
    def _trusted(cls, xs, ys, nodes=None) -> PLMap:
        f = cls.__new__(cls)
        f._xs, f._ys = tuple(xs), tuple(ys)
        f._kernel = nodes
        return f

    @classmethod
    def _from_kernel(cls, nodes) -> PLMap:
        f = cls._trusted(nodes.xs(), nodes.ys(), nodes)
        lo, hi = f._xs[0], f._xs[-1]
        if min(f._ys) < lo or max(f._ys) > hi:
            raise InvalidInputError("composition is not a self-map of its domain")
        return f

    @classmethod
    def identity(cls, domain: IntervalQ) -> PLMap:
        if domain.lo == domain.hi:
            return cls([(domain.lo, domain.lo)])
        return cls([(domain.lo, domain.lo), (domain.hi, domain.hi)])

    @classmethod
    def constant(cls, c, domain: IntervalQ) -> PLMap:
        c = as_rational(c)
        if domain.lo == domain.hi:
            return cls([(domain.lo, c)])
        return cls([(domain.lo, c), (domain.hi, c)])

    # -- accessors ---------------------------------------------------------

    @property
    def domain(self) -> IntervalQ:
        return IntervalQ(self._xs[0], self._xs[-1])

    @property
    def xs(self) -> tuple:
        return self._xs

    @property
    def ys(self) -> tuple:
        return self._ys

    @property
    def nodes(self) -> tuple:
        return tuple(zip(self._xs, self._ys))

    @property
    def pieces(self) -> int:
        return len(self._xs) - 1

    def kernel_nodes(self):
        if self._kernel is None:
            self._kernel = kernel.Nodes.from_fractions(self._xs, self._ys)
        return self._kernel

    # -- evaluation --------------------------------------------------------

    def _segment(self, x: Fraction) -> int:
        j = bisect_right(self._xs, x) - 1
        return max(0, min(j, len(self._xs) - 2))

    def __call__(self, x) -> Fraction:
        x = as_rational(x)
        xs, ys = self._xs, self._ys
        if not xs[0] <= x <= xs[-1]:
            raise DomainError(f"{x} is outside the domain {self.domain}")
        if len(xs) == 1:
            return ys[0]
        j = self._segment(x)
        return ys[j] + (ys[j + 1] - ys[j]) * (x - xs[j]) / (xs[j + 1] - xs[j])

    def orbit(self, x, steps: int) -> list[Fraction]:
        out = [as_rational(x)]
        for _ in range(steps):
            out.append(self(out[-1]))
        return out

    def __eq__(self, other):
        if not isinstance(other, PLMap):
            return NotImplemented
        return self._xs == other._xs and self._ys == other._ys

    def __hash__(self):
        return hash((self._xs, self._ys))

    def __repr__(self):
        inner = ", ".join(f"({format_rational(x)}, {format_rational(y)})" for x, y in self.nodes)
        return f"PLMap([{inner}])"


def evaluate(f: PLMap, x) -> Fraction:
    return f(x)


def compose(f: PLMap, g: PLMap, cap: int = DEFAULT_PIECE_CAP) -> PLMap:
    """The map ``f ∘ g`` in canonical form."""
    lo, hi = f.domain.lo, f.domain.hi
    if min(g.ys) < lo or max(g.ys) > hi:
        raise DomainError(f"range of the inner map leaves {f.domain}")
    nodes = f.kernel_nodes().compose(g.kernel_nodes(), cap)
    return PLMap._from_kernel(nodes)


def iterate(f: PLMap, n: int, cap: int = DEFAULT_PIECE_CAP) -> PLMap:
    """``f`` composed with itself ``n`` times."""
    if n < 1:
        raise InvalidInputError(f"iterate count must be positive, got {n}")
    if n == 1:
        return f
    return PLMap._from_kernel(_iterate_nodes(f, n, cap))


def _iterate_nodes(f: PLMap, n: int, cap: int):
    base = f.kernel_nodes()
    acc = base
    for _ in range(n - 1):
        acc = base.compose(acc, cap)
    return acc


def image(f: PLMap, J: IntervalQ) -> IntervalQ:
    if not f.domain.contains_interval(J):
        raise DomainError(f"{J} is not inside the domain {f.domain}")
    values = [f(J.lo), f(J.hi)]
    values.extend(y for x, y in zip(f.xs, f.ys) if J.lo < x < J.hi)
    return IntervalQ(min(values), max(values))


class FixedPointReport(NamedTuple):
    """Isolated solutions of ``f(x) = x`` plus any diagonal segments."""

    points: list
    diagonals: list

    @property
    def degenerate(self) -> bool:
        return bool(self.diagonals)


def fixed_points(f: PLMap) -> FixedPointReport:
    points, diagonals = f.kernel_nodes().fixed_points()
    return FixedPointReport(points, [IntervalQ(a, b) for a, b in diagonals])


@dataclass(frozen=True)
class OrbitRecord:
    period: int
    points: tuple
    diameter: Fraction = field(init=False)

    def __post_init__(self):
        pts = tuple(sorted(as_rational(p) for p in self.points))
        if len(set(pts)) != len(pts) or len(pts) != self.period:
            raise ConsistencyError(f"an orbit of period {self.period} needs that many distinct points")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "diameter", pts[-1] - pts[0])

    @property
    def hull(self) -> IntervalQ:
        return IntervalQ(self.points[0], self.points[-1])


def _least_period(f: PLMap, x: Fraction, n: int) -> tuple[int, list]:
    # returns the least period of x (which must divide n) and its orbit
    orbit = [x]
    y = f(x)
    while y != x:
        orbit.append(y)
        if len(orbit) > n:
            raise ConsistencyError(f"{x} is not fixed by iterate {n}")
        y = f(y)
    return len(orbit), orbit


def _periodic_solutions(f: PLMap, n: int, cap: int) -> list:
    if n < 1:
        raise InvalidInputError(f"period must be positive, got {n}")
    points, diagonals = _iterate_nodes(f, n, cap).fixed_points()
    if diagonals:
        a, b = diagonals[0]
        raise DegenerateError(
            f"iterate {n} is the identity on [{format_rational(a)}, {format_rational(b)}]",
            interval=IntervalQ(a, b),
            iterate=n,
        )
    return points


def periodic_points(f: PLMap, n: int, cap: int = DEFAULT_PIECE_CAP) -> list[tuple[Fraction, int]]:
    """All solutions of ``f**n(x) = x`` labelled with their least period under ``f``."""
    points = _periodic_solutions(f, n, cap)
    labels = {}
    for x in points:
        if x in labels:
            continue
        period, orbit = _least_period(f, x, n)
        if n % period:
            raise ConsistencyError(f"least period {period} of {x} does not divide {n}")
        for p in orbit:
            labels[p] = period
    return [(x, labels[x]) for x in points]


def orbits(f: PLMap, n: int, cap: int = DEFAULT_PIECE_CAP) -> list[OrbitRecord]:
    """Orbits of least period exactly ``n``, sorted by their minimum point."""
    seen = set()
    found = []
    for x in _periodic_solutions(f, n, cap):
        if x in seen:
            continue
        period, orbit = _least_period(f, x, n)
        seen.update(orbit)
        if period == n:
            found.append(OrbitRecord(n, orbit))
    found.sort(key=lambda o: o.points[0])
    return found


@dataclass(frozen=True)
class SpectrumReport:
    """Census of least periods ``1..bound``.

    ``counts`` maps a least period to the number of isolated orbits with that
    period (zero entries omitted).  ``continua`` lists least periods carried by
    a continuum of periodic points; it is only filled when degenerate iterates
    are resolved instead of reported.  ``complete_through`` is the largest
    period fully analysed.
    """

    bound: int
    counts: dict
    degenerate_flag: bool = False
    continua: frozenset = frozenset()
    complete_through: int = 0
    degenerate_intervals: tuple = ()

    @property
    def present(self) -> frozenset:
        return frozenset(self.counts) | self.continua

    @property
    def complete(self) -> bool:
        return self.complete_through == self.bound


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n) if n % d == 0]


def _covered(target: tuple, pieces: list) -> bool:
    lo, hi = target
    reach = lo
    for a, b in sorted(pieces):
        if a > reach:
            return False
        reach = max(reach, b)
        if reach >= hi:
            return True
    return reach >= hi


def spectrum(
    f: PLMap,
    bound: int,
    cap: int = DEFAULT_PIECE_CAP,
    resolve_degenerate: bool = False,
) -> SpectrumReport:
    """Exact census of least periods up to ``bound``.

    By default the census stops at the first iterate with a diagonal segment
    and returns partial counts with ``degenerate_flag`` set.  With
    ``resolve_degenerate`` the continuum is analysed instead: its least
    period ``n`` is present iff the diagonal segment of ``f**n`` is not
    covered by diagonal segments of ``f**d`` for proper divisors ``d``.
    """
    if bound < 1:
        raise InvalidInputError(f"bound must be positive, got {bound}")
    base = f.kernel_nodes()
    acc = None
    isolated: dict[int, set] = {}
    diagonal: dict[int, list] = {}
    counts: dict[int, int] = {}
    continua = set()
    flagged = []
    for n in range(1, bound + 1):
        acc = base if acc is None else base.compose(acc, cap)
        points, diagonals = acc.fixed_points()
        if diagonals:
            flagged.extend((n, IntervalQ(a, b)) for a, b in diagonals)
            if not resolve_degenerate:
                return SpectrumReport(bound, counts, True, frozenset(continua), n - 1, tuple(flagged))
        isolated[n] = set(points)
        diagonal[n] = diagonals
        divisors = _divisors(n)
        fresh = [x for x in points if not any(x in isolated[d] for d in divisors)]
        if len(fresh) % n:
            raise ConsistencyError(f"{len(fresh)} points of least period {n} do not split into orbits")
        if fresh:
            counts[n] = len(fresh) // n
        lower = [seg for d in divisors for seg in diagonal[d]]
        if any(not _covered(seg, lower) for seg in diagonals):
            continua.add(n)
    return SpectrumReport(bound, counts, bool(flagged), frozenset(continua), bound, tuple(flagged))


def conjugate(f: PLMap, scale, shift) -> PLMap:
    """``h ∘ f ∘ h⁻¹`` for the affine map ``h(x) = scale·x + shift``, ``scale > 0``."""
    scale, shift = as_rational(scale), as_rational(shift)
    if scale <= 0:
        raise InvalidInputError("conjugacy must be increasing")
    return PLMap([(scale * x + shift, scale * y + shift) for x, y in f.nodes])


def restrict(f: PLMap, J: IntervalQ) -> tuple[list, list]:
    """Node lists of ``f`` restricted to ``J`` (not a self-map in general)."""
    if not f.domain.contains_interval(J):
        raise DomainError(f"{J} is not inside the domain {f.domain}")
    if J.lo == J.hi:
        return [J.lo], [f(J.lo)]
    inner = [(x, y) for x, y in zip(f.xs, f.ys) if J.lo < x < J.hi]
    xs = [J.lo] + [x for x, _ in inner] + [J.hi]
    ys = [f(J.lo)] + [y for _, y in inner] + [f(J.hi)]
    return xs, ys


def _zero_set(xs: list, hs: list) -> FixedPointReport:
    # zeros of the PL function through (xs, hs), via the fixed-point kernel
    nodes = kernel.Nodes.from_fractions(xs, [h + x for x, h in zip(xs, hs)])
    points, diagonals = nodes.fixed_points()
    return FixedPointReport(points, [IntervalQ(a, b) for a, b in diagonals])


def level_set(f: PLMap, value, J: IntervalQ | None = None) -> FixedPointReport:
    """Solutions of ``f(x) = value`` in ``J``: isolated points and flat segments."""
    value = as_rational(value)
    xs, ys = restrict(f, J if J is not None else f.domain)
    return _zero_set(xs, [y - value for y in ys])


def fixed_points_in(f: PLMap, J: IntervalQ) -> FixedPointReport:
    xs, ys = restrict(f, J)
    return _zero_set(xs, [y - x for x, y in zip(xs, ys)])
