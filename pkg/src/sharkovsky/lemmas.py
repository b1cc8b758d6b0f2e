"""Constructive covering lemmas for interval maps.

* :func:`covered_fixed_point` -- ``f(J) ⊇ J`` gives a fixed point in ``J``.
* :func:`pullback` -- ``f(J) ⊇ L`` gives ``K ⊆ J`` with ``f(K) = L``.
* :func:`follow_cycle` -- a cycle of coverings gives a periodic point
  travelling through it.
* :func:`turbulence_from_overshoot` -- ``f(c) < c < z <= f^k(c)`` gives a
  turbulent pair of intervals.

All constructions are exact and deterministic.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from . import kernel
from .errors import ConsistencyError, CoverError, HypothesisError, InvalidInputError
from .plmap import IntervalQ, PLMap, fixed_points_in, image, level_set, restrict
from .rational import as_rational, format_rational

__all__ = [
    "CoverCycle",
    "TurbulencePair",
    "covered_fixed_point",
    "pullback",
    "follow_cycle",
    "turbulence_from_overshoot",
]


def _fmt(x) -> str:
    return format_rational(x)


def _smallest(report) -> Fraction | None:
    candidates = list(report.points) + [seg.lo for seg in report.diagonals]
    return min(candidates) if candidates else None


def _largest(report) -> Fraction | None:
    candidates = list(report.points) + [seg.hi for seg in report.diagonals]
    return max(candidates) if candidates else None


def covered_fixed_point(f: PLMap, J: IntervalQ) -> Fraction:
    """Smallest fixed point of ``f`` in ``J``, given ``f(J) ⊇ J``."""
    if not image(f, J).contains_interval(J):
        raise CoverError(f"f{J} = {image(f, J)} does not cover {J}")
    x = _smallest(fixed_points_in(f, J))
    if x is None:
        raise ConsistencyError(f"no fixed point found in covered interval {J}")
    return x


def pullback(f: PLMap, J: IntervalQ, L: IntervalQ) -> IntervalQ:
    """A closed ``K ⊆ J`` with ``f(K) = L``.

    ``p`` and ``q`` are the leftmost points of ``J`` mapped to ``min L`` and
    ``max L``.  If ``p < q``, ``c`` is the last point of ``[p, q]`` mapped to
    ``min L`` and ``d`` the first point of ``[c, q]`` mapped to ``max L``;
    if ``p > q`` the roles of the endpoints swap.
    """
    if not image(f, J).contains_interval(L):
        raise CoverError(f"f{J} = {image(f, J)} does not cover {L}")
    a, b = L.lo, L.hi
    p = _smallest(level_set(f, a, J))
    q = _smallest(level_set(f, b, J))
    if p == q:
        return IntervalQ(p, p)
    if p < q:
        c = _largest(level_set(f, a, IntervalQ(p, q)))
        d = _smallest(level_set(f, b, IntervalQ(c, q)))
    else:
        c = _largest(level_set(f, b, IntervalQ(q, p)))
        d = _smallest(level_set(f, a, IntervalQ(c, p)))
    return IntervalQ(c, d)


@dataclass(frozen=True)
class CoverCycle:
    """Intervals ``J_0 ... J_{n-1}`` with ``f(J_i) ⊇ J_{i+1 mod n}``."""

    intervals: tuple

    @classmethod
    def certify(cls, f: PLMap, intervals: Sequence[IntervalQ]) -> CoverCycle:
        intervals = tuple(intervals)
        if not intervals:
            raise InvalidInputError("a cycle needs at least one interval")
        n = len(intervals)
        for i, J in enumerate(intervals):
            nxt = intervals[(i + 1) % n]
            if not image(f, J).contains_interval(nxt):
                raise CoverError(f"link {i}: f{J} = {image(f, J)} does not cover {nxt}")
        return cls(intervals)

    def __len__(self):
        return len(self.intervals)


def follow_cycle(f: PLMap, cycle: CoverCycle | Sequence[IntervalQ]) -> tuple[Fraction, list]:
    """A point ``y`` with ``f^i(y) ∈ J_i`` for every ``i`` and ``f^n(y) = y``.

    Pulls ``J_0`` back around the cycle to nested intervals ``Q_i ⊆ J_i``
    with ``f(Q_i) = Q_{i+1}``, then takes the smallest fixed point of
    ``f^n`` on ``Q_0``.  Returns ``y`` and the chain ``[Q_0, ..., Q_{n-1}]``.
    """
    if not isinstance(cycle, CoverCycle):
        cycle = CoverCycle.certify(f, cycle)
    js = cycle.intervals
    n = len(js)
    chain = [None] * n
    target = js[0]
    for i in range(n - 1, -1, -1):
        chain[i] = pullback(f, js[i], target)
        target = chain[i]
    # f^n on Q_0 as a composition of restrictions; each maps onto the next Q
    acc = kernel.Nodes.from_fractions(*restrict(f, chain[0]))
    for i in range(1, n):
        acc = kernel.Nodes.from_fractions(*restrict(f, chain[i])).compose(acc, 10**9)
    points, diagonals = acc.fixed_points()
    candidates = list(points) + [a for a, _ in diagonals]
    if not candidates:
        raise ConsistencyError("pulled-back interval carries no fixed point")
    return min(candidates), chain


@dataclass(frozen=True)
class TurbulencePair:
    """``I0``, ``I1`` with ``f(I0) ∩ f(I1) ⊇ I0 ∪ I1``.

    ``base_point`` and ``fixed_point`` are the ``c`` and ``z`` of the final
    two-step overshoot ``f(c) < c < z <= f^2(c)`` the pair was built from.
    """

    I0: IntervalQ
    I1: IntervalQ
    strict_flag: bool
    base_point: Fraction
    fixed_point: Fraction

    def check(self, f: PLMap) -> bool:
        meet = image(f, self.I0).intersection(image(f, self.I1))
        union = IntervalQ(min(self.I0.lo, self.I1.lo), max(self.I0.hi, self.I1.hi))
        common = self.I0.intersection(self.I1)
        if common is not None and (common.lo != common.hi or self.strict_flag):
            return False
        return meet is not None and meet.contains_interval(union)


def _iter(f: PLMap, x: Fraction, k: int) -> Fraction:
    for _ in range(k):
        x = f(x)
    return x


def _first_inside(report, lo: Fraction, hi: Fraction) -> Fraction | None:
    # smallest solution strictly between lo and hi
    candidates = [x for x in report.points if lo < x < hi]
    for seg in report.diagonals:
        if seg.hi > lo and seg.lo < hi:
            candidates.append(max(seg.lo, lo) if seg.lo > lo else (lo + min(seg.hi, hi)) / 2)
    return min(candidates) if candidates else None


def _descend(f: PLMap, c: Fraction, z: Fraction, k: int) -> tuple[Fraction, Fraction]:
    """Reduce ``f(c) < c < z <= f^k(c)`` to the case ``k = 2``; returns ``(c, z)``."""
    while True:
        f1 = f(c)
        f2 = f(f1)
        if z <= f2:
            return c, z
        if k <= 2:
            raise ConsistencyError("overshoot lost during descent")
        f3 = f(f2)
        if c < f2 < z and f2 < f3:
            # f(x) - x changes sign on [c, f2]
            z = _first_inside(fixed_points_in(f, IntervalQ(c, f2)), c, f2)
            return c, z
        if f2 < f1:
            c = f1
        elif f1 < f2 < c:
            c = _first_inside(level_set(f, f2, IntervalQ(c, z)), c, z)
        elif c < f2 < z and f3 < f2:
            c = _first_inside(level_set(f, f2, IntervalQ(f2, z)), f2, z)
        else:
            raise ConsistencyError(f"no descent case applies at c = {_fmt(c)}")
        if c is None:
            raise ConsistencyError("intermediate value search failed")
        k -= 1


def _refine(f: PLMap, c: Fraction, z: Fraction) -> Fraction:
    """A point ``r`` with ``f(c) < f(r) < c < r < z < f^2(r)``."""
    fc = f(c)
    s = _smallest(level_set(f, c, IntervalQ(c, z)))
    t = _largest(level_set(f, fc, IntervalQ(c, s)))
    step = s - t
    for _ in range(4096):
        step /= 2
        r = t + step
        fr = f(r)
        if fc < fr < c < r < z < f(fr):
            return r
    raise ConsistencyError("could not separate the turbulent pair")


def turbulence_from_overshoot(f: PLMap, c, z, k: int, strict: bool | None = None) -> TurbulencePair:
    """Turbulent pair from ``f(c) < c < z <= f^k(c)`` with ``z`` fixed and ``k >= 2``.

    ``strict=None`` builds a disjoint (strict) pair exactly when the last
    inequality is strict; ``strict=False`` always returns the plain pair
    ``[f(c), c]``, ``[c, z]`` of the reduced overshoot.
    """
    c, z = as_rational(c), as_rational(z)
    if isinstance(k, bool) or not isinstance(k, int) or k < 2:
        raise HypothesisError(f"k must be an integer >= 2, got {k!r}", "k >= 2")
    if z not in f.domain or c not in f.domain:
        raise HypothesisError("c and z must lie in the domain", "domain")
    if f(z) != z:
        raise HypothesisError(f"z = {_fmt(z)} is not a fixed point (f(z) = {_fmt(f(z))})", "f(z) = z")
    if not f(c) < c:
        raise HypothesisError(f"f(c) = {_fmt(f(c))} is not below c = {_fmt(c)}", "f(c) < c")
    if not c < z:
        raise HypothesisError(f"c = {_fmt(c)} is not below z = {_fmt(z)}", "c < z")
    fk = _iter(f, c, k)
    if not z <= fk:
        raise HypothesisError(f"f^{k}(c) = {_fmt(fk)} is below z = {_fmt(z)}", "z <= f^k(c)")
    strict_hypothesis = z < fk
    if strict is None:
        strict = strict_hypothesis
    elif strict and not strict_hypothesis:
        raise HypothesisError("strict pair requested but z = f^k(c)", "z < f^k(c)")
    d, w = _descend(f, c, z, k)
    if strict:
        r = _refine(f, d, w)
        pair = TurbulencePair(IntervalQ(f(r), d), IntervalQ(r, w), True, d, w)
    else:
        pair = TurbulencePair(IntervalQ(f(d), d), IntervalQ(d, w), False, d, w)
    if not pair.check(f):
        raise ConsistencyError("constructed pair is not turbulent")
    return pair
