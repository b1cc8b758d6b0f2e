import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sharkovsky import (
    CoverCycle,
    CoverError,
    HypothesisError,
    IntervalQ,
    PLMap,
    covered_fixed_point,
    follow_cycle,
    image,
    pullback,
    spectrum,
    turbulence_from_overshoot,
)

import generators


def Q(lo, hi):
    return IntervalQ(F(lo), F(hi))


UNIT = Q(0, 1)
IDENTITY = PLMap.identity(UNIT)


def least_period(f, y, limit):
    x = f(y)
    for step in range(1, limit + 1):
        if x == y:
            return step
        x = f(x)
    return None


# -- covered fixed points ----------------------------------------------------


@pytest.mark.parametrize("J, expected", [(("1/2", 1), "2/3"), ((0, 1), 0)])
def test_covered_fixed_point_on_tent(T, J, expected):
    assert covered_fixed_point(T, Q(*J)) == F(expected)


def test_covered_fixed_point_prefers_smallest_on_continuum():
    assert covered_fixed_point(IDENTITY, Q("1/4", "1/2")) == F(1, 4)


def test_covered_fixed_point_needs_cover(T):
    with pytest.raises(CoverError):
        covered_fixed_point(T, Q("3/4", 1))


# -- pullback ----------------------------------------------------------------


@pytest.mark.parametrize(
    "J, L, K",
    [((0, "1/2"), ("1/2", 1), ("1/4", "1/2")), (("1/2", 1), (0, 1), ("1/2", 1))],
)
def test_pullback_examples(T, J, L, K):
    assert pullback(T, Q(*J), Q(*L)) == Q(*K)


def test_pullback_of_full_image_on_monotone_piece(T):
    J = Q("1/8", "3/8")
    assert pullback(T, J, image(T, J)) == J


def test_pullback_needs_cover(T):
    with pytest.raises(CoverError):
        pullback(T, Q(0, "1/4"), Q("1/4", 1))


@settings(max_examples=200)
@given(st.integers(0, 2**32))
def test_pullback_is_exact(seed):
    (f, J, L), = generators.pullback_instances(random.Random(seed), 1)
    K = pullback(f, J, L)
    assert J.contains_interval(K)
    assert image(f, K) == L


def test_pullback_is_deterministic():
    cases = generators.pullback_instances(random.Random(3), 30)
    assert [pullback(*c) for c in cases] == [pullback(*c) for c in cases]


# -- cycles --------------------------------------------------------------------


def test_follow_cycle_examples(T):
    y, chain = follow_cycle(T, [Q(0, "1/2"), Q("1/2", 1)])
    assert y == F(2, 5) and T(y) == F(4, 5) and T(T(y)) == y
    assert chain == [Q("3/8", "1/2"), Q("3/4", 1)]
    assert follow_cycle(T, [UNIT])[0] == 0
    assert follow_cycle(T, [Q("1/2", 1), Q(0, "1/2")])[0] == F(4, 5)


def test_cover_cycle_certification(T):
    cycle = CoverCycle.certify(T, [Q(0, "1/2"), Q("1/2", 1)])
    assert len(cycle) == 2
    with pytest.raises(CoverError):
        CoverCycle.certify(T, [Q(0, "1/4"), Q("1/2", 1)])


@settings(max_examples=100)
@given(st.integers(0, 2**32))
def test_follow_cycle_soundness(seed):
    (f, js), = generators.cycle_instances(random.Random(seed), 1)
    y, chain = follow_cycle(f, js)
    x = y
    for J, K in zip(js, chain):
        assert J.contains_interval(K)
        assert x in K
        x = f(x)
    assert x == y
    # each Q maps onto the next; the last one onto J_0 itself
    for K, nxt in zip(chain, chain[1:] + [js[0]]):
        assert image(f, K) == nxt


# -- turbulence ----------------------------------------------------------------


def test_plain_pair_on_w(w):
    pair = turbulence_from_overshoot(w, F(1, 5), F(11, 30), 2, strict=False)
    assert (pair.I0, pair.I1) == (Q("1/10", "1/5"), Q("1/5", "11/30"))
    assert not pair.strict_flag and pair.check(w)
    meet = image(w, pair.I0).intersection(image(w, pair.I1))
    assert meet.contains_interval(Q("1/10", "11/30"))


def test_strict_pair_on_w(w):
    pair = turbulence_from_overshoot(w, "1/5", "11/30", 2)
    assert pair.strict_flag and pair.check(w)
    assert (pair.I0, pair.I1) == (Q("3/20", "1/5"), Q("37/160", "11/30"))
    assert pair.I0.intersection(pair.I1) is None


def test_w_has_all_periods(w):
    assert spectrum(w, 8).present == frozenset(range(1, 9))


@pytest.mark.parametrize("c, z", [("9/10", "2/3"), ("1/3", "2/3"), ("1/2", 0), ("3/4", "2/3")])
def test_tent_admits_no_overshoot(T, c, z):
    with pytest.raises(HypothesisError):
        turbulence_from_overshoot(T, c, z, 2)


@pytest.mark.parametrize(
    "c, z, k, violated",
    [
        ("1/5", "1/3", 2, "f(z) = z"),
        ("1/20", "11/30", 2, "f(c) < c"),
        ("1/5", "11/30", 1, "k >= 2"),
    ],
)
def test_hypothesis_errors_name_the_inequality(w, c, z, k, violated):
    with pytest.raises(HypothesisError) as info:
        turbulence_from_overshoot(w, c, z, k)
    assert info.value.violated == violated


def test_strict_request_needs_strict_overshoot():
    # f(c) = 0 and f(0) = 1 = z exactly
    f = PLMap([(0, 1), ("1/2", 0), (1, 1)])
    with pytest.raises(HypothesisError):
        turbulence_from_overshoot(f, "1/2", 1, 2, strict=True)
    pair = turbulence_from_overshoot(f, "1/2", 1, 2)
    assert not pair.strict_flag and pair.check(f)


@settings(max_examples=60)
@given(st.integers(0, 2**32))
def test_turbulent_pairs_from_random_overshoots(seed):
    found = generators.overshoot_instances(random.Random(seed), 1, attempts=400)
    if not found:
        return
    f, c, z, k = found[0]
    pair = turbulence_from_overshoot(f, c, z, k)
    assert pair.check(f)
    common = pair.I0.intersection(pair.I1)
    assert common is None or common.lo == common.hi
    if pair.strict_flag:
        assert common is None
        # a strict pair carries a point of every least period along I0 I1 ... I1
        for n in range(1, 9):
            y, _ = follow_cycle(f, [pair.I0] + [pair.I1] * (n - 1))
            assert least_period(f, y, n) == n
    assert turbulence_from_overshoot(f, c, z, k) == pair
