from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from sharkovsky import PLMap, tent  # noqa: E402
from sharkovsky.patterns import CyclicPattern  # noqa: E402

settings.register_profile(
    "repo",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("repo")


def rationals(lo=0, hi=1, max_den=64):
    """Rationals in ``[lo, hi]`` with small denominators."""
    lo, hi = Fraction(lo), Fraction(hi)

    @st.composite
    def make(draw):
        den = draw(st.integers(1, max_den))
        a = -(-lo * den // 1)  # ceil
        b = hi * den // 1
        num = draw(st.integers(int(a), int(b)))
        return Fraction(num, den)

    return make()


@st.composite
def pl_maps(draw, max_nodes=8, max_den=32):
    """Self-maps of ``[0, 1]`` with up to ``max_nodes`` nodes."""
    inner = draw(st.sets(rationals(0, 1, max_den).filter(lambda x: 0 < x < 1), max_size=max_nodes - 2))
    xs = [Fraction(0)] + sorted(inner) + [Fraction(1)]
    ys = [draw(rationals(0, 1, max_den)) for _ in xs]
    return PLMap(list(zip(xs, ys)))


@st.composite
def cyclic_patterns(draw, min_size=2, max_size=8):
    m = draw(st.integers(min_size, max_size))
    rest = draw(st.permutations(range(2, m + 1)))
    cycle = [1] + list(rest)
    image = [0] * m
    for a, b in zip(cycle, cycle[1:] + [1]):
        image[a - 1] = b
    return CyclicPattern(image)


@pytest.fixture
def T():
    return tent()


@pytest.fixture
def w():
    """Map with an overshoot ``f(c) < c < z < f^2(c)`` at ``c = 1/5``."""
    return PLMap([(0, "1/2"), ("1/10", "7/10"), ("1/5", "1/10"), ("7/10", "9/10"), (1, "9/10")])


def pytest_terminal_summary(terminalreporter):
    verdicts = getattr(sys.modules.get("test_acceptance"), "VERDICTS", None)
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(verdicts):
        terminalreporter.write_line(verdicts[number])
