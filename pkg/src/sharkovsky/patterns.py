"""Cyclic orbit patterns, their Markov graphs and canonical realizations.

A pattern of size ``m`` records how a map permutes the points
``x_1 < ... < x_m`` of a periodic orbit: ``image[i-1] = j`` means
``f(x_i) = x_j``.  Patterns are written as their image list, e.g. ``"5 4 2 1 3"``.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .errors import ConsistencyError, InvalidInputError
from .plmap import DEFAULT_PIECE_CAP, IntervalQ, OrbitRecord, PLMap, SpectrumReport, spectrum

__all__ = [
    "CyclicPattern",
    "MarkovGraph",
    "parse_pattern",
    "orbit_to_pattern",
    "markov_graph",
    "connect_the_dots",
    "forced_spectrum",
    "transfer_spectrum",
    "is_stefan",
    "stefan_pattern",
    "gap_interval",
    "all_cyclic_patterns",
    "random_cyclic_pattern",
]


@dataclass(frozen=True)
class CyclicPattern:
    image: tuple

    def __post_init__(self):
        image = tuple(self.image)
        m = len(image)
        if m < 2:
            raise InvalidInputError("a cyclic pattern needs at least two points")
        if sorted(image) != list(range(1, m + 1)):
            raise InvalidInputError(f"{image} is not a permutation of 1..{m}")
        i, steps = 1, 0
        while True:
            i = image[i - 1]
            steps += 1
            if i == 1:
                break
        if steps != m:
            raise InvalidInputError(f"{image} is not a single {m}-cycle")
        object.__setattr__(self, "image", image)

    @property
    def size(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def __str__(self):
        return " ".join(map(str, self.image))


def parse_pattern(text: str) -> CyclicPattern:
    try:
        image = [int(tok) for tok in text.split()]
    except ValueError:
        raise InvalidInputError(f"pattern must be whitespace-separated integers: {text!r}") from None
    return CyclicPattern(image)


def orbit_to_pattern(orbit: OrbitRecord, f: PLMap) -> CyclicPattern:
    points = list(orbit.points)
    if len(points) < 2:
        raise ConsistencyError("patterns are defined for orbits of at least two points")
    rank = {x: i + 1 for i, x in enumerate(points)}
    image = []
    for x in points:
        y = f(x)
        if y not in rank:
            raise ConsistencyError(f"f({x}) = {y} leaves the orbit")
        image.append(rank[y])
    try:
        return CyclicPattern(image)
    except InvalidInputError as exc:
        raise ConsistencyError(str(exc)) from None


@dataclass(frozen=True)
class MarkovGraph:
    """Covering graph on the gaps ``I_i = [x_i, x_{i+1}]``, ``i = 1..m-1``."""

    node_count: int
    edges: frozenset

    def successors(self, i: int) -> list[int]:
        return sorted(j for a, j in self.edges if a == i)

    def closed_walks(self, length: int) -> Iterator[tuple]:
        """Closed walks ``(i_0, ..., i_{n-1})`` with ``i_k -> i_{k+1}`` and ``i_{n-1} -> i_0``."""
        succ = {i: self.successors(i) for i in range(1, self.node_count + 1)}

        def extend(path):
            if len(path) == length:
                if path[0] in succ[path[-1]]:
                    yield tuple(path)
                return
            for j in succ[path[-1]]:
                yield from extend(path + [j])

        for start in range(1, self.node_count + 1):
            yield from extend([start])


def markov_graph(p: CyclicPattern) -> MarkovGraph:
    m = p.size
    edges = set()
    for i in range(1, m):
        lo, hi = sorted((p(i), p(i + 1)))
        for j in range(lo, hi):
            edges.add((i, j))
    return MarkovGraph(m - 1, frozenset(edges))


def _node(i: int, m: int) -> Fraction:
    return Fraction(i, m + 1)


def gap_interval(p: CyclicPattern, i: int) -> IntervalQ:
    """Gap ``I_i`` in the coordinates of :func:`connect_the_dots`."""
    return IntervalQ(_node(i, p.size), _node(i + 1, p.size))


def connect_the_dots(p: CyclicPattern) -> PLMap:
    """Piecewise-linear map through ``(i/(m+1), σ(i)/(m+1))``."""
    m = p.size
    return PLMap([(_node(i, m), _node(p(i), m)) for i in range(1, m + 1)])


def _matmul(a: list, b: list) -> list:
    k = len(a)
    return [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(k)] for i in range(k)]


def _mobius(n: int) -> int:
    result, d = 1, 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    return -result if n > 1 else result


def _unit_cycles(p: CyclicPattern) -> list[tuple[tuple, int]]:
    """Cycles of gaps mapped onto single gaps, with the sign of the return map.

    A gap whose slope is ``±1`` covers exactly one gap, so these gaps form a
    functional graph; along each of its cycles some iterate is ``±identity``.
    """
    m = p.size
    unit = {}
    for i in range(1, m):
        if abs(p(i + 1) - p(i)) == 1:
            unit[i] = (min(p(i), p(i + 1)), p(i + 1) - p(i))
    cycles, seen = [], set()
    for start in unit:
        path, i = [], start
        while i in unit and i not in seen and i not in path:
            path.append(i)
            i = unit[i][0]
        seen.update(path)
        if i in path:
            loop = tuple(path[path.index(i):])
            sign = 1
            for g in loop:
                sign *= unit[g][1]
            cycles.append((loop, sign))
    return cycles


def _identity_period(length: int, sign: int) -> int:
    return length if sign == 1 else 2 * length


def _orbit_point_walks(p: CyclicPattern, succ: list, n: int) -> int:
    # closed walks whose cylinder contains an orbit point x_j as its start, summed over j
    m = p.size
    total = 0
    for j in range(1, m + 1):
        states = {g: 1 for g in (j - 1, j) if 1 <= g < m}
        first = dict.fromkeys(states, 0)
        # count per starting gap so the closing edge can be checked
        for g0 in list(states):
            ways = {g0: 1}
            pos = j
            for _ in range(n - 1):
                pos = p(pos)
                nxt = {}
                for g, w in ways.items():
                    for h in (pos - 1, pos):
                        if 1 <= h < m and succ[g][h]:
                            nxt[h] = nxt.get(h, 0) + w
                ways = nxt
            first[g0] = sum(w for g, w in ways.items() if succ[g][g0])
        total += sum(first.values())
    return total


def transfer_spectrum(p: CyclicPattern, bound: int) -> SpectrumReport:
    """Spectrum of :func:`connect_the_dots` by exact counting on the Markov partition.

    Each gap is mapped linearly onto a union of gaps, so every closed walk of
    length ``n`` in the Markov graph carries exactly one fixed point of
    ``f**n`` unless its slope product is ``+1`` (a whole gap on the
    diagonal).  Walk counts come from traces of adjacency powers; walks whose
    point is an orbit point of the pattern are counted directly and replaced
    by the orbit itself.  The report equals ``spectrum(connect_the_dots(p),
    bound, resolve_degenerate=True)`` without building any iterate.
    """
    if bound < 1:
        raise InvalidInputError(f"bound must be positive, got {bound}")
    m, k = p.size, p.size - 1
    succ = [[0] * m for _ in range(m)]
    for a, b in markov_graph(p).edges:
        succ[a][b] = 1
    adjacency = [row[1:] for row in succ[1:]]
    cycles = _unit_cycles(p)

    def flat_walks(n):
        # walks whose cylinder is a whole gap with f**n the identity on it
        return sum(len(c) for c, s in cycles if n % _identity_period(len(c), s) == 0)

    all_walks, through_orbit = {}, {}
    power = adjacency
    for n in range(1, bound + 1):
        if n > 1:
            power = _matmul(power, adjacency)
        all_walks[n] = sum(power[i][i] for i in range(k))
        # a flat walk's cylinder holds two orbit points, both fixed by f**n
        through_orbit[n] = _orbit_point_walks(p, succ, n) - 2 * flat_walks(n) if n % m == 0 else 0

    counts = {}
    for n in range(1, bound + 1):
        divisors = [d for d in range(1, n + 1) if n % d == 0]
        primitive = sum(_mobius(n // d) * (all_walks[d] - through_orbit[d]) for d in divisors)
        # only identity cycles give primitive flat walks; a reflection squared is not primitive
        primitive -= sum(len(c) for c, s in cycles if s == 1 and len(c) == n)
        if primitive % n:
            raise ConsistencyError(f"{primitive} points of least period {n} do not split into orbits")
        if primitive:
            counts[n] = primitive // n
    orbit_flat = any(m % _identity_period(len(c), s) == 0 for c, s in cycles)
    if m <= bound and not orbit_flat:
        counts[m] = counts.get(m, 0) + 1

    continua = {_identity_period(len(c), s) for c, s in cycles}
    continua = frozenset(n for n in continua if n <= bound)
    flagged = []
    for n in range(1, bound + 1):
        gaps = sorted(g for c, s in cycles if n % _identity_period(len(c), s) == 0 for g in c)
        runs = []
        for g in gaps:
            if runs and runs[-1][1] == g:
                runs[-1][1] = g + 1
            else:
                runs.append([g, g + 1])
        flagged.extend((n, IntervalQ(_node(a, m), _node(b, m))) for a, b in runs)
    return SpectrumReport(bound, dict(sorted(counts.items())), bool(flagged), continua, bound, tuple(flagged))


def forced_spectrum(
    p: CyclicPattern,
    bound: int,
    cap: int = DEFAULT_PIECE_CAP,
    method: str = "transfer",
) -> SpectrumReport:
    """Spectrum of the connect-the-dots realization.

    Iterates with a segment on the diagonal are resolved (their least
    periods are reported in ``continua``) rather than ending the census.
    ``method="compose"`` builds the iterates of the realization and runs
    :func:`spectrum` on them, subject to ``cap``; the default
    ``"transfer"`` counts the same orbits on the Markov partition and has
    no size limit.
    """
    if method == "compose":
        return spectrum(connect_the_dots(p), bound, cap=cap, resolve_degenerate=True)
    if method == "transfer":
        return transfer_spectrum(p, bound)
    raise InvalidInputError(f"unknown method {method!r}")


def is_stefan(p: CyclicPattern) -> bool:
    """Whether some orbit point spirals out in the Štefan order.

    For ``p`` and odd ``m`` the points must satisfy
    ``f^{m-2}(p) < ... < f^3(p) < f(p) < p < f^2(p) < ... < f^{m-1}(p)``
    or the mirror image of that chain.
    """
    m = p.size
    if m < 3 or m % 2 == 0:
        raise InvalidInputError(f"Štefan cycles have odd size >= 3, got {m}")
    for start in range(1, m + 1):
        orbit = [start]
        for _ in range(m - 1):
            orbit.append(p(orbit[-1]))
        chain = [orbit[i] for i in range(m - 2, 0, -2)] + [orbit[0]] + [orbit[i] for i in range(2, m, 2)]
        if all(a < b for a, b in zip(chain, chain[1:])) or all(a > b for a, b in zip(chain, chain[1:])):
            return True
    return False


def stefan_pattern(m: int) -> CyclicPattern:
    """The Štefan cycle spiralling out from the middle point: ``5 4 2 1 3`` for ``m = 5``."""
    if m < 3 or m % 2 == 0:
        raise InvalidInputError(f"Štefan cycles have odd size >= 3, got {m}")
    mid = (m + 1) // 2
    orbit = [mid]
    for step in range(1, mid):
        orbit += [mid - step, mid + step]
    image = [0] * m
    for a, b in zip(orbit, orbit[1:] + orbit[:1]):
        image[a - 1] = b
    return CyclicPattern(image)


def all_cyclic_patterns(m: int) -> Iterator[CyclicPattern]:
    """All ``(m-1)!`` cyclic patterns of size ``m``, in lexicographic cycle order."""
    for rest in permutations(range(2, m + 1)):
        cycle = (1,) + rest
        image = [0] * m
        for a, b in zip(cycle, cycle[1:] + (1,)):
            image[a - 1] = b
        yield CyclicPattern(image)


def random_cyclic_pattern(m: int, rng) -> CyclicPattern:
    """Uniform random ``m``-cycle; ``rng`` is anything with an in-place ``shuffle``."""
    rest = list(range(2, m + 1))
    rng.shuffle(rest)
    cycle = [1] + rest
    image = [0] * m
    for a, b in zip(cycle, cycle[1:] + [1]):
        image[a - 1] = b
    return CyclicPattern(image)
