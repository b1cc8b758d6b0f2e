"""Reference computations that share no code with the package.

Everything here is written directly from the definitions, with plain
``Fraction`` arithmetic and brute-force enumeration, so the tests can compare
the package against something independent.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def sharkovsky_list(bound: int) -> list[int]:
    """``1..bound`` laid out in the Sharkovsky order by explicit construction."""
    out = []
    power = 1
    while power <= bound:
        out += [power * q for q in range(3, bound // power + 1, 2)]
        power *= 2
    # powers of two last, descending
    out += sorted((1 << a for a in range(bound.bit_length()) if 1 << a <= bound), reverse=True)
    return out


def tent_value(x: Fraction) -> Fraction:
    return 1 - abs(2 * x - 1)


def tent_fixed_points(n: int) -> list[Fraction]:
    """Solutions of ``T^n(x) = x`` on ``[0, 1]``.

    ``T^n`` is linear on each ``[j/2^n, (j+1)/2^n]`` and takes the values
    0 and 1 alternately at the dyadic points, so each piece is one equation.
    """
    size = 2**n
    found = set()
    for j in range(size):
        a, b = Fraction(j, size), Fraction(j + 1, size)
        ya, yb = (0, 1) if j % 2 == 0 else (1, 0)
        slope = (yb - ya) / (b - a)
        # ya + slope (x - a) = x
        x = (ya - slope * a) / (1 - slope)
        if a <= x <= b:
            found.add(x)
    return sorted(found)


def orbit_of(f, x: Fraction, limit: int) -> list[Fraction]:
    orbit = [x]
    y = f(x)
    while y != x:
        orbit.append(y)
        if len(orbit) > limit:
            raise AssertionError(f"{x} is not periodic within {limit} steps")
        y = f(y)
    return orbit


def tent_orbits(n: int) -> list[tuple[Fraction, ...]]:
    """Orbits of least period exactly ``n``, each sorted, in order of minimum."""
    seen, out = set(), []
    for x in tent_fixed_points(n):
        if x in seen:
            continue
        orbit = orbit_of(tent_value, x, n)
        seen.update(orbit)
        if len(orbit) == n:
            out.append(tuple(sorted(orbit)))
    return sorted(out)


def tent_orbit_census(n: int) -> int:
    """Number of least-period-``n`` orbits from ``2^n = sum over d | n of d * orbits(d)``."""
    counts = {}
    for k in range(1, n + 1):
        rest = sum(d * counts[d] for d in range(1, k) if k % d == 0)
        counts[k] = (2**k - rest) // k
    return counts[n]


def smallest_orbit(orbits, lo=Fraction(0), hi=Fraction(1)):
    inside = [o for o in orbits if lo <= o[0] and o[-1] <= hi]
    return min(inside, key=lambda o: (o[-1] - o[0], o[0]))


def clamp_value(x: Fraction, lo: Fraction, hi: Fraction) -> Fraction:
    return min(max(tent_value(x), lo), hi)


def least_period(m: int, n: int) -> int:
    return m // gcd(m, n)


# -- connect-the-dots maps by itinerary enumeration ------------------------


def dots_value(image: tuple, x: Fraction) -> Fraction:
    m = len(image)
    t = x * (m + 1)
    i = min(max(int(t), 1), m - 1)
    frac = t - i
    y = image[i - 1] + frac * (image[i] - image[i - 1])
    return Fraction(y, m + 1)


def dots_periodic(image: tuple, n: int):
    """Isolated solutions of ``f^n(x) = x`` and the gaps where ``f^n`` is the identity.

    Walks every closed itinerary of gaps; on each itinerary cylinder ``f^n``
    is affine, so it has one fixed point, none, or is the identity.
    """
    m = len(image)
    gaps = range(1, m)

    def branch(i):
        # f on gap i, in node units: u -> image[i-1] + (u - i) * slope
        s = image[i] - image[i - 1]
        return Fraction(s), Fraction(image[i - 1] - s * i)

    covers = {i: [j for j in gaps if min(image[i - 1], image[i]) <= j < max(image[i - 1], image[i])] for i in gaps}
    points, identity_gaps = set(), set()
    for i in gaps:
        _walk_from(i, n, branch, covers, points, identity_gaps)
    return sorted(Fraction(u, m + 1) for u in points), sorted(identity_gaps)


def _walk_from(start, n, branch, covers, points, identity_gaps):
    # depth-first over itineraries start = g_0, g_1, ..., g_{n-1}, back to g_0
    stack = [([start], Fraction(1), Fraction(0), Fraction(start), Fraction(start + 1))]
    while stack:
        path, a, b, lo, hi = stack.pop()
        i = path[-1]
        s, c = branch(i)
        na, nb = s * a, s * b + c
        targets = covers[i] if len(path) < n else [start] if start in covers[i] else []
        for j in targets:
            ends = sorted(((j - nb) / na, (j + 1 - nb) / na))
            nlo, nhi = max(lo, ends[0]), min(hi, ends[1])
            if nlo > nhi:
                continue
            if len(path) < n:
                stack.append((path + [j], na, nb, nlo, nhi))
                continue
            if na == 1 and nb == 0:
                identity_gaps.add(start)
            elif na != 1:
                u = nb / (1 - na)
                if nlo <= u <= nhi:
                    points.add(u)


def dots_spectrum(image: tuple, bound: int):
    """``(counts, continua)`` for the connect-the-dots map of ``image``.

    A point counts for least period ``n`` when it is an isolated solution of
    ``f^n(x) = x`` and its orbit has exactly ``n`` points; a gap on which
    ``f^n`` is the identity contributes ``n`` to the continua unless a smaller
    divisor iterate is already the identity there.
    """
    image = tuple(image)
    m = len(image)
    f = lambda x: dots_value(image, x)  # noqa: E731
    counts, continua, flat = {}, set(), {}
    for n in range(1, bound + 1):
        points, gaps = dots_periodic(image, n)
        flat[n] = set(gaps)
        lower = set().union(*(flat[d] for d in range(1, n) if n % d == 0))
        if set(gaps) - lower:
            continua.add(n)
        # endpoints and interiors of identity gaps are not isolated
        blocked = [(Fraction(g, m + 1), Fraction(g + 1, m + 1)) for g in gaps]
        fresh = 0
        for x in points:
            if any(lo <= x <= hi for lo, hi in blocked):
                continue
            if len(orbit_of(f, x, n)) == n:
                fresh += 1
        if fresh:
            assert fresh % n == 0
            counts[n] = fresh // n
    return counts, frozenset(continua)
