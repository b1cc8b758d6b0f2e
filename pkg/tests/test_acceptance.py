"""Acceptance criteria, one test each.

Every criterion is an exact (zero-tolerance) check with a wall-clock limit.
Each test records a one-line verdict; they are printed at the end of the
pytest run and also when this file is executed directly::

    python3 tests/test_acceptance.py
"""

from __future__ import annotations

import itertools
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))  # for script use

from sharkovsky import (
    PLMap,
    ResourceError,
    follow_cycle,
    forced_spectrum,
    image,
    is_stefan,
    periodic_points,
    pullback,
    spectrum,
    stefan_pattern,
    t_infinity_approx,
    tent,
    turbulence_from_overshoot,
)
from sharkovsky.cli import corpus_patterns
from sharkovsky.order import enumerate_order, precedes, tail
from sharkovsky.patterns import all_cyclic_patterns
from sharkovsky.verify import closure_violations
from sharkovsky.witness import tent_truncation_record

import generators

VERDICTS: dict[int, str] = {}
SEED = 20240607


def _record(number: int, title: str, limit: float, check) -> None:
    start = time.perf_counter()
    problems, detail = check()
    elapsed = time.perf_counter() - start
    if elapsed > limit:
        problems.append(f"took {elapsed:.1f} s, limit {limit:g} s")
    status = "PASS" if not problems else "FAIL"
    line = f"[{status}] criterion {number}: {title} ({detail}; {elapsed:.2f} s of {limit:g} s)"
    if problems:
        line += " :: " + "; ".join(problems[:5])
    VERDICTS[number] = line
    print(line)
    assert not problems, line


# -- 1 -----------------------------------------------------------------------------


def check_ordering():
    problems = []
    first = enumerate_order(41)[:20]
    if first != list(range(3, 42, 2)):
        problems.append(f"first twenty are {first}")
    upto12 = enumerate_order(12)
    if upto12 != [3, 5, 7, 9, 11, 6, 10, 12, 8, 4, 2, 1]:
        problems.append(f"order below 13 is {upto12}")
    return problems, "first 20 odd, order on 1..12 as displayed"


def test_criterion_1_ordering():
    _record(1, "ordering fidelity", 1, check_ordering)


# -- 2 -----------------------------------------------------------------------------


def check_tent_census():
    T = tent()
    problems = []
    for n in range(1, 13):
        count = len(periodic_points(T, n))
        if count != 2**n:
            problems.append(f"T^{n} has {count} fixed points, expected {2**n}")
    return problems, "T^n(x) = x has 2^n solutions for n = 1..12"


def test_criterion_2_tent_census():
    _record(2, "tent census", 30, check_tent_census)


# -- 3 -----------------------------------------------------------------------------


def check_corpus_closure():
    problems = []
    patterns = corpus_patterns(7, 100, 8)
    sizes = {p.size for p in patterns}
    if not sizes <= set(range(3, 9)):
        problems.append(f"sizes outside 3..8: {sorted(sizes)}")
    violations = 0
    crossed = 0
    for p in patterns:
        report = forced_spectrum(p, 12)
        if not report.complete:
            problems.append(f"{p}: census incomplete")
        found = closure_violations(report.present, 12)
        violations += len(found)
        if found:
            problems.append(f"{p}: violations {found}")
        # independent route wherever the iterates stay small
        try:
            direct = forced_spectrum(p, 12, method="compose", cap=100_000)
        except ResourceError:
            continue
        crossed += 1
        if direct != report:
            problems.append(f"{p}: transfer count and composition disagree")
    return problems, f"100 patterns, {violations} violations, {crossed} cross-checked by composition"


def test_criterion_3_closure():
    _record(3, "forced spectra of random patterns are closed", 300, check_corpus_closure)


# -- 4 -----------------------------------------------------------------------------

TRUNCATIONS = [1, 2, 4, 8, 3, 5, 6, 7, 9, 10, 12]


def check_truncations():
    problems = []
    for n in TRUNCATIONS:
        bound = max(14, n)
        record = tent_truncation_record(n)
        report = spectrum(record.result, bound)
        present = report.present
        if not report.complete or report.degenerate_flag:
            problems.append(f"n={n}: census incomplete")
        if report.counts.get(n) != 1:
            problems.append(f"n={n}: {report.counts.get(n, 0)} orbits of period {n}")
        missing = sorted(tail(n, 14) - present)
        if missing:
            problems.append(f"n={n}: forced periods missing {missing}")
        earlier = sorted(m for m in present if m <= 14 and precedes(m, n))
        if earlier:
            problems.append(f"n={n}: periods preceding n present {earlier}")
    return problems, f"n in {TRUNCATIONS}"


def test_criterion_4_truncations():
    _record(4, "truncated tent maps realize each tail exactly", 600, check_truncations)


# -- 5 -----------------------------------------------------------------------------


def check_approximants():
    problems = []
    records = [t_infinity_approx(d) for d in range(3)]
    for d, rec in enumerate(records):
        if rec.bounds != records[-1].bounds[: d + 1]:
            problems.append(f"depth {d} bounds differ from the deeper run")
    bounds = records[-1].bounds
    for outer, inner in itertools.pairwise(bounds):
        if not outer.lo < inner.lo < inner.hi < outer.hi:
            problems.append(f"{inner} not strictly inside {outer}")
    present = spectrum(records[-1].map, 12).present
    if not {1, 2, 4, 12} <= present:
        problems.append(f"depth-2 spectrum {sorted(present)} lacks part of 1, 2, 4, 12")
    odd = sorted(n for n in present if n % 2 and n >= 3)
    if odd:
        problems.append(f"odd periods {odd} present")
    hulls = ", ".join(str(b) for b in bounds)
    return problems, f"bounds {hulls}; depth-2 periods {sorted(present)}"


def test_criterion_5_approximants():
    _record(5, "nested approximants avoid odd periods", 900, check_approximants)


# -- 6 -----------------------------------------------------------------------------


def check_lemmas():
    problems = []
    rng = random.Random(SEED)
    for f, J, L in generators.pullback_instances(rng, 200):
        K = pullback(f, J, L)
        if not (J.contains_interval(K) and image(f, K) == L):
            problems.append(f"pullback {J} -> {L} gave {K}")
    for f, js in generators.cycle_instances(rng, 100):
        y, _ = follow_cycle(f, js)
        x = y
        for J in js:
            if x not in J:
                problems.append(f"cycle point {y} leaves {J}")
                break
            x = f(x)
        if x != y:
            problems.append(f"cycle point {y} does not return")
    pairs = strict = 0
    w = PLMap([(0, "1/2"), ("1/10", "7/10"), ("1/5", "1/10"), ("7/10", "9/10"), (1, "9/10")])
    cases = [(w, Fraction(1, 5), Fraction(11, 30), 2)]
    cases += generators.overshoot_instances(rng, 100)
    for f, c, z, k in cases:
        pair = turbulence_from_overshoot(f, c, z, k)
        pairs += 1
        strict += pair.strict_flag
        meet = image(f, pair.I0).intersection(image(f, pair.I1))
        lo, hi = min(pair.I0.lo, pair.I1.lo), max(pair.I0.hi, pair.I1.hi)
        if meet is None or not (meet.lo <= lo and hi <= meet.hi) or not pair.check(f):
            problems.append(f"pair {pair.I0}, {pair.I1} is not turbulent")
    if pairs < 101:
        problems.append(f"only {pairs} overshoot instances generated")
    return problems, f"200 pullbacks, 100 cycles, {pairs} turbulent pairs ({strict} strict)"


def test_criterion_6_lemma_kernel():
    _record(6, "lemma kernel soundness", 120, check_lemmas)


# -- 7 -----------------------------------------------------------------------------


def check_stefan_minimality():
    problems = []
    details = []
    for m in (5, 7):
        candidates = 0
        total = 0
        for p in all_cyclic_patterns(m):
            total += 1
            present = forced_spectrum(p, m).present
            if any(n in present for n in range(3, m, 2)):
                continue
            candidates += 1
            if not is_stefan(p):
                problems.append(f"{p} has no odd period below {m} but is not Štefan")
        details.append(f"m={m}: {total} patterns, {candidates} without smaller odd periods")
    return problems, "; ".join(details)


def test_criterion_7_stefan_minimality():
    _record(7, "Štefan cycles minimal among odd orbits", 600, check_stefan_minimality)


# -- 8 -----------------------------------------------------------------------------


def check_spot_checks():
    problems = []
    for m in (3, 5, 7):
        p = stefan_pattern(m)
        present = forced_spectrum(p, 2 * m).present
        for n in (2, m + 2, 6, 2 * m):
            if n not in present:
                problems.append(f"Štefan-{m} ({p}) lacks period {n}")
    return problems, "periods 2, m+2, 6, 2m for Štefan-3, 5, 7"


def test_criterion_8_spot_checks():
    _record(8, "periods forced by Štefan cycles", 120, check_spot_checks)


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failures += 1
    sys.exit(1 if failures else 0)
