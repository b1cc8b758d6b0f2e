"""Compare the compiled GMP kernel with the pure-Python kernel.

Each workload runs on both backends, the results are checked for equality
and the best of ``--repeat`` wall-clock times is reported.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import sys
import time

from sharkovsky import parse_pattern, tent
from sharkovsky._pykernel import Nodes as PyNodes
from sharkovsky.patterns import connect_the_dots
from sharkovsky.witness import tent_truncation

try:
    from sharkovsky._ckernel import Nodes as CNodes
except ImportError:
    CNodes = None

CAP = 10**6


def iterate(cls, f, n):
    """Compose ``f`` with itself ``n - 1`` times, collecting fixed points of each iterate."""
    base = cls.from_fractions(list(f.xs), list(f.ys))
    g = base
    found = [g.fixed_points()]
    for _ in range(n - 1):
        g = base.compose(g, CAP)
        found.append(g.fixed_points())
    return len(g), found


WORKLOADS = [
    ("tent, 13 iterates", tent(), 13),
    ("period-5 truncation, 14 iterates", tent_truncation(5), 14),
    ("pattern 5 4 2 1 3, 12 iterates", connect_the_dots(parse_pattern("5 4 2 1 3")), 12),
    ("pattern 3 6 7 5 8 4 2 1, 9 iterates", connect_the_dots(parse_pattern("3 6 7 5 8 4 2 1")), 9),
]


def best_time(fn, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    if CNodes is None:
        print("compiled kernel not built; nothing to compare", file=sys.stderr)
        return 1
    print(f"{'workload':40} {'pieces':>8} {'python s':>10} {'gmp s':>8} {'speedup':>8}")
    for name, f, n in WORKLOADS:
        t_py, (pieces, r_py) = best_time(lambda: iterate(PyNodes, f, n), args.repeat)
        t_c, (_, r_c) = best_time(lambda: iterate(CNodes, f, n), args.repeat)
        if [sorted(p) for p, _ in r_py] != [sorted(p) for p, _ in r_c]:
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        print(f"{name:40} {pieces:8d} {t_py:10.3f} {t_c:8.3f} {t_py / t_c:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
