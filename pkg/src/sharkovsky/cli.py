"""Command-line front end.

Exit codes: 0 success / verification passed, 1 verification failed,
2 invalid input, 3 resource limit hit or degenerate map.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import order
from .errors import DegenerateError, ResourceError, SharkovskyError
from .lemmas import covered_fixed_point, follow_cycle, pullback, turbulence_from_overshoot
from .mapfile import dump_map, dump_report, map_data, read_map
from .patterns import CyclicPattern, forced_spectrum, is_stefan, parse_pattern, random_cyclic_pattern
from .plmap import DEFAULT_PIECE_CAP, IntervalQ, SpectrumReport, spectrum
from .rational import format_rational, parse_rational
from .verify import verify_spectrum
from .witness import t_infinity_approx, tent_truncation_record

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


def _periods(values) -> list[int]:
    return sorted(values)


def _spectrum_data(report: SpectrumReport) -> dict:
    data = {
        "bound": report.bound,
        "counts": {n: report.counts[n] for n in sorted(report.counts)},
        "present": _periods(report.present),
        "absent": [n for n in range(1, report.complete_through + 1) if n not in report.present],
        "degenerate": report.degenerate_flag,
    }
    if report.continua:
        data["continua"] = _periods(report.continua)
    if report.degenerate_intervals:
        data["diagonal_segments"] = [[n, str(seg)] for n, seg in report.degenerate_intervals]
    if not report.complete:
        data["complete_through"] = report.complete_through
    return data


def _verification_data(v) -> dict:
    return {
        "subject": v.subject,
        "bound": v.bound,
        "present": _periods(v.present_periods),
        "violations": [list(pair) for pair in v.violations],
        "status": v.status,
    }


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- order -------------------------------------------------------------------


def cmd_order(args) -> int:
    if args.action == "compare":
        rel = order.compare(args.m, args.n)
        _emit(args, f"{args.m} {rel.value} {args.n}\n")
    else:
        members = order.tail(args.m, args.max)
        _emit(args, " ".join(str(n) for n in sorted(members)) + "\n")
    return EXIT_OK


# -- map ---------------------------------------------------------------------


def cmd_map(args) -> int:
    f = read_map(args.file)
    report = spectrum(f, args.max, cap=args.piece_cap)
    if args.action == "spectrum":
        _emit(args, dump_report({"subject": args.file, **_spectrum_data(report)}))
        return EXIT_RESOURCE if report.degenerate_flag else EXIT_OK
    v = verify_spectrum(args.file, report)
    data = _verification_data(v)
    if report.degenerate_flag:
        data["diagonal_segments"] = [[n, str(seg)] for n, seg in report.degenerate_intervals]
    _emit(args, dump_report(data))
    if report.degenerate_flag:
        return EXIT_RESOURCE
    return EXIT_OK if v.passed else EXIT_FAIL


# -- pattern -----------------------------------------------------------------


def cmd_pattern(args) -> int:
    p = parse_pattern(args.pattern)
    if args.action == "stefan":
        _emit(args, ("true" if is_stefan(p) else "false") + "\n")
        return EXIT_OK
    report = forced_spectrum(p, args.max, cap=args.piece_cap, method=args.method)
    v = verify_spectrum(str(p), report)
    data = {"pattern": str(p), **_spectrum_data(report), "violations": [list(x) for x in v.violations]}
    data["status"] = v.status
    _emit(args, dump_report(data))
    return EXIT_OK if v.passed else EXIT_FAIL


# -- witness -----------------------------------------------------------------


def _write_map(args, f) -> None:
    if args.map_out:
        with open(args.map_out, "w", encoding="utf-8") as fh:
            fh.write(dump_map(f))


def cmd_witness(args) -> int:
    if args.action == "trunc":
        n = args.n
        record = tent_truncation_record(n, override=args.override, cap=args.piece_cap)
        bound = args.max if args.max is not None else max(14, n)
        report = spectrum(record.result, bound, cap=args.piece_cap)
        present = report.present
        preceding = sorted(m for m in present if order.precedes(m, n))
        missing = sorted(order.tail(n, bound) - present)
        ok = report.complete and report.counts.get(n) == 1 and not preceding and not missing
        data = {
            "witness": "truncated tent map",
            "n": n,
            "clamp": [format_rational(record.lo), format_rational(record.hi)],
            "orbit": [format_rational(x) for x in record.orbit.points],
            **_spectrum_data(report),
            "period_n_orbits": report.counts.get(n, 0),
            "missing_forced": missing,
            "present_preceding": preceding,
            "status": "pass" if ok else "fail",
            "map": map_data(record.result),
        }
        _write_map(args, record.result)
        _emit(args, dump_report(data))
        return EXIT_OK if ok else EXIT_FAIL

    approx = t_infinity_approx(args.depth, override=args.override, cap=args.piece_cap)
    bound = args.max
    report = spectrum(approx.map, bound, cap=args.piece_cap)
    odd = sorted(m for m in report.present if m >= 3 and m % 2)
    bounds = approx.bounds
    nested = all(
        outer.lo < inner.lo < inner.hi < outer.hi for outer, inner in zip(bounds, bounds[1:])
    )
    ok = report.complete and nested and not odd
    data = {
        "witness": "finite-depth approximant of the power-of-two map",
        "depth": args.depth,
        "bounds": [
            {"period": 3 * 2**i, "min": format_rational(b.lo), "max": format_rational(b.hi)}
            for i, b in enumerate(bounds)
        ],
        "nested": nested,
        **_spectrum_data(report),
        "odd_periods_from_3": odd,
        "status": "pass" if ok else "fail",
        "map": map_data(approx.map),
    }
    _write_map(args, approx.map)
    _emit(args, dump_report(data))
    return EXIT_OK if ok else EXIT_FAIL


# -- lemma -------------------------------------------------------------------


def _interval(pair) -> IntervalQ:
    return IntervalQ(parse_rational(pair[0]), parse_rational(pair[1]))


def cmd_lemma(args) -> int:
    f = read_map(args.file)
    if args.action == "fixed":
        x = covered_fixed_point(f, _interval(args.interval))
        data = {"interval": str(_interval(args.interval)), "fixed_point": format_rational(x)}
    elif args.action == "pullback":
        K = pullback(f, _interval(args.J), _interval(args.L))
        data = {"J": str(_interval(args.J)), "L": str(_interval(args.L)), "K": str(K)}
    elif args.action == "cycle":
        intervals = [_interval(pair) for pair in args.interval]
        y, chain = follow_cycle(f, intervals)
        data = {
            "cycle": [str(J) for J in intervals],
            "point": format_rational(y),
            "orbit": [format_rational(v) for v in f.orbit(y, len(intervals))],
            "chain": [str(Q) for Q in chain],
        }
    else:
        pair = turbulence_from_overshoot(
            f, parse_rational(args.c), parse_rational(args.z), args.k, strict=False if args.plain else None
        )
        data = {
            "I0": str(pair.I0),
            "I1": str(pair.I1),
            "strict": pair.strict_flag,
            "c": format_rational(pair.base_point),
            "z": format_rational(pair.fixed_point),
        }
    _emit(args, dump_report(data))
    return EXIT_OK


# -- corpus ------------------------------------------------------------------


def _corpus_task(task):
    index, image, bound, cap, method = task
    p = CyclicPattern(image)
    v = verify_spectrum(str(p), forced_spectrum(p, bound, cap=cap, method=method))
    return index, str(p), _periods(v.present_periods), [list(x) for x in v.violations], v.status


def corpus_patterns(seed: int, count: int, size: int):
    """Deterministic pattern sample: PCG64 seeded with ``seed``."""
    rng = np.random.Generator(np.random.PCG64(seed))
    out = []
    for _ in range(count):
        m = int(rng.integers(3, size + 1))
        out.append(random_cyclic_pattern(m, rng))
    return out


def cmd_corpus(args) -> int:
    if args.size < 3:
        raise SharkovskyError("--size must be at least 3")
    patterns = corpus_patterns(args.seed, args.count, args.size)
    tasks = [(i, p.image, args.max, args.piece_cap, args.method) for i, p in enumerate(patterns)]
    if args.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_corpus_task, tasks))
    else:
        results = [_corpus_task(t) for t in tasks]
    results.sort(key=lambda r: r[0])
    lines = []
    passed = 0
    for index, pattern, present, violations, status in results:
        passed += status == "pass"
        line = f"{index:4d}  [{pattern}]  periods {' '.join(map(str, present))}  {status}"
        if violations:
            line += "  violations " + " ".join(f"{m}≺{n}" for m, n in violations)
        lines.append(line)
    lines.append(f"{passed}/{len(results)} pass")
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if passed == len(results) else EXIT_FAIL


# -- parser ------------------------------------------------------------------


def _method_option(p) -> None:
    p.add_argument(
        "--method",
        choices=("transfer", "compose"),
        default="transfer",
        help="count on the Markov partition (default) or build the iterates",
    )


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the report to FILE instead of stdout")
    common.add_argument("--piece-cap", type=_positive, default=DEFAULT_PIECE_CAP, help="node limit for iterates")

    parser = argparse.ArgumentParser(prog="sharkovsky", description="Exact Sharkovsky-theorem toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p_order = sub.add_parser("order", help="Sharkovsky ordering")
    order_sub = p_order.add_subparsers(dest="action", required=True)
    p = order_sub.add_parser("compare", parents=[common])
    p.add_argument("m", type=_positive)
    p.add_argument("n", type=_positive)
    p = order_sub.add_parser("tail", parents=[common])
    p.add_argument("m", type=_positive)
    p.add_argument("--max", type=_positive, required=True)
    p_order.set_defaults(func=cmd_order)

    p_map = sub.add_parser("map", help="spectrum and closure check of a map file")
    map_sub = p_map.add_subparsers(dest="action", required=True)
    for name in ("spectrum", "verify"):
        p = map_sub.add_parser(name, parents=[common])
        p.add_argument("file")
        p.add_argument("--max", type=_positive, required=True)
    p_map.set_defaults(func=cmd_map)

    p_pat = sub.add_parser("pattern", help="cyclic orbit patterns")
    pat_sub = p_pat.add_subparsers(dest="action", required=True)
    p = pat_sub.add_parser("forced", parents=[common])
    p.add_argument("pattern")
    p.add_argument("--max", type=_positive, required=True)
    _method_option(p)
    p = pat_sub.add_parser("stefan", parents=[common])
    p.add_argument("pattern")
    p_pat.set_defaults(func=cmd_pattern)

    p_wit = sub.add_parser("witness", help="truncated tent-map witnesses")
    wit_sub = p_wit.add_subparsers(dest="action", required=True)
    p = wit_sub.add_parser("trunc", parents=[common])
    p.add_argument("n", type=_positive)
    p.add_argument("--max", type=_positive, default=None)
    p = wit_sub.add_parser("tinf", parents=[common])
    p.add_argument("--depth", type=_non_negative, required=True)
    p.add_argument("--max", type=_positive, default=12)
    for p in wit_sub.choices.values():
        p.add_argument("--override", action="store_true", help="lift the default size limits")
        p.add_argument("--map-out", help="also write the witness map to FILE")
    p_wit.set_defaults(func=cmd_witness)

    p_lem = sub.add_parser("lemma", help="covering-lemma constructions on a map file")
    lem_sub = p_lem.add_subparsers(dest="action", required=True)
    p = lem_sub.add_parser("fixed", parents=[common])
    p.add_argument("file")
    p.add_argument("interval", nargs=2, metavar=("LO", "HI"))
    p = lem_sub.add_parser("pullback", parents=[common])
    p.add_argument("file")
    p.add_argument("--J", nargs=2, required=True, metavar=("LO", "HI"))
    p.add_argument("--L", nargs=2, required=True, metavar=("LO", "HI"))
    p = lem_sub.add_parser("cycle", parents=[common])
    p.add_argument("file")
    p.add_argument("--interval", nargs=2, action="append", required=True, metavar=("LO", "HI"))
    p = lem_sub.add_parser("turbulence", parents=[common])
    p.add_argument("file")
    p.add_argument("c")
    p.add_argument("z")
    p.add_argument("k", type=_positive)
    p.add_argument("--plain", action="store_true", help="return the non-refined pair")
    p_lem.set_defaults(func=cmd_lemma)

    p_cor = sub.add_parser("corpus", parents=[common], help="closure campaign over random patterns")
    p_cor.add_argument("--seed", type=_non_negative, default=0)
    p_cor.add_argument("--count", type=_non_negative, default=100)
    p_cor.add_argument("--size", type=_positive, default=8)
    p_cor.add_argument("--max", type=_positive, default=12)
    p_cor.add_argument("--jobs", type=_positive, default=1)
    _method_option(p_cor)
    p_cor.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ResourceError, DegenerateError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except SharkovskyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
