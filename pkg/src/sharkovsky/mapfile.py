"""Text formats: map documents and YAML reports.

A map document looks like::

    domain: ["0", "1"]
    points:
      - ["0", "0"]
      - ["1/2", "1"]
      - ["1", "0"]

Every scalar is a rational literal (``"p"`` or ``"p/q"``); unquoted
integers are accepted on input.  :func:`dump_map` output parses back to an
equal map, and dumping that map reproduces the text byte for byte.
"""

from __future__ import annotations

from fractions import Fraction

import yaml

from .errors import InvalidInputError
from .plmap import IntervalQ, PLMap
from .rational import format_rational, parse_rational


def _scalar(value) -> Fraction:
    if isinstance(value, bool):
        raise InvalidInputError(f"not a rational literal: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise InvalidInputError(f"not a rational literal: {value!r}")


def _pair(value, what: str) -> tuple[Fraction, Fraction]:
    if not isinstance(value, list) or len(value) != 2:
        raise InvalidInputError(f"{what} must be a two-element list, got {value!r}")
    return _scalar(value[0]), _scalar(value[1])


def map_from_data(data) -> PLMap:
    if not isinstance(data, dict) or "domain" not in data or "points" not in data:
        raise InvalidInputError("a map document needs 'domain' and 'points'")
    lo, hi = _pair(data["domain"], "domain")
    points = data["points"]
    if not isinstance(points, list) or not points:
        raise InvalidInputError("'points' must be a non-empty list")
    return PLMap([_pair(p, "point") for p in points], IntervalQ(lo, hi))


def load_map(text: str) -> PLMap:
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise InvalidInputError(f"unreadable map document: {exc}") from None
    return map_from_data(data)


def read_map(path) -> PLMap:
    try:
        with open(path, encoding="utf-8") as fh:
            return load_map(fh.read())
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc.strerror}") from None


def _q(x) -> str:
    return '"' + format_rational(x) + '"'


def dump_map(f: PLMap) -> str:
    lines = [f"domain: [{_q(f.domain.lo)}, {_q(f.domain.hi)}]", "points:"]
    lines.extend(f"  - [{_q(x)}, {_q(y)}]" for x, y in f.nodes)
    return "\n".join(lines) + "\n"


def map_data(f: PLMap) -> dict:
    return {
        "domain": [format_rational(f.domain.lo), format_rational(f.domain.hi)],
        "points": [[format_rational(x), format_rational(y)] for x, y in f.nodes],
    }


class _ReportDumper(yaml.SafeDumper):
    pass


def _list_flow(dumper, data):
    # short scalar lists read better inline
    scalars = all(not isinstance(v, (dict, list)) for v in data)
    short_pairs = len(data) <= 4 and all(
        isinstance(v, list) and all(not isinstance(w, (dict, list)) for w in v) for v in data
    )
    flow = scalars or short_pairs
    return dumper.represent_sequence("tag:yaml.org,2002:seq", data, flow_style=flow)


_ReportDumper.add_representer(list, _list_flow)


def dump_report(report: dict) -> str:
    return yaml.dump(report, Dumper=_ReportDumper, sort_keys=False, allow_unicode=True, width=100)
