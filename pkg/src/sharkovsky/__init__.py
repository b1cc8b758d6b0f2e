"""Exact-arithmetic toolkit for Sharkovsky's theorem on piecewise-linear interval maps."""

from .errors import (
    ConsistencyError,
    CoverError,
    DegenerateError,
    DomainError,
    HypothesisError,
    InvalidInputError,
    NotFoundError,
    ResourceError,
    SharkovskyError,
)
from .kernel import BACKEND
from .lemmas import CoverCycle, TurbulencePair, covered_fixed_point, follow_cycle, pullback, turbulence_from_overshoot
from .order import (
    Relation,
    SharkovskyKey,
    compare,
    decompose,
    enumerate_order,
    least_period_under_power,
    lift_periods,
    precedes,
    tail,
)
from .patterns import (
    CyclicPattern,
    MarkovGraph,
    connect_the_dots,
    forced_spectrum,
    is_stefan,
    markov_graph,
    orbit_to_pattern,
    parse_pattern,
    stefan_pattern,
    transfer_spectrum,
)
from .plmap import (
    IntervalQ,
    OrbitRecord,
    PLMap,
    SpectrumReport,
    compose,
    evaluate,
    fixed_points,
    image,
    iterate,
    periodic_points,
    spectrum,
)
from .witness import clamp_surgery, minimal_diameter_orbit, t_infinity_approx, tent, tent_truncation

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ConsistencyError",
    "CoverCycle",
    "CoverError",
    "CyclicPattern",
    "DegenerateError",
    "DomainError",
    "HypothesisError",
    "IntervalQ",
    "InvalidInputError",
    "MarkovGraph",
    "NotFoundError",
    "OrbitRecord",
    "PLMap",
    "Relation",
    "ResourceError",
    "SharkovskyError",
    "SharkovskyKey",
    "SpectrumReport",
    "TurbulencePair",
    "clamp_surgery",
    "compare",
    "compose",
    "connect_the_dots",
    "covered_fixed_point",
    "decompose",
    "enumerate_order",
    "evaluate",
    "fixed_points",
    "follow_cycle",
    "forced_spectrum",
    "image",
    "is_stefan",
    "iterate",
    "least_period_under_power",
    "lift_periods",
    "markov_graph",
    "minimal_diameter_orbit",
    "orbit_to_pattern",
    "parse_pattern",
    "periodic_points",
    "precedes",
    "pullback",
    "spectrum",
    "stefan_pattern",
    "t_infinity_approx",
    "tail",
    "tent",
    "tent_truncation",
    "transfer_spectrum",
    "turbulence_from_overshoot",
]
