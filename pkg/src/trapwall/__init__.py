"""Exact trapezoid bisection by transversal strips, with base-60 arithmetic."""

from .errors import (
    DomainError,
    IrrationalRootsError,
    NonTerminatingError,
    NotRegularError,
    ParseError,
    PlacesExceededError,
    TrapwallError,
)
from .geometry import (
    NestedRadical,
    QuadraticLength,
    Trapezoid,
    area,
    complement_area,
    cumulative_area,
    midpoint_connector,
    midpoint_connector_from_leg,
    parallelogram_diagonal,
    transversal_at,
    transversal_bisector,
    transversal_given_upper_area,
    triangle_median,
    triangle_parallel_bisector,
)
from .party_wall import (
    PartyWallPlan,
    TraceStep,
    plan_wall,
    scribe_trace_obverse1,
    scribe_trace_smt26,
    wall_offset,
)
from .sexagesimal import (
    RegularFactorization,
    SexValue,
    format_sex,
    is_regular,
    isqrt,
    parse_sex,
    rational_to_sex,
    reciprocal_regular,
    sex_to_rational,
    sqrt_sex,
    truncate_sex,
)
from .wall_solver import (
    SearchHit,
    WallQuadratic,
    discriminant,
    discriminant_kernel,
    k0_closed_form,
    search_hits,
    solve_k0,
    verify_split,
    wall_quadratic,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "IrrationalRootsError",
    "NonTerminatingError",
    "NotRegularError",
    "ParseError",
    "PlacesExceededError",
    "TrapwallError",
    "NestedRadical",
    "QuadraticLength",
    "Trapezoid",
    "area",
    "complement_area",
    "cumulative_area",
    "midpoint_connector",
    "midpoint_connector_from_leg",
    "parallelogram_diagonal",
    "transversal_at",
    "transversal_bisector",
    "transversal_given_upper_area",
    "triangle_median",
    "triangle_parallel_bisector",
    "PartyWallPlan",
    "TraceStep",
    "plan_wall",
    "scribe_trace_obverse1",
    "scribe_trace_smt26",
    "wall_offset",
    "RegularFactorization",
    "SexValue",
    "format_sex",
    "is_regular",
    "isqrt",
    "parse_sex",
    "rational_to_sex",
    "reciprocal_regular",
    "sex_to_rational",
    "sqrt_sex",
    "truncate_sex",
    "SearchHit",
    "WallQuadratic",
    "discriminant",
    "discriminant_kernel",
    "k0_closed_form",
    "search_hits",
    "solve_k0",
    "verify_split",
    "wall_quadratic",
]
