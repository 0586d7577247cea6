"""Command line front end: convert numerals, compute bisectors, run the searches.

Exit codes: 0 success, 1 clean no-solution, 2 input syntax, 3 representation
failure (value has no exact base-60 form), 4 domain violation.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import geometry, party_wall, wall_solver
from .errors import (
    DomainError,
    NonTerminatingError,
    ParseError,
    PlacesExceededError,
)
from .party_wall import PartyWallPlan, TraceStep
from .sexagesimal import (
    parse_sex,
    rational_to_sex,
    sex_to_rational,
    sqrt_sex,
    truncate_sex,
)

EXIT_OK = 0
EXIT_NO_SOLUTION = 1
EXIT_SYNTAX = 2
EXIT_REPRESENTATION = 3
EXIT_DOMAIN = 4

MAX_EXACT_PLACES = 20
DEFAULT_PLACES = 5

_INT_RE = re.compile(r"[+-]?[0-9]+\Z")
_RATIO_RE = re.compile(r"[+-]?[0-9]+/[0-9]+\Z")


@dataclass(frozen=True)
class OutputConfig:
    format: str = "table"
    numeral: str = "sex"
    places: int = DEFAULT_PLACES
    explicit_places: bool = False


def parse_value(text: str) -> Fraction:
    """Read a number as sexagesimal ("1;40", "2,53,20") or as "p/q" / integer."""
    text = text.strip()
    if ";" in text or "," in text:
        return sex_to_rational(parse_sex(text))
    if _RATIO_RE.match(text):
        numerator, denominator = text.split("/")
        if int(denominator) == 0:
            raise ParseError("zero denominator")
        return Fraction(int(numerator), int(denominator))
    if _INT_RE.match(text):
        return Fraction(int(text))
    return sex_to_rational(parse_sex(text))


def _decimal_str(x: Fraction, places: int) -> str:
    sign = "-" if x < 0 else ""
    magnitude = abs(x)
    whole, rem = divmod(magnitude.numerator, magnitude.denominator)
    if places == 0:
        return f"{sign}{whole}"
    digits = rem * 10**places // magnitude.denominator
    return f"{sign}{whole}.{digits:0{places}d}"


def _decimal_sqrt_str(x: Fraction, places: int) -> str:
    scaled = math.isqrt(x.numerator * 10 ** (2 * places) // x.denominator)
    if places == 0:
        return str(scaled)
    return f"{scaled // 10**places}.{scaled % 10**places:0{places}d}"


def render(x: Fraction, cfg: OutputConfig) -> str:
    """One value as text in the configured numeral mode (table output)."""
    if cfg.numeral == "rat":
        return str(x)
    if cfg.numeral == "dec":
        return f"{_decimal_str(x, cfg.places)} (approx)"
    try:
        return str(rational_to_sex(x, MAX_EXACT_PLACES))
    except (NonTerminatingError, PlacesExceededError):
        value, exact = truncate_sex(x, cfg.places)
        return str(value) if exact else f"{value} (truncated)"


def value_record(x: Fraction) -> dict:
    """The JSON shape for one exact value: rational always, base-60 when it exists."""
    try:
        sexagesimal = str(rational_to_sex(x, MAX_EXACT_PLACES))
    except (NonTerminatingError, PlacesExceededError):
        sexagesimal = None
    return {"rational": str(x), "sexagesimal": sexagesimal}


def _emit(record: dict) -> None:
    print(json.dumps(record))


def cmd_convert(args: argparse.Namespace, cfg: OutputConfig) -> int:
    value = parse_value(args.value)
    sex_text: str | None
    try:
        sex_text = str(
            rational_to_sex(value, cfg.places if cfg.explicit_places else MAX_EXACT_PLACES)
        )
        truncated = False
    except (NonTerminatingError, PlacesExceededError):
        if cfg.numeral == "sex" and not cfg.explicit_places:
            raise
        approx, exact = truncate_sex(value, cfg.places)
        sex_text = str(approx)
        truncated = not exact
    if cfg.format == "jsonl":
        _emit({"rational": str(value), "sexagesimal": sex_text, "truncated": truncated})
        return EXIT_OK
    if cfg.numeral == "rat":
        print(value)
    elif cfg.numeral == "dec":
        print(f"{_decimal_str(value, cfg.places)} (approx)")
    else:
        print(f"{sex_text} (truncated)" if truncated else sex_text)
    return EXIT_OK


def cmd_bisect(args: argparse.Namespace, cfg: OutputConfig) -> int:
    upper = parse_value(args.upper)
    lower = parse_value(args.lower)
    result = geometry.transversal_bisector(upper, lower)
    if cfg.format == "jsonl":
        _emit(
            {
                "d_sq": value_record(result.value_sq),
                "d": value_record(result.exact_root) if result.exact_root is not None else None,
                "d_truncated": None
                if result.exact_root is not None
                else str(sqrt_sex(result.value_sq, cfg.places)),
            }
        )
        return EXIT_OK
    print(f"d^2 = {render(result.value_sq, cfg)}")
    if result.exact_root is not None:
        print(f"d = {render(result.exact_root, cfg)}")
    elif cfg.numeral == "rat":
        print(f"d = sqrt({result.value_sq})")
    elif cfg.numeral == "dec":
        print(f"d = {_decimal_sqrt_str(result.value_sq, cfg.places)} (approx)")
    else:
        print(f"d = {sqrt_sex(result.value_sq, cfg.places)} (truncated)")
    return EXIT_OK


def cmd_strips(args: argparse.Namespace, cfg: OutputConfig) -> int:
    trap = geometry.Trapezoid(
        parse_value(args.upper), parse_value(args.lower), parse_value(args.height)
    )
    n = args.n
    if cfg.format != "jsonl":
        print("k\td\tS\tS'")
    for k in range(n + 1):
        d = geometry.transversal_at(trap, k, n)
        left = geometry.cumulative_area(trap, k, n)
        right = geometry.complement_area(trap, k, n)
        if cfg.format == "jsonl":
            _emit(
                {
                    "k": k,
                    "d": value_record(d),
                    "S": value_record(left),
                    "S_prime": value_record(right),
                }
            )
        else:
            print(f"{k}\t{render(d, cfg)}\t{render(left, cfg)}\t{render(right, cfg)}")
    return EXIT_OK


_PLAN_KEYS = (
    ("c", "left_edge"),
    ("e", "right_edge"),
    ("d_mid", "midline"),
    ("x", "edge_diff"),
    ("h0", "wall_thickness"),
    ("h1", "left_height"),
    ("h2", "right_height"),
    ("S_left", "left_area"),
    ("S_wall", "wall_area"),
    ("S_right", "right_area"),
)


def plan_record(plan: PartyWallPlan) -> dict:
    return {key: value_record(getattr(plan, attr)) for key, attr in _PLAN_KEYS}


def cmd_wall(args: argparse.Namespace, cfg: OutputConfig) -> int:
    trap = geometry.Trapezoid(
        parse_value(args.upper), parse_value(args.lower), parse_value(args.height)
    )
    indices = wall_solver.solve_k0(trap.upper, trap.lower, args.n)
    if not indices:
        stream = sys.stderr if cfg.format == "jsonl" else sys.stdout
        print("no admissible wall", file=stream)
        return EXIT_NO_SOLUTION
    for k0 in indices:
        plan = party_wall.plan_wall(trap, args.n, k0)
        if cfg.format == "jsonl":
            record = {"k0": k0}
            record.update(plan_record(plan))
            _emit(record)
        else:
            print(f"k0 = {k0}")
            for key, attr in _PLAN_KEYS:
                print(f"{key} = {render(getattr(plan, attr), cfg)}")
    return EXIT_OK


def cmd_search(args: argparse.Namespace, cfg: OutputConfig) -> int:
    hits = wall_solver.search_hits(
        args.r_lo, args.r_hi, args.n_lo, args.n_hi, regular_only=args.regular_only
    )
    cases = (args.r_hi - args.r_lo + 1) * (args.n_hi - args.n_lo + 1)
    if cfg.format == "jsonl":
        for hit in hits:
            _emit({"r": hit.r, "n": hit.n, "k0": hit.k0, "n_regular": hit.n_regular})
        _emit({"cases": cases, "hits": len(hits)})
    else:
        print("r\tn\tk0\tn_regular")
        for hit in hits:
            print(f"{hit.r}\t{hit.n}\t{hit.k0}\t{'yes' if hit.n_regular else 'no'}")
        print(f"{cases} cases, {len(hits)} hits")
    return EXIT_OK


def _step_record(step: TraceStep) -> dict:
    return {
        "label": step.label,
        "description": step.description,
        "rational": str(step.value),
        "sexagesimal": str(step.sex),
        "truncated": step.truncated,
    }


def cmd_smt26(args: argparse.Namespace, cfg: OutputConfig) -> int:
    if args.part == "reverse":
        steps = party_wall.scribe_trace_smt26()
        plan = party_wall.plan_wall(
            geometry.Trapezoid(Fraction(5, 3), Fraction(1, 3), 1), 10, 4
        )
        total = plan.left_area + plan.wall_area + plan.right_area
        check: TraceStep | None = party_wall.TraceStep(
            "check",
            "S_left + S_wall + S_right",
            total,
            rational_to_sex(total, MAX_EXACT_PLACES),
        )
    else:
        steps = party_wall.scribe_trace_obverse1()
        check = None
    for step in steps:
        if cfg.format == "jsonl":
            _emit(_step_record(step))
        else:
            suffix = " (truncated)" if step.truncated else ""
            print(f"{step.label}\t{step.description}\t{step.sex}{suffix}")
    if check is not None:
        if cfg.format == "jsonl":
            _emit(_step_record(check))
        else:
            print(f"{check.label}\t{check.description}\t{check.sex}")
    return EXIT_OK


def _places_flag(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid places {text!r}")
    if not 0 <= value <= MAX_EXACT_PLACES:
        raise argparse.ArgumentTypeError("places must be in 0..20")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "jsonl"), default="table")
    common.add_argument("--numeral", choices=("sex", "rat", "dec"), default="sex")
    common.add_argument("--places", type=_places_flag, default=None)

    parser = argparse.ArgumentParser(
        prog="trapwall",
        description="Exact trapezoid bisection by transversal strips, in base 60.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", parents=[common], help="convert between numeral systems")
    p.add_argument("value")
    p.set_defaults(handler=cmd_convert)

    p = sub.add_parser("bisect", parents=[common], help="transversal bisector of a trapezoid")
    p.add_argument("upper")
    p.add_argument("lower")
    p.set_defaults(handler=cmd_bisect)

    p = sub.add_parser("strips", parents=[common], help="transversals and strip areas")
    p.add_argument("upper")
    p.add_argument("lower")
    p.add_argument("height")
    p.add_argument("n", type=int)
    p.set_defaults(handler=cmd_strips)

    p = sub.add_parser("wall", parents=[common], help="solve for a bisecting party wall")
    p.add_argument("upper")
    p.add_argument("lower")
    p.add_argument("height")
    p.add_argument("n", type=int)
    p.set_defaults(handler=cmd_wall)

    p = sub.add_parser("search", parents=[common], help="scan ratios and strip counts")
    p.add_argument("r_lo", type=int)
    p.add_argument("r_hi", type=int)
    p.add_argument("n_lo", type=int)
    p.add_argument("n_hi", type=int)
    p.add_argument("--regular-only", action="store_true")
    p.set_defaults(handler=cmd_search)

    p = sub.add_parser("smt26", parents=[common], help="replay the tablet's computations")
    p.add_argument("--part", choices=("reverse", "obverse1"), default="reverse")
    p.set_defaults(handler=cmd_smt26)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = OutputConfig(
        format=args.format,
        numeral=args.numeral,
        places=args.places if args.places is not None else DEFAULT_PLACES,
        explicit_places=args.places is not None,
    )
    try:
        return args.handler(args, cfg)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SYNTAX
    except (NonTerminatingError, PlacesExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REPRESENTATION
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def run() -> None:
    sys.exit(main())
