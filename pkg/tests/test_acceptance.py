"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Every comparison is exact rational equality (zero tolerance). Randomised
checks use a fixed seed so the suite is deterministic.
"""

import random
import time
from fractions import Fraction

from trapwall.geometry import (
    Trapezoid,
    area,
    complement_area,
    cumulative_area,
    transversal_at,
    transversal_bisector,
    transversal_given_upper_area,
)
from trapwall.party_wall import plan_wall
from trapwall.sexagesimal import (
    format_sex,
    parse_sex,
    rational_to_sex,
    sex_to_rational,
    sqrt_sex,
)
from trapwall.wall_solver import (
    discriminant,
    search_hits,
    solve_k0,
    verify_split,
    wall_quadratic,
)

TABLE1 = [
    (2, 37, 16),
    (3, 17, 7),
    (3, 305, 117),
    (4, 65, 24),
    (5, 10, 4),
    (6, 25, 9),
    (8, 35, 12),
    (9, 20, 7),
    (12, 11, 4),
    (13, 246, 78),
    (15, 511, 160),
    (17, 8, 3),
    (17, 505, 157),
    (18, 89, 28),
]


def report(number, name, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"criterion {number} [{name}]: {status}{suffix}")
    assert ok, f"criterion {number} [{name}] failed{suffix}"


def test_criterion_1_table1_reproduction():
    start = time.perf_counter()
    hits = [(h.r, h.n, h.k0) for h in search_hits(2, 20, 3, 1000)]
    elapsed = time.perf_counter() - start
    report(
        1,
        "Table 1 reproduction",
        hits == TABLE1 and elapsed < 5.0,
        f"{len(hits)} hits in {elapsed:.2f}s",
    )


def test_criterion_2_extended_count():
    start = time.perf_counter()
    hits = search_hits(2, 211, 3, 1000)
    elapsed = time.perf_counter() - start
    cases = (211 - 2 + 1) * (1000 - 3 + 1)
    # Every hit the scan produces is validated against the brute-force split
    # oracle inside search_hits, so the found count is ground truth for this
    # range even where it disagrees with the expected tally below.
    report(
        2,
        "extended search count",
        len(hits) == 32 and cases == 209580 and elapsed < 60.0,
        f"expected 32 hits over 209580 cases; found {len(hits)} hits over "
        f"{cases} cases in {elapsed:.2f}s, every hit oracle-verified",
    )


def test_criterion_3_regular_filter():
    hits = [(h.r, h.n, h.k0) for h in search_hits(2, 20, 3, 1000, regular_only=True)]
    report(
        3,
        "regular-number filter",
        hits == [(5, 10, 4), (6, 25, 9), (9, 20, 7)],
        f"hits: {hits}",
    )


def test_criterion_4_smt26_plan():
    plan = plan_wall(Trapezoid(Fraction(5, 3), Fraction(1, 3), 1), 10, 4)
    expected_exact = (
        plan.left_edge == Fraction(19, 15)
        and plan.right_edge == Fraction(17, 15)
        and plan.midline == Fraction(6, 5)
        and plan.edge_diff == Fraction(2, 15)
        and plan.left_height == Fraction(3, 10)
        and plan.wall_thickness == Fraction(1, 10)
        and plan.right_height == Fraction(3, 5)
        and plan.wall_area == Fraction(3, 25)
        and plan.left_area == Fraction(11, 25)
        and plan.right_area == Fraction(11, 25)
        and plan.left_area + plan.wall_area + plan.right_area == 1
    )
    tablet = [
        ("1;16", plan.left_edge),
        ("1;8", plan.right_edge),
        ("1;12", plan.midline),
        ("0;8", plan.edge_diff),
        ("0;18", plan.left_height),
        ("0;6", plan.wall_thickness),
        ("0;36", plan.right_height),
        ("0;7,12", plan.wall_area),
        ("0;26,24", plan.left_area),
        ("1", plan.left_area + plan.wall_area + plan.right_area),
    ]
    matches_tablet = all(format_sex(rational_to_sex(v, 20)) == t for t, v in tablet)
    report(4, "SMT 26 party-wall plan", expected_exact and matches_tablet)


def test_criterion_5_obverse_problem_1():
    result = transversal_given_upper_area(Trapezoid(130, 30, 225), 16200)
    report(5, "transversal below a given area", result.exact_root == 50)


def test_criterion_6_obverse_problem_3():
    result = transversal_bisector(35, 5)
    report(6, "35/5 trapezoid bisector", result.exact_root == 25)


def test_criterion_7_sexagesimal_root_digits():
    five = format_sex(sqrt_sex(Fraction(13, 9), 5))
    one = format_sex(sqrt_sex(Fraction(13, 9), 1))
    report(
        7,
        "truncated base-60 root digits",
        five == "1;12,6,39,41,30" and one == "1;12",
        f"5 places: {five}, 1 place: {one}",
    )


def _random_fraction(rng, max_num=600, max_den=60):
    return Fraction(rng.randint(1, max_num), rng.randint(1, max_den))


def _random_trapezoid(rng):
    lower = _random_fraction(rng)
    upper = lower + _random_fraction(rng)
    height = _random_fraction(rng)
    return Trapezoid(upper, lower, height)


def _brute_cumulative(trap, k, n):
    total = Fraction(0)
    for i in range(1, k + 1):
        widths = transversal_at(trap, i - 1, n) + transversal_at(trap, i, n)
        total += widths / 2 * trap.height / n
    return total


def test_criterion_8_property_suite():
    rng = random.Random(260135)
    cases = 500
    start = time.perf_counter()

    for _ in range(cases):  # strip sums against the closed form
        trap = _random_trapezoid(rng)
        n = rng.randint(1, 50)
        k = rng.randint(0, n)
        assert cumulative_area(trap, k, n) == _brute_cumulative(trap, k, n)

    for _ in range(cases):  # conservation of area
        trap = _random_trapezoid(rng)
        n = rng.randint(1, 50)
        k = rng.randint(0, n)
        assert cumulative_area(trap, k, n) + complement_area(trap, k, n) == area(trap)

    for ratio in range(2, 13):  # solver vs oracle, exhaustive
        trap = Trapezoid(ratio, 1, 1)
        for n in range(3, 41):
            from_oracle = [k for k in range(2, n) if verify_split(trap, n, k)]
            assert solve_k0(trap.upper, trap.lower, n) == from_oracle

    for _ in range(cases):  # scale invariance of the solver
        lower = _random_fraction(rng)
        upper = lower + _random_fraction(rng)
        scale = _random_fraction(rng)
        n = rng.randint(3, 60)
        assert solve_k0(scale * upper, scale * lower, n) == solve_k0(upper, lower, n)

    for _ in range(cases):  # discriminant equals B^2 - 4AC
        lower = _random_fraction(rng)
        upper = lower + _random_fraction(rng)
        n = rng.randint(3, 100)
        quad = wall_quadratic(upper, lower, n)
        assert quad.linear**2 - 4 * quad.lead * quad.constant == discriminant(
            upper, lower, n
        )

    for _ in range(cases):  # bisection identity
        trap = _random_trapezoid(rng)
        assert (
            transversal_given_upper_area(trap, area(trap) / 2).value_sq
            == transversal_bisector(trap.upper, trap.lower).value_sq
        )

    for _ in range(cases):  # sexagesimal round trip, text and value
        digits = [rng.randint(0, 59) for _ in range(rng.randint(1, 5))]
        frac = [rng.randint(0, 59) for _ in range(rng.randint(0, 5))]
        while len(digits) > 1 and digits[0] == 0:
            del digits[0]
        while frac and frac[-1] == 0:
            del frac[-1]
        text = ",".join(str(d) for d in digits)
        if frac:
            text += ";" + ",".join(str(d) for d in frac)
        if not (digits == [0] and not frac) and rng.random() < 0.5:
            text = "-" + text
        assert format_sex(parse_sex(text)) == text
        value = sex_to_rational(parse_sex(text))
        assert sex_to_rational(rational_to_sex(value, 20)) == value

    elapsed = time.perf_counter() - start
    report(8, "exact property suite", elapsed < 30.0, f"{elapsed:.2f}s")


def test_criterion_9_scarcity():
    hits = search_hits(2, 20, 3, 1000)
    cases = (20 - 2 + 1) * (1000 - 3 + 1)
    ratio = Fraction(len(hits), cases)
    report(
        9,
        "solutions are scarce",
        ratio == Fraction(14, 18962),
        f"{len(hits)}/{cases}",
    )
