"""Tests for the wall quadratic, discriminant kernel and the (r, n) search."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trapwall.errors import DomainError, IrrationalRootsError
from trapwall.geometry import Trapezoid
from trapwall.wall_solver import (
    SearchHit,
    discriminant,
    discriminant_kernel,
    k0_closed_form,
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

widths = st.fractions(min_value=Fraction(1, 60), max_value=60, max_denominator=60)


def test_wall_quadratic_coefficients():
    quad = wall_quadratic(5, 1, 10)
    assert (quad.lead, quad.linear, quad.constant) == (8, -208, 704)
    assert quad.evaluate(4) == 0 and quad.evaluate(22) == 0
    quad = wall_quadratic(17, 1, 8)
    assert (quad.lead, quad.linear, quad.constant) == (32, -576, 1440)
    assert quad.evaluate(3) == 0 and quad.evaluate(15) == 0
    with pytest.raises(DomainError):
        wall_quadratic(1, 1, 5)
    with pytest.raises(DomainError):
        wall_quadratic(5, 1, 2)


def test_discriminant_examples():
    assert discriminant(5, 1, 10) == 20736 == 144**2
    assert discriminant(1, 1, 2) == 64
    assert discriminant(17, 1, 8) == 147456 == 384**2
    with pytest.raises(DomainError):
        discriminant(0, 1, 5)
    with pytest.raises(DomainError):
        discriminant(2, 1, 1)


def test_discriminant_kernel_examples():
    assert discriminant_kernel(5, 10) == 5184 == 72**2
    assert discriminant_kernel(17, 8) == 36864 == 192**2
    assert discriminant_kernel(2, 3) == 89
    with pytest.raises(DomainError):
        discriminant_kernel(1, 10)
    with pytest.raises(DomainError):
        discriminant_kernel(5, 2)


def test_discriminant_positivity_grid():
    for r in range(2, 51):
        for n in range(3, 201):
            assert discriminant(r, 1, n) > 0


def test_kernel_scales_discriminant():
    for r, n in ((5, 10), (2, 3), (17, 8), (7, 19)):
        for b in (1, 2, Fraction(1, 3), Fraction(7, 5)):
            assert discriminant(r * Fraction(b), Fraction(b), n) == 4 * Fraction(b) ** 2 * discriminant_kernel(r, n)


def test_k0_closed_form_examples():
    assert k0_closed_form(5, 10) == (4, 22)
    assert k0_closed_form(17, 8) == (3, 15)
    with pytest.raises(IrrationalRootsError):
        k0_closed_form(2, 3)


def test_k0_closed_form_matches_quadratic_roots():
    for r, n, _ in TABLE1:
        low, high = k0_closed_form(r, n)
        quad = wall_quadratic(r, 1, n)
        assert quad.evaluate(low) == 0 and quad.evaluate(high) == 0
        assert low < high


def test_solve_k0_examples():
    assert solve_k0(5, 1, 10) == [4]
    assert solve_k0(17, 1, 8) == [3]
    assert solve_k0(2, 1, 5) == []
    with pytest.raises(DomainError):
        solve_k0(1, 1, 10)


def test_solve_k0_rational_widths():
    # SMT 26 data: same ratio as (5, 1), so the same index must come out.
    assert solve_k0(Fraction(5, 3), Fraction(1, 3), 10) == [4]
    assert solve_k0(Fraction(5, 7), Fraction(1, 7), 10) == [4]


def test_verify_split_examples():
    smt26 = Trapezoid(Fraction(5, 3), Fraction(1, 3), 1)
    assert verify_split(smt26, 10, 4)
    assert not verify_split(smt26, 10, 5)
    with pytest.raises(DomainError):
        verify_split(Trapezoid(1, 1, 1), 10, 4)
    with pytest.raises(DomainError):
        verify_split(smt26, 10, 1)
    with pytest.raises(DomainError):
        verify_split(smt26, 10, 10)


def test_search_hits_reproduces_table1():
    hits = search_hits(2, 20, 3, 1000)
    assert [(h.r, h.n, h.k0) for h in hits] == TABLE1
    regular_ns = {10, 25, 20, 8}
    for hit in hits:
        assert hit.n_regular == (hit.n in regular_ns)


def test_search_hits_regular_only():
    hits = search_hits(2, 20, 3, 1000, regular_only=True)
    assert [(h.r, h.n, h.k0) for h in hits] == [(5, 10, 4), (6, 25, 9), (9, 20, 7)]
    assert all(h.n_regular for h in hits)


def test_search_hits_validates_ranges():
    with pytest.raises(DomainError):
        search_hits(1, 20, 3, 1000)
    with pytest.raises(DomainError):
        search_hits(2, 20, 2, 1000)
    with pytest.raises(DomainError):
        search_hits(20, 2, 3, 1000)


def test_search_hit_record():
    assert search_hits(5, 5, 10, 10) == [SearchHit(r=5, n=10, k0=4, n_regular=True)]


def test_solve_k0_agrees_with_exhaustive_oracle():
    # Integer ratios 2..12, any strip count up to 40: the solver finds exactly
    # the indices the brute-force oracle accepts.
    for ratio in range(2, 13):
        trap = Trapezoid(ratio, 1, 1)
        for n in range(3, 41):
            from_oracle = [k for k in range(2, n) if verify_split(trap, n, k)]
            assert solve_k0(trap.upper, trap.lower, n) == from_oracle


@given(widths, widths, st.integers(min_value=3, max_value=100))
@settings(max_examples=300)
def test_quadratic_discriminant_consistency(lower, delta, n):
    upper = lower + delta
    quad = wall_quadratic(upper, lower, n)
    assert quad.linear**2 - 4 * quad.lead * quad.constant == discriminant(upper, lower, n)


@given(widths, widths, widths, st.integers(min_value=3, max_value=60))
@settings(max_examples=300)
def test_solve_k0_scale_invariance(lower, delta, scale, n):
    upper = lower + delta
    assert solve_k0(scale * upper, scale * lower, n) == solve_k0(upper, lower, n)


def test_every_hit_passes_oracle():
    for r, n, k0 in TABLE1:
        assert verify_split(Trapezoid(r, 1, 7), n, k0)
