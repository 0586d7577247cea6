"""Closed-form bisector lengths and strip areas for trapezoids, all exact.

Lengths that are generally irrational (bisectors, medians, diagonals) are
carried as QuadraticLength: the exact square plus the exact root when the
square happens to be a perfect rational square. Nothing in this module is
ever approximated; truncation to base-60 digits is the caller's business.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .sexagesimal import isqrt

Rational = Fraction | int | str


def _frac(value: Rational, what: str) -> Fraction:
    if isinstance(value, float):
        raise DomainError(f"{what} must be exact (int, Fraction or string), not float")
    return Fraction(value)


def _index_pair(k: int, n: int) -> None:
    if not isinstance(k, int) or not isinstance(n, int):
        raise DomainError("strip indices must be integers")
    if n < 1 or not 0 <= k <= n:
        raise DomainError(f"need n >= 1 and 0 <= k <= n, got k={k}, n={n}")


@dataclass(frozen=True)
class Trapezoid:
    """Widths and height of a trapezoid: upper >= lower > 0, height > 0."""

    upper: Fraction
    lower: Fraction
    height: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "upper", _frac(self.upper, "upper width"))
        object.__setattr__(self, "lower", _frac(self.lower, "lower width"))
        object.__setattr__(self, "height", _frac(self.height, "height"))
        if not self.upper >= self.lower > 0:
            raise DomainError("widths must satisfy upper >= lower > 0")
        if self.height <= 0:
            raise DomainError("height must be positive")


@dataclass(frozen=True)
class QuadraticLength:
    """A length stored exactly as its square, with the root when rational."""

    value_sq: Fraction
    exact_root: Fraction | None

    @classmethod
    def from_square(cls, value_sq: Fraction) -> "QuadraticLength":
        if value_sq < 0:
            raise DomainError("squared length cannot be negative")
        num_root, num_ok = isqrt(value_sq.numerator)
        den_root, den_ok = isqrt(value_sq.denominator)
        root = Fraction(num_root, den_root) if num_ok and den_ok else None
        return cls(value_sq, root)


@dataclass(frozen=True)
class NestedRadical:
    """outer + coefficient * sqrt(inner_sq), kept symbolic when inner_sq is not a square."""

    outer: Fraction
    coefficient: Fraction
    inner_sq: Fraction


def area(trap: Trapezoid) -> Fraction:
    """Exact area height * (upper + lower) / 2."""
    return trap.height * (trap.upper + trap.lower) / 2


def transversal_bisector(upper: Rational, lower: Rational) -> QuadraticLength:
    """Length of the transversal splitting the trapezoid into equal areas.

    Its square is (upper^2 + lower^2) / 2, independent of the height.
    """
    a = _frac(upper, "upper width")
    b = _frac(lower, "lower width")
    if not a >= b > 0:
        raise DomainError("widths must satisfy upper >= lower > 0")
    return QuadraticLength.from_square((a * a + b * b) / 2)


def transversal_at(trap: Trapezoid, k: int, n: int) -> Fraction:
    """Width of the k-th of n equally spaced transversals: linear interpolation."""
    _index_pair(k, n)
    t = Fraction(k, n)
    return (1 - t) * trap.upper + t * trap.lower


def cumulative_area(trap: Trapezoid, k: int, n: int) -> Fraction:
    """Total area of the first k of n equal-height strips (from the wide end)."""
    _index_pair(k, n)
    t = Fraction(k, n)
    return (t * trap.height / 2) * ((2 - t) * trap.upper + t * trap.lower)


def complement_area(trap: Trapezoid, k: int, n: int) -> Fraction:
    """Area right of the k-th transversal: whole area minus cumulative_area."""
    _index_pair(k, n)
    return area(trap) - cumulative_area(trap, k, n)


def transversal_given_upper_area(trap: Trapezoid, upper_area: Rational) -> QuadraticLength:
    """Transversal width cutting off a prescribed area next to the wide end.

    d^2 = upper^2 - 2 (upper - lower) * upper_area / height.
    """
    s1 = _frac(upper_area, "upper area")
    if not 0 <= s1 <= area(trap):
        raise DomainError("prescribed area must lie within [0, area]")
    d_sq = trap.upper**2 - 2 * (trap.upper - trap.lower) * s1 / trap.height
    return QuadraticLength.from_square(d_sq)


def midpoint_connector(trap: Trapezoid) -> QuadraticLength:
    """Segment joining the midpoints of the two widths (right-trapezoid reading).

    d^2 = height^2 + ((upper - lower) / 2)^2; equal areas but height-dependent.
    """
    half_diff = (trap.upper - trap.lower) / 2
    return QuadraticLength.from_square(trap.height**2 + half_diff**2)


def midpoint_connector_from_leg(
    upper: Rational, lower: Rational, leg: Rational
) -> QuadraticLength:
    """Midpoint connector from the slant leg instead of the height.

    Assumes the right-trapezoid relation leg^2 = height^2 + (upper - lower)^2,
    which forces leg^2 > (upper - lower)^2 for a positive height.
    d^2 = leg^2 - 3 ((upper - lower) / 2)^2.
    """
    a = _frac(upper, "upper width")
    b = _frac(lower, "lower width")
    c = _frac(leg, "leg")
    if not a >= b > 0:
        raise DomainError("widths must satisfy upper >= lower > 0")
    if c <= 0 or c * c <= (a - b) ** 2:
        raise DomainError("leg too short for a positive height")
    return QuadraticLength.from_square(c * c - 3 * ((a - b) / 2) ** 2)


def triangle_median(a: Rational, b: Rational, base: Rational) -> QuadraticLength:
    """Median to `base` in a triangle with sides a, b, base; it halves the area.

    m^2 = (2 a^2 + 2 b^2 - base^2) / 4.
    """
    sa = _frac(a, "side a")
    sb = _frac(b, "side b")
    sc = _frac(base, "base")
    if min(sa, sb, sc) <= 0 or sa + sb <= sc or sa + sc <= sb or sb + sc <= sa:
        raise DomainError("sides must form a nondegenerate triangle")
    return QuadraticLength.from_square((2 * sa**2 + 2 * sb**2 - sc**2) / 4)


def triangle_parallel_bisector(base: Rational) -> QuadraticLength:
    """Transversal parallel to `base` halving the triangle: d^2 = base^2 / 2."""
    c = _frac(base, "base")
    if c <= 0:
        raise DomainError("base must be positive")
    return QuadraticLength.from_square(c * c / 2)


def parallelogram_diagonal(
    a: Rational, b: Rational, height: Rational
) -> QuadraticLength | NestedRadical:
    """Diagonal of a parallelogram with sides a, b and height over the b side.

    D^2 = a^2 + b^2 + 2 b sqrt(a^2 - height^2). When the inner radical is not
    a perfect rational square the nested-radical form is returned instead of
    an approximation.
    """
    sa = _frac(a, "side a")
    sb = _frac(b, "side b")
    h = _frac(height, "height")
    if sb <= 0 or h <= 0:
        raise DomainError("side b and height must be positive")
    if h > sa:
        raise DomainError("height cannot exceed side a")
    inner_sq = sa * sa - h * h
    inner = QuadraticLength.from_square(inner_sq)
    if inner.exact_root is None:
        return NestedRadical(outer=sa * sa + sb * sb, coefficient=2 * sb, inner_sq=inner_sq)
    return QuadraticLength.from_square(sa * sa + sb * sb + 2 * sb * inner.exact_root)
