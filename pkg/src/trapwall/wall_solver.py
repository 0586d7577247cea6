"""Which strip of an n-strip partition bisects a trapezoid, and for which shapes.

Choosing strip k0 of n as a party wall leaves equal shares iff k0 solves

    2(a-b) k0^2 - (4na - 2b + 2a) k0 + n^2(a+b) + 2na + a - b = 0

with a, b the widths. Natural solutions in 1 < k0 < n are rare: they need the
discriminant to be a perfect square. With a = r*b the discriminant reduces to
4 b^2 * kernel(r, n), kernel(r, n) = (2n^2 - 1)(r^2 + 1) + 2r, so the search
over integer ratios scans kernel values for perfect squares.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, IrrationalRootsError
from .geometry import Rational, Trapezoid, _frac, transversal_at
from .sexagesimal import is_regular


@dataclass(frozen=True)
class WallQuadratic:
    """Exact coefficients of lead*k^2 + linear*k + constant = 0."""

    lead: Fraction
    linear: Fraction
    constant: Fraction

    def evaluate(self, k: Rational) -> Fraction:
        k = Fraction(k)
        return self.lead * k * k + self.linear * k + self.constant


@dataclass(frozen=True)
class SearchHit:
    """An admissible triple: width ratio r, strip count n, wall index k0."""

    r: int
    n: int
    k0: int
    n_regular: bool


def _check_widths(upper: Rational, lower: Rational) -> tuple[Fraction, Fraction]:
    a = _frac(upper, "upper width")
    b = _frac(lower, "lower width")
    if not a > b > 0:
        raise DomainError("wall problems need upper > lower > 0")
    return a, b


def wall_quadratic(upper: Rational, lower: Rational, n: int) -> WallQuadratic:
    """The quadratic in the wall index for a trapezoid cut into n strips."""
    a, b = _check_widths(upper, lower)
    if not isinstance(n, int) or n < 3:
        raise DomainError("strip count must be an integer >= 3")
    return WallQuadratic(
        lead=2 * (a - b),
        linear=-(4 * n * a - 2 * b + 2 * a),
        constant=n * n * (a + b) + 2 * n * a + a - b,
    )


def discriminant(upper: Rational, lower: Rational, n: int) -> Fraction:
    """Discriminant 4(2n^2-1)(a^2 + b^2) + 8ab of the wall quadratic; always positive."""
    a = _frac(upper, "upper width")
    b = _frac(lower, "lower width")
    if a <= 0 or b <= 0:
        raise DomainError("widths must be positive")
    if not isinstance(n, int) or n < 2:
        raise DomainError("strip count must be an integer >= 2")
    return 4 * (2 * n * n - 1) * (a * a + b * b) + 8 * a * b


def discriminant_kernel(r: int, n: int) -> int:
    """(2n^2 - 1)(r^2 + 1) + 2r; the discriminant at a = r*b is 4 b^2 times this."""
    if not isinstance(r, int) or r < 2:
        raise DomainError("ratio must be an integer >= 2")
    if not isinstance(n, int) or n < 3:
        raise DomainError("strip count must be an integer >= 3")
    return (2 * n * n - 1) * (r * r + 1) + 2 * r


def k0_closed_form(r: int, n: int) -> tuple[Fraction, Fraction]:
    """Both roots ((2n+1)r - 1 -+ sqrt(kernel)) / (2(r-1)), ascending.

    Raises IrrationalRootsError when the kernel is not a perfect square.
    """
    kern = discriminant_kernel(r, n)
    root = math.isqrt(kern)
    if root * root != kern:
        raise IrrationalRootsError(f"kernel {kern} is not a perfect square")
    base = (2 * n + 1) * r - 1
    den = 2 * (r - 1)
    return Fraction(base - root, den), Fraction(base + root, den)


def solve_k0(upper: Rational, lower: Rational, n: int) -> list[int]:
    """All integer wall indices strictly between 1 and n solving the quadratic.

    Works for arbitrary rational widths: the quadratic is cleared to integer
    coefficients and integer roots are extracted by a perfect-square
    discriminant test plus divisibility, with no floating point anywhere.
    """
    quad = wall_quadratic(upper, lower, n)
    scale = math.lcm(
        quad.lead.denominator, quad.linear.denominator, quad.constant.denominator
    )
    lead = int(quad.lead * scale)
    linear = int(quad.linear * scale)
    constant = int(quad.constant * scale)
    disc = linear * linear - 4 * lead * constant
    if disc < 0:
        return []
    root = math.isqrt(disc)
    if root * root != disc:
        return []
    found = set()
    for numerator in (-linear - root, -linear + root):
        quotient, rem = divmod(numerator, 2 * lead)
        if rem == 0 and 1 < quotient < n:
            found.add(quotient)
    return sorted(found)


def verify_split(trap: Trapezoid, n: int, k0: int) -> bool:
    """Brute-force oracle: sum the strip areas on each side of strip k0 and compare.

    Deliberately independent of the quadratic and of the closed-form strip
    areas; uses only the transversal widths and elementary trapezoid areas.
    """
    if trap.upper == trap.lower:
        raise DomainError("wall problems need upper > lower")
    if not isinstance(n, int) or not isinstance(k0, int) or not 1 < k0 < n:
        raise DomainError(f"need integers with 1 < k0 < n, got k0={k0}, n={n}")

    def strip(i: int) -> Fraction:
        widths = transversal_at(trap, i - 1, n) + transversal_at(trap, i, n)
        return widths / 2 * trap.height / n

    left = sum(strip(i) for i in range(1, k0))
    right = sum(strip(i) for i in range(k0 + 1, n + 1))
    return left == right


def search_hits(
    r_lo: int, r_hi: int, n_lo: int, n_hi: int, regular_only: bool = False
) -> list[SearchHit]:
    """Scan integer ratios r and strip counts n for admissible wall indices.

    Hits are emitted in (r, n, k0) lexicographic order. With regular_only,
    only configurations a sexagesimal scribe could use exactly are kept:
    both the ratio and the strip count must be regular numbers.
    """
    for name, value in (("r_lo", r_lo), ("r_hi", r_hi), ("n_lo", n_lo), ("n_hi", n_hi)):
        if not isinstance(value, int):
            raise DomainError(f"{name} must be an integer")
    if not 2 <= r_lo <= r_hi:
        raise DomainError("need 2 <= r_lo <= r_hi")
    if not 3 <= n_lo <= n_hi:
        raise DomainError("need 3 <= n_lo <= n_hi")

    hits = []
    for r in range(r_lo, r_hi + 1):
        for n in range(n_lo, n_hi + 1):
            kern = (2 * n * n - 1) * (r * r + 1) + 2 * r
            root = math.isqrt(kern)
            if root * root != kern:
                continue
            base = (2 * n + 1) * r - 1
            den = 2 * (r - 1)
            found = []
            for numerator in (base - root, base + root):
                quotient, rem = divmod(numerator, den)
                if rem == 0 and 1 < quotient < n:
                    found.append(quotient)
            if not found:
                continue
            # Each companion root must be accounted for: outside (1, n) or found.
            for numerator in (base - root, base + root):
                companion = Fraction(numerator, den)
                assert (
                    companion <= 1
                    or companion >= n
                    or (companion.denominator == 1 and int(companion) in found)
                )
            n_reg = is_regular(n) is not None
            if regular_only and not (n_reg and is_regular(r) is not None):
                continue
            for k0 in sorted(found):
                assert verify_split(Trapezoid(r, 1, 1), n, k0)
                hits.append(SearchHit(r=r, n=n, k0=k0, n_regular=n_reg))
    return hits
