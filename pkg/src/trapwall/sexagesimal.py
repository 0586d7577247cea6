"""Exact base-60 numerals: parsing, formatting, regular numbers and square roots.

Notation is absolute (not floating): ";" separates the integer part from the
fractional part and "," separates digits, so "1;12,30" is 1 + 12/60 + 30/3600.
All conversions are exact rational arithmetic; the only lossy operations are
the explicit truncations (`sqrt_sex`, `truncate_sex`).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DomainError,
    NonTerminatingError,
    NotRegularError,
    ParseError,
    PlacesExceededError,
)

BASE = 60

# A digit renders as a plain decimal integer with no zero padding.
_DIGIT_RE = re.compile(r"(?:0|[1-9][0-9]*)\Z")


@dataclass(frozen=True)
class SexValue:
    """A canonical base-60 numeral: sign, integer digits, fractional digits.

    Canonical form: digits in [0, 59]; no leading zero digit in the integer
    part unless it is exactly (0,); no trailing zero digit in the fraction;
    zero is sign +1, int_digits (0,), frac_digits ().
    """

    sign: int
    int_digits: tuple[int, ...]
    frac_digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if not self.int_digits:
            raise ValueError("integer part needs at least one digit")
        for d in self.int_digits + self.frac_digits:
            if not isinstance(d, int) or not 0 <= d < BASE:
                raise ValueError(f"digit out of range: {d!r}")
        if len(self.int_digits) > 1 and self.int_digits[0] == 0:
            raise ValueError("leading zero digit in integer part")
        if self.frac_digits and self.frac_digits[-1] == 0:
            raise ValueError("trailing zero digit in fraction")
        if self.int_digits == (0,) and not self.frac_digits and self.sign != 1:
            raise ValueError("zero must carry sign +1")

    def is_zero(self) -> bool:
        return self.int_digits == (0,) and not self.frac_digits

    def __str__(self) -> str:
        return format_sex(self)


def _canonical(sign: int, int_digits: list[int], frac_digits: list[int]) -> SexValue:
    """Build a SexValue, normalising away non-canonical zeros."""
    while len(int_digits) > 1 and int_digits[0] == 0:
        del int_digits[0]
    while frac_digits and frac_digits[-1] == 0:
        del frac_digits[-1]
    if int_digits == [0] and not frac_digits:
        sign = 1
    return SexValue(sign, tuple(int_digits), tuple(frac_digits))


def _parse_digit_group(text: str) -> list[int]:
    digits = []
    for token in text.split(","):
        if not token:
            raise ParseError("empty digit group")
        if not _DIGIT_RE.match(token):
            raise ParseError(f"malformed digit {token!r}")
        value = int(token)
        if value >= BASE:
            raise ParseError(f"digit {value} exceeds 59")
        digits.append(value)
    return digits


def parse_sex(text: str) -> SexValue:
    """Parse sexagesimal text into a canonical SexValue.

    Grammar: ["-"] digits [";" digits] where digits is a comma-separated list
    of decimal integers in 0..59 without leading zeros ("1;8", not "1;08").
    """
    if not isinstance(text, str) or not text:
        raise ParseError("empty numeral")
    sign = 1
    body = text
    if body.startswith("-"):
        sign = -1
        body = body[1:]
    parts = body.split(";")
    if len(parts) > 2:
        raise ParseError("more than one ';' separator")
    int_digits = _parse_digit_group(parts[0])
    frac_digits = _parse_digit_group(parts[1]) if len(parts) == 2 else []
    return _canonical(sign, int_digits, frac_digits)


def format_sex(value: SexValue) -> str:
    """Render a SexValue as canonical text; inverse of parse_sex."""
    text = ",".join(str(d) for d in value.int_digits)
    if value.frac_digits:
        text += ";" + ",".join(str(d) for d in value.frac_digits)
    if value.sign < 0:
        text = "-" + text
    return text


def sex_to_rational(value: SexValue) -> Fraction:
    """Exact positional value: sum of int digits over 60^i plus frac digits over 60^-j."""
    whole = 0
    for d in value.int_digits:
        whole = whole * BASE + d
    frac_num = 0
    for d in value.frac_digits:
        frac_num = frac_num * BASE + d
    result = whole + Fraction(frac_num, BASE ** len(value.frac_digits))
    return -result if value.sign < 0 else result


@dataclass(frozen=True)
class RegularFactorization:
    """Exponents of 2, 3 and 5 whose product reconstructs the integer exactly."""

    pow2: int
    pow3: int
    pow5: int

    def product(self) -> int:
        return 2**self.pow2 * 3**self.pow3 * 5**self.pow5


def is_regular(m: int) -> RegularFactorization | None:
    """Factor m as 2^p * 3^q * 5^r if possible, else None.

    Regular integers are exactly those whose reciprocals terminate in base 60.
    """
    if not isinstance(m, int) or m < 1:
        raise DomainError(f"is_regular needs a positive integer, got {m!r}")
    exponents = []
    for p in (2, 3, 5):
        count = 0
        while m % p == 0:
            m //= p
            count += 1
        exponents.append(count)
    if m != 1:
        return None
    return RegularFactorization(*exponents)


def reciprocal_regular(m: int) -> Fraction:
    """Exact reciprocal of a regular integer."""
    if is_regular(m) is None:
        raise NotRegularError(f"{m} has a prime factor other than 2, 3, 5")
    return Fraction(1, m)


def _places_needed(fact: RegularFactorization) -> int:
    # 60^p = 2^(2p) * 3^p * 5^p, so the denominator divides 60^p iff
    # p >= ceil(pow2/2), p >= pow3 and p >= pow5.
    return max((fact.pow2 + 1) // 2, fact.pow3, fact.pow5)


def _exact(x: Fraction | int | str) -> Fraction:
    if isinstance(x, float):
        raise DomainError("floats are not exact; pass Fraction, int or string")
    return Fraction(x)


def _from_scaled_int(sign: int, scaled: int, frac_places: int) -> SexValue:
    """SexValue of scaled / 60^frac_places."""
    frac_digits = []
    for _ in range(frac_places):
        frac_digits.append(scaled % BASE)
        scaled //= BASE
    frac_digits.reverse()
    int_digits = []
    while scaled:
        int_digits.append(scaled % BASE)
        scaled //= BASE
    int_digits.reverse()
    if not int_digits:
        int_digits = [0]
    return _canonical(sign, int_digits, frac_digits)


def rational_to_sex(x: Fraction, max_frac_places: int) -> SexValue:
    """Exact base-60 rendering of a rational, or an error when impossible.

    Raises NonTerminatingError when the reduced denominator is not regular and
    PlacesExceededError when it is regular but needs more than max_frac_places
    fractional digits.
    """
    if not isinstance(max_frac_places, int) or max_frac_places < 0:
        raise DomainError("max_frac_places must be a nonnegative integer")
    x = _exact(x)
    if x == 0:
        return SexValue(1, (0,), ())
    sign = 1 if x > 0 else -1
    magnitude = abs(x)
    fact = is_regular(magnitude.denominator)
    if fact is None:
        raise NonTerminatingError(
            f"denominator {magnitude.denominator} is not regular"
        )
    places = _places_needed(fact)
    if places > max_frac_places:
        raise PlacesExceededError(
            f"needs {places} fractional places, only {max_frac_places} allowed"
        )
    scaled = magnitude.numerator * BASE**places // magnitude.denominator
    return _from_scaled_int(sign, scaled, places)


def truncate_sex(x: Fraction, frac_places: int) -> tuple[SexValue, bool]:
    """Truncate a rational toward zero to frac_places base-60 digits.

    Returns the truncated numeral and whether it is exact.
    """
    if not isinstance(frac_places, int) or frac_places < 0:
        raise DomainError("frac_places must be a nonnegative integer")
    x = _exact(x)
    sign = 1 if x >= 0 else -1
    magnitude = abs(x)
    scaled, rem = divmod(magnitude.numerator * BASE**frac_places, magnitude.denominator)
    return _from_scaled_int(sign, scaled, frac_places), rem == 0


def isqrt(m: int) -> tuple[int, bool]:
    """Floor square root of a nonnegative integer, plus a perfect-square flag."""
    root = math.isqrt(m)
    return root, root * root == m


def sqrt_sex(x: Fraction, frac_places: int) -> SexValue:
    """Square root truncated (not rounded) to frac_places base-60 digits.

    Exact whenever the root is rational and representable within the places;
    trailing zero digits are canonicalised away.
    """
    x = _exact(x)
    if x < 0:
        raise DomainError("square root of a negative value")
    if not isinstance(frac_places, int) or frac_places < 0:
        raise DomainError("frac_places must be a nonnegative integer")
    # Largest t with (t / 60^p)^2 <= x, i.e. t = floor(sqrt(num*60^2p / den)).
    scaled = math.isqrt(x.numerator * BASE ** (2 * frac_places) // x.denominator)
    return _from_scaled_int(1, scaled, frac_places)
