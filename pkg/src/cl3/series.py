"""Truncated Taylor series of multivector functions.

A series of order ``n`` keeps every term of degree at most ``n``, matching
the subscript convention of the reference tables (the order-6 hyperbolic
sine is A + A^3/3! + A^5/5!).  Coefficient families are generated exactly
as rationals (Bernoulli numbers for the tangent families, Euler numbers
for the secant families) and converted to float only at evaluation time.
Evaluation is Horner-style: one geometric product per series term, nested
in the square of the argument for the even/odd families.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import Multivector, geometric_product
from .exceptions import SeriesOrderError

__all__ = [
    "MAX_TABLE_ORDER",
    "SeriesFamily",
    "SeriesSpec",
    "series_eval",
    "bernoulli_numbers",
    "euler_numbers",
]

# Bernoulli/Euler numbers are tabulated up to this index, which caps the
# order of the tangent and secant families.  The order-40 tangent tables
# consume B_40, so 60 leaves headroom.
MAX_TABLE_ORDER = 60


class SeriesFamily(enum.Enum):
    EXP = "exp"
    SIN = "sin"
    COS = "cos"
    SINH = "sinh"
    COSH = "cosh"
    TAN = "tan"
    TANH = "tanh"
    SEC_EULER = "sec"
    SECH_EULER = "sech"


_TABLE_FAMILIES = (
    SeriesFamily.TAN,
    SeriesFamily.TANH,
    SeriesFamily.SEC_EULER,
    SeriesFamily.SECH_EULER,
)


@dataclass(frozen=True)
class SeriesSpec:
    """Family plus series order (highest power of the argument retained)."""

    family: SeriesFamily
    terms: int

    def __post_init__(self):
        if self.terms < 1:
            raise ValueError(f"series order must be at least 1, got {self.terms}")


@lru_cache(maxsize=None)
def bernoulli_numbers(n: int) -> tuple[Fraction, ...]:
    """B_0..B_n as exact fractions (Akiyama-Tanigawa, B_1 = -1/2)."""
    row = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        row[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        out.append(row[0])
    if n >= 1:
        out[1] = Fraction(-1, 2)
    return tuple(out)


@lru_cache(maxsize=None)
def euler_numbers(n: int) -> tuple[Fraction, ...]:
    """E_0..E_n as exact fractions (odd-index entries are zero).

    Generated from the reciprocal condition sech * cosh = 1, which is where
    the secant-family series coefficients come from in the first place.
    """
    even = [Fraction(1)]
    for k in range(1, n // 2 + 1):
        acc = Fraction(0)
        for j in range(k):
            acc += even[j] / (math.factorial(2 * j) * math.factorial(2 * (k - j)))
        even.append(-math.factorial(2 * k) * acc)
    out = []
    for i in range(n + 1):
        out.append(even[i // 2] if i % 2 == 0 else Fraction(0))
    return tuple(out)


def _check_order(family: SeriesFamily, order: int) -> None:
    if family in _TABLE_FAMILIES and order > MAX_TABLE_ORDER:
        raise SeriesOrderError(
            f"{family.value} coefficients are tabulated up to order {MAX_TABLE_ORDER}, "
            f"got {order}"
        )


@lru_cache(maxsize=None)
def _term_table(family: SeriesFamily, order: int) -> tuple[tuple[int, ...], tuple[float, ...]]:
    """Powers and float coefficients of all series terms of degree <= order."""
    _check_order(family, order)
    powers: list[int] = []
    coeffs: list[Fraction] = []
    if family is SeriesFamily.EXP:
        for p in range(order + 1):
            powers.append(p)
            coeffs.append(Fraction(1, math.factorial(p)))
    elif family in (SeriesFamily.SIN, SeriesFamily.SINH):
        k = 1
        while 2 * k - 1 <= order:
            powers.append(2 * k - 1)
            c = Fraction(1, math.factorial(2 * k - 1))
            coeffs.append(-c if (family is SeriesFamily.SIN and k % 2 == 0) else c)
            k += 1
    elif family in (SeriesFamily.COS, SeriesFamily.COSH):
        k = 1
        while 2 * k - 2 <= order:
            powers.append(2 * k - 2)
            c = Fraction(1, math.factorial(2 * k - 2))
            coeffs.append(-c if (family is SeriesFamily.COS and k % 2 == 0) else c)
            k += 1
    elif family in (SeriesFamily.TAN, SeriesFamily.TANH):
        bern = bernoulli_numbers(order + 1)
        k = 1
        while 2 * k - 1 <= order:
            powers.append(2 * k - 1)
            c = Fraction(4 ** k * (4 ** k - 1)) * bern[2 * k] / math.factorial(2 * k)
            if family is SeriesFamily.TAN and k % 2 == 0:
                c = -c
            coeffs.append(c)
            k += 1
    else:  # SEC_EULER / SECH_EULER
        eul = euler_numbers(order)
        k = 1
        while 2 * k - 2 <= order:
            powers.append(2 * k - 2)
            c = eul[2 * k - 2] / math.factorial(2 * k - 2)
            if family is SeriesFamily.SEC_EULER and k % 2 == 0:
                c = -c
            coeffs.append(c)
            k += 1
    if not powers:
        # Order 1 always keeps at least one term in every family.
        raise SeriesOrderError(f"{family.value} series has no terms of degree <= {order}")
    return tuple(powers), tuple(float(c) for c in coeffs)


def _power(x: Multivector, n: int) -> Multivector:
    result = Multivector.scalar(x.sig, 1.0)
    base = x
    while n:
        if n & 1:
            result = geometric_product(result, base)
        n >>= 1
        if n:
            base = geometric_product(base, base)
    return result


def series_eval(x: Multivector, spec: SeriesSpec, return_last_term: bool = False):
    """Evaluate a truncated function series of ``x``.

    Returns the multivector value, or ``(value, last_term_delta)`` where
    the delta is the largest coefficient magnitude of the final summed
    term: a divergence indicator the caller can surface.
    """
    powers, coeffs = _term_table(spec.family, spec.terms)
    stride = 1 if spec.family is SeriesFamily.EXP else 2
    base = x if stride == 1 else geometric_product(x, x)
    odd_lead = powers[0] == 1

    acc = Multivector.scalar(x.sig, coeffs[-1])
    for c in coeffs[-2::-1]:
        acc = geometric_product(acc, base) + c
    if odd_lead:
        acc = geometric_product(acc, x)

    if not return_last_term:
        return acc
    tail = _power(x, powers[-1]) * coeffs[-1]
    delta = float(abs(tail.c).max())
    return acc, delta
