"""Integer-valued polynomials via the binomial basis.

A degree-r polynomial sampled at r+1 consecutive integers is expanded as
P(x) = sum a_l * C(x - base, l).  All a_l integral is equivalent both to
integrality of P on every integer and to integrality on any integer ray,
which is what lets half-integer shifts be the only source of non-integer
dimension factors downstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class SampledPolynomial:
    """Values of a polynomial of degree <= r at base_point, ..., base_point + r."""

    base_point: int
    values: tuple

    def __post_init__(self):
        if len(self.values) < 1:
            raise ValueError("need at least one sample")
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))

    @property
    def degree(self) -> int:
        return len(self.values) - 1


def binomial_coefficients(p: SampledPolynomial) -> list[Fraction]:
    """Coefficients a_l in P(x) = sum a_l C(x - base_point, l), by forward differences."""
    row = list(p.values)
    coeffs = []
    while row:
        coeffs.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    return coeffs


def binomial_coefficients_alternating(p: SampledPolynomial) -> list[Fraction]:
    """Same coefficients from the alternating-sign binomial sum (cross-check path)."""
    r = p.degree
    return [
        sum((-1) ** (l - i) * math.comb(l, i) * p.values[i] for i in range(l + 1))
        for l in range(r + 1)
    ]


def eval_binomial(coeffs, base_point: int, x) -> Fraction:
    """Evaluate sum a_l C(x - base_point, l) at a rational x."""
    x = Fraction(x) - base_point
    total = Fraction(0)
    term = Fraction(1)
    for l, a in enumerate(coeffs):
        if l > 0:
            term = term * (x - (l - 1)) / l
        total += a * term
    return total


def is_integer_valued(p: SampledPolynomial) -> bool:
    """True iff the sampled polynomial takes integer values on all integers."""
    return all(a.denominator == 1 for a in binomial_coefficients(p))


def sample(fn, base_point: int, degree: int) -> SampledPolynomial:
    """Sample a callable at degree+1 consecutive integers starting at base_point."""
    return SampledPolynomial(base_point, tuple(fn(base_point + i) for i in range(degree + 1)))
