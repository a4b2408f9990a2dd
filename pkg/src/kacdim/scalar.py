"""Exact scalars: a rational constant plus an optional linear term in one named parameter.

Every quantity in the engine is an AffineScalar.  The two parameters that
actually occur are the free odd Dynkin label of a type I superalgebra
(symbol ``t``) and the deformation parameter of osp(4|2;a) (symbol ``a``);
each algebra context uses at most one of them, and never quadratically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

ODD_LABEL = "t"
ALPHA = "a"


class ParamMismatch(ValueError):
    """Two scalars carry distinct free parameters."""


class QuadraticOverflow(ValueError):
    """A product would be quadratic in the free parameter (modeling bug)."""


class NonProportional(ValueError):
    """ratio() called on scalars that are not rational multiples of each other."""


class _IdenticallyZero:
    __slots__ = ()

    def __repr__(self):
        return "IDENTICALLY_ZERO"


#: Marker returned by solve_zero when the scalar vanishes for every parameter value.
IDENTICALLY_ZERO = _IdenticallyZero()


def _q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


@dataclass(frozen=True)
class AffineScalar:
    """const + slope * param, canonical form: slope == 0 iff param is None."""

    const: Fraction
    slope: Fraction = Fraction(0)
    param: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "const", _q(self.const))
        object.__setattr__(self, "slope", _q(self.slope))
        if self.slope == 0:
            object.__setattr__(self, "param", None)
        elif self.param is None:
            raise ValueError("nonzero slope requires a parameter name")

    # -- predicates ---------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.slope == 0

    @property
    def is_zero(self) -> bool:
        return self.const == 0 and self.slope == 0

    def as_fraction(self) -> Fraction:
        if self.slope != 0:
            raise ValueError(f"{self} still depends on parameter {self.param!r}")
        return self.const

    def is_nonneg_integer(self) -> bool:
        return self.slope == 0 and self.const.denominator == 1 and self.const >= 0

    # -- arithmetic ---------------------------------------------------------

    def _join(self, other: "AffineScalar") -> str | None:
        if self.param is None:
            return other.param
        if other.param is None or other.param == self.param:
            return self.param
        raise ParamMismatch(f"cannot combine parameters {self.param!r} and {other.param!r}")

    def __add__(self, other) -> "AffineScalar":
        other = scal(other)
        return AffineScalar(self.const + other.const, self.slope + other.slope, self._join(other))

    __radd__ = __add__

    def __neg__(self) -> "AffineScalar":
        return AffineScalar(-self.const, -self.slope, self.param)

    def __sub__(self, other) -> "AffineScalar":
        return self + (-scal(other))

    def __rsub__(self, other) -> "AffineScalar":
        return scal(other) + (-self)

    def __mul__(self, other) -> "AffineScalar":
        other = scal(other)
        if self.slope != 0 and other.slope != 0:
            raise QuadraticOverflow(f"({self}) * ({other}) is quadratic in the parameter")
        param = self._join(other)
        return AffineScalar(
            self.const * other.const,
            self.const * other.slope + self.slope * other.const,
            param if (self.const * other.slope + self.slope * other.const) != 0 else None,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "AffineScalar":
        other = scal(other)
        if other.slope != 0:
            raise QuadraticOverflow(f"division by parameter-dependent scalar ({other})")
        if other.const == 0:
            raise ZeroDivisionError("division by zero scalar")
        return AffineScalar(self.const / other.const, self.slope / other.const, self.param)

    # -- evaluation ---------------------------------------------------------

    def eval_at(self, value) -> Fraction:
        """Substitute a rational value for the parameter (ignored if slope == 0)."""
        return self.const + self.slope * _q(value)

    def solve_zero(self):
        """Root in the parameter: a Fraction, None (never zero), or IDENTICALLY_ZERO."""
        if self.slope != 0:
            return -self.const / self.slope
        return IDENTICALLY_ZERO if self.const == 0 else None

    def __str__(self):
        if self.slope == 0:
            return str(self.const)
        if self.slope == 1 and self.const == 0:
            return self.param
        return f"{self.slope}*{self.param}+{self.const}"


def scal(x) -> AffineScalar:
    """Coerce an int or Fraction to an AffineScalar."""
    if isinstance(x, AffineScalar):
        return x
    return AffineScalar(_q(x))


ZERO = scal(0)
ONE = scal(1)


def sym(param: str) -> AffineScalar:
    """The bare parameter as a scalar (0 + 1*param)."""
    return AffineScalar(Fraction(0), Fraction(1), param)


def ratio(num: AffineScalar, den: AffineScalar) -> Fraction:
    """Exact quotient num/den when num is a rational multiple of den.

    This is the only division by a parameter-dependent scalar the engine
    needs: label extraction divides two pairings whose parameter parts are
    guaranteed proportional, so the quotient is a plain rational.
    """
    num, den = scal(num), scal(den)
    if den.is_zero:
        raise ZeroDivisionError("ratio with zero denominator")
    if den.const != 0:
        c = num.const / den.const
    else:
        c = num.slope / den.slope
    if num.const != c * den.const or num.slope != c * den.slope:
        raise NonProportional(f"({num}) is not a rational multiple of ({den})")
    return c
