"""Error-bounded scalars, constants, Bernoulli machinery and the fractional part.

Every quantity the library evaluates is carried as a :class:`BoundedValue`:
a binary64 value together with an absolute bound on its distance from the
exact mathematical result.  Arithmetic between bounded values propagates
the bounds conservatively and charges one unit of rounding per operation.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from functools import lru_cache
from typing import Union

__all__ = [
    "BoundedValue",
    "Constants",
    "ConvergenceError",
    "DomainError",
    "EPS",
    "GUARD",
    "PoleError",
    "SingularityError",
    "bernoulli_number",
    "bernoulli_poly",
    "bv_cos",
    "bv_exp",
    "bv_log",
    "bv_sin",
    "constants",
    "euler_gamma",
    "frac_part",
]

Number = Union[int, float, complex]

#: unit roundoff of binary64; every elementary operation is charged with it.
EPS = 2.0 ** -53
#: multiplier on first-order product/quotient bounds.
GUARD = 2.0
BERNOULLI_MAX_ORDER = 32


class DomainError(ValueError):
    """Argument outside the supported domain of an operation."""


class PoleError(DomainError):
    """Argument sits on (or rounds onto) a pole."""


class SingularityError(DomainError):
    """An evaluation point hit a declared singularity."""


class ConvergenceError(ArithmeticError):
    """A series or quadrature did not reach its error target within its cap."""


def _round(v: Number) -> float:
    # one rounding, with room for a complex multiply
    scale = 4.0 if isinstance(v, complex) else 1.0
    return scale * EPS * abs(v)


@dataclass(frozen=True)
class BoundedValue:
    """A value with a rigorous absolute error bound.

    >>> a = BoundedValue(1.0, 1e-16)
    >>> (a + a).err >= 2e-16
    True
    """

    value: Number
    err: float = 0.0

    def __post_init__(self):
        if not (self.err >= 0.0 and math.isfinite(self.err)):
            raise ValueError(f"error bound must be finite and non-negative, got {self.err!r}")

    @staticmethod
    def coerce(x: BoundedValue | Number) -> BoundedValue:
        if isinstance(x, BoundedValue):
            return x
        return BoundedValue(x, 0.0)

    @property
    def lo(self) -> float:
        return self.value - self.err

    @property
    def hi(self) -> float:
        return self.value + self.err

    def contains(self, x: Number, slack: float = 0.0) -> bool:
        return abs(self.value - x) <= self.err + slack

    def __add__(self, other):
        o = BoundedValue.coerce(other)
        v = self.value + o.value
        return BoundedValue(v, self.err + o.err + _round(v))

    __radd__ = __add__

    def __neg__(self):
        return BoundedValue(-self.value, self.err)

    def __sub__(self, other):
        o = BoundedValue.coerce(other)
        v = self.value - o.value
        return BoundedValue(v, self.err + o.err + _round(v))

    def __rsub__(self, other):
        return BoundedValue.coerce(other) - self

    def __mul__(self, other):
        o = BoundedValue.coerce(other)
        v = self.value * o.value
        first = abs(self.value) * o.err + abs(o.value) * self.err
        return BoundedValue(v, GUARD * first + self.err * o.err + _round(v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = BoundedValue.coerce(other)
        if o.value == 0 or 2.0 * o.err >= abs(o.value):
            raise ZeroDivisionError("denominator interval is not bounded away from zero")
        v = self.value / o.value
        # |b + db| >= |b|/2 here, which is what the guard factor pays for
        first = (self.err + abs(v) * o.err) / abs(o.value)
        return BoundedValue(v, GUARD * first + _round(v))

    def __rtruediv__(self, other):
        return BoundedValue.coerce(other) / self

    def __abs__(self):
        return BoundedValue(abs(self.value), self.err + (_round(self.value) if isinstance(self.value, complex) else 0.0))

    def __float__(self):
        return float(self.value)

    def __repr__(self):
        return f"BoundedValue({self.value!r} ± {self.err:.3g})"


def bv_exp(x: BoundedValue | float) -> BoundedValue:
    x = BoundedValue.coerce(x)
    v = math.exp(x.value)
    return BoundedValue(v, v * math.expm1(x.err) * (1.0 + 4 * EPS) + 2 * _round(v))


def bv_log(x: BoundedValue | float) -> BoundedValue:
    x = BoundedValue.coerce(x)
    if not x.value > 0 or 2.0 * x.err >= x.value:
        raise DomainError("log of a value not bounded away from zero")
    v = math.log(x.value)
    return BoundedValue(v, GUARD * x.err / x.value + 2 * _round(v) + 1e-300)


def bv_sin(x: BoundedValue | float) -> BoundedValue:
    x = BoundedValue.coerce(x)
    v = math.sin(x.value)
    return BoundedValue(v, x.err + 2 * EPS * (abs(v) + abs(x.value) * EPS))


def bv_cos(x: BoundedValue | float) -> BoundedValue:
    x = BoundedValue.coerce(x)
    v = math.cos(x.value)
    return BoundedValue(v, x.err + 2 * EPS * (abs(v) + abs(x.value) * EPS))


def _from_decimal(text: str) -> BoundedValue:
    exact = Decimal(text)
    v = float(exact)
    # the stored digit strings carry 40+ digits; 1e-40 covers their own truncation
    return BoundedValue(v, float(abs(Decimal(v) - exact)) + 1e-40)


_GAMMA_DIGITS = "0.577215664901532860606512090082402431042159336"
_EXP_NEG_GAMMA_DIGITS = "0.561459483566885169824143214790880786765710387"
_PI_DIGITS = "3.1415926535897932384626433832795028841971694"


@dataclass(frozen=True)
class Constants:
    gamma: BoundedValue
    exp_neg_gamma: BoundedValue
    b: BoundedValue
    b_bar: BoundedValue
    pi: BoundedValue


def euler_gamma() -> BoundedValue:
    """The Euler-Mascheroni constant, -psi(1)."""
    return _from_decimal(_GAMMA_DIGITS)


@lru_cache(maxsize=None)
def constants() -> Constants:
    g = euler_gamma()
    return Constants(
        gamma=g,
        exp_neg_gamma=_from_decimal(_EXP_NEG_GAMMA_DIGITS),
        b=g - 0.5,
        b_bar=g + 0.5,
        pi=_from_decimal(_PI_DIGITS),
    )


@lru_cache(maxsize=None)
def _bernoulli_fractions(n_max: int = BERNOULLI_MAX_ORDER) -> tuple[Fraction, ...]:
    # sum_{k=0}^{n} C(n+1, k) B_k = 0, with B_1 = -1/2
    b = [Fraction(1)]
    for n in range(1, n_max + 1):
        acc = sum(math.comb(n + 1, k) * b[k] for k in range(n))
        b.append(-acc / (n + 1))
    return tuple(b)


def bernoulli_number(n: int) -> float:
    if not 0 <= n <= BERNOULLI_MAX_ORDER:
        raise DomainError(f"Bernoulli index {n} outside catalog 0..{BERNOULLI_MAX_ORDER}")
    return float(_bernoulli_fractions()[n])


@lru_cache(maxsize=None)
def _poly_coefficients(n: int) -> tuple[float, ...]:
    # highest degree first, for Horner
    b = _bernoulli_fractions()
    return tuple(float(math.comb(n, k) * b[k]) for k in range(n + 1))


def bernoulli_poly(n: int, x: float) -> float:
    """Evaluate the Bernoulli polynomial ``B_n(x)``.

    Coefficients come from the exact recurrence for the Bernoulli numbers,
    ``B_n(x) = sum_k C(n, k) B_k x^(n-k)``.
    """
    if not isinstance(n, int) or not 0 <= n <= BERNOULLI_MAX_ORDER:
        raise DomainError(f"Bernoulli order must be an integer in 0..{BERNOULLI_MAX_ORDER}, got {n!r}")
    if not math.isfinite(x):
        raise DomainError("Bernoulli polynomial argument must be finite")
    acc = 0.0
    for c in _poly_coefficients(n):
        acc = acc * x + c
    return acc


def frac_part(t: float) -> float:
    """Fractional part ``t - floor(t)`` of a non-negative real."""
    if not t >= 0:
        raise DomainError(f"frac_part expects t >= 0, got {t!r}")
    return t - math.floor(t)


def unit_phase(n: int, theta: float) -> complex:
    """``exp(2 pi i n theta)`` with ``n * theta`` reduced modulo 1 exactly."""
    num, den = float(theta).as_integer_ratio()
    r = ((n * num) % den) / den
    return cmath.exp(2j * math.pi * r)
