"""Special functions on the real line with absolute error bounds.

Two independent routes to zeta are provided so that each can serve as the
other's oracle:

* ``ZetaRoute.ETA_SERIES`` sums the alternating Dirichlet eta series with the
  Cohen-Rodriguez Villegas-Zagier acceleration and divides by ``1 - 2**(1-s)``.
  Valid for ``s > 0``.
* ``ZetaRoute.FRACTIONAL_PART_INTEGRAL`` uses
  ``zeta(s) = 1/2 - 1/(1-s) - s * I(s)`` with
  ``I(s) = int_1^inf ({t} - 1/2) t**(-s-1) dt`` split into unit pieces
  ``I_n(s)``.  Valid for ``s > -1``.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from .numerics import (
    EPS,
    BoundedValue,
    ConvergenceError,
    DomainError,
    PoleError,
    SingularityError,
    bernoulli_number,
    bv_cos,
    bv_exp,
    bv_log,
    constants,
    unit_phase,
)

__all__ = [
    "IdentityResidual",
    "ZetaRoute",
    "check_cot_identity",
    "check_functional_equation",
    "check_reflection",
    "cot_pi",
    "cot_pi_bounded",
    "digamma",
    "gamma",
    "integral_sum",
    "integral_term",
    "integral_term_bound",
    "integral_term_closed_form",
    "log_gamma",
    "polylog_unit_circle",
    "zeta",
    "zeta_regularized",
]

LN2 = 0.6931471805599453
ASYMPTOTIC_ORDER = 8
SHIFT_TO = 10.0
ETA_TERMS = 28
EM_ORDER = 12
ZETA_MAX = 40.0


class ZetaRoute(enum.Enum):
    ETA_SERIES = "eta"
    FRACTIONAL_PART_INTEGRAL = "integral"
    AUTO = "auto"


@dataclass(frozen=True)
class IdentityResidual:
    s: float
    lhs: BoundedValue
    rhs: BoundedValue
    residual: float
    relative: float

    @classmethod
    def from_sides(cls, s: float, lhs: BoundedValue, rhs: BoundedValue) -> "IdentityResidual":
        residual = abs(lhs.value - rhs.value)
        return cls(s, lhs, rhs, residual, residual / max(1.0, abs(lhs.value)))

    @property
    def err(self) -> float:
        return self.lhs.err + self.rhs.err

    @property
    def consistent(self) -> bool:
        """Whether the two sides overlap within their error bounds."""
        return self.residual <= self.err


def _check_positive(x: float, name: str) -> None:
    if not (math.isfinite(x) and x > 0):
        raise DomainError(f"{name} requires a finite argument > 0, got {x!r}")


def _trigamma_bound(y: float) -> float:
    # psi'(y) < 1/y + 1/y**2 for y > 0
    return 1.0 / y + 1.0 / (y * y)


def _shift_error(exact: Fraction, y: float) -> float:
    """Distance between an exact shifted argument and its rounded float."""
    return float(abs(exact - Fraction(y)))


# -- digamma and log-gamma ---------------------------------------------------


def digamma(x: float, order: int = ASYMPTOTIC_ORDER, shift_to: float = SHIFT_TO) -> BoundedValue:
    """psi(x) for x > 0.

    The argument is shifted upward with ``psi(x) = psi(x+1) - 1/x`` until it
    reaches ``shift_to``; the asymptotic series
    ``ln z - 1/(2z) - sum B_2k / (2k z^2k)`` is then truncated after ``order``
    terms.  The series envelopes psi on the positive axis, so the first
    omitted term bounds the truncation error.
    """
    _check_positive(x, "digamma")
    if not 1 <= order <= 15:
        raise DomainError("digamma order must be within 1..15")
    m = max(0, math.ceil(shift_to - x))
    terms = [1.0 / (x + k) for k in range(m)]
    recur = math.fsum(terms)
    z = x + m
    zinv2 = 1.0 / (z * z)
    series = 0.0
    zpow = 1.0
    for k in range(1, order + 1):
        zpow *= zinv2
        series += bernoulli_number(2 * k) / (2 * k) * zpow
    trunc = abs(bernoulli_number(2 * order + 2)) / (2 * order + 2) * zpow * zinv2
    logz = math.log(z)
    value = logz - 0.5 / z - series - recur
    if not math.isfinite(value):
        raise DomainError(f"digamma overflow at x={x!r}")
    # rounding of z itself moves psi by at most psi'(z) * |dz|
    shift = _shift_error(Fraction(x) + m, z) * _trigamma_bound(z)
    rounding = 4 * EPS * (math.fsum(terms) + abs(logz) + 0.5 / z + abs(series) + abs(value) + 1.0)
    return BoundedValue(value, trunc + shift + rounding)


def log_gamma(x: float, order: int = ASYMPTOTIC_ORDER, shift_to: float = SHIFT_TO) -> BoundedValue:
    """ln Gamma(x) for x > 0 by shift and Stirling series."""
    _check_positive(x, "log_gamma")
    if not 1 <= order <= 15:
        raise DomainError("log_gamma order must be within 1..15")
    m = max(0, math.ceil(shift_to - x))
    prod = 1.0
    for k in range(m):
        prod *= x + k
    z = x + m
    zinv = 1.0 / z
    zinv2 = zinv * zinv
    series = 0.0
    zpow = zinv
    for k in range(1, order + 1):
        series += bernoulli_number(2 * k) / (2 * k * (2 * k - 1)) * zpow
        zpow *= zinv2
    kk = order + 1
    trunc = abs(bernoulli_number(2 * kk)) / (2 * kk * (2 * kk - 1)) * zpow
    logz = math.log(z)
    head = (z - 0.5) * logz - z + 0.5 * math.log(2 * math.pi)
    logprod = math.log(prod) if m else 0.0
    value = head + series - logprod
    shift = _shift_error(Fraction(x) + m, z) * (abs(logz) + zinv)
    rounding = 4 * EPS * (abs((z - 0.5) * logz) + z + 1.0 + abs(series) + abs(value) + 2 * m + abs(logprod))
    return BoundedValue(value, trunc + shift + rounding)


def gamma(x: float) -> BoundedValue:
    """Gamma(x) for x > -1, x != 0 (one recurrence step below zero)."""
    if not math.isfinite(x) or x <= -1:
        raise DomainError(f"gamma supports x > -1, got {x!r}")
    if x == 0:
        raise PoleError("gamma has a pole at 0")
    if x > 0:
        return bv_exp(log_gamma(x))
    y = x + 1.0
    lg = log_gamma(y)
    lg = BoundedValue(lg.value, lg.err + _shift_error(Fraction(x) + 1, y) * (abs(math.log(y)) + 1.0 / y + 1.0 / (y * y)))
    return bv_exp(lg) / x


# -- cotangent ---------------------------------------------------------------


def cot_pi(x: float) -> float:
    """cot(pi x) on (0, 1), exactly antisymmetric about 1/2."""
    if not 0.0 < x < 1.0:
        raise DomainError(f"cot_pi expects 0 < x < 1, got {x!r}")
    if x > 0.5:
        # 1 - x is exact here (Sterbenz)
        return -cot_pi(1.0 - x)
    if x == 0.5:
        return 0.0
    if x >= 0.25:
        return math.tan(math.pi * (0.5 - x))
    return 1.0 / math.tan(math.pi * x)


def cot_pi_bounded(x: float) -> BoundedValue:
    c = cot_pi(x)
    # pi rounding and libm: a few ulps relative, plus derivative times argument error
    y = min(x, 1.0 - x)
    darg = 4 * EPS * math.pi * y * (1.0 + c * c)
    return BoundedValue(c, 6 * EPS * abs(c) + darg)


# -- zeta: eta-series route --------------------------------------------------


def _eta(s: float, n: int = ETA_TERMS) -> BoundedValue:
    """Dirichlet eta for s > 0 by the CVZ alternating-series acceleration.

    a_k = (k+1)^-s is a moment sequence of a positive measure on [0, 1]
    for s > 0, so the acceleration error is at most 2 eta / (3 + sqrt 8)^n
    with eta <= 1.
    """
    base = 3.0 + math.sqrt(8.0)
    d = base ** n
    d = 0.5 * (d + 1.0 / d)
    b, c = -1.0, -d
    eb, ec = 0.0, (n + 3) * EPS * d
    acc = eacc = 0.0
    asum = 0.0
    for k in range(n):
        c = b - c
        ec = eb + ec + EPS * abs(c)
        a = (k + 1.0) ** (-s)
        asum += a
        term = c * a
        acc += term
        eacc += ec * a + 3 * EPS * abs(term) + EPS * abs(acc)
        nb = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1))
        eb = abs(nb / b) * eb + 5 * EPS * abs(nb) if b else 0.0
        b = nb
    value = acc / d
    trunc = 2.0 / base ** n
    err = trunc + eacc / d + EPS * abs(value) + (n + 3) * EPS * (abs(value) + asum)
    return BoundedValue(value, err)


def _zeta_eta(s: float) -> BoundedValue:
    t = (1.0 - s) * LN2
    denom = -math.expm1(t)
    derr = 4 * EPS * abs(denom) + 3 * EPS * abs(t) * math.exp(max(t, 0.0))
    return _eta(s) / BoundedValue(denom, derr)


# -- zeta: fractional-part integral route ------------------------------------


def _integral_term(n: int, x: float) -> tuple[float, float]:
    """I_n(x) and an error bound, via the odd-power midpoint expansion.

    With m = n + 1/2, a = x + 1 and r = 1/(2m),
    I_n(x) = -(m^-a / 2) * sum_{j odd} (a)_j / j! * r^j / (j + 2),
    every term of one sign, so I_n(x) < 0 whenever x > -1.
    """
    a = x + 1.0
    m = n + 0.5
    r = 1.0 / (2.0 * m)
    r2 = r * r
    coef = a * r  # (a)_j / j! * r^j at j = 1
    total = 0.0
    j = 1
    while True:
        t = coef / (j + 2)
        total += t
        # coefficient for j + 2
        nxt = coef * (a + j) * (a + j + 1) / ((j + 1) * (j + 2)) * r2
        ratio = max(1.0, (a + j) * (a + j + 1) / ((j + 1) * (j + 2))) * r2
        j += 2
        if ratio < 0.5 and nxt / (j + 2) <= 1e-18 * total:
            tail = nxt / (j + 2) / (1.0 - ratio)
            break
        coef = nxt
        if j > 2000:
            raise ConvergenceError(f"I_n expansion did not converge for n={n}, x={x}")
    scale = 0.5 * m ** (-a)
    value = -scale * total
    aerr = _shift_error(Fraction(x) + 1, a)
    err = scale * tail + (j + 6) * EPS * abs(value) + aerr * abs(value) * (math.log(m) + 2.0 * j)
    return value, err


def integral_term(n: int, x: float) -> float:
    """I_n(x) = int_n^{n+1} (t - n - 1/2) t^(-x-1) dt for n >= 1, x > -1."""
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"integral_term needs an integer n >= 1, got {n!r}")
    if not (math.isfinite(x) and x > -1):
        raise DomainError(f"integral_term needs x > -1, got {x!r}")
    return _integral_term(n, x)[0]


def integral_term_closed_form(n: int, x: float) -> float:
    """Antiderivative form of I_n(x); cancels badly for large n, kept as a cross-check."""
    if x == 0.0:
        f = lambda t: t - (n + 0.5) * math.log(t)
    elif x == 1.0:
        f = lambda t: math.log(t) + (n + 0.5) / t
    else:
        f = lambda t: t ** (1 - x) / (1 - x) + (n + 0.5) * t ** (-x) / x
    return f(n + 1.0) - f(float(n))


def integral_term_bound(n: int, x: float) -> float:
    """Upper bound on |I_n(x)|: leading midpoint term (x+1)(x+2)/(12 n^(x+2)) with a guard of 2."""
    return 2.0 * (x + 1.0) * (x + 2.0) / (12.0 * n ** (x + 2.0))


def _rising(a: float, k: int) -> float:
    out = 1.0
    for i in range(k):
        out *= a + i
    return out


def _em_tail(N: int, x: float, order: int = EM_ORDER) -> tuple[float, float]:
    """sum_{n >= N} I_n(x) by Euler-Maclaurin.

    T_N = -sum_{k=1}^{K} B_2k/(2k)! (x+1)_{2k-2} N^(-x-2k+1); the remainder is
    at most the magnitude of the k = K term because every derivative of
    t^(-x-1) keeps one sign for x > -1.
    """
    total = 0.0
    last = 0.0
    for k in range(1, order + 1):
        last = bernoulli_number(2 * k) / math.factorial(2 * k) * _rising(x + 1.0, 2 * k - 2) * N ** (-x - 2 * k + 1)
        total -= last
    return total, abs(last)


def integral_sum(x: float, target_err: float = 1e-17, n_cap: int = 1 << 16) -> BoundedValue:
    """I(x) = sum_{n>=1} I_n(x) with a rigorous bound on the truncated tail.

    Terms up to N-1 are summed explicitly; the tail from N on is replaced by
    its Euler-Maclaurin expansion, whose remainder bound must fall below
    ``target_err``.  N is doubled until it does, up to ``n_cap``.
    """
    if not (math.isfinite(x) and x > -1):
        raise DomainError(f"integral_sum needs x > -1, got {x!r}")
    if not target_err > 0:
        raise DomainError("target_err must be positive")
    N = max(10, math.ceil((x + 1 + 2 * EM_ORDER) / math.pi))
    while True:
        tail, tail_err = _em_tail(N, x)
        if tail_err <= target_err:
            break
        N *= 2
        if N > n_cap:
            raise ConvergenceError(f"I({x}) tail bound {tail_err:.3g} above {target_err:.3g} at cap N={n_cap}")
    values, errs = zip(*(_integral_term(n, x) for n in range(1, N)))
    head = math.fsum(values)
    total = head + tail
    rounding = EPS * (abs(head) + abs(total)) + (EM_ORDER + 4) * EPS * abs(tail)
    return BoundedValue(total, math.fsum(errs) + tail_err + rounding)


def _zeta_integral(s: float) -> BoundedValue:
    return 0.5 - 1.0 / BoundedValue(1.0 - s, EPS * abs(1.0 - s)) - s * integral_sum(s)


# -- zeta front ends ---------------------------------------------------------


def _check_zeta_domain(s: float) -> None:
    if not math.isfinite(s):
        raise DomainError(f"zeta needs a finite argument, got {s!r}")
    if s == 1.0:
        raise PoleError("zeta has a pole at s = 1")
    if not (-1.0 < s < 1.0 or 1.0 < s <= ZETA_MAX):
        raise DomainError(f"zeta supports s in (-1, 1) or (1, {ZETA_MAX:g}], got {s!r}")


def _resolve(route: ZetaRoute | str, s: float) -> ZetaRoute:
    route = ZetaRoute(route)
    if route is ZetaRoute.AUTO:
        return ZetaRoute.ETA_SERIES if s > 0 else ZetaRoute.FRACTIONAL_PART_INTEGRAL
    if route is ZetaRoute.ETA_SERIES and s <= 0:
        raise DomainError(f"eta-series route needs s > 0, got {s!r}")
    return route


def zeta(s: float, route: ZetaRoute | str = ZetaRoute.AUTO) -> BoundedValue:
    """Riemann zeta on (-1, 1) and (1, 40]."""
    _check_zeta_domain(s)
    if _resolve(route, s) is ZetaRoute.ETA_SERIES:
        return _zeta_eta(s)
    return _zeta_integral(s)


def zeta_regularized(s: float, route: ZetaRoute | str = ZetaRoute.FRACTIONAL_PART_INTEGRAL) -> BoundedValue:
    """Z(s) = zeta(s) + 1/(1-s).

    On the integral route this is ``1/2 - s I(s)``, which carries no pole at
    s = 1 and is the preferred evaluation near both ends of (0, 1).
    """
    _check_zeta_domain(s)
    if _resolve(route, s) is ZetaRoute.ETA_SERIES:
        return _zeta_eta(s) + 1.0 / BoundedValue(1.0 - s, EPS * abs(1.0 - s))
    return 0.5 - s * integral_sum(s)


# -- polylogarithm on the unit circle ----------------------------------------


def _forward_differences(N: int, s: float, K: int) -> list[float]:
    """Delta^j f(N) for f(n) = n^-s, j < K, in decimal arithmetic."""
    digits = int(K * math.log10(2.0 * (N + K)) + 40)
    with localcontext() as ctx:
        ctx.prec = digits
        es = Decimal(-s)
        row = [Decimal(N + i) ** es for i in range(K)]
        out = []
        for _ in range(K):
            out.append(float(row[0]))
            row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
    return out


def polylog_unit_circle(s: float, theta: float, order: int = 20, n_cap: int = 10 ** 7) -> BoundedValue:
    """Li_s(e^{2 pi i theta}) for s >= 0, 0 < theta < 1.

    s = 0 and s = 1 use the closed forms q/(1-q) and -log(1-q).  Otherwise a
    head of N terms is summed directly and the tail sum_{n>=N} q^n n^-s is
    rewritten by ``order``-fold summation by parts:
        sum_j q^(N+j) Delta^j f(N) / (1-q)^(j+1)
    which converges geometrically once N |1-q| exceeds s + order.
    """
    if not math.isfinite(s) or s < 0:
        raise DomainError(f"polylog on the unit circle diverges for s < 0 (s={s!r})")
    if not math.isfinite(theta) or not 0.0 <= theta < 1.0:
        raise DomainError(f"theta must lie in (0, 1), got {theta!r}")
    if theta == 0.0:
        raise SingularityError("q = 1 is a singularity of Li_s on the unit circle")
    q = unit_phase(1, theta)
    one_minus_q = 2.0 * math.sin(math.pi * theta) * cmath.exp(1j * math.pi * (theta - 0.5))
    r = abs(one_minus_q)
    if s == 0.0:
        v = q / one_minus_q
        return BoundedValue(v, 16 * EPS * abs(v) / r + 8 * EPS)
    if s == 1.0:
        v = -cmath.log(one_minus_q)
        return BoundedValue(v, 16 * EPS * (abs(v) + 1.0))
    K = order
    N = max(2 * K, math.ceil(4.0 * (s + K) / r))
    if N > n_cap:
        raise ConvergenceError(f"polylog needs {N} head terms at theta={theta}, cap {n_cap}")
    re, im, mags = [], [], []
    for n in range(1, N):
        f = n ** (-s)
        z = unit_phase(n, theta) * f
        re.append(z.real)
        im.append(z.imag)
        mags.append(f)
    head = complex(math.fsum(re), math.fsum(im))
    diffs = _forward_differences(N, s, K)
    tail = 0.0j
    tail_mag = 0.0
    w = 1.0 / one_minus_q
    for j, dj in enumerate(diffs):
        term = unit_phase(N + j, theta) * dj * w
        tail += term
        tail_mag += (j + 8) * abs(term)
        w /= one_minus_q
    rem = _rising(s, K) * N ** (-s - K) * (1.0 + N / (s + K - 1.0)) / r ** K
    value = head + tail
    err = rem + 8 * EPS * (math.fsum(mags) + tail_mag + abs(value))
    return BoundedValue(value, err)


# -- identity checks ---------------------------------------------------------


def check_reflection(x: float) -> IdentityResidual:
    """psi(1-x) - psi(x) against pi cot(pi x)."""
    if not 0.0 < x < 1.0:
        raise DomainError(f"reflection check needs 0 < x < 1, got {x!r}")
    y = 1.0 - x
    left = digamma(y)
    left = BoundedValue(left.value, left.err + _shift_error(1 - Fraction(x), y) * _trigamma_bound(y))
    lhs = left - digamma(x)
    rhs = constants().pi * cot_pi_bounded(x)
    return IdentityResidual.from_sides(x, lhs, rhs)


def _two_pi_power(e: float) -> BoundedValue:
    """(2 pi)^e with its error bound."""
    return bv_exp(e * bv_log(2.0 * constants().pi))


def check_functional_equation(s: float) -> IdentityResidual:
    """zeta(1-s) = 2 Gamma(s) cos(pi s / 2) (2 pi)^-s zeta(s), s in (0, 1).

    The two zetas come from different routes.
    """
    if not 0.0 < s < 1.0:
        raise DomainError(f"functional-equation check needs 0 < s < 1, got {s!r}")
    pi = constants().pi
    u = 1.0 - s
    lhs = zeta(u, ZetaRoute.FRACTIONAL_PART_INTEGRAL)
    # zeta(1-s) moves by at most |zeta'| * du; |zeta'| is tame on (0, 1) away from the pole
    du = _shift_error(1 - Fraction(s), u)
    if du:
        lhs = BoundedValue(lhs.value, lhs.err + du * 4.0 / (s * s))
    rhs = 2.0 * gamma(s) * bv_cos(pi * s * 0.5) * _two_pi_power(-s) * zeta(s, ZetaRoute.ETA_SERIES)
    return IdentityResidual.from_sides(s, lhs, rhs)


def check_cot_identity(s: float) -> IdentityResidual:
    """pi cot(pi s) = ((2pi)^(2s) zeta(1-2s) / zeta(2s))^2 Gamma(1-2s) / (2 Gamma(2s))."""
    if not 0.0 < s < 1.0:
        raise DomainError(f"cot identity check needs 0 < s < 1, got {s!r}")
    if s == 0.5:
        raise PoleError("zeta(2s) has a pole at s = 1/2")
    two_s = 2.0 * s
    u = 1.0 - two_s
    ratio = _two_pi_power(two_s) * zeta(u, ZetaRoute.FRACTIONAL_PART_INTEGRAL) / zeta(two_s)
    rhs = ratio * ratio * gamma(u) / (2.0 * gamma(two_s))
    lhs = constants().pi * cot_pi_bounded(s)
    return IdentityResidual.from_sides(s, lhs, rhs)


def _startup_check() -> None:
    g = constants().gamma
    psi1 = digamma(1.0)
    if abs(g.value + psi1.value) > g.err + psi1.err:
        raise RuntimeError("stored Euler-Mascheroni constant disagrees with -digamma(1)")


_startup_check()
