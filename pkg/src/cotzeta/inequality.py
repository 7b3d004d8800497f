"""Numerical verification and certification of

    pi cot(pi x) < zeta(x) - psi(x),   0 < x < 1,

together with the squeeze chain behind its proof and the two-sided
strengthening ``pi cot(pi x) + x < zeta(x) - psi(x) < pi cot(pi x) + (gamma + 1/2) x + gamma - 1/2``.

All margins go through g(x) = zeta(x) - psi(1-x), which equals
zeta(x) - psi(x) - pi cot(pi x) by reflection.  It is evaluated as
``Z(x) - psi(2-x)`` where Z(x) = zeta(x) + 1/(1-x) = 1/2 - x I(x): both
poles at x = 1 cancel analytically, and nothing blows up at x = 0.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .grid import GridSpec, Refinement
from .numerics import EPS, BoundedValue, DomainError, bv_log, constants
from .special import cot_pi_bounded, digamma, zeta_regularized

__all__ = [
    "CertificateReport",
    "CertificateRow",
    "ConjectureScan",
    "MarginReport",
    "Monotone",
    "SqueezeChain",
    "certify_theorem1",
    "conjecture_margins",
    "corollary_bound",
    "egp_bounds",
    "linear_squeeze",
    "log_bound",
    "monotonicity_check",
    "psi_side",
    "regularized_zeta",
    "scan_conjecture",
    "squeeze_chain",
    "theorem_margin",
    "theorem_margin_extended",
    "verify_theorem1",
]


def _open_unit(x: float, what: str) -> None:
    if not 0.0 < x < 1.0:
        raise DomainError(f"{what} needs 0 < x < 1, got {x!r}")


def _one_minus(x: float) -> BoundedValue:
    y = 1.0 - x
    return BoundedValue(y, float(abs(1 - Fraction(x) - Fraction(y))))


# -- pieces of the chain -----------------------------------------------------


def regularized_zeta(x: float) -> BoundedValue:
    """Z(x) = zeta(x) + 1/(1-x)."""
    return zeta_regularized(x)


def psi_side(x: float) -> BoundedValue:
    """psi(1-x) + 1/(1-x), evaluated as psi(2-x)."""
    y = 2.0 - x
    v = digamma(y)
    dy = float(abs(2 - Fraction(x) - Fraction(y)))
    return BoundedValue(v.value, v.err + dy * (1.0 / y + 1.0 / (y * y)))


def log_bound(x: float) -> BoundedValue:
    """log(1 - x + e^-gamma), the decreasing upper envelope of psi_side."""
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"log bound is used on [0, 1], got {x!r}")
    return bv_log(_one_minus(x) + constants().exp_neg_gamma)


def corollary_bound(x: float) -> float:
    return log_bound(x).value


def linear_squeeze(x: float) -> BoundedValue:
    """f(x) = b x + 1/2 with b = B_1(gamma) = gamma - 1/2."""
    return constants().b * x + 0.5


def egp_bounds(x: float) -> tuple[float, float]:
    """Logarithmic lower and upper bounds on psi(x) for x > 0."""
    if not (math.isfinite(x) and x > 0):
        raise DomainError(f"egp_bounds needs x > 0, got {x!r}")
    c = constants()
    return math.log(x + 0.5) - 1.0 / x, math.log(x + c.exp_neg_gamma.value) - 1.0 / x


def theorem_margin(x: float) -> BoundedValue:
    """zeta(x) - psi(x) - pi cot(pi x), via zeta(x) - psi(1-x)."""
    _open_unit(x, "theorem_margin")
    return regularized_zeta(x) - psi_side(x)


def theorem_margin_extended(x: float) -> float:
    """theorem_margin on [0, 1], with its limits gamma - 1/2 and 2 gamma at the ends."""
    g = constants().gamma.value
    if x == 0.0:
        return g - 0.5
    if x == 1.0:
        return 2.0 * g
    return theorem_margin(x).value


@dataclass(frozen=True)
class SqueezeChain:
    x: float
    psi_side: BoundedValue
    log_bound: BoundedValue
    linear_f: BoundedValue
    zeta_side: BoundedValue

    def gaps(self) -> tuple[BoundedValue, BoundedValue, BoundedValue]:
        """The three links: log - psi, f - log, Z - f."""
        return (
            self.log_bound - self.psi_side,
            self.linear_f - self.log_bound,
            self.zeta_side - self.linear_f,
        )

    def ordered(self) -> bool:
        """psi_side < log_bound <= linear_f <= zeta_side, each gap clear of its error."""
        return all(g.value > g.err for g in self.gaps())


def squeeze_chain(x: float) -> SqueezeChain:
    _open_unit(x, "squeeze_chain")
    return SqueezeChain(x, psi_side(x), log_bound(x), linear_squeeze(x), regularized_zeta(x))


# -- margin reports ----------------------------------------------------------


@dataclass
class MarginReport:
    """Per-point gaps of an inequality; positive margins satisfy it."""

    inequality_id: str
    points: np.ndarray
    lhs: np.ndarray
    rhs: np.ndarray
    margins: np.ndarray
    errs: np.ndarray
    passing_label: str = "pass"
    failing_label: str = "fail"

    @property
    def min_margin(self) -> float:
        return float(np.min(self.margins))

    @property
    def argmin(self) -> float:
        return float(self.points[int(np.argmin(self.margins))])

    @property
    def eval_err_max(self) -> float:
        return float(np.max(self.errs))

    @property
    def verdict(self) -> bool:
        return self.min_margin > self.eval_err_max

    @property
    def label(self) -> str:
        return self.passing_label if self.verdict else self.failing_label

    def offending(self) -> list[tuple[float, float, float]]:
        """(x, margin, err) wherever the margin does not clear the error budget."""
        bad = self.margins <= self.eval_err_max
        return [(float(x), float(m), float(e)) for x, m, e in zip(self.points[bad], self.margins[bad], self.errs[bad])]


def verify_theorem1(grid: GridSpec | None = None) -> MarginReport:
    """Theorem margin at every grid point."""
    grid = grid or GridSpec()
    xs = grid.points()
    pi = constants().pi
    lhs, rhs, margins, errs = [], [], [], []
    for x in xs:
        x = float(x)
        g = theorem_margin(x)
        cot = pi * cot_pi_bounded(x)
        lhs.append(cot.value)
        rhs.append(cot.value + g.value)
        margins.append(g.value)
        errs.append(g.err)
    return MarginReport("theorem1", xs, np.array(lhs), np.array(rhs), np.array(margins), np.array(errs))


class Monotone(enum.Enum):
    Z_INCREASING = "Z_increasing"
    LOG_BOUND_DECREASING = "log_bound_decreasing"


def monotonicity_check(which: Monotone | str, grid: GridSpec) -> MarginReport:
    """Consecutive differences with the expected sign as margins."""
    which = Monotone(which)
    xs = grid.points()
    if len(xs) < 3:
        raise DomainError("monotonicity check needs a grid with at least 3 points")
    if which is Monotone.Z_INCREASING:
        vals = [regularized_zeta(float(x)) for x in xs]
        sign = 1.0
    else:
        vals = [log_bound(float(x)) for x in xs]
        sign = -1.0
    v = np.array([b.value for b in vals])
    e = np.array([b.err for b in vals])
    diffs = sign * (v[1:] - v[:-1])
    errs = e[1:] + e[:-1] + EPS * (np.abs(v[1:]) + np.abs(v[:-1]))
    return MarginReport(which.value, xs[:-1], v[:-1], v[1:], diffs, errs)


# -- certification -----------------------------------------------------------


@dataclass(frozen=True)
class CertificateRow:
    a: float
    b: float
    z_lower: float
    z_err: float
    log_upper: float
    log_err: float

    @property
    def gap(self) -> float:
        return self.z_lower - self.log_upper

    @property
    def certified(self) -> bool:
        return self.z_lower - self.z_err > self.log_upper + self.log_err


@dataclass
class CertificateReport:
    epsilon: float
    rows: list[CertificateRow]
    right_edge: CertificateRow
    left_edge_bound: BoundedValue
    analytic_edge_note: str
    subinterval_count: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def subintervals(self) -> list[tuple[float, float]]:
        return [(r.a, r.b) for r in self.rows]

    @property
    def left_edge_certified(self) -> bool:
        return self.left_edge_bound.value + self.left_edge_bound.err < 0.5

    @property
    def offending(self) -> list[tuple[float, float]]:
        return [(r.a, r.b) for r in self.rows + [self.right_edge] if not r.certified]

    @property
    def verdict(self) -> bool:
        return self.left_edge_certified and not self.offending


def _certificate_row(a: float, b: float) -> CertificateRow:
    z = regularized_zeta(a)
    lg = log_bound(a)
    return CertificateRow(a, b, z.value, z.err, lg.value, lg.err)


def certify_theorem1(epsilon: float = 1e-3, n_subintervals: int = 1000) -> CertificateReport:
    """Certify psi(1-x) < zeta(x) on (0, 1) from finitely many evaluations.

    On [a, b] the chain psi(1-x) + 1/(1-x) <= log(1 - x + e^-gamma) holds
    pointwise, the log bound decreases and Z increases, so
    Z(a) > log(1 - a + e^-gamma) settles the whole subinterval.  The same
    test at a = 1 - epsilon covers [1 - epsilon, 1).  Below epsilon the log
    bound never exceeds log(1 + e^-gamma) < 1/2, the infimum of Z.
    """
    if not 0.0 < epsilon <= 0.05:
        raise DomainError(f"certification epsilon must lie in (0, 0.05], got {epsilon!r}")
    if not isinstance(n_subintervals, (int, np.integer)) or n_subintervals < 1:
        raise DomainError("n_subintervals must be a positive integer")
    edges = np.linspace(epsilon, 1.0 - epsilon, n_subintervals + 1)
    rows = [_certificate_row(float(a), float(b)) for a, b in zip(edges[:-1], edges[1:])]
    right = _certificate_row(float(edges[-1]), 1.0)
    left = log_bound(0.0)
    note = (
        f"(0, {epsilon:g}]: log(1 - x + e^-gamma) <= log(1 + e^-gamma) = {left.value:.6f} "
        f"(+/- {left.err:.1e}) < 1/2 = inf Z, using that Z increases from the limit 1/2 at 0"
    )
    return CertificateReport(epsilon, rows, right, left, note, n_subintervals)


# -- conjecture --------------------------------------------------------------


def conjecture_margins(x: float) -> tuple[BoundedValue, BoundedValue]:
    """(g(x) - x, (gamma + 1/2) x + gamma - 1/2 - g(x))."""
    _open_unit(x, "conjecture_margins")
    c = constants()
    g = theorem_margin(x)
    return g - x, c.b_bar * x + c.b - g


@dataclass
class ConjectureScan:
    lower: MarginReport
    upper: MarginReport
    endpoint_tolerance: float

    @property
    def upper_endpoint_margins(self) -> tuple[float, float]:
        return float(self.upper.margins[0]), float(self.upper.margins[-1])

    @property
    def upper_trends_to_zero(self) -> bool:
        return all(0.0 < m <= self.endpoint_tolerance for m in self.upper_endpoint_margins)

    @property
    def consistent(self) -> bool:
        return self.lower.verdict and self.upper.verdict and self.upper_trends_to_zero

    @property
    def verdict_label(self) -> str:
        return "consistent-with-conjecture" if self.consistent else "potential-counterexample"

    def counterexamples(self) -> list[tuple[str, float, float, float]]:
        return [("lower", *o) for o in self.lower.offending()] + [("upper", *o) for o in self.upper.offending()]


def scan_conjecture(grid: GridSpec | None = None, endpoint_tolerance: float = 1e-3) -> ConjectureScan:
    """Lower and upper conjecture margins on a grid.

    The statement is open; a clean scan is evidence only.
    """
    grid = grid or GridSpec(10_000, 1e-6, Refinement.GEOMETRIC_ENDPOINTS)
    xs = grid.points()
    c = constants()
    g_vals, g_errs, lo, lo_e, up, up_e, bound = [], [], [], [], [], [], []
    for x in xs:
        x = float(x)
        low, upp = conjecture_margins(x)
        g = low + x
        g_vals.append(g.value)
        g_errs.append(g.err)
        lo.append(low.value)
        lo_e.append(low.err)
        up.append(upp.value)
        up_e.append(upp.err)
        bound.append((c.b_bar * x + c.b).value)
    g_vals = np.array(g_vals)
    lower = MarginReport(
        "conjecture_lower", xs, xs.copy(), g_vals, np.array(lo), np.array(lo_e), "consistent", "inconsistent"
    )
    upper = MarginReport(
        "conjecture_upper", xs, g_vals, np.array(bound), np.array(up), np.array(up_e), "consistent", "inconsistent"
    )
    return ConjectureScan(lower, upper, endpoint_tolerance)
