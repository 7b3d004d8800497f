"""Replicative (Kubert) functional equations and Fourier coefficients.

A function f on (0, 1) is replicative of weight w when

    p**(-w) * sum_{k=0}^{p-1} f((x + k) / p) == f(x)

for every positive integer p.  On Fourier coefficients the same property
reads ``a_n == p**(1 - w) * a_{p n}``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .grid import GridSpec
from .numerics import (
    ConvergenceError,
    DomainError,
    SingularityError,
    bernoulli_poly,
)
from .special import cot_pi, polylog_unit_circle

__all__ = [
    "CATALOG",
    "FourierReport",
    "KubertCandidate",
    "ReplicativeReport",
    "abel_kernel",
    "abel_partial_sum",
    "decimation_check",
    "decimation_tail_bound",
    "fourier_coefficients",
    "polylog_candidate",
    "replicative_residual",
    "replicative_test",
]

ENDPOINT_TOL = 1e-12


@dataclass(frozen=True)
class KubertCandidate:
    name: str
    eval: Callable[[float], float | complex]
    weight: float
    singular_at_endpoints: bool = False

    def __post_init__(self):
        if not math.isfinite(self.weight):
            raise DomainError("candidate weight must be finite")


def _bernoulli(n: int) -> Callable[[float], float]:
    def f(x):
        return bernoulli_poly(n, x)

    f.__name__ = f"bernoulli{n}"
    return f


def _log_sine(x: float) -> float:
    # Re Li_1(e^{2 pi i x})
    return -math.log(2.0 * math.sin(math.pi * x))


def polylog_candidate(s: float) -> KubertCandidate:
    """x -> Li_s(e^{2 pi i x}); replicative with weight 1 - s."""
    return KubertCandidate(
        f"polylog{s:g}",
        lambda x: polylog_unit_circle(s, x).value,
        1.0 - s,
        singular_at_endpoints=s <= 1.0,
    )


CATALOG: dict[str, KubertCandidate] = {
    "cot": KubertCandidate("cot", cot_pi, 1.0, singular_at_endpoints=True),
    "bernoulli1": KubertCandidate("bernoulli1", _bernoulli(1), 0.0),
    "bernoulli2": KubertCandidate("bernoulli2", _bernoulli(2), -1.0),
    "bernoulli3": KubertCandidate("bernoulli3", _bernoulli(3), -2.0),
    "log_sine": KubertCandidate("log_sine", _log_sine, 0.0, singular_at_endpoints=True),
}


def _scaled(total, p: int, weight: float):
    # integer weights keep p**w exact, so extended-precision totals stay extended
    if float(weight).is_integer():
        w = int(weight)
        return total / p ** w if w >= 0 else total * p ** (-w)
    return total / p ** weight


def replicative_residual(candidate: KubertCandidate, p: int, x: float):
    """``|p**-w * sum_k f((x+k)/p) - f(x)|`` for one multiplier and point."""
    if not isinstance(p, (int, np.integer)) or p < 1:
        raise DomainError(f"multiplier must be a positive integer, got {p!r}")
    if not 0.0 < x < 1.0:
        raise DomainError(f"replicative residual needs 0 < x < 1, got {x!r}")
    pts = [(x + k) / p for k in range(p)]
    if candidate.singular_at_endpoints and any(t < ENDPOINT_TOL or t > 1 - ENDPOINT_TOL for t in pts + [x]):
        raise SingularityError(f"{candidate.name}: evaluation point within {ENDPOINT_TOL:g} of an endpoint")
    try:
        total = sum(candidate.eval(t) for t in pts)
        return abs(_scaled(total, int(p), candidate.weight) - candidate.eval(x))
    except DomainError as exc:
        raise SingularityError(f"{candidate.name}: {exc}") from exc


@dataclass
class ReplicativeReport:
    candidate: str
    weight: float
    multipliers: list[int]
    grid: GridSpec
    points: np.ndarray
    residuals: np.ndarray
    tolerance: float
    failures: list[tuple[int, float, str]] = field(default_factory=list)

    @property
    def max_residual(self) -> float:
        return float(np.max(self.residuals))

    @property
    def verdict(self) -> bool:
        return self.max_residual <= self.tolerance


def replicative_test(
    candidate: KubertCandidate,
    multipliers: Sequence[int],
    grid: GridSpec,
    tolerance: float,
) -> ReplicativeReport:
    """Residual matrix over multipliers x grid points.

    Singular cells are recorded as ``inf`` and listed in ``failures``.
    """
    if not multipliers:
        raise DomainError("at least one multiplier is required")
    if not tolerance > 0:
        raise DomainError("tolerance must be positive")
    xs = grid.points()
    res = np.empty((len(multipliers), len(xs)))
    failures = []
    for i, p in enumerate(multipliers):
        for j, x in enumerate(xs):
            try:
                res[i, j] = float(replicative_residual(candidate, p, float(x)))
            except SingularityError as exc:
                res[i, j] = math.inf
                failures.append((int(p), float(x), str(exc)))
    return ReplicativeReport(candidate.name, candidate.weight, [int(p) for p in multipliers], grid, xs, res, tolerance, failures)


@dataclass
class FourierReport:
    function: str
    coefficients: np.ndarray  # a_n, n = 0..N
    negative: np.ndarray  # a_{-n}, n = 0..N
    quadrature_points: int
    quadrature_error_estimate: float
    discrepancies: np.ndarray

    @property
    def N(self) -> int:
        return len(self.coefficients) - 1

    def conjugate_symmetry_defect(self) -> np.ndarray:
        """|a_{-n} - conj(a_n)|, zero for real-valued functions."""
        return np.abs(self.negative - np.conj(self.coefficients))

    def cosine_sine(self) -> tuple[np.ndarray, np.ndarray]:
        """Real-form coefficients: f ~ c_0 + sum c_n cos(2 pi n x) + s_n sin(2 pi n x)."""
        c = self.coefficients + self.negative
        s = 1j * (self.coefficients - self.negative)
        c[0] = self.coefficients[0]
        s[0] = 0.0
        return c, s


def _samples(f: Callable[[float], float | complex], M: int) -> np.ndarray:
    try:
        ends = 0.5 * (f(0.0) + f(1.0))
    except DomainError as exc:
        raise SingularityError("endpoint values are needed: pass a continuous extension of f to [0, 1]") from exc
    vals = [ends] + [f(j / M) for j in range(1, M)]
    return np.asarray(vals, dtype=complex)


def fourier_coefficients(
    f: Callable[[float], float | complex],
    N: int,
    quad_points: int,
    name: str = "f",
    max_discrepancy: float = 1e-6,
) -> FourierReport:
    """a_n = int_0^1 f(x) e^{-2 pi i n x} dx for |n| <= N by the trapezoid rule.

    The periodic trapezoid rule is applied at ``2 * quad_points`` nodes and
    at the ``quad_points`` subset; the larger node set gives the reported
    coefficients and the per-coefficient difference is the error estimate.
    The node at 0 takes the average of ``f(0)`` and ``f(1)``.
    """
    if N < 0:
        raise DomainError("N must be non-negative")
    if quad_points < max(2, 2 * N) or quad_points & (quad_points - 1):
        raise DomainError(f"quad_points must be a power of two >= 2N, got {quad_points}")
    M2 = 2 * quad_points
    fine_samples = _samples(f, M2)
    fine = np.fft.fft(fine_samples) / M2
    coarse = np.fft.fft(fine_samples[::2]) / quad_points
    idx = np.arange(N + 1)
    pos, pos_c = fine[idx], coarse[idx]
    neg, neg_c = fine[(-idx) % M2], coarse[(-idx) % quad_points]
    disc = np.maximum(np.abs(pos - pos_c), np.abs(neg - neg_c))
    worst = float(np.max(disc))
    if not math.isfinite(worst) or worst > max_discrepancy:
        raise ConvergenceError(f"{name}: quadrature refinements disagree by {worst:.3g}; singular or unresolved integrand")
    return FourierReport(name, pos, neg, quad_points, worst, disc)


def abel_kernel(r: float) -> Callable[[float], complex]:
    """x -> (1 + r q) / (1 - r q) with q = e^{2 pi i x}; tends to i cot(pi x) as r -> 1."""
    if not 0.0 <= r < 1.0:
        raise DomainError("Abel radius must lie in [0, 1)")

    def f(x: float) -> complex:
        q = r * cmath.exp(2j * math.pi * x)
        return (1 + q) / (1 - q)

    return f


def abel_partial_sum(coefficients: Sequence[complex], x: float, r: float = 1.0) -> complex:
    """sum_n a_n (r q)^n over the given coefficients."""
    n = np.arange(len(coefficients))
    q = r ** n * np.exp(2j * math.pi * x * n)
    return complex(np.sum(np.asarray(coefficients) * q))


def decimation_check(
    coefficients: Sequence[complex],
    p: int,
    theta: float,
    weight: float = 1.0,
    radius: float = 1.0,
) -> float:
    """|sum_n a_n q^n - p**(1-w) sum_n a_{pn} q^n| with q = radius * e^{2 pi i theta}.

    Both sums run over n = 0..M with M = (len(a) - 1) // p, so the same index
    budget is used on each side.  For weight 1 this is the plain decimation
    identity satisfied by the coefficients of cot-type functions.
    """
    if p < 1:
        raise DomainError("p must be a positive integer")
    a = np.asarray(coefficients, dtype=complex)
    M = (len(a) - 1) // p
    n = np.arange(M + 1)
    q = radius ** n * np.exp(2j * math.pi * theta * n)
    lhs = np.sum(a[: M + 1] * q)
    rhs = np.sum(a[: p * M + 1 : p] * q) * p ** (1.0 - weight)
    return float(abs(lhs - rhs))


def decimation_tail_bound(coefficients: Sequence[complex], p: int, radius: float, weight: float = 1.0) -> float:
    """Bound on what truncation at M drops from both sides, assuming |a_n| <= max of the list.

    Infinite on the unit circle, where the series are not absolutely convergent.
    """
    if radius >= 1.0:
        return math.inf
    a = np.abs(np.asarray(coefficients))
    M = (len(a) - 1) // p
    geo = radius ** (M + 1) / (1.0 - radius)
    return float(np.max(a)) * geo * (1.0 + p ** (1.0 - weight))
