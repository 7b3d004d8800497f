import math
import warnings

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import integrate

from cotzeta.numerics import ConvergenceError, DomainError, PoleError, SingularityError, euler_gamma
from cotzeta.special import (
    ZetaRoute,
    check_cot_identity,
    check_functional_equation,
    check_reflection,
    cot_pi,
    cot_pi_bounded,
    digamma,
    gamma,
    integral_sum,
    integral_term,
    integral_term_bound,
    integral_term_closed_form,
    log_gamma,
    polylog_unit_circle,
    zeta,
    zeta_regularized,
)

GAMMA = 0.5772156649015329


def _quad_I_n(n, x):
    f = lambda t: (t - n - 0.5) * t ** (-x - 1.0)
    with warnings.catch_warnings():
        # quad flags roundoff once it hits double-precision floor, which is expected here
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        val, _ = integrate.quad(f, n, n + 1, epsabs=1e-15, epsrel=1e-13)
    return val


class TestDigamma:
    def test_examples(self):
        assert digamma(1.0).contains(-GAMMA)
        assert digamma(0.5).contains(-GAMMA - 2 * math.log(2), 1e-16)
        assert abs(digamma(2.0).value - (1 - GAMMA)) <= 1e-15
        assert abs(digamma(0.5).value + 1.9635100260214235) <= 1e-15

    @pytest.mark.parametrize("x", [1e-6, 1e-3, 0.1, 0.25, 0.5, 0.75, 0.999, 1.0, 1.7, 3.0, 9.9, 10.0, 25.0, 1e4])
    def test_against_mpmath(self, x):
        d = digamma(x)
        assert abs(d.value - float(mpmath.digamma(x))) <= d.err
        # absolute 1e-13 is below one ulp once |psi| grows past ~100
        assert d.err <= 1e-13 * max(1.0, abs(d.value))

    def test_closed_forms_at_quarters(self):
        g = GAMMA
        assert digamma(0.25).contains(-g - 3 * math.log(2) - math.pi / 2, 1e-15)
        assert digamma(0.75).contains(-g - 3 * math.log(2) + math.pi / 2, 1e-15)

    def test_halving_order_within_err(self):
        for x in np.linspace(0.05, 5, 60):
            full, half = digamma(x, order=8), digamma(x, order=4)
            assert abs(full.value - half.value) <= half.err
            lf, lh = log_gamma(x, order=8), log_gamma(x, order=4)
            assert abs(lf.value - lh.value) <= lh.err

    def test_domain(self):
        for bad in (0.0, -1.0, math.nan, math.inf):
            with pytest.raises(DomainError):
                digamma(bad)


class TestLogGamma:
    def test_examples(self):
        assert log_gamma(1.0).contains(0.0)
        assert log_gamma(0.5).contains(0.5 * math.log(math.pi), 1e-16)
        assert log_gamma(5.0).contains(math.log(24.0), 1e-16)

    @pytest.mark.parametrize("x", [1e-4, 0.1, 0.3, 0.5, 0.9, 2.5, 7.0, 12.0, 150.0])
    def test_against_mpmath(self, x):
        v = log_gamma(x)
        assert abs(v.value - float(mpmath.loggamma(x))) <= v.err
        assert v.err <= 1e-12 * max(1.0, abs(v.value))

    def test_gamma_on_negative_strip(self):
        for x in (-0.9, -0.5, -0.1, 0.3, 1.5):
            g = gamma(x)
            assert abs(g.value - float(mpmath.gamma(x))) <= g.err
        with pytest.raises(PoleError):
            gamma(0.0)
        with pytest.raises(DomainError):
            gamma(-1.0)


class TestCot:
    def test_examples(self):
        assert cot_pi(0.5) == 0.0
        assert cot_pi(0.25) == pytest.approx(1.0, abs=2.3e-16)
        assert cot_pi(1 / 3) == pytest.approx(1 / math.sqrt(3), abs=1e-16)

    def test_against_mpmath(self):
        with mpmath.workdps(40):
            for x in np.linspace(1e-4, 1 - 1e-4, 301):
                b = cot_pi_bounded(float(x))
                assert abs(b.value - float(mpmath.cot(mpmath.pi * mpmath.mpf(float(x))))) <= b.err

    @given(st.floats(min_value=0.5, max_value=1.0, exclude_max=True))
    @settings(max_examples=500)
    def test_antisymmetry_bit_exact(self, x):
        # for x >= 1/2, 1 - x is exact, so both sides see the same pair
        assert cot_pi(1.0 - x) == -cot_pi(x)

    def test_endpoints(self):
        for bad in (0.0, 1.0, -0.1):
            with pytest.raises(DomainError):
                cot_pi(bad)


class TestZeta:
    def test_examples(self):
        v = zeta(0.5, ZetaRoute.ETA_SERIES)
        assert abs(v.value + 1.4603545088095868) <= max(v.err, 1e-15)
        assert zeta(0.0, ZetaRoute.FRACTIONAL_PART_INTEGRAL).value == -0.5
        assert zeta(2.0, "eta").contains(math.pi**2 / 6, 1e-16)

    def test_direct_series_oracle_at_two(self):
        n = 10**6
        direct = math.fsum(1.0 / k**2 for k in range(1, n)) + 1.0 / n + 0.5 / n**2 + 1.0 / (6 * n**3)
        assert abs(zeta(2.0).value - direct) <= 1e-12

    @pytest.mark.parametrize("s", [-0.95, -0.5, -0.1, 0.0, 0.05, 0.3, 0.7, 0.99, 1.01, 1.5, 3.0, 10.0, 40.0])
    def test_auto_against_mpmath(self, s):
        v = zeta(s)
        assert abs(v.value - float(mpmath.zeta(s))) <= v.err
        assert v.err <= 1e-11 * max(1.0, abs(v.value))

    def test_integral_route_against_mpmath(self):
        for s in np.linspace(-0.95, 0.95, 39):
            v = zeta(float(s), ZetaRoute.FRACTIONAL_PART_INTEGRAL)
            assert abs(v.value - float(mpmath.zeta(float(s)))) <= v.err

    def test_route_agreement(self):
        for s in np.linspace(0.001, 0.95, 200):
            a = zeta(float(s), ZetaRoute.ETA_SERIES)
            b = zeta(float(s), ZetaRoute.FRACTIONAL_PART_INTEGRAL)
            assert abs(a.value - b.value) <= a.err + b.err

    def test_regularized_identity(self):
        for x in np.arange(1, 100) / 100:
            x = float(x)
            I = integral_sum(x)
            lhs = zeta(x, ZetaRoute.ETA_SERIES) + 1.0 / (1.0 - x)
            rhs = x * abs(I) + 0.5
            assert abs(lhs.value - rhs.value) <= lhs.err + rhs.err + 1e-16 / (1 - x) ** 2

    def test_regularized_limits(self):
        assert abs(zeta_regularized(1e-6).value - 0.5) <= 1e-5
        assert abs(zeta_regularized(1 - 1e-6).value - GAMMA) <= 1e-5

    def test_errors(self):
        with pytest.raises(PoleError):
            zeta(1.0)
        for bad in (-1.0, -2.0, 41.0, math.nan):
            with pytest.raises(DomainError):
                zeta(bad)
        with pytest.raises(DomainError):
            zeta(-0.5, ZetaRoute.ETA_SERIES)
        with pytest.raises(ValueError):
            zeta(0.5, "nope")


class TestIntegralTerms:
    def test_first_term_quadrature(self):
        # int_1^2 (t - 3/2) t^-1.5 dt = 2 sqrt 2 + 3/sqrt 2 - 5
        closed = 2 * math.sqrt(2) + 3 / math.sqrt(2) - 5
        assert integral_term(1, 0.5) == pytest.approx(closed, abs=1e-15)
        assert integral_term(1, 0.5) == pytest.approx(_quad_I_n(1, 0.5), abs=1e-13)

    def test_sign(self):
        for n in range(1, 101):
            for x in np.arange(1, 10) / 10:
                assert integral_term(n, float(x)) < 0

    def test_against_quadrature(self):
        for n in (1, 2, 5, 17, 100):
            for x in (-0.9, -0.3, 0.0, 0.2, 0.5, 0.9):
                assert integral_term(n, x) == pytest.approx(_quad_I_n(n, x), rel=1e-9, abs=1e-16)

    def test_closed_form_agrees_for_small_n(self):
        for n in (1, 2, 3, 10):
            for x in (0.1, 0.5, 0.9):
                assert integral_term_closed_form(n, x) == pytest.approx(integral_term(n, x), rel=1e-9)

    def test_tail_bound_validated_to_1e4(self):
        ns = sorted(set(list(range(1, 200)) + [int(v) for v in np.geomspace(200, 10_000, 40)]))
        with mpmath.workdps(40):
            for x in (0.05, 0.3, 0.5, 0.7, 0.95):
                for n in ns:
                    ref = mpmath.quad(lambda t: (t - n - mpmath.mpf(1) / 2) * t ** (-x - 1), [n, n + 1])
                    assert abs(float(ref)) <= integral_term_bound(n, x)
                    assert integral_term(n, x) == pytest.approx(float(ref), rel=1e-12)

    def test_stated_magnitude_example(self):
        for n in (10, 100):
            assert abs(integral_term(n, 0.5)) <= 1.5 / (8 * n**2.5)

    def test_integral_sum(self):
        I = integral_sum(0.5)
        assert 0.5 * abs(I.value) + 0.5 == pytest.approx(float(mpmath.zeta(0.5)) + 2, abs=1e-14)
        for x in np.linspace(0.05, 0.95, 19):
            assert integral_sum(float(x)).value < 0
        assert integral_sum(0.7).value > integral_sum(0.3).value

    def test_integral_sum_against_mpmath(self):
        for x in (-0.9, -0.4, 0.1, 0.5, 0.9):
            # I(x) = (1/2 - 1/(1-x) - zeta(x)) / x
            with mpmath.workdps(40):
                ref = (0.5 - 1 / (1 - mpmath.mpf(x)) - mpmath.zeta(x)) / x
            v = integral_sum(x)
            assert abs(v.value - float(ref)) <= v.err + 1e-16

    def test_integral_sum_cap(self):
        with pytest.raises(ConvergenceError):
            integral_sum(-0.99, target_err=1e-300, n_cap=64)


class TestPolylog:
    def test_examples(self):
        v = polylog_unit_circle(2.0, 0.5)
        assert abs(v.value - (-math.pi**2 / 12)) <= v.err + 1e-16
        v0 = polylog_unit_circle(0.0, 0.25)
        assert abs(v0.value - complex(-0.5, 0.5)) <= v0.err
        v1 = polylog_unit_circle(1.0, 0.5)
        assert abs(v1.value + math.log(2)) <= v1.err

    @pytest.mark.parametrize("s", [0.1, 0.5, 0.9, 1.5, 2.0, 3.5])
    @pytest.mark.parametrize("theta", [0.01, 0.2, 0.5, 0.73, 0.995])
    def test_against_mpmath(self, s, theta):
        v = polylog_unit_circle(s, theta)
        ref = complex(mpmath.polylog(s, mpmath.expjpi(2 * mpmath.mpf(theta))))
        assert abs(v.value - ref) <= v.err
        assert v.err <= 1e-10

    def test_errors(self):
        with pytest.raises(DomainError):
            polylog_unit_circle(-0.5, 0.3)
        with pytest.raises(SingularityError):
            polylog_unit_circle(2.0, 0.0)
        with pytest.raises(ConvergenceError):
            polylog_unit_circle(0.5, 1e-9, n_cap=1000)


class TestIdentities:
    def test_reflection_examples(self):
        assert check_reflection(0.5).residual <= check_reflection(0.5).err
        r = check_reflection(0.25)
        assert abs(r.lhs.value - math.pi) <= 1e-12
        assert check_reflection(0.9).residual <= 1e-11

    def test_functional_equation_examples(self):
        r = check_functional_equation(0.5)
        assert r.residual <= r.err
        assert check_functional_equation(0.25).relative <= 1e-10
        assert check_functional_equation(0.75).relative <= 1e-10

    def test_cot_identity_examples(self):
        r = check_cot_identity(0.25)
        assert abs(r.rhs.value - math.pi) <= r.rhs.err
        assert check_cot_identity(0.3).relative <= 1e-8
        assert check_cot_identity(0.45).relative <= 1e-6
        with pytest.raises(PoleError):
            check_cot_identity(0.5)
        with pytest.raises(DomainError):
            check_cot_identity(1.2)

    def test_grids(self):
        for s in np.linspace(0.05, 0.95, 50):
            s = float(s)
            r = check_reflection(s)
            assert r.residual <= 1e-11 and r.consistent
            f = check_functional_equation(s)
            assert f.relative <= 1e-10 and f.consistent
            if abs(s - 0.5) >= 0.05:
                c = check_cot_identity(s)
                assert c.relative <= 1e-8 and c.consistent

    def test_gamma_constant_consistency(self):
        g = euler_gamma()
        assert abs(g.value + digamma(1.0).value) <= g.err + digamma(1.0).err
