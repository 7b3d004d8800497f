import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cotzeta.numerics import (
    EPS,
    BoundedValue,
    DomainError,
    bernoulli_number,
    bernoulli_poly,
    bv_exp,
    bv_log,
    constants,
    euler_gamma,
    frac_part,
    unit_phase,
)
from cotzeta.special import digamma


def _gamma_oracle():
    # H_n - ln n with Euler-Maclaurin corrections, at 50 digits
    with mpmath.workdps(50):
        n = 10_000
        h = mpmath.fsum(mpmath.mpf(1) / k for k in range(1, n + 1))
        corr = mpmath.mpf(1) / (2 * n) - mpmath.mpf(1) / (12 * n**2) + mpmath.mpf(1) / (120 * n**4) - mpmath.mpf(1) / (252 * n**6)
        return h - mpmath.log(n) - corr


class TestConstants:
    def test_gamma_against_harmonic_oracle(self):
        g = euler_gamma()
        assert g.err <= 1e-15
        assert abs(g.value - float(_gamma_oracle())) <= g.err + 1e-30
        assert g.value == 0.5772156649015329

    def test_gamma_matches_minus_digamma_one(self):
        g, d = euler_gamma(), digamma(1.0)
        assert abs(g.value + d.value) <= g.err + d.err

    def test_exp_neg_gamma(self):
        c = constants()
        assert abs(c.exp_neg_gamma.value - 0.5614594835668851) <= 2e-15
        e = bv_exp(c.gamma * -1.0)
        assert abs(e.value - c.exp_neg_gamma.value) <= e.err + c.exp_neg_gamma.err

    def test_b_and_b_bar(self):
        c = constants()
        assert c.b.value == c.gamma.value - 0.5
        assert c.b_bar.value == c.gamma.value + 0.5
        assert c.b.value == pytest.approx(0.0772156649015329, abs=1e-16)

    def test_pi(self):
        assert constants().pi.value == math.pi


class TestBoundedValue:
    def test_rejects_negative_err(self):
        with pytest.raises(ValueError):
            BoundedValue(1.0, -1.0)
        with pytest.raises(ValueError):
            BoundedValue(1.0, math.inf)

    def test_sum_error_adds(self):
        a, b = BoundedValue(1.0, 1e-10), BoundedValue(2.0, 2e-10)
        assert (a + b).err >= 3e-10
        assert (a - b).err >= 3e-10

    def test_division_needs_separated_denominator(self):
        with pytest.raises(ZeroDivisionError):
            BoundedValue(1.0) / BoundedValue(1e-3, 6e-4)
        with pytest.raises(ZeroDivisionError):
            BoundedValue(1.0) / 0.0

    def test_log_domain(self):
        with pytest.raises(DomainError):
            bv_log(BoundedValue(-1.0))

    def test_random_composites_against_double_precision(self):
        # true error of each composite expression must sit under the reported err
        rng = np.random.default_rng(7)
        mpmath.mp.prec = 106
        try:
            for _ in range(10_000):
                a, b, c = (float(v) for v in rng.uniform(-10, 10, 3) * 10.0 ** rng.integers(-3, 4, 3))
                if abs(b) < 1e-6 or abs(c) < 1e-6:
                    continue
                A, B, C = BoundedValue(a), BoundedValue(b), BoundedValue(c)
                ma, mb, mc = mpmath.mpf(a), mpmath.mpf(b), mpmath.mpf(c)
                for got, exact in (
                    ((A + B) * C, (ma + mb) * mc),
                    ((A - B) / C, (ma - mb) / mc),
                    (A * B - C, ma * mb - mc),
                    ((A * B + C) / (B * C), (ma * mb + mc) / (mb * mc)),
                ):
                    assert abs(mpmath.mpf(got.value) - exact) <= got.err, (a, b, c)
        finally:
            mpmath.mp.prec = 53

    def test_inputs_with_error_are_propagated(self):
        rng = np.random.default_rng(8)
        for _ in range(2000):
            a, b = rng.uniform(0.5, 2.0, 2)
            da, db = rng.uniform(0, 1e-6, 2)
            A, B = BoundedValue(a, da), BoundedValue(b, db)
            sa, sb = rng.uniform(-1, 1, 2)
            ta, tb = Fraction(a) + Fraction(sa * da), Fraction(b) + Fraction(sb * db)
            assert abs(Fraction((A * B).value) - ta * tb) <= Fraction((A * B).err)
            assert abs(Fraction((A / B).value) - ta / tb) <= Fraction((A / B).err)

    def test_contains(self):
        v = BoundedValue(1.0, 0.1)
        assert v.contains(1.05) and not v.contains(1.2)
        assert v.lo == 0.9 and v.hi == 1.1


class TestBernoulli:
    @pytest.mark.parametrize(
        "n,val",
        [(0, 1.0), (1, -0.5), (2, 1 / 6), (4, -1 / 30), (6, 1 / 42), (8, -1 / 30), (10, 5 / 66), (12, -691 / 2730), (3, 0.0)],
    )
    def test_numbers(self, n, val):
        assert bernoulli_number(n) == pytest.approx(val, abs=1e-15)

    def test_numbers_match_mpmath(self):
        for n in range(0, 33):
            ref = float(mpmath.bernoulli(n)) if n != 1 else -0.5
            assert bernoulli_number(n) == pytest.approx(ref, rel=1e-15, abs=1e-300)

    def test_poly_examples(self):
        assert bernoulli_poly(1, 0.5) == 0.0
        assert bernoulli_poly(1, euler_gamma().value) == pytest.approx(0.0772156649015329, abs=1e-16)
        assert bernoulli_poly(2, 0.0) == pytest.approx(1 / 6, abs=1e-16)
        assert bernoulli_poly(0, 123.0) == 1.0

    def test_poly_matches_mpmath(self):
        for n in range(0, 12):
            for x in (0.0, 0.1, 0.37, 0.5, 0.9):
                assert bernoulli_poly(n, x) == pytest.approx(float(mpmath.bernpoly(n, x)), abs=1e-13)

    def test_difference_property(self):
        rng = np.random.default_rng(3)
        for n in range(1, 9):
            for x in rng.uniform(0, 1, 1000):
                assert abs(bernoulli_poly(n, x + 1) - bernoulli_poly(n, x) - n * x ** (n - 1)) <= 1e-12

    def test_rejects_high_order(self):
        with pytest.raises(DomainError):
            bernoulli_poly(33, 0.5)
        with pytest.raises(DomainError):
            bernoulli_number(40)


class TestFracPart:
    def test_examples(self):
        assert frac_part(2.75) == 0.75
        assert frac_part(3.0) == 0.0
        assert abs(frac_part(0.1 + 7) - 0.1) <= 7 * EPS * 8

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            frac_part(-0.5)

    @given(st.floats(min_value=0, max_value=1e15, allow_nan=False))
    @settings(max_examples=300)
    def test_reconstruction(self, t):
        f = frac_part(t)
        assert 0.0 <= f < 1.0
        assert f + math.floor(t) == t


def test_unit_phase_exact_reduction():
    assert unit_phase(10**12, 0.25) == pytest.approx(1.0, abs=1e-15)
    assert unit_phase(3, 0.5) == pytest.approx(-1.0, abs=1e-15)
    z = unit_phase(7, 0.1)
    assert abs(z - complex(mpmath.expjpi(2 * 7 * mpmath.mpf(0.1)))) <= 1e-15
