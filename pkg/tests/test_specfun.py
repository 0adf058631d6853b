from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st
from mpmath import mp, mpc, mpf

from mellin_sum import specfun
from mellin_sum.errors import DomainError
from mellin_sum.mpnum import PrecisionContext

CTX = PrecisionContext(30)


def close(a, b, digits=30):
    with mpmath.workdps(digits + 20):
        return abs(a - b) <= mpf(10) ** -digits * max(1, abs(b))


def oracle(fn, *args, dps=60):
    with mpmath.workdps(dps):
        return fn(*args)


# -- gamma -------------------------------------------------------------------------------


def test_gamma_known_values():
    assert close(specfun.gamma(mpf(1) / 2, CTX), oracle(lambda: mpmath.sqrt(mp.pi)))
    assert specfun.gamma(5, CTX) == 24


@pytest.mark.parametrize("z", ["0.3", "7.25", "-2.5", "0.5+1j", "3-4j", "-1.5+0.2j", "40+15j"])
def test_gamma_against_oracle(z):
    with CTX.activate():
        w = mpmath.mpmathify(z)
    assert close(specfun.gamma(w, CTX), oracle(mpmath.gamma, w))


@pytest.mark.parametrize("n", [0, -1, -7])
def test_gamma_poles(n):
    with pytest.raises(DomainError):
        specfun.gamma(n, CTX)


def test_gamma_near_pole_is_finite():
    with CTX.activate():
        z = mpf(-3) + mpf(10) ** -20
    assert close(specfun.gamma(z, CTX), oracle(mpmath.gamma, z))


def test_loggamma_branch_is_continuous():
    with CTX.activate():
        values = [specfun.loggamma(mpc(0.5, v), CTX).imag for v in mpmath.linspace(0, 30, 61)]
        steps = [abs(b - a) for a, b in zip(values, values[1:])]
    assert max(steps) < 3


@settings(max_examples=30, deadline=None)
@given(st.floats(min_value=-6, max_value=6), st.floats(min_value=-4, max_value=4))
def test_gamma_reflection(x, y):
    ctx = PrecisionContext(25)
    with ctx.activate():
        z = mpc(x, y)
        if y == 0 and mpmath.isint(x):
            return
        product = specfun.gamma(z, ctx) * specfun.gamma(1 - z, ctx) * mpmath.sinpi(z)
        scale = max(1, abs(specfun.gamma(z, ctx) * specfun.gamma(1 - z, ctx)))
        assert abs(product - mp.pi) <= 10 ** -24 * scale


@pytest.mark.parametrize("v", ["0.1", "1", "5", "20"])
def test_gamma_half_line_modulus(v):
    v = mpf(v)
    with CTX.activate():
        modulus = abs(specfun.gamma(mpc(0.5, v), CTX))
        expected = mpmath.sqrt(mp.pi / mpmath.cosh(mp.pi * v))
        assert abs(modulus - expected) <= CTX.tol * expected


def test_gamma_half_plus_i_modulus_digits():
    with CTX.activate():
        value = abs(specfun.gamma(mpc(0.5, 1), CTX))
    assert mpmath.nstr(value, 16).startswith("0.520590963616751")


# -- zeta --------------------------------------------------------------------------------


def test_zeta_known_values():
    assert close(specfun.zeta(2, CTX), oracle(lambda: mp.pi ** 2 / 6))
    assert specfun.zeta(0, CTX) == mpf(-1) / 2
    assert close(specfun.zeta(-1, CTX), oracle(lambda: mpf(-1) / 12))
    assert specfun.zeta(-4, CTX) == 0


def test_zeta_pole():
    with pytest.raises(DomainError):
        specfun.zeta(1, CTX)


@pytest.mark.parametrize("z", ["3", "0.5", "0.25", "-3.5", "0.5+14.134725j", "0.5+100j", "2+300j", "-0.5-20j",
                               "1.000001"])
def test_zeta_against_oracle(z):
    with CTX.activate():
        w = mpmath.mpmathify(z)
    got = specfun.zeta(w, CTX)
    want = oracle(mpmath.zeta, w)
    with mpmath.workdps(50):
        assert abs(got - want) <= mpf(10) ** -29 * max(1, abs(want))


def test_zeta_conjugate_symmetry():
    with CTX.activate():
        z = mpc("0.3", "7.5")
        assert abs(specfun.zeta(z, CTX) - mpmath.conj(specfun.zeta(mpmath.conj(z), CTX))) < CTX.tol


# -- Bernoulli ----------------------------------------------------------------------------


def test_bernoulli_values():
    assert specfun.bernoulli(0) == 1
    assert specfun.bernoulli(1) == Fraction(-1, 2)
    assert specfun.bernoulli(2) == Fraction(1, 6)
    assert specfun.bernoulli(3) == 0
    assert specfun.bernoulli(12) == Fraction(-691, 2730)
    for k in range(0, 40, 2):
        bk = specfun.bernoulli(k)
        assert mpmath.bernfrac(k) == (bk.numerator, bk.denominator)


def test_bernoulli_rejects_negative():
    with pytest.raises(DomainError):
        specfun.bernoulli(-2)


@pytest.mark.parametrize("k", range(1, 31))
def test_bernoulli_zeta_bridge(k):
    ctx = PrecisionContext(25)
    bk = specfun.bernoulli(2 * k)
    with ctx.activate():
        expected = -mpf(bk.numerator) / bk.denominator / (2 * k)
    got = specfun.zeta(1 - 2 * k, ctx)
    with ctx.activate():
        assert abs(got - expected) <= ctx.tol * max(1, abs(expected))


def test_bernoulli_even_zeta_relation():
    with CTX.activate():
        for k in range(1, 15):
            bk = specfun.bernoulli(2 * k)
            rhs = (-1) ** (k + 1) * 2 * mpmath.factorial(2 * k) * specfun.zeta(2 * k, CTX) / (2 * mp.pi) ** (2 * k)
            assert abs(mpf(bk.numerator) / bk.denominator - rhs) <= CTX.tol * abs(rhs)


def test_bernoulli_even_mpf_table():
    with CTX.activate():
        table = specfun.bernoulli_even_mpf(5)
        assert table[1] == mpf(1) / 6 and abs(table[5] - mpf(5) / 66) < CTX.tol


# -- q-digamma and theta ------------------------------------------------------------------


def _brute_q_digamma(q, z, terms):
    with mpmath.workdps(60):
        q, z = mpf(q), mpmath.mpmathify(z)
        total = mpmath.fsum(q ** (k + z) / (1 - q ** (k + z)) for k in range(terms))
        return -mpmath.log(1 - q) + mpmath.log(q) * total


def test_q_digamma_half_at_one():
    value = specfun.q_digamma(mpf(1) / 2, 1, CTX)
    assert mpmath.nstr(value, 20).startswith("-0.42052903435604577978")


@pytest.mark.parametrize("q,z", [("0.5", "1"), ("0.9", "0.3"), ("0.1", "2.5"), ("0.75", "1+2j")])
def test_q_digamma_within_tail_bound(q, z):
    with CTX.activate():
        qv, zv = mpf(q), mpmath.mpmathify(z)
    res = specfun.q_digamma(qv, zv, CTX, detailed=True)
    brute = _brute_q_digamma(q, z, 10 * res.terms_used)
    with mpmath.workdps(60):
        assert abs(res.value - brute) <= res.tail_bound + CTX.tol


def test_q_digamma_erdos_borwein_relation():
    ctx = PrecisionContext(30)
    psi = specfun.q_digamma(mpf(1) / 2, 1, ctx)
    with mpmath.workdps(60):
        direct = mpmath.nsum(lambda k: 1 / (1 - mpf(2) ** k), [1, mpmath.inf])
        assert abs(psi / mpmath.log(2) - 1 - direct) < mpf(10) ** -29
    assert mpmath.nstr(direct, 13).startswith("-1.606695152415")


def test_q_digamma_small_q_trend():
    values = [abs(specfun.q_digamma(mpf(10) ** -k, 1, CTX)) for k in (2, 4, 8)]
    assert values[0] > values[1] > values[2]


def test_q_digamma_domain():
    with pytest.raises(DomainError):
        specfun.q_digamma(1, 1, CTX)
    with pytest.raises(DomainError):
        specfun.q_digamma(mpf(1) / 2, 0, CTX)


def test_theta3_lambert_identity():
    with CTX.activate():
        left = specfun.theta3(mpf(1) / 3, CTX) ** 2 - 1
    with mpmath.workdps(60):
        x = mpf(1) / 3
        right = 4 * mpmath.nsum(lambda k: (-1) ** k * x ** (2 * k + 1) / (1 - x ** (2 * k + 1)), [0, mpmath.inf])
        assert abs(left - right) < mpf(10) ** -29


def test_theta3_at_exp_minus_pi():
    with CTX.activate():
        value = specfun.theta3(mpmath.exp(-mp.pi), CTX)
    expected = oracle(lambda: mp.pi ** mpf(0.25) / mpmath.gamma(mpf(3) / 4))
    assert close(value, expected)


def test_theta3_small_x_and_domain():
    assert close(specfun.theta3(mpf(10) ** -40, CTX), 1)
    with pytest.raises(DomainError):
        specfun.theta3(1, CTX)


def test_theta3_tail_bound():
    with CTX.activate():
        res = specfun.theta3(mpf("0.99"), CTX, detailed=True)
    with mpmath.workdps(60):
        assert abs(res.value - mpmath.jtheta(3, 0, mpf("0.99"))) <= res.tail_bound + CTX.tol * res.value


# -- Upsilon and polar parts -------------------------------------------------------------


def test_upsilon_symmetry_at_one_third():
    with CTX.activate():
        s = mpf(1) / 3
        assert close(specfun.upsilon(s, mp.pi, CTX), specfun.upsilon(1 - s, mp.pi, CTX))


def test_upsilon_general_reflection():
    with CTX.activate():
        s, b = mpc("0.3", 2), mpf(2)
        left = specfun.upsilon(s, b, CTX)
        right = specfun.upsilon(1 - s, b, CTX) * (b / mp.pi) ** (mpf(1) / 2 - s)
        assert abs(left - right) <= CTX.tol * abs(left)


def test_upsilon_at_two():
    assert close(specfun.upsilon(2, oracle(lambda: +mp.pi), CTX), oracle(lambda: mp.pi / 6), 29)


@settings(max_examples=25, deadline=None)
@given(st.floats(min_value=0.05, max_value=0.95), st.floats(min_value=-30, max_value=30))
def test_upsilon_functional_equation_in_strip(x, y):
    ctx = PrecisionContext(25)
    with ctx.activate():
        s = mpc(x, y)
        left = specfun.upsilon(s, mp.pi, ctx)
        right = specfun.upsilon(1 - s, mp.pi, ctx)
        assert abs(left - right) <= 10 ** -24 * max(1, abs(left))


@pytest.mark.parametrize("v", ["0", "0.7", "1", "4", "12.5"])
@pytest.mark.parametrize("which", ["gamma-half-line", "zeta-half-line"])
def test_polar_parts_reconstruct(which, v):
    v = mpf(v)
    parts = specfun.polar_parts(which, v, CTX)
    with CTX.activate():
        s = mpc(0.5, v)
        direct = specfun.gamma(s, CTX) if which == "gamma-half-line" else specfun.zeta(s, CTX)
        assert parts.modulus >= 0
        assert abs(parts.value() - direct) <= CTX.tol * max(1, abs(direct))


def test_polar_gamma_at_zero():
    parts = specfun.polar_parts("gamma-half-line", 0, CTX)
    assert close(parts.modulus, oracle(lambda: mpmath.sqrt(mp.pi)))
    assert parts.phase == 0


def test_zeta_phase_normalisation_and_alignment():
    with CTX.activate():
        assert abs(specfun.zeta_phase_alpha(0, CTX) + mp.pi) < CTX.tol
        for v in (mpf("0.5"), mpf(3), mpf(20)):
            z = specfun.zeta(mpc(0.5, v), CTX)
            rotated = z * mpmath.expj(-specfun.zeta_phase_alpha(v, CTX))
            assert abs(rotated.imag) <= CTX.tol * max(1, abs(z))


def test_polar_parts_unknown_target():
    with pytest.raises(ValueError):
        specfun.polar_parts("beta", 1, CTX)
