"""Vertical-line integral identities (groups G6 to G8)."""

from __future__ import annotations

import math

import mpmath
from mpmath import mp, mpc, mpf

from .. import limits, series, specfun
from ..contour import DecayModel
from ..results import Approx
from .core import TREND, IdentityRecord, Param
from ._common import (G, Z, bose, check, finite, full_line, gamma_const, gamma_decay, gr, half_line,
                      is_int, omega, real_integral, stream, vline, zeta_growth, zr)

# -- G6: ζ(−s w) Γ(w) ζ(w) -------------------------------------------------------------


def _fall_integrand(s, weight=None):
    def f(w, ctx):
        v = Z(-s * w, ctx) * G(w, ctx) * Z(w, ctx)
        return v if weight is None else v * weight(w)
    return f


def _fall_decay(s, c):
    return gamma_decay(c, -s * c, c, extra_power=0.25)


def _f11_lhs(p, ctx):
    s, c = p["s"], p["c"]
    return vline(_fall_integrand(s), c, ctx, _fall_decay(s, c))


def _f11_domain(p):
    s, c = p["s"], p["c"]
    return check((s < 0, "s must be negative"), (c > 1, "c must exceed 1"), (c > -1 / s, "c must exceed −1/s"))


def _fall_domain(p):
    s, c = p["s"], p["c"]
    return check((s < 0, "s must be negative"), (s != -1, "s = −1 merges two poles"),
                 (not is_int(c), "c must not be an integer"), (c != -1 / s, "c must not equal −1/s"))


def _fall_lhs(p, ctx):
    s, c = p["s"], p["c"]
    return _f11_lhs(p, ctx) - bose(-s, ctx)


def _fall_rhs(p, ctx):
    s, c = p["s"], p["c"]
    pole = gr(-1 / s, ctx) * zr(-1 / s, ctx) / s
    if c > 1:
        return 0 if c > -1 / s else pole
    if c > 0:
        return -zr(-s, ctx) if c > -1 / s else pole - zr(-s, ctx)
    n = int(mpmath.floor(-c))
    tail = finite(lambda j: (-1) ** j * zr(s * j, ctx) * zr(-j, ctx) / mpmath.factorial(j), 0, n, ctx)
    return pole - zr(-s, ctx) - tail


def _fermi(sigma, ctx):
    # Σ 1/(e^x + 1) = Σ 1/(e^x − 1) − 2 Σ 1/(e^{2x} − 1)
    return bose(sigma, ctx) - bose(sigma, ctx, 2).scale(2)


def _fall4_lhs(p, ctx):
    s, c = p["s"], p["c"]
    f = _fall_integrand(s, lambda w: mpf(2) ** (1 - w) - 1)
    return vline(f, c, ctx, _fall_decay(s, c)) + _fermi(-s, ctx)


def _fall4_rhs(p, ctx):
    s, c = p["s"], p["c"]
    if c > -1 / s:
        return 0
    pole = gr(-1 / s, ctx) * zr(-1 / s, ctx) * (-1 + mpf(2) ** (1 + 1 / s)) / s
    if c > 0:
        return pole
    n = int(mpmath.floor(-c))
    bern = finite(lambda j: (mpf(2) ** (2 * j) - 1) / mpmath.factorial(2 * j) * zr((2 * j - 1) * s, ctx)
                  * mpmath.mpf(specfun.bernoulli(2 * j).numerator) / specfun.bernoulli(2 * j).denominator,
                  1, n, ctx)
    return pole - bern - mpf(1) / 4


def _fall4_domain(p):
    s, c = p["s"], p["c"]
    return check((s < 0, "s must be negative"), (not is_int(c) or c > -1 / s, "c must not be an integer"),
                 (c != -1 / s, "c must not equal −1/s"), (c != 0, "c must not be 0"))


def _s1(ctx):
    return bose(1, ctx)


def _f5_lhs(p, ctx):
    return vline(lambda w, c: Z(w, c) ** 2 * G(w, c), mpf(1) / 2, ctx, gamma_decay(0.5, 0.5, 0.5))


def _f5_rhs(p, ctx):
    return _s1(ctx) - gamma_const()


def _zeta_sq(v, ctx):
    return abs(Z(mpc(mpf(1) / 2, v), ctx)) ** 2


_HALF_LINE_DECAY = DecayModel.custom(math.pi / 2, 2 * zeta_growth(0.5))


def _f5b4_lhs(p, ctx):
    l2p = mpmath.log(2 * mp.pi)

    def g(v):
        return _zeta_sq(v, ctx) / mpmath.cosh(mp.pi * v) * (
            mpmath.cos(v * l2p) * mpmath.cosh(mp.pi * v / 2) - mpmath.sin(v * l2p) * mpmath.sinh(mp.pi * v / 2))

    return half_line(g, ctx, _HALF_LINE_DECAY)


def _f5b4_rhs(p, ctx):
    return (_s1(ctx) - gamma_const()).scale(mpmath.sqrt(mp.pi))


def _f5b_polar(p, ctx):
    # polar form: |ζ|² cos(2α + θ)/√cosh(πv), with α and θ the phases of ζ and Γ on the half line
    def g(v):
        zp = specfun.polar_parts("zeta-half-line", v, ctx)
        gp = specfun.polar_parts("gamma-half-line", v, ctx)
        return zp.modulus ** 2 * mpmath.cos(2 * zp.phase + gp.phase) / mpmath.sqrt(mpmath.cosh(mp.pi * v))

    return half_line(g, ctx, _HALF_LINE_DECAY)


def _s2(ctx):
    return bose(1, ctx, 2)


def _f4c_lhs(p, ctx):
    return full_line(lambda w, c: Z(w, c) ** 2 * G(w, c) * mpf(2) ** (mpf(1) / 2 - w), mpf(1) / 2, ctx,
                     gamma_decay(0.5, 0.5, 0.5))


def _f4c_value(ctx):
    return _s2(ctx).scale(2) - gamma_const() + mpmath.log(2)


def _f4c_rhs(p, ctx):
    return _f4c_value(ctx).scale(mpmath.sqrt(2) * mp.pi)


def _f4dr2_lhs(p, ctx):
    lp = mpmath.log(mp.pi)

    def g(v):
        return _zeta_sq(v, ctx) / mpmath.cosh(mp.pi * v) * (
            mpmath.sinh(mp.pi * v / 2) * mpmath.sin(v * lp) - mpmath.cosh(mp.pi * v / 2) * mpmath.cos(v * lp))

    return half_line(g, ctx, _HALF_LINE_DECAY).scale(2)


def _f4dr2_rhs(p, ctx):
    return _f4c_value(ctx).scale(-mpmath.sqrt(2 * mp.pi))


def _n_domain(p):
    return check((p["n"] >= 1, "n must be a positive integer"))


def _fs2nc0_lhs(p, ctx, weight=None):
    n = p["n"]

    def f(w, c):
        v = Z(2 * n * w, c) * G(w, c) * Z(w, c)
        return v if weight is None else v * weight(w)

    return full_line(f, 0, ctx, gamma_decay(0, 0, 0), real=True, pole_at_zero=True)


def _fs2nc0_rhs(p, ctx):
    return limits.fs2nc0_rhs(p["n"], ctx)


def _fb1c0_lhs(p, ctx):
    return _fs2nc0_lhs(p, ctx, lambda w: mpf(2) ** (-w))


def _fb1c0_rhs(p, ctx):
    return limits.fs2nc0_rhs(p["n"], ctx, 2)


def _fb3pr_lhs(p, ctx):
    return full_line(lambda w, c: specfun.upsilon(2 * w, 2, c) * Z(w, c), 0, ctx, gamma_decay(0, 0, 0),
                     real=True, pole_at_zero=True)


def _fb3pr_rhs(p, ctx):
    return (-zr(mpf(1) / 2, ctx) * mp.pi ** mpf(1.5) * mpmath.sqrt(2) / 2 - mp.pi ** 3 / 6
            + _s2_sq(ctx).scale(2 * mp.pi) - mp.pi / 4)


def _s2_sq(ctx):
    return bose(2, ctx, 2)


def _fb3apr_lhs(p, ctx):
    k = mp.pi ** 2 / 2

    def f(w, c):
        return Z(1 - 2 * w, c) * k ** w * G(mpf(1) / 2 - w, c) * Z(w, c)

    decay = DecayModel.custom(math.pi / 2, zeta_growth(1) + zeta_growth(0))
    return full_line(f, 0, ctx, decay, real=True, pole_at_zero=True)


def _fb3apr_rhs(p, ctx):
    inner = (-zr(mpf(1) / 2, ctx) * mpmath.sqrt(mp.pi / 2) - mp.pi ** 2 / 6 + _s2_sq(ctx).scale(2) - mpf(1) / 4)
    return inner.scale(mp.pi ** mpf(1.5))


def _sn(n, ctx):
    return bose(2 * n, ctx)


def _ga1_lhs(p, ctx):
    n = p["n"]
    c = mpf(1) / (2 * n)
    return full_line(lambda w, cc: Z(2 * n * w, cc) * G(w, cc) * Z(w, cc), c, ctx, gamma_decay(c, 1, c),
                     real=True, pole_at_zero=True)


def _ga1_rhs(p, ctx):
    n = p["n"]
    c = mpf(1) / (2 * n)
    return _sn(n, ctx).scale(2 * mp.pi) - mp.pi * zr(c, ctx) * gr(1 + c, ctx) - 2 * mp.pi * zr(2 * n, ctx)


def _gba1_lhs(p, ctx):
    n = p["n"]
    c = mpf(1) / (2 * n)

    def f(w, cc):
        return (mpf(2) ** (-w) - 1) * Z(2 * n * w, cc) * Z(w, cc) * G(w, cc)

    return full_line(f, c, ctx, gamma_decay(c, 1, c), real=True, pole_at_zero=True)


def _gba1_rhs(p, ctx):
    return limits.gba1_rhs(p["n"], ctx)


def _ga1b_lhs(p, ctx):
    n = p["n"]
    c = mpf(1) / n
    return full_line(lambda w, cc: Z(2 * n * w, cc) * G(w, cc) * Z(w, cc), c, ctx, gamma_decay(c, 2, c),
                     real=True, pole_at_zero=(n == 1))


def _ga1b_rhs(p, ctx):
    n = p["n"]
    # at n = 1 the ζ(w) pole lies on the line and contributes half its residue
    weight = mp.pi if n == 1 else 2 * mp.pi
    return _sn(n, ctx).scale(2 * mp.pi) - weight * zr(2 * n, ctx)


def _g1a_lhs(p, ctx):
    n = p["n"]
    c = mpf(1) / (4 * n)
    return full_line(lambda w, cc: Z(2 * n * w, cc) * G(w, cc) * Z(w, cc), c, ctx, gamma_decay(c, 0.5, c),
                     real=True)


def _g1a_rhs(p, ctx):
    n = p["n"]
    c = mpf(1) / (2 * n)
    return _sn(n, ctx).scale(2 * mp.pi) - mp.pi / n * zr(c, ctx) * gr(c, ctx) - 2 * mp.pi * zr(2 * n, ctx)


def _gd_lhs(p, ctx):
    n = p["n"]
    c = mpf(1) / (2 * n)

    def f(w, cc):
        return Z(mpf(1) / 2 + n * (w - c), cc) * G(w, cc) * Z(w, cc)

    return full_line(f, c, ctx, gamma_decay(c, 0.5, c), real=True)


def _gd_rhs(p, ctx):
    n = p["n"]
    s = bose(n, ctx).scale(2 * mp.pi)
    if n == 1:
        # both poles merge at n = 1; the limit is the constant −2πγ
        return s - 2 * mp.pi * gamma_const()
    return s - 2 * mp.pi * zr(mpf(1) / n, ctx) * gr(1 + mpf(1) / n, ctx) - 2 * mp.pi * zr(n, ctx)


def _ge_lhs(p, ctx):
    n = p["n"]
    c = mpf(1) / 2
    return full_line(lambda w, cc: Z(w / n, cc) * G(w, cc) * Z(w, cc), c, ctx,
                     gamma_decay(c, c / n, c), real=True)


def _ge_rhs(p, ctx):
    n = p["n"]
    return (bose(mpf(1) / n, ctx).scale(2 * mp.pi) - 2 * mp.pi * zr(n, ctx) * gr(n + 1, ctx)
            - 2 * mp.pi * zr(mpf(1) / n, ctx))


# -- G7: ζ(−s w) b^{−w} Γ(w) -------------------------------------------------------------


def _t2_integrand(s, b, shift=0):
    def f(w, ctx):
        return Z(-s * w, ctx) * b ** (-(w - shift)) * G(w, ctx)
    return f


def _t2_decay(s, c):
    return gamma_decay(c, -s * c)


def _t2x_lhs(p, ctx):
    s, b, c = p["s"], p["b"], p["c"]
    return vline(_t2_integrand(s, b), c, ctx, _t2_decay(s, c))


def _t2x_domain(p):
    s, b, c = p["s"], p["b"], p["c"]
    return check((-1 < s < 0, "needs −1 < s < 0"), (b > 0, "b must be positive"), (c > -1 / s, "c must exceed −1/s"))


def _t2xa_domain(p):
    s, b, c = p["s"], p["b"], p["c"]
    return check((s < 0, "s must be negative"), (b > 0, "b must be positive"),
                 (0 < c < -1 / s, "needs 0 < c < −1/s"), (c != 1 or s == -1, "c must avoid 1"))


def _t2xa_rhs(p, ctx):
    s, b = p["s"], p["b"]
    return omega(b, -s, ctx) - b ** (1 / s) * gr(1 - 1 / s, ctx)


def _t2c_lhs(p, ctx):
    s, b, c = p["s"], p["b"], p["c"]
    return full_line(_t2_integrand(s, b), c, ctx, _t2_decay(s, c))


def _t2c_rhs(p, ctx):
    s, b, c = p["s"], p["b"], p["c"]
    n = int(mpmath.floor(-c))
    head = finite(lambda j: zr(s * j, ctx) * (-b) ** j / mpmath.factorial(j), 0, n, ctx)
    return (omega(b, -s, ctx) - head - b ** (1 / s) * gr(1 - 1 / s, ctx)).scale(2 * mp.pi)


def _t2c_domain(p):
    s, b, c = p["s"], p["b"], p["c"]
    return check((s < 0, "s must be negative"), (b > 0, "b must be positive"), (c < 0, "c must be negative"),
                 (not is_int(c), "c must not be an integer"))


def _t2b1_lhs(p, ctx):
    b, c = p["b"], p["c"]
    return full_line(_t2_integrand(-1, b), c, ctx, _t2_decay(-1, c))


def _t2b1_rhs(p, ctx):
    b, c = p["b"], p["c"]
    x = 0 if c > 1 else 1
    return 2 * mp.pi * (1 / mpmath.expm1(b) - x / b)


def _t2b2_lhs(p, ctx):
    b = p["b"]
    return full_line(_t2_integrand(-1, b, shift=1), 1, ctx, _t2_decay(-1, 1), real=True, pole_at_zero=True)


def _t2b2_rhs(p, ctx):
    b = p["b"]
    return 2 * mp.pi * b * (1 / mpmath.expm1(b) - 1 / (2 * b))


def _t2bb_lhs(p, ctx):
    s, b = p["s"], p["b"]
    return full_line(_t2_integrand(s, b), 0, ctx, _t2_decay(s, 0), real=True, pole_at_zero=True).scale(
        mpf(1) / 2)


def _t2bb_rhs(p, ctx):
    s, b = p["s"], p["b"]
    return (omega(b, -s, ctx) - b ** (1 / s) * gr(1 - 1 / s, ctx) + mpf(1) / 4).scale(mp.pi)


def _v3sm1_lhs(p, ctx):
    b = p["b"]
    return full_line(_t2_integrand(-1, b), 0, ctx, _t2_decay(-1, 0), real=True, pole_at_zero=True)


def v3sm1_rhs(b, ctx, constant=mpf(1) / 4):
    """2π(1/(e^b − 1) − 1/b + constant); the quadrature supports constant = 1/4."""
    return 2 * mp.pi * (1 / mpmath.expm1(b) - 1 / b + constant)


def _t2b3b_lhs(p, ctx):
    return full_line(_t2_integrand(-1, 1), mpf(1) / 2, ctx, _t2_decay(-1, 0.5))


def _t2b3b_rhs(p, ctx):
    return 2 * mp.pi * (1 / (mp.e - 1) - 1)


def _t3b_lhs(p, ctx):
    b, c = p["b"], p["c"]
    return full_line(_t2_integrand(-2, b), c, ctx, _t2_decay(-2, c))


def _t3b_rhs(p, ctx):
    b = p["b"]
    return omega(b, 2, ctx).scale(2 * mp.pi) - mp.pi ** mpf(1.5) / mpmath.sqrt(b)


def _t3b1_integral(b, c, ctx):
    c2 = mpf(1) / 2 - c
    k = mp.pi ** 2 / b

    def f(w, cc):
        return Z(2 * w, cc) * G(w, cc) * k ** (-(w - c2))

    return full_line(f, c2, ctx, gamma_decay(c2, 2 * c2))


def _t3int_rhs(p, ctx):
    b, c = p["b"], p["c"]
    return _t3b1_integral(b, c, ctx).scale(b ** (-c) * mp.pi ** (2 * c - mpf(1) / 2))


def _t3b1_lhs(p, ctx):
    return _t3b1_integral(p["b"], p["c"], ctx)


def _t3b1_rhs(p, ctx):
    b, c = p["b"], p["c"]
    return (omega(mp.pi ** 2 / b, 2, ctx).scale(2 * mp.pi ** (2 - 2 * c) * b ** (c - mpf(1) / 2))
            - mp.pi ** (mpf(3) / 2 - 2 * c) * b ** c)


def _t3_domain(p):
    return check((p["b"] > 0, "b must be positive"), (0 < p["c"] < mpf(1) / 2, "needs 0 < c < 1/2"))


def _sxid2_lhs(p, ctx):
    b = p["b"]
    return omega(mp.pi * b, 2, ctx) - omega(mp.pi / b, 2, ctx).scale(1 / mpmath.sqrt(b))


def _sxid2_rhs(p, ctx):
    b = p["b"]
    return 1 / (2 * mpmath.sqrt(b)) - mpf(1) / 2


def _pjt(p, ctx):
    b = p["b"]
    t1 = specfun.theta3(mpmath.exp(-mp.pi * b), ctx, detailed=True).approx()
    t2 = specfun.theta3(mpmath.exp(-mp.pi / b), ctx, detailed=True).approx()
    return (t1 - 1).scale(mpf(1) / 2) - (t2 - 1).scale(1 / (2 * mpmath.sqrt(b)))


def _t2na_lhs(p, ctx):
    n, b, c = p["n"], p["b"], p["c"]
    on_line = c == 0 or c == mpf(1) / (2 * n)
    return full_line(_t2_integrand(-2 * n, b), c, ctx, _t2_decay(-2 * n, c), real=True, pole_at_zero=on_line)


def _xy(c, edge):
    return 1 if c < edge else (mpf(1) / 2 if c == edge else 0)


def _t2na_rhs(p, ctx):
    n, b, c = p["n"], p["b"], p["c"]
    x = _xy(c, 0)
    y = _xy(c, mpf(1) / (2 * n))
    g = b ** (-mpf(1) / (2 * n)) * gr(1 + mpf(1) / (2 * n), ctx)
    return (omega(b, 2 * n, ctx).scale(2) + x - 2 * y * g).scale(mp.pi)


def _t2na_domain(p):
    n, b, c = p["n"], p["b"], p["c"]
    return check((n >= 1, "n must be a positive integer"), (b > 0, "b must be positive"),
                 (not (is_int(c) and c < 0), "c must not be a negative integer"))


def _t3n_lhs(p, ctx):
    n, b, pp = p["n"], p["b"], p["p"]
    c = pp / n
    real = pp >= 0
    return full_line(_t2_integrand(-2 * n, b, shift=c), c, ctx, _t2_decay(-2 * n, c), real=real,
                     pole_at_zero=(pp == 0 or pp == mpf(1) / 2))


def _t3n_rhs(case):
    def rhs(p, ctx):
        n, b, pp = p["n"], p["b"], p["p"]
        om = omega(b, 2 * n, ctx)
        g1 = gr(1 + mpf(1) / (2 * n), ctx)
        g = b ** (-mpf(1) / (2 * n)) * g1
        bp = b ** (pp / n)
        if case == "A":
            return (om.scale(2) + 1 - 2 * g).scale(mp.pi * bp)
        if case == "B":
            return om.scale(2 * mp.pi * bp)
        if case == "C":
            return (om.scale(2 * b ** (mpf(1) / (2 * n))) - g1).scale(mp.pi)
        if case == "D":
            return (om - g).scale(2 * mp.pi * bp)
        return (om.scale(2) + mpf(1) / 2 - 2 * g).scale(mp.pi)
    return rhs


_T3N_CASES = {
    "A": ("-1/2", lambda p: p < 0, "p must be negative", "if $p<0$"),
    "B": ("1", lambda p: p > mpf(1) / 2, "p must exceed 1/2", "if $p>1/2$"),
    "C": ("1/2", lambda p: p == mpf(1) / 2, "p must equal 1/2", "if $p=1/2$"),
    "D": ("1/4", lambda p: 0 < p < mpf(1) / 2, "needs 0 < p < 1/2", "if $0<p<1/2$"),
    "E": ("0", lambda p: p == 0, "p must equal 0", "if $p=0$"),
}


def _t3n_domain(pred, message):
    def domain(p):
        return check((p["n"] >= 1, "n must be a positive integer"), (p["b"] > 0, "b must be positive"),
                     (pred(p["p"]), message))
    return domain


def _tc1a_lhs(p, ctx):
    n, b = p["n"], p["b"]
    c = -n - mpf(1) / 2
    integral = full_line(lambda w, cc: Z(w / n, cc) * b ** (-w) * G(w, cc), c, ctx,
                         gamma_decay(c, c / n), real=True)
    head = finite(lambda j: zr(-mpf(j) / n, ctx) * (-b) ** j / mpmath.factorial(j), 0, n, ctx)
    return integral + 2 * mp.pi * head


def _tc1a_rhs(p, ctx):
    n, b = p["n"], p["b"]
    return omega(b, mpf(1) / n, ctx).scale(2 * mp.pi) - 2 * mp.pi * b ** (-n) * gr(1 + n, ctx)


def _nb_domain(p):
    return check((p["n"] >= 1, "n must be a positive integer"), (p["b"] > 0, "b must be positive"))


def _q1_lhs(p, ctx):
    n, b = p["n"], p["b"]
    c = -n - mpf(1) / 2
    return full_line(_t2_integrand(-2 * n, b, shift=c), c, ctx, _t2_decay(-2 * n, c)).scale(b ** (n + mpf(1) / 2))


def _q1_rhs(p, ctx):
    n, b = p["n"], p["b"]
    g = b ** (-mpf(1) / (2 * n)) * gr(1 + mpf(1) / (2 * n), ctx)
    return (omega(b, 2 * n, ctx) - g).scale(2 * mp.pi) + mp.pi


def _q2_lhs(p, ctx):
    b = p["b"]
    c = -mpf(1) / 2
    return vline(lambda w, cc: b ** (-(w - c)) * G(w, cc), c, ctx, gamma_decay(c))


def _q2_rhs(p, ctx):
    b = p["b"]
    return (mpmath.exp(-b) - 1) / mpmath.sqrt(b)


def _q2c_rhs(p, ctx):
    b = p["b"]
    s = series.alternating_factorial_series(lambda n: (-b) ** n / mpmath.factorial(n), 1, b, ctx).approx()
    return s.scale(1 / mpmath.sqrt(b))


def _b_pos(p):
    return check((p["b"] > 0, "b must be positive"))


def _t2gen_lhs(p, ctx):
    n, nn, b = p["n"], p["N"], p["b"]
    q = 2 * n + 1
    c = -nn - mpf(1) / 2
    integral = full_line(_t2_integrand(-q, b), c, ctx, _t2_decay(-q, c))
    head = finite(lambda j: zr(-q * j, ctx) * (-b) ** j / mpmath.factorial(j), 0, nn, ctx)
    return integral + 2 * mp.pi * head


def _t2gen_rhs(p, ctx):
    n, b = p["n"], p["b"]
    q = 2 * n + 1
    return omega(b, q, ctx).scale(2 * mp.pi) - 2 * mp.pi * b ** (-mpf(1) / q) * gr(mpf(2 * n + 2) / q, ctx)


def _t2gen_domain(p):
    return check((p["n"] >= 0, "n must be a non-negative integer"), (p["N"] >= 0, "N must be non-negative"),
                 (p["b"] > 0, "b must be positive"))


def _tinv_side(p, ctx, c):
    n, b = p["n"], p["b"]
    q = 2 * n + 1
    return full_line(_t2_integrand(-q, b, shift=c), c, ctx, _t2_decay(-q, c))


def _tinv_lhs(p, ctx):
    return _tinv_side(p, ctx, -2 * p["N"] + mpf(1) / 2)


def _tinv_rhs(p, ctx):
    return _tinv_side(p, ctx, -2 * p["N"] - mpf(1) / 2).scale(p["b"])


def _tinv_domain(p):
    return check((p["n"] >= 0, "n must be a non-negative integer"), (p["N"] >= 1, "N must be positive"),
                 (p["b"] > 0, "b must be positive"))


def _but_lhs(p, ctx):
    b = p["b"]

    def term(j):
        return zr(-j, ctx) * (-b) ** j / mpmath.factorial(j)

    # ζ(−j) vanishes at even j ≥ 2, so the stream is taken over pairs
    return term(0) + stream(lambda k: term(2 * k + 1) + term(2 * k + 2), ctx)


def _but_rhs(p, ctx):
    b = p["b"]
    return 1 / mpmath.expm1(b) - 1 / b


def _but_bernoulli(p, ctx):
    b = p["b"]

    def term(k):
        bk = specfun.bernoulli(2 * k)
        return mpf(bk.numerator) / bk.denominator * b ** (2 * k - 1) / mpmath.factorial(2 * k)

    # 1/(e^b − 1) − 1/b = −1/2 + Σ_{k≥1} B_{2k} b^{2k−1}/(2k)!
    return stream(term, ctx, start=1) - mpf(1) / 2


def _but_domain(p):
    return check((0 < p["b"] < 2 * mp.pi, "needs 0 < b < 2π"))


def _t2elimz_spec(p):
    b = p["b"]

    def term(n, ctx):
        c = -n - mpf(1) / 2
        return full_line(_t2_integrand(-1, b), c, ctx, _t2_decay(-1, c)).value

    return limits.LimitSequenceSpec("T2eLimz", term, lambda ctx: mpf(0), {"b": str(b)}, min_n=1)


def _doublings(p):
    n, out = 25, []
    while n <= p["n_hi"]:
        out.append(n)
        n *= 2
    return out


# -- Jb ------------------------------------------------------------------------------------


def _jb_lhs(p, ctx):
    b, s = p["b"], p["s"]
    sigma = -s
    inner = ctx.with_extra(5)

    def near(x):
        return x ** (b - 1) * series.omega(x, sigma, inner).value

    def far(u):
        x = mpmath.exp(u)
        return mpmath.exp(u * b) * series.omega(x, sigma, inner).value

    with ctx.activate():
        # beyond x = X the integrand is below x^{b−1}·2e^{−x}, so the tail is at most 2Γ(b, X)
        need = mpf(10) ** (-(ctx.target_digits + 6))
        x_hi = mpf(2)
        while 2 * mpmath.gammainc(b, x_hi) > need:
            x_hi *= 1.25
        u_hi = mpmath.log(x_hi)
        tail = 2 * mpmath.gammainc(b, x_hi)
    first = real_integral(near, 0, 1, ctx)
    second = real_integral(far, 0, u_hi, ctx)
    return first + second + Approx(mpf(0), tail)


def _jb_rhs(p, ctx):
    b, s = p["b"], p["s"]
    return zr(-b * s, ctx) * gr(b, ctx)


def _jb_domain(p):
    b, s = p["b"], p["s"]
    return check((s < 0, "needs s < 0"), (b > 0, "needs b > 0"), (-b * s > 1, "needs −bs > 1 for convergence"))


# -- G8 ------------------------------------------------------------------------------------


def _sin_power_sum(s, ctx, subtract=False):
    """Σ_{k≥1} sin(k^{−s}) (minus k^{−s} when ``subtract``) by Euler–Maclaurin."""

    def f(k):
        x = mpf(k) ** (-s)
        return mpmath.sin(x) - (x if subtract else 0)

    def taylor(m, order):
        g = series.ps_shifted_power(m, -s, order)
        out = series.ps_sin(g, order)
        if subtract:
            out = [a - b for a, b in zip(out, g)]
        return out

    def tail_integral(m):
        # ∫_m^∞ sin(t^{−s}) dt = Σ_k (−1)^k m^{1−s(2k+1)}/((2k+1)! (s(2k+1) − 1))
        m = mpf(m)
        k0 = 1 if subtract else 0
        return mpmath.nsum(lambda k: (-1) ** k * m ** (1 - s * (2 * k + 1))
                           / (mpmath.factorial(2 * k + 1) * (s * (2 * k + 1) - 1)), [k0, mpmath.inf])

    return series.euler_maclaurin_sum(f, taylor, tail_integral, ctx).approx()


def _ex1_lhs(p, ctx):
    return _sin_power_sum(p["s"], ctx)


def _ex1_rhs(p, ctx):
    s = p["s"]
    return stream(lambda k: (-1) ** k * zr((2 * k + 1) * s, ctx) / mpmath.factorial(2 * k + 1), ctx)


def _ex1ab_lhs(p, ctx):
    return _sin_power_sum(1, ctx, subtract=True)


def _ex1ab_rhs(p, ctx):
    return stream(lambda k: (-1) ** k * zr(2 * k + 1, ctx) / mpmath.factorial(2 * k + 1), ctx, start=1)


# -- catalog -------------------------------------------------------------------------------


N1 = Param("n", "int", "1")
N2 = Param("n", "int", "2")
B2 = Param("b", "real", "2")

_T3N_RECORDS = [
    IdentityRecord(f"T3n{case}", "G7", f"s = −2n family at c = p/n ({cond})", "A family of interesting integrals",
                   (N1, Param("b", "real", "pi"), Param("p", "real", default)), _t3n_lhs, _t3n_rhs(case),
                   _t3n_domain(pred, message))
    for case, (default, pred, message, cond) in _T3N_CASES.items()
]

RECORDS = [
    IdentityRecord("F11", "G6", "ζ(−sw)Γ(w)ζ(w) integral as a Bose sum", "where both sides converge",
                   (Param("s", "real", "-2"), Param("c", "real", "3/2")), _f11_lhs,
                   lambda p, c: bose(-p["s"], c), _f11_domain),
    IdentityRecord("Fall", "G6", "Contour shifts of the Bose-sum integral", "evaluating the appropriate residues",
                   (Param("s", "real", "-2"), Param("c", "real", "-1/2")), _fall_lhs, _fall_rhs, _fall_domain),
    IdentityRecord("Fall4", "G6", "Contour shifts of the Fermi-sum integral", "various residues must be incorporated",
                   (Param("s", "real", "-1/2"), Param("c", "real", "-1/2")), _fall4_lhs, _fall4_rhs,
                   _fall4_domain, aliases=("F1",)),
    IdentityRecord("F5", "G6", "ζ²Γ on the critical line", "By taking the appropriate limit",
                   (), _f5_lhs, _f5_rhs),
    IdentityRecord("F5b4", "G6", "|ζ|² cosine integral on the critical line",
                   "applying elementary trigonometric identities", (), _f5b4_lhs, _f5b4_rhs,
                   alternates=(("polar form", _f5b_polar),), aliases=("F5b",)),
    IdentityRecord("F4c", "G6", "ζ²Γ 2^{−iv} on the critical line", "a companion to", (), _f4c_lhs, _f4c_rhs),
    IdentityRecord("F4dR2", "G6", "|ζ|² companion integral", "a companion to", (), _f4dr2_lhs, _f4dr2_rhs),
    IdentityRecord("Fs2nc0", "G6", "s = −2n at c = 0 with half residue", "half the residue at",
                   (N1,), _fs2nc0_lhs, _fs2nc0_rhs, _n_domain),
    IdentityRecord("Fb1c0", "G6", "2^{−iv}-weighted s = −2n at c = 0", "half the residue at",
                   (N1,), _fb1c0_lhs, _fb1c0_rhs, _n_domain),
    IdentityRecord("Fb3Pr", "G6", "Riemann Υ(2iv, 2) form", "a very different form", (), _fb3pr_lhs, _fb3pr_rhs),
    IdentityRecord("Fb3aPr", "G6", "Reflected Υ form", "a very different form", (), _fb3apr_lhs, _fb3apr_rhs),
    IdentityRecord("Fs2nc0Lim", "G6", "c = 0 family as n → ∞", "confounds numerical verification",
                   (Param("n_lo", "int", "1"), Param("n_hi", "int", "12")), kind=TREND,
                   trend=lambda p: limits.fs2nc0_lim()),
    IdentityRecord("Fb1c0Lim", "G6", "2^{−iv}-weighted c = 0 family as n → ∞", "confounds numerical verification",
                   (Param("n_lo", "int", "1"), Param("n_hi", "int", "12")), kind=TREND,
                   trend=lambda p: limits.fb1c0_lim()),
    IdentityRecord("Ga1", "G6", "c = 1/(2n) with half residues", "corresponding half residues",
                   (N1,), _ga1_lhs, _ga1_rhs, _n_domain),
    IdentityRecord("Gba1", "G6", "(2^{−w} − 1)-weighted c = 1/(2n)", "corresponding half residues",
                   (N1,), _gba1_lhs, _gba1_rhs, _n_domain),
    IdentityRecord("Gb3", "G6", "Weighted c = 1/(2n) family as n → ∞", "the integrand converges at",
                   (Param("n_lo", "int", "1"), Param("n_hi", "int", "12")), kind=TREND, trend=lambda p: limits.gb3()),
    IdentityRecord("GA1", "G6", "c = 1/n", "Other special cases abound", (N1,), _ga1b_lhs, _ga1b_rhs, _n_domain),
    IdentityRecord("G1A", "G6", "c = 1/(4n)", "Other special cases abound", (N1,), _g1a_lhs, _g1a_rhs, _n_domain),
    IdentityRecord("Gd", "G6", "s = −n at c = 1/(2n)", "interesting cases also arise", (N2,), _gd_lhs, _gd_rhs,
                   _n_domain),
    IdentityRecord("Ge", "G6", "s = −1/n at c = 1/2", "interesting cases also arise", (N2,), _ge_lhs, _ge_rhs,
                   lambda p: check((p["n"] >= 2, "n must be an integer ≥ 2"))),
    IdentityRecord("GeAsy", "G6", "s = −1/n family as n → ∞", "confounds numerical verification",
                   (Param("n_lo", "int", "4"), Param("n_hi", "int", "12")), kind=TREND, trend=lambda p: limits.ge_asy()),
    IdentityRecord("T2x", "G7", "ω(b, −s) as a vertical-line integral", "valid for −1<s<0",
                   (Param("s", "real", "-1/2"), B2, Param("c", "real", "5/2")), _t2x_lhs,
                   lambda p, c: omega(p["b"], -p["s"], c), _t2x_domain, aliases=("T2",)),
    IdentityRecord("Jb", "G7", "Generalized Riemann integral", "reducing to the classic results",
                   (Param("b", "real", "3"), Param("s", "real", "-1/2")), _jb_lhs, _jb_rhs, _jb_domain),
    IdentityRecord("T2xa", "G7", "ω(b, −s) with the ζ pole residue", "which allows $s<-1$",
                   (Param("s", "real", "-2"), B2, Param("c", "real", "1/4")), _t2x_lhs, _t2xa_rhs, _t2xa_domain),
    IdentityRecord("T2c", "G7", "ω(b, −s) with the contour left of zero", "by moving the contour",
                   (Param("s", "real", "-2"), B2, Param("c", "real", "-1/2")), _t2c_lhs, _t2c_rhs, _t2c_domain),
    IdentityRecord("T2b1", "G7", "s = −1 off the poles", "singularity of the integrand only",
                   (B2, Param("c", "real", "3/2")), _t2b1_lhs, _t2b1_rhs,
                   lambda p: check((p["b"] > 0, "b must be positive"), (p["c"] > 0, "c must be positive"),
                                   (p["c"] != 1, "c = 1 is a pole on the line"))),
    IdentityRecord("T2b2", "G7", "s = −1 through the ζ pole", "singularity of the integrand only",
                   (Param("b", "real", "1"),), _t2b2_lhs, _t2b2_rhs, _b_pos),
    IdentityRecord("T2B", "G7", "Half line at c = 0", "in exactly the same way",
                   (Param("s", "real", "-1/2"), B2), _t2bb_lhs, _t2bb_rhs,
                   lambda p: check((p["s"] < 0, "s must be negative"), (p["b"] > 0, "b must be positive"))),
    IdentityRecord("V3sm1", "G7", "s = −1 at c = 0", "so that, if $s=-1$ we obtain",
                   (B2,), _v3sm1_lhs, lambda p, c: v3sm1_rhs(p["b"], c), _b_pos),
    IdentityRecord("T2b3b", "G7", "ζΓ on the critical line", "if $c=1/2$, $b=1$ we find", (), _t2b3b_lhs, _t2b3b_rhs),
    IdentityRecord("T2bIdX", "G7", "Bose sum minus ζ(n)n! → 1/(2 − 2e)", "Comparison of the right-hand sides",
                   (Param("n_lo", "int", "6"), Param("n_hi", "int", "12")), kind=TREND, trend=lambda p: limits.fig1()),
    IdentityRecord("T2bAsy", "G7", "Stirling-type growth of the Bose sum", "for large values of n",
                   (Param("n_lo", "int", "4"), Param("n_hi", "int", "12")), kind=TREND,
                   trend=lambda p: limits.t2b_asy()),
    IdentityRecord("T3B", "G7", "s = −2 with 0 < c < 1/2", "reflection of integration variables",
                   (B2, Param("c", "real", "0.3")), _t3b_lhs, _t3b_rhs, _t3_domain),
    IdentityRecord("T3Int", "G7", "Reflected form of the s = −2 integral", "reflection of integration variables",
                   (B2, Param("c", "real", "0.3")), _t3b_lhs, _t3int_rhs, _t3_domain),
    IdentityRecord("T3B1", "G7", "s = −2 integral after reflection", "reflection of integration variables",
                   (B2, Param("c", "real", "0.3")), _t3b1_lhs, _t3b1_rhs, _t3_domain),
    IdentityRecord("SxId2", "G7", "Poisson–Jacobi transform", "well-known Poisson-Jacobi transform",
                   (B2,), _sxid2_lhs, _sxid2_rhs, _b_pos, alternates=(("theta3 form", _pjt),), aliases=("PJt",)),
    IdentityRecord("T2nA", "G7", "s = −2n with X/Y half residues", "A family of interesting integrals",
                   (N1, B2, Param("c", "real", "0.3")), _t2na_lhs, _t2na_rhs, _t2na_domain),
    *_T3N_RECORDS,
    IdentityRecord("Tc1a", "G7", "s = −1/n at c = −n − 1/2", "allowing us to choose",
                   (N1, B2), _tc1a_lhs, _tc1a_rhs, _nb_domain),
    IdentityRecord("SbId", "G7", "Truncated ζ(−j/n) exponential series", "numerically verified for a large range",
                   (B2, Param("n_hi", "int", "200")), kind=TREND, trend=lambda p: limits.sbid(p["b"]),
                   trend_range=_doublings, final_bound=1e-2),
    IdentityRecord("Sgenf", "G7", "ω(b, 1/n) − n!/b^n → −1/(2e^b)", "be tested numerically",
                   (Param("b", "real", "1"), Param("n_lo", "int", "4"), Param("n_hi", "int", "10")),
                   kind=TREND, trend=lambda p: limits.fig2(p["b"])),
    IdentityRecord("As2", "G7", "Stirling-type growth of ω(b, 1/n)", "or equivalently, as",
                   (B2, Param("n_lo", "int", "8"), Param("n_hi", "int", "16")), kind=TREND,
                   trend=lambda p: limits.as2(p["b"])),
    IdentityRecord("Q1", "G7", "s = −2n at c = −n − 1/2", "only the term indexed by",
                   (N1, B2), _q1_lhs, _q1_rhs, _nb_domain),
    IdentityRecord("Q2", "G7", "Γ(−1/2 + iv) integral", "by identifying 2n := 1/n", (B2,), _q2_lhs, _q2_rhs, _b_pos),
    IdentityRecord("Q2c", "G7", "Γ(−1/2 + t) integral as a residue series", "wrapping the contour about",
                   (B2,), _q2_lhs, _q2c_rhs, _b_pos),
    IdentityRecord("T2Gen", "G7", "s = −(2n+1) at c = −N − 1/2", "whose general form becomes",
                   (N1, Param("N", "int", "1"), B2), _t2gen_lhs, _t2gen_rhs, _t2gen_domain),
    IdentityRecord("Tinv", "G7", "Invariance under N → N + 1", "the integral is invariant",
                   (N1, Param("N", "int", "1"), B2), _tinv_lhs, _tinv_rhs, _tinv_domain),
    IdentityRecord("T2eLIM", "G7", "ζ(−j) exponential series", "the elementary relation",
                   (B2,), _but_lhs, _but_rhs, _but_domain,
                   alternates=(("Bernoulli series", _but_bernoulli),), aliases=("But",)),
    IdentityRecord("Sexp", "G7", "Geometric series for 1/(e^b − 1)", "the elementary relation",
                   (B2,), lambda p, c: omega(p["b"], 1, c), lambda p, c: 1 / mpmath.expm1(p["b"]), _b_pos),
    IdentityRecord("T2eLimz", "G7", "Left-shifted s = −1 integrals decrease to zero", "two interesting cases here",
                   (B2, Param("n_lo", "int", "2"), Param("n_hi", "int", "8"), Param("n_step", "int", "2")),
                   kind=TREND, trend=_t2elimz_spec),
    IdentityRecord("Ex1", "G8", "Σ sin(k^{−s}) as a zeta series", "suggestion for further emulation",
                   (Param("s", "real", "2"),), _ex1_lhs, _ex1_rhs, lambda p: check((p["s"] > 1, "needs s > 1"))),
    IdentityRecord("Ex1AB", "G8", "Σ (sin(1/k) − 1/k) as a zeta series", "if $s=1$", (), _ex1ab_lhs, _ex1ab_rhs),
]
