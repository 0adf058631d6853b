"""Lambert-type and hyperbolic series identities (groups G1 to G5)."""

from __future__ import annotations

import mpmath
from mpmath import mp, mpc, mpf

from .. import series, specfun
from ..contour import DecayModel
from .core import IdentityRecord, Param
from ._common import (G, Z, bose, check, coth_minus, coth_pair, coth_single, coth_triple,
                      finite, gamma_const, gamma_decay, gr, omega, real_integral, residue_series,
                      stream, vline, zr)

# -- G1 ------------------------------------------------------------------------------


def _erd2_integral(a, s, ctx):
    return real_integral(lambda x: x ** (s - 1) / mpmath.sinh(a * x), 0, mpmath.inf, ctx, points=[1])


def _erd2_lhs(p, ctx):
    return _erd2_integral(p["a"], p["s"], ctx)


def _erd2_rhs(p, ctx):
    a, s = p["a"], p["s"]
    return 2 * a ** (-s) * (1 - mpf(2) ** (-s)) * G(s, ctx) * Z(s, ctx)


def _eqno5_lhs(p, ctx):
    a, s = p["a"], p["s"]
    # cosh(2ax) − 1 written as 2 sinh²(ax) to keep precision near x = 0
    return real_integral(lambda x: x ** s * mpmath.cosh(a * x) / (2 * mpmath.sinh(a * x) ** 2),
                         0, mpmath.inf, ctx, points=[1])


def _eqno5_rhs(p, ctx):
    a, s = p["a"], p["s"]
    return a ** (-s - 1) * (1 - mpf(2) ** (-s)) * G(s + 1, ctx) * Z(s, ctx)


def _eqno5_from_erd2(p, ctx):
    # −(1/2) d/da of the sinh transform, by a five-point central difference of its quadrature
    s = p["s"]
    inner = ctx.with_extra(ctx.working_digits + 10)
    with inner.activate():
        a = +p["a"]
        h = mpf(10) ** (-(inner.working_digits // 5))
        f = [_erd2_integral(a + k * h, s, inner).value for k in (-2, -1, 1, 2)]
        d = (f[0] - 8 * f[1] + 8 * f[2] - f[3]) / (12 * h)
    return -d / 2


def _sinh_domain(p):
    return check((p["a"] > 0, "a must be positive"), (mpmath.re(p["s"]) > 1, "Re s must exceed 1"))


def _eq5b_lhs(p, ctx):
    a, b = p["a"], p["b"]

    def f(s, c):
        return b ** (-s - 1) * (1 - mpf(2) ** (-s)) * G(s + 1, c) * Z(s, c) / (1 - a ** (-s))

    return vline(f, 2, ctx, gamma_decay(3))


def _eq5b_rhs(p, ctx):
    a, b = p["a"], p["b"]
    return stream(lambda j: a ** j * mpmath.cosh(a ** j * b) / (mpmath.cosh(2 * a ** j * b) - 1), ctx)


def _eqno6_lhs(p, ctx):
    return series.telescoping_check(p["b"], ctx).approx()


def _eqno6_rhs(p, ctx):
    return 1 / (2 * mpmath.sinh(p["b"] / 2) ** 2)


def _eqno6_residues(p, ctx):
    b = p["b"]
    tail = stream(lambda k: b ** (2 * k - 2) * zr(1 - 2 * k, ctx) / gr(2 * k - 1, ctx), ctx, start=1)
    return 2 / b ** 2 + tail.scale(2)


# -- G2 ------------------------------------------------------------------------------


def _s9(a, ctx, sign=-1):
    return stream(lambda n: 1 / (mpmath.exp(a ** n) + sign), ctx)


def _z10(a, ctx):
    return stream(lambda k: zr(-2 * k - 1, ctx) / (mpmath.factorial(2 * k + 1) * (a ** (2 * k + 1) - 1)), ctx)


def _coth_series(a, ctx, fn):
    return stream(lambda k: fn(a ** (-k), ctx), ctx, start=1)


def _zg(s, ctx):
    return Z(s, ctx) * G(s, ctx)


def _r(a, ctx, weight=lambda s: 1):
    return residue_series(a, lambda s: mpmath.re(weight(s) * _zg(s, ctx)), ctx, growth=1, scale=4)


def _a_domain(p):
    return check((p["a"] > 1, "a must exceed 1"))


def _eqno9_rhs(p, ctx):
    a = p["a"]
    L = mpmath.log(a)
    head = (gamma_const() - mpmath.log(2 * mp.pi * mpmath.sqrt(a))) / (2 * L) + a / (a - 1)
    return _z10(a, ctx) + _r(a, ctx).scale(2 / L) + head


def _eqno10_rhs(p, ctx):
    return _coth_series(p["a"], ctx, coth_minus).scale(-mpf(1) / 2)


def _eqno11_rhs(p, ctx):
    a = p["a"]
    L = mpmath.log(a)
    head = -a * L / (2 * (a - 1)) - (gamma_const() - mpmath.log(2 * mp.pi * mpmath.sqrt(a))) / 4
    return _s9(a, ctx).scale(L / 2) + _coth_series(a, ctx, coth_minus).scale(L / 4) + head


def _x2b_rhs(p, ctx):
    a = p["a"]
    L = mpmath.log(a)
    head = -mpmath.log(2 / (mp.pi * mpmath.sqrt(a))) / (2 * L) - gamma_const() / (2 * L)
    return (_coth_series(a, ctx, coth_pair).scale(-mpf(1) / 2)
            + _r(a, ctx, lambda s: mpf(2) ** (-s) - mpf(1) / 2).scale(-4 / L) + head)


def _x1add_rhs(p, ctx):
    a = p["a"]
    L = mpmath.log(a)
    head = -a / (1 - a) - mpmath.log(2) / L
    return (_coth_series(a, ctx, coth_triple).scale(-1)
            + _r(a, ctx, lambda s: 1 - mpf(2) ** (-s)).scale(4 / L) + head)


def _x1minus_rhs(p, ctx):
    a = p["a"]
    L = mpmath.log(a)
    head = -mpmath.log(mp.pi) / L - mpf(1) / 2 + a / (a - 1) + gamma_const() / L
    return (_coth_series(a, ctx, coth_single)
            + _r(a, ctx, lambda s: mpf(2) ** (-s)).scale(4 / L) + head)


# -- G3 ------------------------------------------------------------------------------


def _lam(a, sign, ctx, **kw):
    return series.lambert_sum(a, sign, ctx, **kw).approx()


def _qpsi(q, ctx):
    return specfun.q_digamma(q, 1, ctx, detailed=True).approx()


def _x3a_lhs(p, ctx):
    return _lam(p["a"], 1, ctx, u=2)


def _x3a_rhs(p, ctx):
    return _lam(p["a"], -1, ctx, u=2, alternating=True)


def _x3_contour(p, ctx):
    a = p["a"]

    def f(s, c):
        return 1 / (mpmath.sin(mp.pi * s / 2) * (1 - a ** (-s)))

    value = vline(f, 1, ctx, DecayModel.custom(mp.pi / 2, 0))
    return value.scale(mp.pi / 2) - mpf(1) / 2


def _sum_plus(a, ctx):
    return _lam(a, 1, ctx)


def _sum_minus(a, ctx, u=1, w=0):
    # Σ 1/(1 − a^{uk+w}) = −Σ 1/(a^{uk+w} − 1)
    return -_lam(a, -1, ctx, u=u, w=w)


def _eq3_rhs(p, ctx):
    a = p["a"]
    L = mpmath.log(a)
    return (mpmath.log(1 + 1 / a) - _qpsi(1 / a, ctx) + _qpsi(1 / a ** 2, ctx)).scale(1 / L)


def _pid1_rhs(p, ctx):
    a = p["a"]
    L = mpmath.log(a)
    return (_qpsi(1 / a, ctx) + mpmath.log(a - 1)).scale(1 / L) - 1


def _eq4_lhs(p, ctx):
    return _sum_minus(p["a"], ctx, u=2, w=1)


def _eq4_rhs(p, ctx):
    a = p["a"]
    L = mpmath.log(a)
    return (1 / (a - 1) - _qpsi(1 / a ** 2, ctx).scale(1 / (2 * L)) + _qpsi(1 / a, ctx).scale(1 / L)
            + mpmath.log((a - 1) / (a + 1)) / (2 * L))


def _eq1(p, ctx):
    a = p["a"]
    return -_sum_plus(a, ctx) + _sum_minus(a, ctx, u=2) - 1 / (1 - a)


def _eq2(p, ctx):
    a = p["a"]
    return _sum_minus(a, ctx) - _sum_minus(a, ctx, u=2) - 1 / (1 - a)


def _ls_lhs(p, ctx):
    x = p["x"]
    return stream(lambda k: (-1) ** k * x ** (2 * k + 1) / (1 - x ** (2 * k + 1)), ctx).scale(4)


def _ls_rhs(p, ctx):
    t = specfun.theta3(p["x"], ctx, detailed=True).approx()
    return t * t - 1


def _triv_rhs(p, ctx):
    a = p["a"]
    return -_sum_minus(a, ctx) + _sum_minus(a, ctx, u=2).scale(2)


# -- G4 ------------------------------------------------------------------------------


def _pr_lhs(p, ctx):
    a, t = p["a"], p["t"]
    return stream(lambda n: 1 / (a ** n + mpmath.exp(t)), ctx)


def _pr_rhs(p, ctx):
    a, t = p["a"], p["t"]
    L = mpmath.log(a)
    alt = stream(lambda k: (-1) ** k * mpmath.exp(-(k + 1) * t) / (a ** k - 1), ctx, start=1)
    osc = stream(lambda k: mpmath.im(mpmath.exp((2j * mp.pi * k - L) * t / L))
                 * mpmath.csch(2 * k * mp.pi ** 2 / L), ctx, start=1)
    return (2 * t + L) * mpmath.exp(-t) / (2 * L) - alt + osc.scale(2 * mp.pi / L)


def _ex4_lhs(p, ctx):
    a, m, t = p["a"], p["m"], p["t"]
    return stream(lambda n: 1 / (a ** (2 * m * n) + 2 * a ** (m * n) * mpmath.cosh(t) + 1), ctx)


def _ex4_rhs(p, ctx):
    a, m, t = p["a"], p["m"], p["t"]
    L = mpmath.log(a)
    sines = stream(lambda k: mpmath.sin(2 * mp.pi * k * t / (m * L)) / mpmath.sinh(2 * k * mp.pi ** 2 / (m * L)),
                   ctx, start=1)
    alt = stream(lambda k: (-1) ** k * mpmath.sinh((k + 1) * t) / (a ** (m * k) - 1), ctx, start=1)
    return (mpf(1) / 2 - sines.scale(2 * mp.pi * mpmath.coth(t) / (m * L)) - alt.scale(1 / mpmath.sinh(t))
            - t * mpmath.coth(t) / (m * L))


def _ex4_domain(p):
    a, m, t = p["a"], p["m"], p["t"]
    return check((a > 1, "a must exceed 1"), (m >= 1, "m must be a positive integer"),
                 (t > 0, "t must be positive"), (t < m * mpmath.log(a), "needs t < m ln a for the sinh series"))


def _ct1_lhs(p, ctx):
    b = p["b"]
    return stream(lambda n: 1 / (b ** n + 1) ** 2, ctx)


def _sumbk(b, ctx):
    return series.lambert_sum(b, -1, ctx, w=-1, k0=2, alternating=True, weight=lambda k: -k,
                              weight_degree=1).approx()


def _ct1_rhs(p, ctx):
    b = p["b"]
    Lb = mpmath.log(b)
    csch_sum = stream(lambda k: k * mpmath.csch(2 * k * mp.pi ** 2 / Lb), ctx, start=1)
    return mpf(1) / 2 - 1 / Lb - csch_sum.scale(4 * mp.pi ** 2 / Lb ** 2) + _sumbk(b, ctx)


def _sumbk_lhs(p, ctx):
    return _sumbk(p["b"], ctx)


def _sumbk_rhs(p, ctx):
    b = p["b"]
    return stream(lambda n: (1 + 2 * b ** n) / (1 + b ** n) ** 2, ctx, start=1)


def _ct1c_lhs(p, ctx):
    b = p["b"]
    return stream(lambda n: b ** n / (1 + b ** n) ** 2, ctx, start=1) - 1 / (2 * mpmath.log(b))


def _ct1c_rhs(p, ctx):
    b = p["b"]
    Lb = mpmath.log(b)
    q = mpmath.exp(2 * mp.pi ** 2 / Lb)
    s = stream(lambda j: q ** (1 + 2 * j) / (q ** (1 + 2 * j) - 1) ** 2, ctx)
    return s.scale(4 * mp.pi ** 2 / Lb ** 2) - mpf(1) / 8


def _blim_lhs(p, ctx):
    b = p["b"]
    with ctx.activate():
        r = 1 / b

        def tail(k):
            return r ** (k + 1) / (1 - r)

        s = series.sum_with_envelope(lambda n: b ** n / (1 + b ** n) ** 2, tail, 1, ctx).approx()
        return s - 1 / (2 * mpmath.log(b))


def _cossq_lhs(p, ctx):
    a = p["a"]
    first = stream(lambda j: mpmath.sech(j * mp.pi * a) ** 2, ctx, start=1)
    second = stream(lambda j: mpmath.csch((j + mpf(1) / 2) * mp.pi / a) ** 2, ctx)
    return first - second.scale(1 / a ** 2)


def _ex4ans2_lhs(p, ctx):
    t = p["t"]
    return stream(lambda n: 1 / (mpmath.exp(2 * n * t) + 2 * mpmath.exp(n * t) * mpmath.cosh(t) + 1), ctx)


def _ex4ans2_rhs(p, ctx):
    # Abel sum of Σ_{k≥1} (−1)^k sinh((k+1)t)/(e^{tk} − 1): the constant part e^t/2 of each
    # term sums to −e^t/4, the remainder converges
    t = p["t"]
    et = mpmath.exp(t)
    rest = stream(lambda k: (-1) ** k * (et - mpmath.exp(-(k + 1) * t)) / mpmath.expm1(t * k), ctx, start=1)
    abel = rest.scale(mpf(1) / 2) - et / 4
    return mpf(1) / 2 - mpmath.coth(t) - abel.scale(1 / mpmath.sinh(t))


# -- G5 ------------------------------------------------------------------------------


def _exp_sum(b, ctx):
    return stream(lambda j: mpmath.exp(-b ** j), ctx)


def _gamma_poles(b, ctx, L=None):
    L = mpmath.log(b) if L is None else L
    a = mpmath.exp(L)
    return residue_series(a, lambda s: mpmath.re(G(s, ctx)), ctx, growth=0, scale=2)


def _sx_lhs(p, ctx):
    b = p["b"]
    return stream(lambda k: (-1) ** k / (mpmath.factorial(k) * (b ** k - 1)), ctx, start=1)


def _sx_rhs(p, ctx):
    b = p["b"]
    return stream(lambda j: mpmath.expm1(-b ** (-j)), ctx, start=1)


def _ein1_lhs(p, ctx):
    b = p["b"]
    return vline(lambda s, c: G(s, c) / (1 - b ** (-s)), mpf(1) / 2, ctx, gamma_decay(0.5))


def _ein1_rhs(p, ctx):
    return _exp_sum(p["b"], ctx)


def _e2_rhs(p, ctx):
    b, n = p["b"], p["N"]
    L = mpmath.log(b)
    c = -n - mpf(1) / 2
    integral = vline(lambda s, cc: G(s, cc) / (1 - b ** (-s)), c, ctx, gamma_decay(c))
    poles = finite(lambda k: (-1) ** k / (mpmath.factorial(k) * (1 - b ** k)), 1, n, ctx)
    return mpf(1) / 2 - gamma_const() / L + integral + _gamma_poles(b, ctx).scale(2 / L) + poles


def _e4a_rhs(p, ctx):
    b = p["b"]
    L = mpmath.log(b)
    return mpf(1) / 2 - gamma_const() / L - _sx_lhs(p, ctx) + _gamma_poles(b, ctx).scale(2 / L)


def _e4b_lhs(p, ctx):
    return _gamma_poles(p["b"], ctx)


def _e4b_sum(L, ctx):
    return stream(lambda j: mpmath.expm1(-mpmath.exp(-j * L)) + mpmath.exp(-mpmath.exp(j * L)), ctx)


def _e4b_rhs(p, ctx):
    L = mpmath.log(p["b"])
    return _e4b_sum(L, ctx).scale(L / 2) + (mpf(1) / 4 - 1 / (2 * mp.e)) * L + gamma_const() / 2


def _e4b1_lhs(p, ctx):
    return _gamma_poles(None, ctx, L=p["b"])


def _e4b1_rhs(p, ctx):
    L = p["b"]
    return _e4b_sum(L, ctx).scale(L / 2) + (mpf(1) / 4 - 1 / (2 * mp.e)) * L + gamma_const() / 2


def _b_domain(p):
    return check((p["b"] > 1, "b must exceed 1"))


A2 = Param("a", "real", "2", "base a > 1")
A3 = Param("a", "real", "3", "base a > 1")
B3 = Param("b", "real", "3", "base b > 1")

RECORDS = [
    IdentityRecord("Erd2", "G1", "Mellin transform of 1/sinh(ax)", "yielding, after differentiating",
                   (Param("a", "real", "3/2"), Param("s", "real", "5/2")), _erd2_lhs, _erd2_rhs, _sinh_domain),
    IdentityRecord("eqno5", "G1", "Differentiated sinh transform", "yielding, after differentiating",
                   (Param("a", "real", "3/2"), Param("s", "real", "5/2")), _eqno5_lhs, _eqno5_rhs, _sinh_domain,
                   alternates=(("d/da of sinh transform", _eqno5_from_erd2),), aliases=("eqno(5)",)),
    IdentityRecord("Eq5b", "G1", "Contour integral for the cosh/cosh lattice sum", "after summation",
                   (A3, Param("b", "real", "1")), _eq5b_lhs, _eq5b_rhs,
                   lambda p: check((p["a"] > 1, "a must exceed 1"), (p["b"] > 0, "b must be positive"))),
    IdentityRecord("eqno6", "G1", "Telescoping cosh/sinh² sum", "by evaluating the residues",
                   (Param("b", "real", "1"),), _eqno6_lhs, _eqno6_rhs,
                   lambda p: check((0 < p["b"] < 2 * mp.pi, "needs 0 < b < 2π for the residue series")),
                   alternates=(("residue series", _eqno6_residues),), aliases=("eqno(6)",)),
    IdentityRecord("eqno9", "G2", "Σ 1/(e^{a^n} − 1)", "summing the appropriate residues",
                   (A3,), lambda p, c: _s9(p["a"], c), _eqno9_rhs, _a_domain, aliases=("eqno(9)",)),
    IdentityRecord("eqno10", "G2", "Odd zeta series as a coth series", "see Appendix B",
                   (A3,), lambda p, c: _z10(p["a"], c), _eqno10_rhs, _a_domain, aliases=("eqno(10)",)),
    IdentityRecord("eqno11", "G2", "Imaginary-pole residue sum", "see Appendix B",
                   (A3,), lambda p, c: _r(p["a"], c), _eqno11_rhs, _a_domain, aliases=("eqno(11)",)),
    IdentityRecord("X2b", "G2", "Σ 1/(e^{a^n} + 1)", "summing the appropriate residues",
                   (A3,), lambda p, c: _s9(p["a"], c, 1), _x2b_rhs, _a_domain),
    IdentityRecord("X1Add", "G2", "Σ 1/sinh(a^n)", "By adding",
                   (A3,), lambda p, c: stream(lambda n: 1 / mpmath.sinh(p["a"] ** n), c), _x1add_rhs, _a_domain),
    IdentityRecord("X1Minus", "G2", "Σ e^{−a^n}/sinh(a^n)", "and by subtracting we find",
                   (A3,), lambda p, c: stream(lambda n: mpmath.exp(-p["a"] ** n) / mpmath.sinh(p["a"] ** n), c),
                   _x1minus_rhs, _a_domain),
    IdentityRecord("Ts2", "G2", "Σ 1/sinh(2^n) = coth(1/2) − 1", "the first series on the right-hand side is telescoping",
                   (), lambda p, c: stream(lambda n: 1 / mpmath.sinh(mpf(2) ** n), c),
                   lambda p, c: mpmath.coth(mpf(1) / 2) - 1),
    IdentityRecord("H25b", "G2", "Finite cosecant doubling sum", "after setting x = i",
                   (Param("x", "complex", "1j"), Param("N", "int", "20")),
                   lambda p, c: finite(lambda n: 1 / mpmath.sin(mpf(2) ** n * p["x"]), 0, p["N"], c),
                   lambda p, c: mpmath.cot(p["x"] / 2) - mpmath.cot(mpf(2) ** p["N"] * p["x"]),
                   lambda p: check((p["N"] >= 0, "N must be non-negative"),
                                   (p["x"] != 0, "x must be non-zero"))),
    IdentityRecord("X3a", "G3", "Lambert series 1/(a^{2k}+1)", "originally attributed to Ramanujan",
                   (A2,), _x3a_lhs, _x3a_rhs, _a_domain,
                   alternates=(("vertical-line integral", _x3_contour),), aliases=("X3",)),
    IdentityRecord("Eq3", "G3", "Σ 1/(1 + a^k) via q-digamma", "employing the identity",
                   (A2,), lambda p, c: _sum_plus(p["a"], c), _eq3_rhs, _a_domain),
    IdentityRecord("Pid1", "G3", "Σ 1/(1 − a^k) via q-digamma", "employing the identity",
                   (A2,), lambda p, c: _sum_minus(p["a"], c), _pid1_rhs, _a_domain),
    IdentityRecord("Eq4", "G3", "Σ 1/(1 − a^{2k+1}) via q-digamma", "the alternating version of which",
                   (A2,), _eq4_lhs, _eq4_rhs, _a_domain,
                   alternates=(("odd/even split with 1/(1+a^k)", _eq1), ("odd/even split with 1/(1−a^k)", _eq2)),
                   aliases=("Eq1", "Eq2")),
    IdentityRecord("Ls", "G3", "Lambert series for θ3²", "the alternating version of which",
                   (Param("x", "real", "1/3"),), _ls_lhs, _ls_rhs,
                   lambda p: check((0 < p["x"] < 1, "needs 0 < x < 1"))),
    IdentityRecord("Triv", "G3", "Elementary Lambert relation", "reduces to the elementary identity",
                   (A2,), lambda p, c: _sum_plus(p["a"], c), _triv_rhs, _a_domain),
    IdentityRecord("Pr", "G4", "Σ 1/(a^n + e^t)", "by evaluating the residues as before",
                   (A2, Param("t", "real", "0.7")), _pr_lhs, _pr_rhs,
                   lambda p: check((p["a"] > 1, "a must exceed 1"), (p["t"] > 0, "t must be positive")),
                   aliases=("GId",)),
    IdentityRecord("Ex4Ans", "G4", "Quadratic Lambert denominator", "after comparing with",
                   (A2, Param("m", "int", "2"), Param("t", "real", "0.7")), _ex4_lhs, _ex4_rhs, _ex4_domain),
    IdentityRecord("Ct1", "G4", "Σ 1/(b^n + 1)²", "in the limit t→0",
                   (B3,), _ct1_lhs, _ct1_rhs, _b_domain),
    IdentityRecord("Sumbk", "G4", "Alternating weighted Lambert series", "expanding the denominator and transposing",
                   (B3,), _sumbk_lhs, _sumbk_rhs, _b_domain),
    IdentityRecord("Ct1C", "G4", "Modular transformation of Σ b^n/(1+b^n)²",
                   "transformation between similar generalized Lambert", (B3,), _ct1c_lhs, _ct1c_rhs, _b_domain),
    IdentityRecord("Blim", "G4", "Σ b^n/(1+b^n)² − 1/(2 ln b) near b = 1", "vanishes exponentially as b→1",
                   (Param("b", "real", "1.1"),), _blim_lhs, lambda p, c: -mpf(1) / 8,
                   lambda p: check((1 < p["b"] <= mpf("1.25"),
                                    "needs 1 < b ≤ 1.25 so the exponentially small term is below tolerance"))),
    IdentityRecord("CosSq", "G4", "sech² against csch² lattice sums", "a known result when a=1",
                   (Param("a", "real", "1"),), _cossq_lhs, lambda p, c: 1 / (mp.pi * p["a"]) - mpf(1) / 2,
                   lambda p: check((p["a"] > 0, "a must be positive"))),
    IdentityRecord("Ex4ANs2", "G4", "Quadratic denominator with Abel-summed alternating series",
                   "after comparing with", (Param("t", "real", "1/2"),), _ex4ans2_lhs, _ex4ans2_rhs,
                   lambda p: check((p["t"] > 0, "t must be positive"))),
    IdentityRecord("Ein1", "G5", "Σ e^{−b^j} as a vertical-line integral", "consider the Mellin transform pair",
                   (B3,), _ein1_lhs, _ein1_rhs, _b_domain),
    IdentityRecord("E2", "G5", "Contour shifted past s = 0, ..., −N", "Shifting the contour such that",
                   (B3, Param("N", "int", "0")), _ein1_rhs, _e2_rhs,
                   lambda p: check((p["b"] > 1, "b must exceed 1"), (p["N"] >= 0, "N must be non-negative")),
                   aliases=("E3A",)),
    IdentityRecord("E4a", "G5", "Σ e^{−b^j} in closed residue form", "the integral vanishes, leaving",
                   (B3,), _ein1_rhs, _e4a_rhs, _b_domain),
    IdentityRecord("Sx", "G5", "Alternating factorial Lambert series", "eventually identify",
                   (B3,), _sx_lhs, _sx_rhs, _b_domain),
    IdentityRecord("E4B", "G5", "Re Σ Γ(2πij/ln b)", "an identity that could also",
                   (B3,), _e4b_lhs, _e4b_rhs, _b_domain),
    IdentityRecord("E4B1", "G5", "Re Σ Γ(2πij/b)", "an identity that could also",
                   (Param("b", "real", "1"),), _e4b1_lhs, _e4b1_rhs,
                   lambda p: check((p["b"] > 0, "b must be positive"))),
]
