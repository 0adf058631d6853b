"""Evaluation helpers shared by the catalog modules."""

from __future__ import annotations

import math

import mpmath
from mpmath import mp, mpc, mpf

from .. import contour, series, specfun
from ..contour import ContourSpec, DecayModel
from ..errors import DomainError
from ..mpnum import PrecisionContext, euler_gamma
from ..results import Approx

Z = specfun.zeta
G = specfun.gamma


def zr(x, ctx):
    """ζ at a real argument, as a real number."""
    return mpmath.re(specfun.zeta(x, ctx))


def gr(x, ctx):
    return mpmath.re(specfun.gamma(x, ctx))


def gamma_const():
    return euler_gamma()


def zeta_growth(sigma) -> float:
    """Exponent μ with |ζ(σ+it)| ≪ |t|^μ, padded for the logarithmic factors."""
    sigma = float(sigma)
    if sigma > 1:
        mu = 0.0
    elif sigma >= 0:
        mu = (1 - sigma) / 2
    else:
        mu = 0.5 - sigma
    return mu + 0.25


def gamma_decay(c, *zeta_sigmas, extra_power=0.0) -> DecayModel:
    """Decay of Γ(c+iv) times ζ factors whose real parts are ``zeta_sigmas``."""
    zp = sum(zeta_growth(s) for s in zeta_sigmas) + extra_power
    return DecayModel.gamma_like(float(c), zeta_power=zp)


def vline(integrand, c, ctx, decay: DecayModel, real: bool = False, pole_at_zero: bool = False) -> Approx:
    """(1/2π) ∫ F(c+iv) dv for integrands with conjugate symmetry.

    ``real`` integrates Re F only; ``pole_at_zero`` marks a simple pole on the
    line at v = 0 whose contribution to Re F is integrable.
    """
    spec = ContourSpec(c, integrand, decay, part="real" if (real or pole_at_zero) else "full",
                       symmetric=True)
    if pole_at_zero:
        return contour.half_residue_integrate(spec, c, None, ctx).quadrature.approx()
    return contour.integrate_vertical(spec, ctx).approx()


def full_line(integrand, c, ctx, decay, real=False, pole_at_zero=False) -> Approx:
    """∫ F(c+iv) dv without the 1/2π normalization."""
    with ctx.activate():
        two_pi = 2 * mp.pi
    return vline(integrand, c, ctx, decay, real, pole_at_zero).scale(two_pi)


def half_line(g, ctx, decay: DecayModel) -> Approx:
    """∫_0^∞ g(v) dv for a real integrand with the given decay."""
    return contour.integrate_line(g, decay, ctx, lower=0).approx()


def omega(b, sigma, ctx) -> Approx:
    return series.omega(b, sigma, ctx).approx()


def bose(sigma, ctx, scale=1) -> Approx:
    return series.bose_sum(sigma, ctx, scale).approx()


def stream(fn, ctx, start=0, ratio=None) -> Approx:
    """Σ_{k≥start} fn(k) for terms that decay at least geometrically."""
    with ctx.activate():
        return series.stream_sum(series.terms(fn, start), ctx, ratio).approx()


def finite(fn, lo, hi, ctx):
    with ctx.activate():
        return mpmath.fsum(fn(k) for k in range(lo, hi + 1))


def residue_series(a, weight, ctx, growth=1.0, scale=1) -> Approx:
    """Σ_{k≥1} weight(s_k) over the imaginary poles s_k = 2πik/ln a."""
    with ctx.activate():
        lna = mpmath.log(mpmath.mpmathify(a))

        def term(k):
            return weight(mpc(0, 2 * mp.pi * k / lna))

    return series.imaginary_pole_series(a, term, ctx, growth=growth, scale=scale).approx()


def exact_boost(x, ctx) -> int:
    """Extra digits for expressions that cancel like 1/x when x is small."""
    ax = abs(mpmath.mpmathify(x))
    if ax == 0 or ax >= 1:
        return 5
    return 2 * int(-mpmath.log10(ax)) + 10


def coth_minus(x, ctx):
    """coth(x/2) − 2/x without the cancellation for small x."""
    with mpmath.extradps(exact_boost(x, ctx)):
        x = +x
        return +(mpmath.coth(x / 2) - 2 / x)


def coth_pair(x, ctx):
    """coth(x/2) − 2 coth(x) without the cancellation for small x."""
    with mpmath.extradps(exact_boost(x, ctx)):
        x = +x
        return +(mpmath.coth(x / 2) - 2 * mpmath.coth(x))


def coth_triple(x, ctx):
    """coth(x/2) − coth(x) − 1/x without the cancellation for small x."""
    with mpmath.extradps(exact_boost(x, ctx)):
        x = +x
        return +(mpmath.coth(x / 2) - mpmath.coth(x) - 1 / x)


def coth_single(x, ctx):
    """1/x − coth(x) without the cancellation for small x."""
    with mpmath.extradps(exact_boost(x, ctx)):
        x = +x
        return +(1 / x - mpmath.coth(x))


def one_minus_cos(x):
    return 2 * mpmath.sin(x / 2) ** 2


def require(cond: bool, message: str):
    return None if cond else message


def check(*pairs):
    """First failing message among (condition, message) pairs, else None."""
    for cond, message in pairs:
        if not cond:
            return message
    return None


def real_integral(f, a, b, ctx, points=()) -> Approx:
    return contour.integrate_real(f, a, b, ctx, points).approx()


def is_int(x) -> bool:
    try:
        return mpmath.isint(x)
    except TypeError:
        return False
