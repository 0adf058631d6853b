"""Bernoulli-number integral identities behind the coth series (groups GA and GB)."""

from __future__ import annotations

import mpmath
from mpmath import mp, mpf

from .. import specfun
from ..results import Approx
from .core import IdentityRecord, Param
from ._common import check, coth_minus, real_integral, stream, zr


def _b(k):
    bk = specfun.bernoulli(k)
    return mpf(bk.numerator) / bk.denominator


def _sinh2(t):
    return mpmath.sinh(mp.pi * t) ** 2


def _bernoulli_integral(k, ctx) -> Approx:
    """(−1)^{k+1} π ∫_0^∞ t^{2k}/sinh²(πt) dt, which equals B_{2k}."""
    with ctx.activate():
        sign = (-1) ** (k + 1) * mp.pi
    return real_integral(lambda t: t ** (2 * k) / _sinh2(t), 0, mpmath.inf, ctx).scale(sign)


def j3a_integral(b, ctx) -> Approx:
    """∫_0^∞ (1 − cos bt)/sinh²(πt) dt by quadrature."""
    return real_integral(lambda t: 2 * mpmath.sin(b * t / 2) ** 2 / _sinh2(t), 0, mpmath.inf, ctx)


def j3a_closed(b, ctx):
    return b * coth_minus(b, ctx) / (2 * mp.pi)


def j3b_integral(b, ctx) -> Approx:
    """∫_0^∞ t sin(bt)/sinh²(πt) dt by quadrature."""
    return real_integral(lambda t: t * mpmath.sin(b * t) / _sinh2(t), 0, mpmath.inf, ctx)


def j3b_closed(b, ctx):
    return (b - mpmath.sinh(b)) / (2 * mp.pi * (1 - mpmath.cosh(b)))


def coth_chain(a, ctx) -> Approx:
    """Σ_k ζ(−2k−1)/((2k+1)!(a^{2k+1} − 1)) rebuilt as −π Σ_{j≥1} a^j ∫_0^∞ (1 − cos(t/a^j))/sinh²(πt) dt.

    Each integral is computed by quadrature.  Since 1 − cos x ≤ x²/2 and
    ∫ t²/sinh²(πt) dt = 1/(6π), the j-th term is at most a^{−j}/12, which
    bounds the discarded tail by a^{−J}/(12(a − 1)).
    """
    inner = ctx.with_extra(3)
    with ctx.activate():
        a = mpmath.mpmathify(a)
        tol = ctx.tol / 10
    total = Approx(mpf(0))
    j = 1
    while True:
        with ctx.activate():
            tail = a ** (-(j - 1)) / (12 * (a - 1))
            aj = a ** j
        if tail < tol:
            break
        # the a^j factor stays inside the integrand so the quadrature bound is absolute in the product
        term = real_integral(lambda t: aj * 2 * mpmath.sin(t / (2 * aj)) ** 2 / _sinh2(t), 0, mpmath.inf, inner)
        with ctx.activate():
            total = total + term
        j += 1
    with ctx.activate():
        return (total + Approx(mpf(0), tail)).scale(-mp.pi)


def _bsum1_lhs(p, ctx):
    b = p["b"]
    return stream(lambda k: b ** (2 * k - 2) * zr(1 - 2 * k, ctx) / mpmath.factorial(2 * k - 2), ctx, start=1)


def _bsum1_rhs(p, ctx):
    b = p["b"]
    return stream(lambda k: b ** (2 * k - 2) * _b(2 * k) / (k * mpmath.factorial(2 * k - 2)), ctx,
                  start=1).scale(-mpf(1) / 2)


def _sumx_lhs(p, ctx):
    x = p["x"]
    return stream(lambda k: (-1) ** k * x ** (2 * k) / (k * mpmath.factorial(2 * k - 2)), ctx, start=1)


def _sumx_rhs(p, ctx):
    x = p["x"]
    return -2 * mpmath.sin(x) * x - 2 * mpmath.cos(x) + 2


def _t4b_lhs(p, ctx):
    a = p["a"]
    return stream(lambda k: zr(-2 * k - 1, ctx) / (mpmath.factorial(2 * k + 1) * (a ** (2 * k + 1) - 1)), ctx)


def _t4b_rhs(p, ctx):
    a = p["a"]
    return -stream(lambda k: _b(2 * k + 2) / (mpmath.factorial(2 * k + 2) * (a ** (2 * k + 1) - 1)), ctx)


def _aik_lhs(p, ctx):
    a, k = p["a"], p["k"]
    return 1 / (1 - a ** (-2 * k - 1))


def _aik_rhs(p, ctx):
    a, k = p["a"], p["k"]
    r = a ** (-2 * k - 1)
    return stream(lambda j: r ** j, ctx)


def _sid_lhs(p, ctx):
    a, j, t = p["a"], p["j"], p["t"]
    return stream(lambda k: (-1) ** k * (t / a) ** (2 + 2 * k) / (a ** (j * (2 * k + 1)) * mpmath.factorial(2 * k + 2)),
                  ctx)


def _sid_rhs(p, ctx):
    a, j, t = p["a"], p["j"], p["t"]
    return a ** j * 2 * mpmath.sin(t / (2 * a ** (j + 1))) ** 2


def _a_gt1(p):
    return check((p["a"] > 1, "a must exceed 1"))


RECORDS = [
    IdentityRecord("Bsum1", "GA", "Odd zeta series as a Bernoulli series", "has been used",
                   (Param("b", "real", "1"),), _bsum1_lhs, _bsum1_rhs,
                   lambda p: check((abs(p["b"]) < 2 * mp.pi, "needs |b| < 2π"))),
    IdentityRecord("B2k-bridge", "GA", "Bernoulli numbers as a sinh⁻² moment", "Following the application of",
                   (Param("k", "int", "2"),), lambda p, c: _b(2 * p["k"]),
                   lambda p, c: _bernoulli_integral(p["k"], c),
                   lambda p: check((p["k"] >= 1, "k must be a positive integer"))),
    IdentityRecord("Sumx", "GA", "Closed form of the Bernoulli-kernel series", "we are now left with",
                   (Param("x", "real", "1"),), _sumx_lhs, _sumx_rhs),
    IdentityRecord("J3a", "GA", "∫ (1 − cos bt)/sinh²(πt)", "Putting it all together yields",
                   (Param("b", "real", "1"),), lambda p, c: j3a_integral(p["b"], c),
                   lambda p, c: j3a_closed(p["b"], c), lambda p: check((p["b"] != 0, "b must be non-zero"))),
    IdentityRecord("J3b", "GA", "∫ t sin(bt)/sinh²(πt)", "Putting it all together yields",
                   (Param("b", "real", "1"),), lambda p, c: j3b_integral(p["b"], c),
                   lambda p, c: j3b_closed(p["b"], c), lambda p: check((p["b"] != 0, "b must be non-zero"))),
    IdentityRecord("T4b", "GB", "Odd zeta series with a^{2k+1} − 1 weights", "interested in the summation",
                   (Param("a", "real", "2"),), _t4b_lhs, _t4b_rhs, _a_gt1),
    IdentityRecord("Aik", "GB", "Geometric expansion of 1/(1 − a^{−2k−1})", "the well-known expansion",
                   (Param("a", "real", "2"), Param("k", "int", "1")), _aik_lhs, _aik_rhs,
                   lambda p: check((p["a"] > 1, "a must exceed 1"), (p["k"] >= 0, "k must be non-negative"))),
    IdentityRecord("Sid", "GB", "Inner cosine series", "after interchanging the order of summation",
                   (Param("a", "real", "2"), Param("j", "int", "1"), Param("t", "real", "1")), _sid_lhs, _sid_rhs,
                   lambda p: check((p["a"] > 0, "a must be positive"), (p["j"] >= 0, "j must be non-negative"))),
]
