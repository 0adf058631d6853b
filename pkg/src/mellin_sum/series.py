"""Certified summation engines.

Each engine returns a :class:`SeriesResult` whose ``tail_bound`` bounds the
omitted terms.  Truncation is decided from a decay envelope specific to the
series family rather than from the size of the last computed term.
"""

from __future__ import annotations

import math
from typing import Callable, Iterable, Iterator

import mpmath
from mpmath import mp, mpf

from .errors import ConvergenceError, DomainError, SlowDecay
from .mpnum import PrecisionContext
from .results import SeriesResult
from . import specfun

MAX_TERMS = 10 ** 6
DIRECT_OMEGA_LIMIT = 2_000


def _tol(ctx: PrecisionContext, value=None):
    scale = 1 if value is None else max(1, abs(value))
    return mpf(10) ** (-(ctx.target_digits + 4)) * scale


# -- generic drivers -------------------------------------------------------------


def sum_with_envelope(term: Callable[[int], object], tail: Callable[[int], mpf], k0: int,
                      ctx: PrecisionContext, max_terms: int = MAX_TERMS) -> SeriesResult:
    """Σ_{k≥k0} term(k), stopping once ``tail(K)`` (a bound on Σ_{k>K} |term(k)|)
    falls below the tolerance."""
    with ctx.activate():
        total = mpf(0)
        k = k0
        while True:
            total += term(k)
            bound = tail(k)
            if bound <= _tol(ctx, total):
                return SeriesResult(total, k - k0 + 1, mpf(bound))
            k += 1
            if k - k0 > max_terms:
                raise ConvergenceError(f"series needs more than {max_terms} terms")


def stream_sum(terms: Iterable, ctx: PrecisionContext, ratio: float | None = None,
               max_terms: int = MAX_TERMS) -> SeriesResult:
    """Sum a pull-based term stream whose magnitudes decay at least geometrically.

    ``ratio`` is a certified bound on |t_{k+1}/t_k| for the remaining terms; when
    omitted the observed ratio of the last two terms is used, which makes the
    bound an estimate rather than a certificate.
    """
    with ctx.activate():
        total = mpf(0)
        prev = None
        n = 0
        for t in terms:
            total += t
            n += 1
            a = abs(t)
            if prev is not None and prev != 0:
                q = ratio if ratio is not None else min(a / prev, mpf(0.99))
                if q < 1:
                    bound = a * q / (1 - q)
                    if bound <= _tol(ctx, total):
                        return SeriesResult(total, n, mpf(bound))
            elif a == 0 and n > 1:
                return SeriesResult(total, n, mpf(0))
            prev = a
            if n > max_terms:
                raise ConvergenceError(f"stream needs more than {max_terms} terms")
        return SeriesResult(total, n, mpf(0))


def naive_sum(term: Callable[[int], object], k0: int, k1: int, ctx: PrecisionContext):
    """Plain partial sum Σ_{k0 ≤ k ≤ k1} term(k) at the working precision."""
    with ctx.activate():
        return mpmath.fsum(term(k) for k in range(k0, k1 + 1))


# -- power series on truncated Taylor coefficient lists ------------------------------


def ps_mul(a, b, order: int):
    return [mpmath.fsum(a[i] * b[k - i] for i in range(k + 1)) for k in range(order + 1)]


def ps_exp(g, order: int):
    """Coefficients of exp(g(h))."""
    f = [mpmath.exp(g[0])] + [mpf(0)] * order
    for k in range(1, order + 1):
        f[k] = mpmath.fsum(j * g[j] * f[k - j] for j in range(1, k + 1)) / k
    return f


def ps_inv(a, order: int):
    """Coefficients of 1/a(h); needs a[0] ≠ 0."""
    r = [1 / a[0]] + [mpf(0)] * order
    for k in range(1, order + 1):
        r[k] = -mpmath.fsum(a[j] * r[k - j] for j in range(1, k + 1)) / a[0]
    return r


def ps_shifted_power(m, p, order: int):
    """Coefficients of (m + h)^p in h."""
    m = mpf(m)
    out = []
    c = mpf(1)
    mp_ = m ** p
    for k in range(order + 1):
        out.append(mp_ * c / m ** k)
        c = c * (p - k) / (k + 1)
    return out


def ps_sin(g, order: int):
    """Coefficients of sin(g(h)) for real g, as the imaginary part of exp(i g)."""
    e = ps_exp([mpmath.mpc(0, x) for x in g], order)
    return [mpmath.im(x) for x in e]


def euler_maclaurin_sum(f: Callable[[int], object], taylor: Callable[[int, int], list],
                        tail_integral: Callable[[int], object], ctx: PrecisionContext,
                        start: int = 1, split: int | None = None) -> SeriesResult:
    """Σ_{j≥start} f(j) for smooth, monotonically decaying f.

    Terms below ``split`` are added directly; the rest is
    ∫_M^∞ f + f(M)/2 − Σ_k B_{2k}/(2k)! f^{(2k−1)}(M), with the derivatives taken
    from ``taylor(M, K)`` (Taylor coefficients c_j = f^{(j)}(M)/j!).  The Taylor
    order starts small and doubles until the corrections reach the working
    precision.  The reported bound is the magnitude of the last correction.
    """
    with ctx.activate():
        m = split if split is not None else int(ctx.working_digits * 2.303 / (2 * math.pi)) + 6
        m = max(m, start)
        head = mpmath.fsum(f(j) for j in range(start, m)) + tail_integral(m)
        eps = ctx.eps
        order = 24
        max_order = 2 * int(3.2 * m) + 2
        while True:
            coeffs = taylor(m, order)
            total = head + coeffs[0] / 2
            bern = specfun.bernoulli_even_mpf(order // 2 + 1)
            prev = mpmath.inf
            for k in range(1, order // 2 + 1):
                t = -bern[k] / (2 * k) * coeffs[2 * k - 1]
                if abs(t) > abs(prev) and k > 2:
                    raise ConvergenceError("Euler–Maclaurin corrections started growing")
                total += t
                prev = t
                if abs(t) < eps * max(1, abs(total)):
                    return SeriesResult(total, m - start + k, abs(t))
            if order >= max_order:
                raise ConvergenceError("Euler–Maclaurin corrections did not reach tolerance")
            order = min(2 * order, max_order)


# -- specific families --------------------------------------------------------------


def omega(b, sigma, ctx: PrecisionContext, max_terms: int = MAX_TERMS) -> SeriesResult:
    """ω(b, σ) = Σ_{j≥1} e^{−b j^σ}.

    Summed directly while the truncation index is moderate, with the tail
    bounded by ∫_J^∞ e^{−b t^σ} dt; slowly decaying cases use Euler–Maclaurin.
    """
    with ctx.activate():
        b = mpmath.mpmathify(b)
        sigma = mpmath.mpmathify(sigma)
        if not (b > 0 and sigma > 0):
            raise DomainError("omega needs b > 0 and sigma > 0")
        need = (ctx.working_digits + ctx.guard_digits) * math.log(10)
        j_cut = float((need / b) ** (1 / sigma))
        if j_cut <= DIRECT_OMEGA_LIMIT:
            return _omega_direct(b, sigma, ctx)
        result = _omega_em(b, sigma, ctx)
        if result.terms_used > max_terms:
            raise ConvergenceError("omega exceeded the term ceiling")
        return result


def _gamma_upper(a, x):
    # Upper incomplete gamma Γ(a, x); infrastructure from mpmath.
    return mpmath.gammainc(a, x)


def _omega_tail(b, sigma, j):
    """∫_j^∞ e^{−b t^σ} dt = b^{−1/σ} Γ(1/σ, b j^σ)/σ."""
    return b ** (-1 / sigma) * _gamma_upper(1 / sigma, b * mpf(j) ** sigma) / sigma


def _omega_direct(b, sigma, ctx):
    terms = 0
    total = mpf(0)
    j = 1
    tol = _tol(ctx)
    while True:
        total += mpmath.exp(-b * mpf(j) ** sigma)
        terms += 1
        if mpmath.exp(-b * mpf(j) ** sigma) < tol:
            bound = _omega_tail(b, sigma, j)
            if bound <= _tol(ctx, total):
                return SeriesResult(total, terms, bound)
        j += 1


def _omega_em(b, sigma, ctx):
    def f(j):
        return mpmath.exp(-b * mpf(j) ** sigma)

    def taylor(m, order):
        g = [-b * x for x in ps_shifted_power(m, sigma, order)]
        return ps_exp(g, order)

    return euler_maclaurin_sum(f, taylor, lambda m: _omega_tail(b, sigma, m), ctx)


def bose_sum(sigma, ctx: PrecisionContext, scale=1) -> SeriesResult:
    """Σ_{j≥1} 1/(e^{a j^σ} − 1) with a = ``scale``, by Euler–Maclaurin when slowly decaying."""
    with ctx.activate():
        sigma = mpmath.mpmathify(sigma)
        a = mpmath.mpmathify(scale)
        if not (a > 0 and sigma > 0):
            raise DomainError("bose_sum needs scale > 0 and sigma > 0")
        need = (ctx.working_digits + ctx.guard_digits) * math.log(10)
        j_cut = float((need / a) ** (1 / sigma))

        def f(j):
            return 1 / mpmath.expm1(a * mpf(j) ** sigma)

        if j_cut <= DIRECT_OMEGA_LIMIT:
            def tail(j):
                # 1/(e^x − 1) ≤ 2 e^{−x} once x ≥ 1
                x = a * mpf(j) ** sigma
                return 2 * _omega_tail(a, sigma, j) if x >= 1 else mpmath.inf
            return sum_with_envelope(f, tail, 1, ctx)

        def taylor(m, order):
            e = ps_exp([a * x for x in ps_shifted_power(m, sigma, order)], order)
            e[0] -= 1
            return ps_inv(e, order)

        def tail_integral(m):
            # ∫_m^∞ dt/(e^{a t^σ}−1) = Σ_k ∫_m^∞ e^{−k a t^σ} dt
            x = a * mpf(m) ** sigma
            total = mpf(0)
            k = 1
            while True:
                t = _omega_tail(k * a, sigma, m)
                total += t
                if abs(t) < ctx.eps * abs(total) or k * x > need + 50:
                    return total
                k += 1

        return euler_maclaurin_sum(f, taylor, tail_integral, ctx)


def lambert_sum(a, sign: int, ctx: PrecisionContext, u=1, w=0, k0: int = 1,
                alternating: bool = False, weight: Callable[[int], object] | None = None,
                weight_degree: int = 0) -> SeriesResult:
    """Σ_{k≥k0} c_k/(a^{u k + w} + sign) with c_k = (−1)^{k+1} when ``alternating``,
    optionally multiplied by ``weight(k)`` (|weight(k)| ≤ k^weight_degree)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    with ctx.activate():
        a = mpmath.mpmathify(a)
        u = mpmath.mpmathify(u)
        w = mpmath.mpmathify(w)
        if not a > 1 + ctx.eps:
            raise ConvergenceError("lambert_sum needs a > 1")
        if u <= 0 or u * k0 + w <= 0:
            raise DomainError("exponent map must produce increasing positive exponents")
        lna = mpmath.log(a)
        r = mpmath.exp(-u * lna)

        def term(k):
            t = 1 / (mpmath.exp((u * k + w) * lna) + sign)
            if alternating and k % 2 == 0:
                t = -t
            if weight is not None:
                t *= weight(k)
            return t

        def tail(k):
            x = mpmath.exp(-(u * (k + 1) + w) * lna)
            if x >= mpf(0.5):
                return mpmath.inf
            growth = (mpf(k + 2) / (k + 1)) ** weight_degree
            q = r * growth
            if q >= 1:
                return mpmath.inf
            return 2 * x * mpf(k + 1) ** weight_degree / (1 - q)

        return sum_with_envelope(term, tail, k0, ctx)


def imaginary_pole_series(a, weight: Callable[[int], object], ctx: PrecisionContext,
                          growth: float = 1.0, scale=1, min_log: float = 0.05,
                          max_terms: int = 10_000) -> SeriesResult:
    """Σ_{k≥1} weight(k) for residue sums over s = 2πik/ln a.

    ``weight(k)`` must be bounded by scale·(1+y)^growth·|Γ(iy)| with
    y = 2πk/ln a; the envelope decays like e^{−π² k/ln a}.
    """
    with ctx.activate():
        a = mpmath.mpmathify(a)
        if not a > 1:
            raise DomainError("imaginary_pole_series needs a > 1")
        lna = mpmath.log(a)
        required = int(ctx.working_digits * math.log(10) * float(lna) / math.pi ** 2) + 2
        if lna < min_log or required > max_terms:
            raise SlowDecay(f"ln a = {mpmath.nstr(lna, 5)} needs about {required} residue terms",
                            required_terms=required)
        ratio = mpmath.exp(-mp.pi ** 2 / lna)

        def envelope(k):
            y = 2 * mp.pi * k / lna
            return scale * (1 + y) ** growth * mpmath.sqrt(mp.pi / (y * mpmath.sinh(mp.pi * y)))

        def tail(k):
            q = ratio * (mpf(k + 2) / (k + 1)) ** growth
            if q >= 1:
                return mpmath.inf
            return envelope(k + 1) / (1 - q)

        return sum_with_envelope(weight, tail, 1, ctx, max_terms=max_terms)


def alternating_factorial_series(term: Callable[[int], object], bound_a, bound_r,
                                 ctx: PrecisionContext, k0: int = 1) -> SeriesResult:
    """Σ_{k≥k0} term(k) with the certificate |term(k)| ≤ A r^k / k!."""
    with ctx.activate():
        big_a = mpmath.mpmathify(bound_a)
        r = mpmath.mpmathify(bound_r)

        def tail(k):
            n = k + 1
            if n <= 2 * r:
                return mpmath.inf
            first = big_a * r ** n / mpmath.factorial(n)
            return first / (1 - r / (n + 1))

        return sum_with_envelope(term, tail, k0, ctx)


def telescoping_check(b, ctx: PrecisionContext) -> SeriesResult:
    """Σ_{j≥0} 2^j cosh(2^j b)/sinh²(2^j b), which telescopes to 1/(2 sinh²(b/2))."""
    with ctx.activate():
        b = mpmath.mpmathify(b)
        if not b > 0:
            raise DomainError("telescoping_check needs b > 0")

        def term(j):
            x = mpf(2) ** j * b
            return mpf(2) ** j * mpmath.cosh(x) / mpmath.sinh(x) ** 2

        def tail(j):
            x = mpf(2) ** (j + 1) * b
            if x < 2:
                return mpmath.inf
            # 2^j cosh/sinh² ≤ 2^{j+2} e^{−x}; the sequence decays super-geometrically
            return 2 * mpf(2) ** (j + 3) * mpmath.exp(-x)

        return sum_with_envelope(term, tail, 0, ctx)


def terms(fn: Callable[[int], object], start: int = 1) -> Iterator:
    """Pull-based term generator fn(start), fn(start+1), ..."""
    k = start
    while True:
        yield fn(k)
        k += 1
