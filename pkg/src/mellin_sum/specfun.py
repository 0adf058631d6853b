"""Gamma, zeta, Bernoulli numbers and the derived functions used by the identities.

Gamma and zeta are evaluated from scratch (Stirling series with argument
shift; Euler–Maclaurin with reflection) so that they can be checked against
an independent implementation.  Bernoulli numbers come from the exact
tangent-number recurrence and never from zeta.
"""

from __future__ import annotations

import cmath
import math
import threading
from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import mp, mpc, mpf

from .errors import DomainError
from .mpnum import PrecisionContext, as_complex, exact_integer
from .results import SeriesResult

# -- Bernoulli numbers -----------------------------------------------------------

_bern_lock = threading.Lock()
_bern_even: list[Fraction] = [Fraction(1)]  # index k holds B_{2k}
_bern_float: dict[int, list[mpf]] = {}


def _tangent_numbers(n: int) -> list[int]:
    """Tangent numbers T_1..T_n (index 0 unused)."""
    t = [0] * (n + 1)
    t[1] = 1
    for k in range(2, n + 1):
        t[k] = (k - 1) * t[k - 1]
    for k in range(2, n + 1):
        for j in range(k, n + 1):
            t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j]
    return t


def _extend_bernoulli(kmax: int) -> None:
    with _bern_lock:
        have = len(_bern_even) - 1
        if kmax <= have:
            return
        n = max(kmax, 2 * have, 16)
        t = _tangent_numbers(n)
        table = [Fraction(1)]
        for k in range(1, n + 1):
            four = 4 ** k
            b = Fraction(2 * k * t[k], four * (four - 1))
            table.append(b if k % 2 == 1 else -b)
        _bern_even[:] = table
        _bern_float.clear()


def bernoulli(k: int) -> Fraction:
    """Exact Bernoulli number B_k (B_1 = -1/2, odd k > 1 give 0)."""
    k = int(k)
    if k < 0:
        raise DomainError("Bernoulli index must be non-negative")
    if k == 1:
        return Fraction(-1, 2)
    if k % 2:
        return Fraction(0)
    _extend_bernoulli(k // 2)
    return _bern_even[k // 2]


def bernoulli_even_mpf(kmax: int) -> list[mpf]:
    """[B_0, B_2, ..., B_{2 kmax}] as mpf at the current precision."""
    _extend_bernoulli(kmax)
    cached = _bern_float.get(mp.prec)
    if cached is None or len(cached) <= kmax:
        cached = [mpf(b.numerator) / b.denominator for b in _bern_even]
        _bern_float[mp.prec] = cached
    return cached


# -- Gamma -----------------------------------------------------------------------


def _stirling_loggamma(w):
    """lnΓ(w) by the Stirling series; requires |w| large against the precision."""
    eps = mpf(2) ** (-mp.prec)
    out = (w - mpf(0.5)) * mpmath.log(w) - w + mpmath.log(2 * mp.pi) / 2
    inv = 1 / w
    inv2 = inv * inv
    power = inv
    k = 1
    bern = bernoulli_even_mpf(16)
    while True:
        if k >= len(bern):
            bern = bernoulli_even_mpf(2 * k)
        term = bern[k] / (2 * k * (2 * k - 1)) * power
        out += term
        if abs(term) < eps * abs(out):
            return out
        power *= inv2
        k += 1


def _shifted_loggamma(z):
    """Principal-branch lnΓ(z) via upward shift and Stirling, at current precision."""
    threshold = mp.dps * 0.5 + 5
    r = 0
    if abs(z) < threshold:
        r = max(0, int(math.ceil(threshold - float(mpmath.re(z)))))
        # Ensure the imaginary part alone does not already make |z| large enough.
        while abs(z + r) < threshold:
            r += 1
    core = _stirling_loggamma(z + r)
    if r:
        # One logarithm of the product; the branch is recovered from the phase sum.
        prod = mpf(1)
        phase = 0.0
        zc = complex(z)
        for j in range(r):
            prod *= z + j
            phase += cmath.phase(zc + j)
        log_prod = mpmath.log(prod)
        turns = round((phase - float(mpmath.im(log_prod))) / (2 * math.pi))
        if turns:
            log_prod += 2j * mp.pi * turns
        core -= log_prod
    return core


def _shifted_gamma(z):
    """Γ(z) via upward shift and Stirling, without tracking the log branch."""
    threshold = mp.dps * 0.5 + 5
    r = 0
    if abs(z) < threshold:
        r = max(0, int(math.ceil(threshold - float(mpmath.re(z)))))
        while abs(z + r) < threshold:
            r += 1
    core = mpmath.exp(_stirling_loggamma(z + r))
    prod = mpf(1)
    for j in range(r):
        prod *= z + j
    return core / prod


def _check_gamma_pole(z):
    n = exact_integer(z)
    if n is not None and n <= 0:
        raise DomainError(f"Gamma has a pole at {n}")


def loggamma(z, ctx: PrecisionContext):
    """Continuous branch of ln Γ(z) (branch cut on the negative real axis)."""
    _check_gamma_pole(z)
    with ctx.activate():
        w = as_complex(z)
    extra = 5 + int(math.log10(float(abs(w)) + 2))
    with ctx.with_extra(extra).activate():
        w = as_complex(z)
        if w.imag == 0 and w.real > 0:
            w = w.real
        out = _shifted_loggamma(w)
    with ctx.activate():
        return +out


def gamma(z, ctx: PrecisionContext):
    """Γ(z) for complex z away from the non-positive integers."""
    _check_gamma_pole(z)
    with ctx.activate():
        w = as_complex(z)
    mag = float(abs(w)) + 2
    extra = 5 + int(math.log10(mag * math.log(mag) + 1))
    with ctx.with_extra(extra).activate():
        w = as_complex(z)
        real = w.imag == 0
        if real:
            w = w.real
        n = exact_integer(w)
        if n is not None and 0 < n <= 1000:
            out = mpf(math.factorial(n - 1))
        elif mpmath.re(w) < 0.5:
            out = mp.pi / (mpmath.sinpi(w) * _shifted_gamma(1 - w))
        else:
            out = _shifted_gamma(w)
        if real:
            out = mpmath.re(out)
    with ctx.activate():
        return +out


# -- zeta ------------------------------------------------------------------------

_log_cache: dict[int, list[mpf]] = {}


def _logs(n: int) -> list[mpf]:
    """[log 0 placeholder, log 1, ..., log n] at the current precision."""
    table = _log_cache.get(mp.prec)
    if table is None or len(table) <= n:
        start = 1 if table is None else len(table)
        table = (table or [mpf(0)]) + [mpmath.log(j) for j in range(start, max(n, 2 * start) + 1)]
        _log_cache[mp.prec] = table
    return table


def _smallest_factors(n: int) -> list[int]:
    spf = list(range(n + 1))
    for p in range(2, int(n ** 0.5) + 1):
        if spf[p] == p:
            for m in range(p * p, n + 1, p):
                if spf[m] == m:
                    spf[m] = p
    return spf


def _zeta_em(s):
    """ζ(s) by Euler–Maclaurin at the current precision; intended for Re s ≥ 1/2."""
    eps = mpf(2) ** (-mp.prec)
    big_n = int((float(abs(s)) + 3.3 * mp.dps) / math.pi) + 2
    logs = _logs(big_n)
    spf = _smallest_factors(big_n)
    powers = [mpf(0), mpf(1)] + [None] * (big_n - 1)
    for j in range(2, big_n + 1):
        p = spf[j]
        powers[j] = mpmath.exp(-s * logs[j]) if p == j else powers[p] * powers[j // p]
    total = mpmath.fsum(powers[1:big_n])
    ns = powers[big_n]
    total += big_n * ns / (s - 1) + ns / 2
    term = s * ns / big_n
    n2 = mpf(big_n) ** 2
    fact = mpf(2)
    bern = bernoulli_even_mpf(32)
    k = 1
    while True:
        if k >= len(bern):
            bern = bernoulli_even_mpf(2 * k)
        t = bern[k] / fact * term
        total += t
        if abs(t) <= eps * abs(total):
            return total
        term = term * (s + 2 * k - 1) * (s + 2 * k) / n2
        fact *= (2 * k + 1) * (2 * k + 2)
        k += 1


def zeta(z, ctx: PrecisionContext):
    """Riemann ζ(z) for complex z ≠ 1."""
    n = exact_integer(z)
    if n is not None:
        if n == 1:
            raise DomainError("zeta has a pole at 1")
        if n == 0:
            with ctx.activate():
                return mpf(-0.5)
        if n < 0 and n % 2 == 0:
            with ctx.activate():
                return mpf(0)
    with ctx.activate():
        w = as_complex(z)
    height = float(abs(w)) + 2
    extra = 5 + int(math.log10(height * math.log(height) + 1))
    with ctx.with_extra(extra).activate():
        w = as_complex(z)
        real = w.imag == 0
        if real:
            w = w.real
        if mpmath.re(w) >= 0.5:
            out = _zeta_em(w)
        else:
            u = 1 - w
            out = (mpmath.power(2, w) * mpmath.power(mp.pi, w - 1) * mpmath.sinpi(w / 2)
                   * _shifted_gamma(u) * _zeta_em(u))
        if real:
            out = mpmath.re(out)
    with ctx.activate():
        return +out


# -- q-digamma, theta, Upsilon ------------------------------------------------------


def q_digamma(q, z, ctx: PrecisionContext, detailed: bool = False):
    """q-digamma ψ_q(z) = −ln(1−q) + ln q · Σ_{k≥0} q^{k+z}/(1 − q^{k+z}).

    With ``detailed=True`` a :class:`SeriesResult` carrying the tail bound is
    returned instead of the bare value.
    """
    with ctx.activate():
        q = mpmath.mpmathify(q)
        if isinstance(q, mpc) or not (0 < q < 1):
            raise DomainError("q must be a real number in (0, 1)")
        w = as_complex(z)
        if w.imag == 0:
            w = w.real
        eps = ctx.eps / 100
        lnq = mpmath.log(q)
        x = mpmath.exp(lnq * w)  # q^z
        total = mpf(0)
        k = 0
        while True:
            if x == 1:
                raise DomainError("q^(k+z) = 1 for some k")
            t = x / (1 - x)
            total += t
            k += 1
            x *= q
            ax = abs(x)
            if ax < mpf(0.5):
                # Remaining terms are bounded by Σ |x| q^j / (1 − |x|).
                tail = ax / ((1 - ax) * (1 - q))
                if tail <= eps * max(1, abs(total)):
                    break
            if k > 10 ** 7:
                raise DomainError("q too close to 1 for direct summation")
        value = -mpmath.log(1 - q) + lnq * total
        bound = abs(lnq) * tail
    if detailed:
        return SeriesResult(value, k, bound)
    return value


def theta3(x, ctx: PrecisionContext, detailed: bool = False):
    """Jacobi ϑ₃(0, x) = 1 + 2 Σ_{k≥1} x^{k²} for 0 < x < 1."""
    with ctx.activate():
        x = mpmath.mpmathify(x)
        if isinstance(x, mpc) or not (0 < x < 1):
            raise DomainError("theta3 needs 0 < x < 1")
        eps = ctx.eps / 100
        total = mpf(0)
        k = 1
        while True:
            t = x ** (k * k)
            total += t
            ratio = x ** (2 * k + 1)
            tail = x ** ((k + 1) ** 2) / (1 - ratio)
            if tail <= eps:
                break
            k += 1
        value = 1 + 2 * total
        bound = 2 * tail
    if detailed:
        return SeriesResult(value, k, bound)
    return value


def upsilon(s, b, ctx: PrecisionContext):
    """Υ(s, b) = ζ(s) b^{−s/2} Γ(s/2)."""
    with ctx.activate():
        w = as_complex(s)
        if w.imag == 0:
            w = w.real
        b = mpmath.mpmathify(b)
    half = w / 2
    z = zeta(w, ctx)
    g = gamma(half, ctx)
    with ctx.activate():
        return z * mpmath.power(b, -half) * g


# -- polar form on the critical line -----------------------------------------------


@dataclass(frozen=True)
class PolarParts:
    modulus: mpf
    phase: mpf

    def value(self):
        return self.modulus * mpmath.expj(self.phase)


def gamma_phase(v, ctx: PrecisionContext):
    """θ(v) = arg Γ(1/2 + iv), continuous in v with θ(0) = 0."""
    v = mpmath.mpmathify(v)
    if v == 0:
        return mpf(0)
    with ctx.activate():
        s = mpc(0.5, v)
    return mpmath.im(loggamma(s, ctx))


def zeta_phase_alpha(v, ctx: PrecisionContext):
    """Smooth phase α(v) with ζ(1/2+iv) e^{−iα} real, normalised by α(0) = −π."""
    theta = gamma_phase(v, ctx)
    with ctx.with_extra(5).activate():
        v = mpmath.mpmathify(v)
        out = (v * mpmath.log(2 * mp.pi) / 2 - theta / 2 - 9 * mp.pi / 8
               + mpmath.atan(mpmath.exp(mp.pi * v)) / 2)
    with ctx.activate():
        return +out


def polar_parts(which: str, v, ctx: PrecisionContext) -> PolarParts:
    """Modulus and phase of Γ(1/2+iv) (``"gamma-half-line"``) or ζ(1/2+iv)
    (``"zeta-half-line"``).

    The zeta phase is α(v) shifted by π wherever ζ e^{−iα} is negative, so the
    modulus stays non-negative.
    """
    with ctx.activate():
        v = mpmath.mpmathify(v)
        s = mpc(0.5, v)
    if which == "gamma-half-line":
        g = gamma(s, ctx)
        with ctx.activate():
            return PolarParts(abs(g), gamma_phase(v, ctx))
    if which == "zeta-half-line":
        z = zeta(s, ctx)
        alpha = zeta_phase_alpha(v, ctx)
        with ctx.activate():
            signed = mpmath.re(z * mpmath.expj(-alpha))
            phase = alpha + mp.pi if signed < 0 else alpha
            return PolarParts(abs(z), phase)
    raise ValueError(f"unknown polar target {which!r}")
