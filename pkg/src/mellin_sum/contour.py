"""Vertical-line inverse Mellin integrals.

:func:`integrate_vertical` returns (1/2π)∫ F(c+iv) dv, which is the inverse
Mellin integral (1/2πi)∫_{c−i∞}^{c+i∞} F(s) ds.  Integration uses
Gauss–Legendre panels whose widths grow geometrically away from v = 0; a
panel is accepted when two rule orders agree, and bisected otherwise.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field, replace
from typing import Callable, Sequence

import mpmath
from mpmath import mp, mpc, mpf

from .errors import (DecayViolation, NonIntegrableSingularity, PoleOnContour,
                     ResidueMismatch)
from .mpnum import PrecisionContext
from .results import Approx

Integrand = Callable[[mpc, PrecisionContext], object]

# -- Gauss–Legendre nodes -----------------------------------------------------------

_gl_lock = threading.Lock()
_gl_cache: dict[tuple[int, int], tuple[list[mpf], list[mpf]]] = {}


def gauss_legendre(n: int) -> tuple[list[mpf], list[mpf]]:
    """Nodes and weights on [−1, 1] at the current precision (cached)."""
    key = (n, mp.prec)
    cached = _gl_cache.get(key)
    if cached is not None:
        return cached
    nodes: list[mpf] = []
    weights: list[mpf] = []
    eps = mpf(2) ** (-mp.prec + 8)
    with mpmath.workprec(mp.prec + 20):
        for i in range(1, n // 2 + 1):
            x = mpf(math.cos(math.pi * (i - 0.25) / (n + 0.5)))
            for _ in range(100):
                p0, p1 = mpf(1), x
                for k in range(2, n + 1):
                    p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
                dp = n * (x * p1 - p0) / (x * x - 1)
                dx = p1 / dp
                x -= dx
                if abs(dx) < eps:
                    break
            p0, p1 = mpf(1), x
            for k in range(2, n + 1):
                p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
            dp = n * (x * p1 - p0) / (x * x - 1)
            w = 2 / ((1 - x * x) * dp * dp)
            nodes += [x, -x]
            weights += [w, w]
        if n % 2:
            p0, p1 = mpf(1), mpf(0)
            for k in range(2, n + 1):
                p0, p1 = p1, (-(k - 1) * p0) / k
            dp = n * (-p0) / (-1)
            nodes.append(mpf(0))
            weights.append(2 / (dp * dp))
    result = ([+x for x in nodes], [+w for w in weights])
    with _gl_lock:
        _gl_cache[key] = result
    return result


def gl_order(working_digits: int) -> int:
    return max(12, int(0.55 * working_digits) + 6)


def _gl_panel(g, a, b, n):
    xs, ws = gauss_legendre(n)
    half = (b - a) / 2
    mid = (a + b) / 2
    return half * mpmath.fsum(w * g(mid + half * x) for x, w in zip(xs, ws))


# -- decay models -------------------------------------------------------------------


@dataclass(frozen=True)
class DecayModel:
    """Envelope |F(c+iv)| ≤ M |v|^power e^{−rate |v|} for |v| ≥ v0.

    ``constant`` is estimated from samples when not supplied.
    """

    kind: str
    rate: float
    power: float
    v0: float = 2.0
    constant: float | None = None

    @staticmethod
    def gamma_like(c, zeta_power: float = 1.0) -> "DecayModel":
        return DecayModel("gamma-like", math.pi / 2, float(c) - 0.5 + zeta_power)

    @staticmethod
    def gamma_squared_like(c, zeta_power: float = 1.0) -> "DecayModel":
        return DecayModel("gamma-squared-like", math.pi, 2 * float(c) - 1 + zeta_power)

    @staticmethod
    def custom(rate, power, constant=None, v0: float = 2.0) -> "DecayModel":
        return DecayModel("custom", float(rate), float(power), v0, constant)

    def envelope(self, v) -> mpf:
        v = abs(mpf(v))
        return v ** self.power * mpmath.exp(-self.rate * v)

    def tail(self, v, constant) -> mpf:
        """Bound on ∫_v^∞ M t^p e^{−r t} dt, valid for r v > p."""
        v = mpf(v)
        slack = self.rate - self.power / v
        if slack <= 0:
            return mpmath.inf
        return constant * self.envelope(v) / slack


@dataclass(frozen=True)
class ContourSpec:
    c: object
    integrand: Integrand
    decay: DecayModel
    part: str = "full"  # or "real"
    symmetric: bool = False
    poles_on_line: tuple = ()
    label: str = ""

    def at(self, c) -> "ContourSpec":
        return replace(self, c=c, decay=_rescale_decay(self.decay, self.c, c))


def _rescale_decay(decay: DecayModel, old_c, new_c) -> DecayModel:
    if decay.kind == "gamma-like":
        return replace(decay, power=decay.power + float(new_c) - float(old_c), constant=None)
    if decay.kind == "gamma-squared-like":
        return replace(decay, power=decay.power + 2 * (float(new_c) - float(old_c)), constant=None)
    return decay


@dataclass(frozen=True)
class QuadratureResult:
    value: object
    truncation_height: mpf
    panels: int
    error_estimate: mpf

    def approx(self) -> Approx:
        return Approx(self.value, mpf(self.error_estimate))


# -- driver --------------------------------------------------------------------------


def _line_function(spec: ContourSpec, ctx: PrecisionContext, c):
    integrand = spec.integrand

    def full(v):
        return integrand(mpc(c, v), ctx)

    if spec.symmetric or spec.part == "real":
        def real_part(v):
            return mpmath.re(full(v))
        return full, real_part
    return full, full


def _estimate_constant(decay: DecayModel, f, v_hi) -> mpf:
    if decay.constant is not None:
        return mpf(decay.constant)
    grid = [decay.v0 + (v_hi - decay.v0) * k / 6 for k in range(7)]
    ratios = []
    for v in grid:
        for sign in (1, -1):
            val = abs(f(sign * mpf(v)))
            env = decay.envelope(v)
            ratios.append(val / env)
    return 100 * max(max(ratios), mpf(10) ** -30)


def _truncation_height(decay: DecayModel, constant, tol) -> mpf:
    v = max(mpf(decay.v0), mpf(decay.power / decay.rate) + 1)
    step = mpf(1)
    while decay.tail(v, constant) > tol:
        v += step
        if v > 10_000:
            raise DecayViolation("decay too slow for a desk-scale truncation height")
    return v


def _breakpoints(lo, hi, poles: Sequence) -> list[mpf]:
    """Panel edges growing geometrically away from zero and from on-line poles."""
    anchors = sorted({mpf(p) for p in poles if lo < p < hi} | ({mpf(0)} if lo < 0 < hi else set()))
    edges = {mpf(lo), mpf(hi)} | set(anchors)
    for anchor in anchors or [mpf(lo)]:
        for direction in (1, -1):
            d = mpf(1) / 2
            while True:
                x = anchor + direction * d
                if not (lo < x < hi):
                    break
                edges.add(x)
                d *= mpf(1.5) if d >= 2 else 2
    # Also grow away from the left end when it is not an anchor.
    if not anchors:
        d = mpf(1)
        while lo + d < hi:
            edges.add(lo + d)
            d *= 1.5
    edges = sorted(edges)
    refined = [edges[0]]
    for x in edges[1:]:
        if x - refined[-1] > 8:
            pieces = int(mpmath.ceil((x - refined[-1]) / 8))
            width = (x - refined[-1]) / pieces
            refined += [refined[-1] + width * k for k in range(1, pieces)]
        refined.append(x)
    return refined


def _adaptive(g, a, b, n, tol, depth, counter):
    """Accept the order-m rule on [a, b] when it agrees with the order-n rule."""
    m = n + n // 4 + 1
    low = _gl_panel(g, a, b, n)
    high = _gl_panel(g, a, b, m)
    diff = abs(high - low)
    counter[0] += 1
    if diff <= tol:
        return high, diff
    if depth >= 12:
        raise PoleOnContour(f"panel [{mpmath.nstr(a, 8)}, {mpmath.nstr(b, 8)}] does not converge;"
                            " unflagged singularity on the line?")
    mid = (a + b) / 2
    lv, le = _adaptive(g, a, mid, n, tol / 2, depth + 1, counter)
    rv, re_ = _adaptive(g, mid, b, n, tol / 2, depth + 1, counter)
    return lv + rv, le + re_


def integrate_line(g: Callable, decay: DecayModel, ctx: PrecisionContext, lower=None,
                   poles: Sequence = (), extra_digits: int = 0,
                   probe: Callable | None = None) -> QuadratureResult:
    """∫ g(v) dv over [lower, ∞), or over the whole line when ``lower`` is None.

    ``decay`` certifies |g(v)| for large |v| and fixes the truncation height;
    ``probe`` (default ``g``) is the function sampled to estimate its constant.
    """
    work = ctx.with_extra(3 + extra_digits)
    probe = probe or g
    with work.activate():
        tol = mpf(10) ** (-(ctx.target_digits + 4))
        probe_hi = max(decay.v0 + 6, 12)
        constant = _estimate_constant(decay, probe, probe_hi)
        height = _truncation_height(decay, constant, tol / 10)
        far = abs(probe(height)) + (abs(probe(-height)) if lower is None else 0)
        if far > 1e6 * constant * decay.envelope(height):
            raise DecayViolation(f"|F| at height {mpmath.nstr(height, 5)} exceeds the decay certificate")
        lo = -height if lower is None else mpf(lower)
        edges = _breakpoints(lo, height, [mpf(p) for p in poles])
        n = gl_order(work.working_digits)
        panel_tol = tol / (4 * len(edges))
        total = mpf(0)
        err = mpf(0)
        counter = [0]
        for a, b in zip(edges, edges[1:]):
            val, e = _adaptive(g, a, b, n, panel_tol, 0, counter)
            total += val
            err += e
        err += (1 if lower is not None else 2) * decay.tail(height, constant)
    with ctx.activate():
        return QuadratureResult(+total, height, counter[0], +err)


def integrate_vertical(spec: ContourSpec, ctx: PrecisionContext, extra_digits: int = 0) -> QuadratureResult:
    """(1/2π) ∫_{−∞}^{∞} F(c+iv) dv, or its real part when ``spec.part == "real"``."""
    work = ctx.with_extra(3 + extra_digits)
    with work.activate():
        c = mpmath.mpmathify(spec.c)
        full, g = _line_function(spec, work, c)
    folded = spec.symmetric
    raw = integrate_line(g, spec.decay, ctx, lower=0 if folded else None,
                         poles=spec.poles_on_line, extra_digits=extra_digits, probe=full)
    with ctx.activate():
        scale = 1 / mp.pi if folded else 1 / (2 * mp.pi)
        return QuadratureResult(raw.value * scale, raw.truncation_height, raw.panels,
                                raw.error_estimate * scale)


# -- contour shifts and half residues ------------------------------------------------


@dataclass(frozen=True)
class ShiftReport:
    original: QuadratureResult
    shifted: QuadratureResult
    residue_sum: object
    mismatch: mpf
    consistent: bool


def shift_contour(spec: ContourSpec, residues: Sequence[tuple[object, object]], new_c,
                  ctx: PrecisionContext, new_decay: DecayModel | None = None) -> ShiftReport:
    """Check I(c) = I(new_c) ± Σ residues for poles strictly between the two lines.

    ``residues`` holds (location, residue) pairs.  Moving left adds the
    residues (I(c) = I(new_c) + Σ Res); moving right subtracts them.
    """
    original = integrate_vertical(spec, ctx)
    moved = spec.at(new_c) if new_decay is None else replace(spec, c=new_c, decay=new_decay)
    if mpmath.mpmathify(new_c) == mpmath.mpmathify(spec.c):
        shifted = original
    else:
        shifted = integrate_vertical(moved, ctx)
    with ctx.activate():
        lo, hi = sorted((mpmath.mpmathify(new_c), mpmath.mpmathify(spec.c)))
        res_sum = mpf(0)
        for loc, res in residues:
            loc = mpmath.mpmathify(loc)
            if not (lo < mpmath.re(loc) < hi):
                raise ResidueMismatch(f"residue at {loc} does not lie between the contours")
            res_sum += res
        sign = 1 if mpmath.mpmathify(new_c) < mpmath.mpmathify(spec.c) else -1
        if spec.part == "real" or spec.symmetric:
            res_sum = mpmath.re(res_sum)
        mismatch = abs(original.value - shifted.value - sign * res_sum)
        tol = mpf(10) ** (-ctx.target_digits) * max(1, abs(original.value))
        ok = mismatch <= tol + original.error_estimate + shifted.error_estimate
    report = ShiftReport(original, shifted, sign * res_sum, mismatch, ok)
    if not ok:
        raise ResidueMismatch(f"contour shift mismatch {mpmath.nstr(mismatch, 5)}")
    return report


@dataclass(frozen=True)
class HalfResidueResult:
    quadrature: QuadratureResult
    half_residue: object


def half_residue_integrate(spec: ContourSpec, on_line_pole, half_residue, ctx: PrecisionContext) -> HalfResidueResult:
    """Integrate Re F through a simple pole at ``on_line_pole`` (a point s with
    Re s = c) and report the half residue.

    The caller's identity accounts for the half residue on its other side.
    """
    if spec.part != "real":
        raise NonIntegrableSingularity("half-residue integration requires the real part only")
    probe = ctx.with_extra(15)
    with probe.activate():
        c = mpmath.mpmathify(spec.c)
        pole = mpmath.mpmathify(on_line_pole)
        if mpmath.re(pole) != c:
            raise ValueError(f"pole {pole} does not lie on the line Re s = {c}")
        v_pole = mpmath.im(pole)
        samples = []
        for k in (3, 6, 9):
            d = mpf(10) ** -k
            val = mpmath.re(spec.integrand(mpc(c, v_pole + d), probe))
            samples.append(abs(val))
        if samples[2] > 100 * samples[0] + 1:
            raise NonIntegrableSingularity("real part diverges at the on-line pole")
    poles = tuple(spec.poles_on_line) + (v_pole,)
    quad = integrate_vertical(replace(spec, poles_on_line=poles), ctx, extra_digits=10)
    return HalfResidueResult(quad, half_residue)


# -- real-axis integrals ---------------------------------------------------------------


def integrate_real(f: Callable, a, b, ctx: PrecisionContext, points: Sequence = ()) -> QuadratureResult:
    """∫_a^b f(x) dx by tanh-sinh quadrature (mpmath), splitting at ``points``."""
    work = ctx.with_extra(10)
    with work.activate():
        nodes = [mpmath.mpmathify(a)] + [mpmath.mpmathify(p) for p in points] + [mpmath.mpmathify(b)]
        value, err = mpmath.quad(f, nodes, error=True, maxdegree=10)
        err = mpf(err)
    with ctx.activate():
        return QuadratureResult(+value, mpmath.mpmathify(b), len(nodes) - 1, +err)
