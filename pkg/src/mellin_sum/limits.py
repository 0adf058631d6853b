"""Sequence limits approached numerically, with per-n precision escalation.

A :class:`LimitSequenceSpec` couples a term n ↦ value with its claimed limit.
Terms that cancel Γ(n+1)-sized quantities are evaluated at
``target + ceil(log10 Γ(n+1)) + 15`` working digits and certified by a second
run at 20 more digits.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import mpmath
from mpmath import mp, mpf

from . import series, specfun
from .errors import DomainError, UnstableEvaluation
from .mpnum import PrecisionContext, digits_agreed, to_decimal_string

CSV_HEADER = ("n", "value", "limit", "residual", "digits")
REFINE_EXTRA = 20


@dataclass(frozen=True)
class LimitSequenceSpec:
    """A sequence term(n) claimed to tend to ``limit``.

    ``term(n, ctx)`` and ``limit(ctx)`` evaluate at ``ctx``'s working precision;
    ``cancellation(n)`` is the number of decimal digits lost to cancellation in
    term(n), added on top of the target.
    """

    id: str
    term: Callable[[int, PrecisionContext], object]
    limit: Callable[[PrecisionContext], object]
    params: dict = field(default_factory=dict)
    min_n: int = 1
    cancellation: Callable[[int], int] = lambda n: 0
    description: str = ""

    def digits_for(self, n: int, target: int) -> int:
        return target + self.cancellation(n) + 15


@dataclass(frozen=True)
class SequenceRow:
    n: int
    value: mpf
    limit: mpf
    residual: mpf
    digits: int


@dataclass(frozen=True)
class TrendReport:
    id: str
    params: dict
    rows: tuple
    passed: bool
    decreasing_all: bool

    @property
    def residuals(self) -> list:
        return [r.residual for r in self.rows]


def _log10_factorial(n: int) -> int:
    return int(math.ceil(math.lgamma(n + 1) / math.log(10))) if n > 1 else 0


def _row_ctx(spec: LimitSequenceSpec, n: int, ctx: PrecisionContext) -> PrecisionContext:
    digits = max(spec.digits_for(n, ctx.target_digits), ctx.working_digits)
    return ctx.with_working(digits)


def _certified_term(spec: LimitSequenceSpec, n: int, ctx: PrecisionContext):
    work = _row_ctx(spec, n, ctx)
    base = spec.term(n, work)
    fine_ctx = work.with_extra(REFINE_EXTRA)
    fine = spec.term(n, fine_ctx)
    with fine_ctx.activate():
        agreed = digits_agreed(mpmath.mpmathify(base), mpmath.mpmathify(fine), cap=fine_ctx.working_digits)
    if agreed < ctx.target_digits:
        raise UnstableEvaluation(f"{spec.id} at n={n}: runs agree to {agreed} digits", agreed_digits=agreed)
    return fine, work.working_digits


def sequence_values(spec: LimitSequenceSpec, n_range: Iterable[int], ctx: PrecisionContext) -> list:
    """[(n, value, working_digits_used)] for each n, certified by refinement."""
    out = []
    for n in n_range:
        if n < spec.min_n:
            raise DomainError(f"{spec.id} is undefined at n={n} (starts at {spec.min_n})")
        value, digits = _certified_term(spec, n, ctx)
        out.append((n, value, digits))
    return out


def _rows(spec, n_range, ctx) -> list[SequenceRow]:
    values = sequence_values(spec, n_range, ctx)
    rows = []
    for n, value, digits in values:
        with ctx.with_working(digits).activate():
            lim = spec.limit(ctx.with_working(digits))
            rows.append(SequenceRow(n, +value, +lim, abs(value - lim), digits))
    return rows


def strictly_decreasing(xs: Sequence) -> bool:
    return all(b < a for a, b in zip(xs, xs[1:]))


def limit_report(spec: LimitSequenceSpec, n_range: Iterable[int], ctx: PrecisionContext) -> TrendReport:
    """Residuals |term(n) − limit|; passes when they strictly decrease over the upper half of the range."""
    rows = _rows(spec, list(n_range), ctx)
    residuals = [r.residual for r in rows]
    top = residuals[len(residuals) // 2:] if len(residuals) > 1 else residuals
    return TrendReport(spec.id, dict(spec.params), tuple(rows),
                       bool(rows) and strictly_decreasing(top) and len(top) >= 1,
                       strictly_decreasing(residuals))


def figure_data(specs: Sequence[LimitSequenceSpec] | LimitSequenceSpec, n_range: Iterable[int],
                ctx: PrecisionContext) -> str:
    """CSV text with header ``n,value,limit,residual,digits``; one block of rows per spec."""
    if isinstance(specs, LimitSequenceSpec):
        specs = [specs]
    n_values = list(n_range)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    d = ctx.target_digits
    for spec in specs:
        for row in _rows(spec, n_values, ctx):
            writer.writerow([row.n, to_decimal_string(row.value, d), to_decimal_string(row.limit, d),
                             to_decimal_string(row.residual, 5), row.digits])
    return buf.getvalue()


# -- the sequences ----------------------------------------------------------------------


def fig1() -> LimitSequenceSpec:
    """Σ_j 1/(e^{j^{1/n}} − 1) − ζ(n)Γ(n+1) → 1/(2 − 2e)."""

    def term(n, ctx):
        with ctx.activate():
            return (series.bose_sum(mpf(1) / n, ctx).value
                    - specfun.zeta(n, ctx).real * specfun.gamma(n + 1, ctx).real)

    def limit(ctx):
        with ctx.activate():
            return 1 / (2 - 2 * mp.e)

    return LimitSequenceSpec("fig1", term, limit, {}, min_n=2, cancellation=_log10_factorial,
                             description="Bose sum over j^(1/n) minus zeta(n) n!")


def fig2(b) -> LimitSequenceSpec:
    """Σ_j e^{−b j^{1/n}} − b^{−n}Γ(1+n) → −1/(2e^b)."""
    b_text = str(b)

    def term(n, ctx):
        with ctx.activate():
            bb = mpmath.mpmathify(b)
            return series.omega(bb, mpf(1) / n, ctx).value - bb ** (-n) * specfun.gamma(n + 1, ctx).real

    def limit(ctx):
        with ctx.activate():
            return -1 / (2 * mpmath.exp(mpmath.mpmathify(b)))

    def cancellation(n):
        return max(0, _log10_factorial(n) - int(n * math.log10(float(b))))

    return LimitSequenceSpec("fig2", term, limit, {"b": b_text}, min_n=1, cancellation=cancellation,
                             description="omega(b, 1/n) minus n!/b^n")


def sbid(b) -> LimitSequenceSpec:
    """Σ_{j=0}^{n} ζ(−j/n)(−b)^j/j! → −1/(2e^b)."""

    def term(n, ctx):
        with ctx.activate():
            bb = mpmath.mpmathify(b)
            total = mpf(0)
            weight = mpf(1)
            for j in range(n + 1):
                total += specfun.zeta(mpf(-j) / n, ctx).real * weight
                weight *= -bb / (j + 1)
            return total

    def limit(ctx):
        with ctx.activate():
            return -1 / (2 * mpmath.exp(mpmath.mpmathify(b)))

    def cancellation(n):
        return int(float(b) / math.log(10)) + 1

    return LimitSequenceSpec("SbId", term, limit, {"b": str(b)}, min_n=1, cancellation=cancellation,
                             description="truncated zeta(-j/n) exponential series")


def as2(b) -> LimitSequenceSpec:
    """ω(b, 1/n) / (√(2πn)(n/(eb))^n) → 1."""

    def term(n, ctx):
        with ctx.activate():
            bb = mpmath.mpmathify(b)
            envelope = mpmath.sqrt(2 * mp.pi * n) * (n / (mp.e * bb)) ** n
            return series.omega(bb, mpf(1) / n, ctx).value / envelope

    return LimitSequenceSpec("As2", term, lambda ctx: mpf(1), {"b": str(b)}, min_n=1,
                             description="omega(b, 1/n) over its Stirling envelope")


def t2b_asy() -> LimitSequenceSpec:
    """Σ_j 1/(e^{j^{1/n}} − 1) / (√(2π) n^{n+1/2} e^{−n}) → 1."""

    def term(n, ctx):
        with ctx.activate():
            envelope = mpmath.sqrt(2 * mp.pi) * mpf(n) ** (n + mpf(1) / 2) * mpmath.exp(-n)
            return series.bose_sum(mpf(1) / n, ctx).value / envelope

    return LimitSequenceSpec("T2bAsy", term, lambda ctx: mpf(1), {}, min_n=1,
                             description="Bose sum over its Stirling envelope")


def ge_asy() -> LimitSequenceSpec:
    """4π(ζ(n)Γ(n+1) + ζ(1/n) − Σ_j 1/(e^{j^{1/n}} − 1)) → 2π(1/(e−1) − 1)."""
    inner = fig1()

    def term(n, ctx):
        with ctx.activate():
            return 4 * mp.pi * (specfun.zeta(mpf(1) / n, ctx).real - inner.term(n, ctx))

    def limit(ctx):
        with ctx.activate():
            return 2 * mp.pi * (1 / (mp.e - 1) - 1)

    return LimitSequenceSpec("GeAsy", term, limit, {}, min_n=2, cancellation=_log10_factorial,
                             description="right-hand side of the s = -1/n family")


def fs2nc0_rhs(n: int, ctx: PrecisionContext, scale=1):
    """2π Σ 1/(e^{a j^{2n}}−1) − (π a^{−1/2n}/n) ζ(1/2n)Γ(1/2n) − (2/a) π ζ(2n) − π/4, a ∈ {1, 2}."""
    with ctx.activate():
        a = mpmath.mpmathify(scale)
        c = mpf(1) / (2 * n)
        zg = specfun.zeta(c, ctx).real * specfun.gamma(c, ctx).real
        return (2 * mp.pi * series.bose_sum(2 * n, ctx, a).value
                - mp.pi * a ** (-c) / n * zg
                - 2 / a * mp.pi * specfun.zeta(2 * n, ctx).real - mp.pi / 4)


def gba1_rhs(n: int, ctx: PrecisionContext):
    """Right-hand side of the (2^{−c−iv} − 1)-weighted half-residue identity at c = 1/(2n)."""
    with ctx.activate():
        c = mpf(1) / (2 * n)
        s1 = series.bose_sum(2 * n, ctx).value
        s2 = series.bose_sum(2 * n, ctx, 2).value
        return (mp.pi * specfun.zeta(2 * n, ctx).real - 2 * mp.pi * (s1 - s2)
                + mp.pi * (1 - mpf(2) ** (-c)) * specfun.zeta(c, ctx).real * specfun.gamma(1 + c, ctx).real)


def fs2nc0_lim() -> LimitSequenceSpec:
    return LimitSequenceSpec(
        "Fs2nc0Lim", lambda n, ctx: fs2nc0_rhs(n, ctx),
        lambda ctx: _with(ctx, lambda: mp.pi * (13 - 5 * mp.e) / (4 * mp.e - 4)),
        {}, description="c = 0 half-residue family as n grows")


def fb1c0_lim() -> LimitSequenceSpec:
    return LimitSequenceSpec(
        "Fb1c0Lim", lambda n, ctx: fs2nc0_rhs(n, ctx, 2),
        lambda ctx: _with(ctx, lambda: mp.pi * (9 - mp.e ** 2) / (4 * (mp.e ** 2 - 1))),
        {}, description="2^(-iv)-weighted c = 0 family as n grows")


def gb3() -> LimitSequenceSpec:
    return LimitSequenceSpec(
        "Gb3", gba1_rhs,
        lambda ctx: _with(ctx, lambda: mp.pi * (mp.e ** 2 - 2 * mp.e - 1) / (mp.e ** 2 - 1)),
        {}, description="c = 1/(2n) weighted family as n grows")


def _with(ctx, fn):
    with ctx.activate():
        return fn()


SEQUENCES = {"fig1": fig1, "fig2": fig2}
