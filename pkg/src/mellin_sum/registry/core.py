"""Identity records and the verification driver."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

import mpmath
from mpmath import mpf

from ..errors import (EvaluationFailed, InvalidParams, MellinSumError, PrecisionCeiling,
                      UnstableEvaluation)
from ..mpnum import PrecisionContext, digits_agreed, parse_number
from ..results import Approx

GROUPS = ("G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8", "GA", "GB")
EQUALITY = "equality"
TREND = "trend"


@dataclass(frozen=True)
class Param:
    """One named parameter: ``kind`` is "real", "int" or "complex"; ``default`` is its text form."""

    name: str
    kind: str
    default: str
    doc: str = ""

    def parse(self, raw):
        value = parse_number(raw) if isinstance(raw, str) else mpmath.mpmathify(raw)
        if self.kind == "int":
            if isinstance(value, mpmath.mpc) or not mpmath.isint(value):
                raise InvalidParams(f"{self.name} must be an integer, got {raw!r}")
            return int(value)
        if self.kind == "real" and isinstance(value, mpmath.mpc):
            if value.imag != 0:
                raise InvalidParams(f"{self.name} must be real, got {raw!r}")
            value = value.real
        return value


Evaluator = Callable[[dict, PrecisionContext], object]


@dataclass(frozen=True)
class IdentityRecord:
    """A verifiable identity: two evaluators over a validated parameter set.

    ``domain`` returns an error message for parameters outside the identity's
    stated domain and None otherwise.  ``alternates`` are further evaluations
    of the right-hand side by independent routes.  Trend records replace the
    two sides by a sequence spec factory ``trend(params)``; the n values come from
    ``trend_range(params)`` or else the n_lo, n_hi and n_step parameters.
    """

    id: str
    group: str
    title: str
    anchor: str
    params: tuple = ()
    lhs: Evaluator | None = None
    rhs: Evaluator | None = None
    domain: Callable[[dict], str | None] = lambda p: None
    alternates: tuple = ()
    aliases: tuple = ()
    kind: str = EQUALITY
    trend: Callable | None = None
    trend_range: Callable | None = None
    final_bound: float | None = None

    @property
    def default_params(self) -> dict:
        return {p.name: p.default for p in self.params}

    def summary(self) -> dict:
        return {"id": self.id, "group": self.group, "kind": self.kind, "title": self.title,
                "anchor": self.anchor, "aliases": list(self.aliases),
                "alternates": [name for name, _ in self.alternates],
                "params": {p.name: p.default for p in self.params}}

    def resolve(self, overrides: Mapping | None = None) -> tuple[dict, dict]:
        """(text form, parsed form) of the parameters with ``overrides`` applied."""
        overrides = dict(overrides or {})
        known = {p.name for p in self.params}
        unknown = set(overrides) - known
        if unknown:
            raise InvalidParams(f"{self.id} has no parameter(s) {sorted(unknown)}")
        text = {p.name: str(overrides.get(p.name, p.default)) for p in self.params}
        with mpmath.workdps(60):
            parsed = {p.name: p.parse(text[p.name]) for p in self.params}
        return text, parsed


@dataclass(frozen=True)
class VerificationReport:
    id: str
    params: dict
    lhs: object
    rhs: object
    abs_diff: object
    rel_diff: object
    digits_agreed: int
    digits_requested: int
    working_digits: int
    wall_time: float
    status: str
    kind: str = EQUALITY
    alternates: dict = field(default_factory=dict)
    residuals: tuple = ()
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def _to_approx(x) -> Approx:
    return Approx.of(x)


def _evaluate(record: IdentityRecord, side: str, fn: Evaluator, params: dict, ctx: PrecisionContext) -> Approx:
    try:
        with ctx.activate():
            params_w = {k: (+v if isinstance(v, (mpf, mpmath.mpc)) else v) for k, v in params.items()}
            return _to_approx(fn(params_w, ctx))
    except InvalidParams:
        raise
    except (MellinSumError, ArithmeticError, ValueError) as exc:
        raise EvaluationFailed(f"{record.id} {side}: {exc}", side=side, cause=exc) from exc


def _compare(lhs: Approx, rhs: Approx, ctx: PrecisionContext):
    with ctx.activate():
        scale = max(mpf(1), abs(lhs.value), abs(rhs.value))
        threshold = ctx.tol * scale
        diff = abs(lhs.value - rhs.value)
        ok = diff <= threshold and lhs.err <= threshold and rhs.err <= threshold
        agreed = digits_agreed(lhs.value, rhs.value, scale=scale, cap=ctx.working_digits)
        return ok, diff, diff / scale, agreed


def _verify_equality(record, text, params, ctx):
    lhs = _evaluate(record, "lhs", record.lhs, params, ctx)
    rhs = _evaluate(record, "rhs", record.rhs, params, ctx)
    ok, diff, rel, agreed = _compare(lhs, rhs, ctx)
    alternates = {}
    for name, fn in record.alternates:
        alt = _evaluate(record, name, fn, params, ctx)
        alt_ok, _, _, alt_digits = _compare(lhs, alt, ctx)
        alternates[name] = {"value": alt.value, "digits_agreed": alt_digits, "pass": alt_ok}
        ok = ok and alt_ok
    return lhs.value, rhs.value, diff, rel, agreed, ok, alternates


def trend_range(params: Mapping) -> list[int]:
    """n_lo, n_lo + n_step, ..., n_hi from the record parameters."""
    return list(range(params["n_lo"], params["n_hi"] + 1, params.get("n_step", 1)))


def _verify_trend(record, text, params, ctx):
    from .. import limits

    spec = record.trend(params)
    n_range = list(record.trend_range(params)) if record.trend_range else trend_range(params)
    report = limits.limit_report(spec, n_range, ctx)
    last = report.rows[-1]
    ok = report.passed
    if record.final_bound is not None:
        ok = ok and last.residual < record.final_bound
    with ctx.activate():
        agreed = digits_agreed(last.value, last.limit, cap=ctx.working_digits)
        return (last.value, last.limit, last.residual, last.residual / max(1, abs(last.limit)),
                agreed, ok, {}, tuple(r.residual for r in report.rows))


def verify(id: str, params: Mapping | None = None, ctx: PrecisionContext | None = None) -> VerificationReport:
    """Evaluate both sides of one identity and compare them at ``ctx``.

    A failed comparison is retried once at doubled working precision before it
    is reported as a failure.
    """
    from . import get

    record = get(id)
    ctx = ctx or PrecisionContext(25)
    text, parsed = record.resolve(params)
    problem = record.domain(parsed)
    if problem:
        raise InvalidParams(f"{record.id}: {problem}")
    start = time.perf_counter()
    attempt = ctx
    for tries in range(2):
        try:
            if record.kind == TREND:
                lhs, rhs, diff, rel, agreed, ok, alts, residuals = _verify_trend(record, text, parsed, attempt)
            else:
                lhs, rhs, diff, rel, agreed, ok, alts = _verify_equality(record, text, parsed, attempt)
                residuals = ()
            if ok or tries == 1:
                break
        except (UnstableEvaluation, EvaluationFailed) as exc:
            unstable = isinstance(exc, UnstableEvaluation) or isinstance(getattr(exc, "cause", None),
                                                                        UnstableEvaluation)
            if tries == 1 or not unstable:
                raise
        try:
            attempt = attempt.escalated()
        except PrecisionCeiling:
            break
    wall = time.perf_counter() - start
    return VerificationReport(record.id, text, lhs, rhs, diff, rel, agreed, ctx.target_digits,
                              attempt.working_digits, wall, "pass" if ok else "fail", record.kind,
                              alts, residuals)


def _failure_report(record: IdentityRecord, params: Mapping | None, ctx: PrecisionContext,
                    exc: Exception) -> VerificationReport:
    try:
        text = record.resolve(params)[0]
    except InvalidParams:
        text = {k: str(v) for k, v in (params or {}).items()}
    return VerificationReport(record.id, text, None, None, None, None, 0,
                              ctx.target_digits, ctx.working_digits, 0.0, "error", record.kind,
                              error=f"{type(exc).__name__}: {exc}")


def _verify_safe(args):
    id_, params, ctx = args
    from . import get
    try:
        return verify(id_, params, ctx)
    except MellinSumError as exc:
        return _failure_report(get(id_), params, ctx, exc)


def run_tasks(tasks: Sequence[tuple[str, Mapping | None]], ctx: PrecisionContext, jobs: int = 1) -> list:
    """Verify each (id, params) task, in task order, catching per-record errors into the reports."""
    work = [(id_, params, ctx) for id_, params in tasks]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_verify_safe, work))
    return [_verify_safe(t) for t in work]


def verify_all(group: str | Sequence[str] | None = None, ctx: PrecisionContext | None = None,
               jobs: int = 1, ids: Sequence[str] | None = None, params: Mapping | None = None) -> list:
    """Verify every record in ``group`` (or ``ids``) at default parameters, sorted by id."""
    from . import list_identities

    ctx = ctx or PrecisionContext(25)
    records = list_identities(group) if ids is None else [r for r in list_identities() if r.id in set(ids)]
    reports = run_tasks([(r.id, params) for r in records], ctx, jobs)
    return sorted(reports, key=lambda r: r.id)
