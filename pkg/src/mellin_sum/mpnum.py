"""Precision contract and elementary functions on top of mpmath.

Every evaluation in the package runs under a :class:`PrecisionContext`, which
fixes the working precision in decimal digits.  Complex values are plain
``mpmath.mpc`` numbers; :func:`as_complex` is the gatekeeper that rejects
NaN and infinities.
"""

from __future__ import annotations

import math
import os
import re
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable

import mpmath
from mpmath import mp, mpc, mpf

from .errors import DomainError, PrecisionCeiling, PrecisionOverflow, UnstableEvaluation

ComplexValue = mpc

DEFAULT_GUARD = 10
DEFAULT_MAX_DIGITS = 10_000
ENV_MAX_DIGITS = "MELLIN_SUM_MAX_DIGITS"


def hard_ceiling() -> int:
    """Digit ceiling from the environment, or the default."""
    raw = os.environ.get(ENV_MAX_DIGITS)
    if raw is None:
        return DEFAULT_MAX_DIGITS
    try:
        value = int(raw)
    except ValueError:
        raise PrecisionOverflow(f"{ENV_MAX_DIGITS}={raw!r} is not an integer") from None
    return max(value, 1)


@dataclass(frozen=True)
class PrecisionContext:
    """Working/target/guard digits governing one evaluation.

    ``working_digits`` defaults to ``target_digits + guard_digits``.
    """

    target_digits: int
    guard_digits: int = DEFAULT_GUARD
    working_digits: int | None = None
    max_digits: int = DEFAULT_MAX_DIGITS

    def __post_init__(self):
        if self.target_digits < 1 or self.guard_digits < 1:
            raise ValueError("target_digits and guard_digits must be positive")
        if self.working_digits is None:
            object.__setattr__(self, "working_digits", self.target_digits + self.guard_digits)
        if self.working_digits < self.target_digits + self.guard_digits:
            raise ValueError(
                f"working_digits={self.working_digits} < target {self.target_digits}"
                f" + guard {self.guard_digits}"
            )
        ceiling = min(self.max_digits, hard_ceiling())
        if self.working_digits > ceiling:
            raise PrecisionCeiling(
                f"working_digits={self.working_digits} exceeds ceiling {ceiling}"
            )

    @property
    def eps(self) -> mpf:
        """Relative size of one unit in the last working digit."""
        return mpf(10) ** (-self.working_digits)

    @property
    def tol(self) -> mpf:
        """Acceptance tolerance 10^-target."""
        return mpf(10) ** (-self.target_digits)

    def activate(self):
        """Context manager setting mpmath's working precision."""
        return mpmath.workdps(self.working_digits)

    def with_working(self, digits: int) -> "PrecisionContext":
        return replace(self, working_digits=digits)

    def with_extra(self, extra: int) -> "PrecisionContext":
        return replace(self, working_digits=self.working_digits + extra)

    def escalated(self) -> "PrecisionContext":
        """Double the working digits, respecting the ceiling."""
        return self.with_working(2 * self.working_digits)


def context(target_digits: int, guard_digits: int = DEFAULT_GUARD, **kw) -> PrecisionContext:
    return PrecisionContext(target_digits, guard_digits, **kw)


def as_complex(z) -> mpc:
    """Convert to ``mpc`` and reject non-finite components."""
    try:
        w = mpmath.mpmathify(z)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"cannot interpret {z!r} as a number") from exc
    w = mpc(w)
    if mpmath.isnan(w.real) or mpmath.isnan(w.imag):
        raise DomainError("NaN is not a value")
    if mpmath.isinf(w.real) or mpmath.isinf(w.imag):
        raise PrecisionOverflow("infinite component")
    return w


def is_real(z) -> bool:
    return not isinstance(z, mpc) or z.imag == 0


def exact_integer(z) -> int | None:
    """Integer value of ``z`` if it is exactly an integer (no tolerance), else None."""
    if isinstance(z, (int,)):
        return int(z)
    if isinstance(z, Fraction):
        return int(z) if z.denominator == 1 else None
    w = mpmath.mpmathify(z)
    if isinstance(w, mpc):
        if w.imag != 0:
            return None
        w = w.real
    if mpmath.isint(w):
        return int(w)
    return None


_FRACTION = re.compile(r"^\s*([+-]?\d+)\s*/\s*(\d+)\s*$")
_CONSTANTS = {"pi": lambda: +mp.pi, "e": lambda: +mp.e}


def parse_number(text) -> mpf | mpc:
    """Parse a parameter value at the current precision.

    Accepts ints, ``p/q`` fractions, decimal/scientific literals, ``pi``, ``e``,
    ``k*pi``, ``pi/k`` and Python complex literals such as ``0.3+2j``.
    """
    if not isinstance(text, str):
        return mpmath.mpmathify(text)
    s = text.strip().replace(" ", "")
    m = _FRACTION.match(s)
    if m:
        return mpf(int(m.group(1))) / int(m.group(2))
    low = s.lower()
    if low in _CONSTANTS:
        return _CONSTANTS[low]()
    for name, const in _CONSTANTS.items():
        if low.endswith("*" + name):
            return parse_number(low[: -len(name) - 1]) * const()
        if low.startswith(name + "/"):
            return const() / parse_number(low[len(name) + 1:])
    if low.endswith("j"):
        try:
            return mpc(mpmath.mpmathify(low))
        except (ValueError, TypeError):
            raise ValueError(f"cannot parse number {text!r}") from None
    try:
        return mpf(s)
    except ValueError:
        raise ValueError(f"cannot parse number {text!r}") from None


def to_decimal_string(x, digits: int) -> str:
    """Locale-independent decimal string with ``digits`` significant digits."""
    x = mpmath.mpmathify(x)
    if isinstance(x, mpc):
        if x.imag == 0:
            x = x.real
        else:
            re_s = mpmath.nstr(x.real, digits, strip_zeros=False, min_fixed=-5, max_fixed=5)
            im_s = mpmath.nstr(abs(x.imag), digits, strip_zeros=False, min_fixed=-5, max_fixed=5)
            sign = "-" if x.imag < 0 else "+"
            return f"{re_s}{sign}{im_s}j"
    return mpmath.nstr(x, digits, strip_zeros=False, min_fixed=-5, max_fixed=5)


def digits_agreed(a, b, scale=None, cap: int | None = None) -> int:
    """Number of decimal digits to which ``a`` and ``b`` agree, relative to ``scale``."""
    if scale is None:
        scale = max(mpf(1), abs(a), abs(b))
    diff = abs(a - b)
    if diff == 0:
        return cap if cap is not None else mp.dps
    d = int(mpmath.floor(-mpmath.log10(diff / scale)))
    d = max(d, 0)
    return min(d, cap) if cap is not None else d


# -- constants ---------------------------------------------------------------

_EULER_CACHE: dict[int, mpf] = {}
_PI_CACHE: dict[int, mpf] = {}


def euler_gamma() -> mpf:
    """Euler–Mascheroni constant at the current precision (cached per prec)."""
    prec = mp.prec
    try:
        return _EULER_CACHE[prec]
    except KeyError:
        value = _EULER_CACHE[prec] = +mp.euler
        return value


def pi() -> mpf:
    prec = mp.prec
    try:
        return _PI_CACHE[prec]
    except KeyError:
        value = _PI_CACHE[prec] = +mp.pi
        return value


# -- elementary functions ------------------------------------------------------


def _coth(z):
    return mpmath.cosh(z) / _nonzero(mpmath.sinh(z), "coth")


def _csch(z):
    return 1 / _nonzero(mpmath.sinh(z), "csch")


def _sech(z):
    return 1 / _nonzero(mpmath.cosh(z), "sech")


def _cot(z):
    return mpmath.cos(z) / _nonzero(mpmath.sin(z), "cot")


def _log(z):
    if z == 0:
        raise DomainError("log(0)")
    return mpmath.log(z)


def _nonzero(w, name):
    if w == 0:
        raise DomainError(f"{name}: pole hit exactly")
    return w


ELEMENTARY: dict[str, Callable] = {
    "exp": mpmath.exp,
    "log": _log,
    "sqrt": mpmath.sqrt,
    "sin": mpmath.sin,
    "cos": mpmath.cos,
    "tan": mpmath.tan,
    "cot": _cot,
    "sinh": mpmath.sinh,
    "cosh": mpmath.cosh,
    "tanh": mpmath.tanh,
    "coth": _coth,
    "csch": _csch,
    "sech": _sech,
    "arctan": mpmath.atan,
}


def eval_elementary(name: str, z, ctx: PrecisionContext, exponent=None):
    """Evaluate an elementary function by name at ``ctx``'s working precision.

    ``name="power"`` computes ``z**exponent`` on the principal branch.
    """
    with ctx.activate():
        w = as_complex(z)
        if w.imag == 0:
            w = w.real
        if name == "power":
            if exponent is None:
                raise TypeError("power needs an exponent")
            e = mpmath.mpmathify(exponent)
            if w == 0 and mpmath.re(e) <= 0:
                raise DomainError("0 ** non-positive exponent")
            out = mpmath.power(w, e)
        else:
            try:
                fn = ELEMENTARY[name]
            except KeyError:
                raise ValueError(f"unknown elementary function {name!r}") from None
            try:
                out = fn(w)
            except ZeroDivisionError as exc:
                raise DomainError(f"{name}({w}) is a pole") from exc
        _check_finite(out)
        return out


def _check_finite(x):
    x = mpmath.mpmathify(x)
    parts = (x.real, x.imag) if isinstance(x, mpc) else (x,)
    for p in parts:
        if mpmath.isnan(p):
            raise DomainError("NaN produced")
        if mpmath.isinf(p):
            raise PrecisionOverflow("overflow to infinity")


def refine(evaluation: Callable[[PrecisionContext], object], ctx: PrecisionContext, extra: int = 10):
    """Run ``evaluation`` at ctx and at ctx + ``extra`` digits and compare.

    Returns the higher-precision value.  Raises :class:`UnstableEvaluation`
    when the two runs agree to fewer than ``ctx.target_digits`` digits.
    """
    base = evaluation(ctx)
    fine_ctx = ctx.with_extra(extra)
    fine = evaluation(fine_ctx)
    with fine_ctx.activate():
        agreed = digits_agreed(mpmath.mpmathify(base), mpmath.mpmathify(fine),
                               cap=fine_ctx.working_digits)
    if agreed < ctx.target_digits:
        raise UnstableEvaluation(
            f"runs at {ctx.working_digits} and {fine_ctx.working_digits} digits agree"
            f" to only {agreed} digits (target {ctx.target_digits})",
            agreed_digits=agreed,
        )
    return fine


def escalate_until_stable(evaluation, ctx: PrecisionContext, extra: int = 10):
    """``refine`` with working-digit doubling on instability, up to the ceiling."""
    current = ctx
    while True:
        try:
            return refine(evaluation, current, extra), current
        except UnstableEvaluation:
            nxt = current.escalated()
            current = nxt


def log10_abs(x) -> float:
    x = abs(mpmath.mpmathify(x))
    if x == 0:
        return -math.inf
    return float(mpmath.log10(x))
