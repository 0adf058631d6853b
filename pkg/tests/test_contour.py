from dataclasses import replace

import mpmath
import pytest
from mpmath import mp, mpc, mpf

from mellin_sum import contour, series, specfun
from mellin_sum.contour import ContourSpec, DecayModel
from mellin_sum.errors import DecayViolation, NonIntegrableSingularity, PoleOnContour, ResidueMismatch
from mellin_sum.mpnum import PrecisionContext

CTX = PrecisionContext(25)


def within(result, expected, ctx=CTX):
    with ctx.activate():
        scale = max(1, abs(expected))
        assert result.error_estimate < mpf(10) ** -(ctx.target_digits + 2) * scale
        assert abs(result.value - expected) <= mpf(10) ** -ctx.target_digits * scale


def zeta_gamma(b=1):
    def f(s, ctx):
        return specfun.zeta(s, ctx) * specfun.gamma(s, ctx) * mpmath.power(b, -s)
    return f


def test_bose_integral_at_critical_line():
    # (1/2πi)∫ ζ(s)Γ(s) ds on Re s = 1/2 equals 1/(e−1) − 1 after crossing the pole at s = 1
    spec = ContourSpec(mpf(1) / 2, zeta_gamma(), DecayModel.gamma_like(0.5), symmetric=True)
    res = contour.integrate_vertical(spec, CTX)
    with CTX.activate():
        expected = 1 / mpmath.expm1(1) - 1
        assert mpmath.nstr(2 * mp.pi * expected, 7) == "-2.626518"
    within(res, expected)


def test_half_residue_through_zeta_pole():
    # Re ζ(1+iv)Γ(1+iv) has only an imaginary singular part at v = 0
    spec = ContourSpec(1, zeta_gamma(), DecayModel.gamma_like(1), part="real", symmetric=True)
    out = contour.half_residue_integrate(spec, 1, mpf(1) / 2, CTX)
    with CTX.activate():
        expected = 1 / mpmath.expm1(1) - out.half_residue
        assert mpmath.nstr(2 * mp.pi * expected, 6) == "0.515075"
    within(out.quadrature, expected)


@pytest.mark.parametrize("b", [2, 3])
def test_conjugate_symmetry_reduction(b):
    full = ContourSpec(2, zeta_gamma(b), DecayModel.gamma_like(2))
    folded = replace(full, symmetric=True)
    a = contour.integrate_vertical(full, CTX)
    f = contour.integrate_vertical(folded, CTX)
    with CTX.activate():
        assert abs(mpmath.im(a.value)) < CTX.tol
        assert abs(a.value - f.value) <= a.error_estimate + f.error_estimate + CTX.tol
        expected = 1 / mpmath.expm1(b)
    within(f, expected)


@pytest.mark.parametrize("c", ["2.5", "3", "4"])
def test_abscissa_independence(c):
    # Σ e^{−2√j} = (1/2πi)∫ Γ(t) 2^{−t} ζ(t/2) dt for Re t > 2
    def f(t, ctx):
        return specfun.gamma(t, ctx) * mpmath.power(2, -t) * specfun.zeta(t / 2, ctx)

    spec = ContourSpec(mpf(c), f, DecayModel.gamma_like(float(c), zeta_power=0), symmetric=True)
    res = contour.integrate_vertical(spec, CTX)
    with CTX.activate():
        expected = series.omega(2, mpf(1) / 2, CTX).value
    within(res, expected)


def test_truncation_honesty():
    spec = ContourSpec(2, zeta_gamma(2), DecayModel.custom(mp.pi / 2, 2, constant=10), symmetric=True)
    low = contour.integrate_vertical(spec, CTX)
    high = contour.integrate_vertical(replace(spec, decay=DecayModel.custom(mp.pi / 2, 2, constant=10 ** 12)), CTX)
    assert high.truncation_height > low.truncation_height
    with CTX.activate():
        assert abs(high.value - low.value) <= low.error_estimate + high.error_estimate


def test_deterministic_results():
    spec = ContourSpec(2, zeta_gamma(2), DecayModel.gamma_like(2), symmetric=True)
    assert contour.integrate_vertical(spec, CTX) == contour.integrate_vertical(spec, CTX)


# -- contour shifts -----------------------------------------------------------------------------


def test_zero_shift_is_identity():
    spec = ContourSpec(2, zeta_gamma(2), DecayModel.gamma_like(2), symmetric=True)
    report = contour.shift_contour(spec, [], 2, CTX)
    assert report.original == report.shifted and report.mismatch == 0 and report.consistent


def test_shift_across_zeta_pole():
    spec = ContourSpec(2, zeta_gamma(2), DecayModel.gamma_like(2), symmetric=True)
    with CTX.activate():
        report = contour.shift_contour(spec, [(1, mpf(1) / 2)], mpf(1) / 2, CTX)
    assert report.consistent


def _doubling_exponential_residues(b, ctx):
    """Residues of Γ(s)/(1 − b^{−s}) on Re s = 0: a double pole at 0 and simple poles at 2πik/ln b."""
    with ctx.activate():
        lnb = mpmath.log(b)
        out = [(0, mpf(1) / 2 - mpmath.euler / lnb)]
    k = 1
    while True:
        with ctx.activate():
            y = 2 * mp.pi * k / lnb
            g = specfun.gamma(mpc(0, y), ctx)
        with ctx.activate():
            out += [(mpc(0, y), g / lnb), (mpc(0, -y), mpmath.conj(g) / lnb)]
            if abs(g) < ctx.eps:
                return out
        k += 1


def test_shift_reproduces_doubling_exponential_sum():
    b = 3

    def f(s, ctx):
        return specfun.gamma(s, ctx) / (1 - mpmath.power(b, -s))

    spec = ContourSpec(mpf(1) / 2, f, DecayModel.gamma_like(0.5, zeta_power=0), symmetric=True)
    with CTX.activate():
        left = mpf(-1) / 2
    residues = _doubling_exponential_residues(b, CTX)
    report = contour.shift_contour(spec, residues, left, CTX)
    with CTX.activate():
        direct = mpmath.fsum(mpmath.exp(-mpf(b) ** j) for j in range(0, 8))
    within(report.original, direct)


def test_shift_with_missing_residue_is_rejected():
    spec = ContourSpec(2, zeta_gamma(2), DecayModel.gamma_like(2), symmetric=True)
    with pytest.raises(ResidueMismatch):
        contour.shift_contour(spec, [], mpf(1) / 2, CTX)


def test_shift_rejects_residue_outside_strip():
    spec = ContourSpec(2, zeta_gamma(2), DecayModel.gamma_like(2), symmetric=True)
    with pytest.raises(ResidueMismatch):
        contour.shift_contour(spec, [(3, 1)], mpf(1) / 2, CTX)


# -- failure modes --------------------------------------------------------------------------------


def test_half_residue_needs_real_part():
    spec = ContourSpec(1, zeta_gamma(), DecayModel.gamma_like(1))
    with pytest.raises(NonIntegrableSingularity):
        contour.half_residue_integrate(spec, 1, 0, CTX)


def test_double_pole_on_line_is_not_integrable():
    spec = ContourSpec(1, lambda s, ctx: specfun.gamma(s, ctx) / (s - 1) ** 2, DecayModel.gamma_like(1), part="real")
    with pytest.raises(NonIntegrableSingularity):
        contour.half_residue_integrate(spec, 1, 0, CTX)


def test_unflagged_pole_on_line():
    spec = ContourSpec(1, zeta_gamma(), DecayModel.gamma_like(1))
    with pytest.raises(PoleOnContour):
        contour.integrate_vertical(spec, PrecisionContext(15))


def test_polynomial_decay_violates_gamma_certificate():
    spec = ContourSpec(2, lambda s, ctx: 1 / (1 + s * s), DecayModel.gamma_like(2))
    with pytest.raises(DecayViolation):
        contour.integrate_vertical(spec, CTX)


def test_too_slow_decay_rate():
    spec = ContourSpec(2, zeta_gamma(2), DecayModel.custom(1e-3, 0, constant=1))
    with pytest.raises(DecayViolation):
        contour.integrate_vertical(spec, CTX)


# -- real-axis quadrature and nodes ------------------------------------------------------------------


def test_integrate_real():
    res = contour.integrate_real(lambda x: mpmath.exp(-x), 0, mpmath.inf, CTX)
    within(res, 1)


def test_gauss_legendre_nodes():
    with CTX.activate():
        xs, ws = contour.gauss_legendre(20)
        assert abs(mpmath.fsum(ws) - 2) < CTX.tol
        assert abs(mpmath.fsum(w * x ** 38 for x, w in zip(xs, ws)) - mpf(2) / 39) < CTX.tol


def test_half_residue_pole_must_lie_on_line():
    spec = ContourSpec(1, zeta_gamma(), DecayModel.gamma_like(1), part="real", symmetric=True)
    with pytest.raises(ValueError):
        contour.half_residue_integrate(spec, 2, 0, CTX)
