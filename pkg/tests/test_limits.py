import csv
import io

import mpmath
import pytest
from mpmath import mp, mpf

from mellin_sum import limits
from mellin_sum.errors import DomainError, PrecisionCeiling
from mellin_sum.mpnum import PrecisionContext

CTX = PrecisionContext(25)


def test_fig2_at_n_one_is_exponential_closed_form():
    [(n, value, digits)] = limits.sequence_values(limits.fig2(1), [1], CTX)
    with mpmath.workdps(50):
        expected = 1 / mpmath.expm1(1) - 1
        assert abs(value - expected) < mpf(10) ** -25
    assert mpmath.nstr(value, 10).startswith("-0.418023293")
    assert n == 1 and digits >= CTX.working_digits


def test_fig1_excludes_zeta_pole():
    with pytest.raises(DomainError):
        limits.sequence_values(limits.fig1(), [1], CTX)


def test_fig2_against_brute_force():
    # Σ_{j≤J} e^{−2 j^{1/3}} plus the integral tail ∫_J^∞ e^{−2t^{1/3}} dt = (3/8)Γ(3, 2J^{1/3}) − 3!/2³
    [(_, value, _)] = limits.sequence_values(limits.fig2(2), [3], CTX)
    big_j = 100_000
    with mpmath.workdps(45):
        head = mpmath.fsum(mpmath.exp(-2 * mpmath.cbrt(j)) for j in range(1, big_j + 1))
        x = 2 * mpmath.cbrt(big_j)
        tail = mpf(3) / 8 * mpmath.gammainc(3, x) - mpmath.exp(-x) / 2
        oracle = head + tail - mpf(6) / 8
        assert abs(value - oracle) < mpf(10) ** -25


def test_fig2_trend_toward_limit():
    report = limits.limit_report(limits.fig2(1), range(2, 11), CTX)
    assert report.passed and report.decreasing_all
    with CTX.activate():
        assert mpmath.nstr(report.rows[0].limit, 12) == "-0.183939720586"


def test_fig1_trend_toward_limit():
    report = limits.limit_report(limits.fig1(), range(2, 9), CTX)
    assert report.passed
    with mpmath.workdps(30):
        assert abs(report.rows[0].limit - 1 / (2 - 2 * mp.e)) < mpf(10) ** -25
    assert [r.digits for r in report.rows] == sorted(r.digits for r in report.rows)


def test_truncated_zeta_series_trend():
    report = limits.limit_report(limits.sbid(2), [25, 50, 100], CTX)
    assert report.decreasing_all
    assert report.rows[-1].residual < mpf(10) ** -2


def test_stirling_envelope_ratio_tends_to_one():
    report = limits.limit_report(limits.as2(2), range(8, 17, 2), CTX)
    assert report.passed


def test_precision_sufficiency():
    spec = limits.fig2(3)
    base = limits.sequence_values(spec, [6], CTX)[0][1]
    finer = limits.sequence_values(spec, [6], CTX.with_extra(20))[0][1]
    with mpmath.workdps(60):
        assert abs(base - finer) < mpf(10) ** -25 * max(1, abs(base))


def test_precision_ceiling():
    with pytest.raises(PrecisionCeiling):
        limits.sequence_values(limits.fig1(), [12], PrecisionContext(20, max_digits=40))


def test_figure_data_empty_range_is_header_only():
    assert limits.figure_data(limits.fig1(), [], CTX) == "n,value,limit,residual,digits\n"


def test_figure_data_three_curves():
    specs = [limits.fig2(b) for b in (1, 2, 3)]
    text = limits.figure_data(specs, range(4, 7), CTX)
    rows = list(csv.DictReader(io.StringIO(text)))
    assert len(rows) == 9
    assert [r["n"] for r in rows] == ["4", "5", "6"] * 3
    assert len({r["limit"] for r in rows}) == 3
    assert all("," not in r["value"] and float(r["residual"]) >= 0 for r in rows)
    assert text == limits.figure_data(specs, range(4, 7), CTX)
