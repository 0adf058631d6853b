"""Acceptance criteria 1–12, one test each; every test records a PASS/FAIL line."""

import time

import mpmath
from mpmath import mp, mpc, mpf

from mellin_sum import limits, mpnum, registry, series, specfun
from mellin_sum.mpnum import PrecisionContext
from mellin_sum.registry.appendix import coth_chain
from mellin_sum.registry.contour_groups import v3sm1_rhs


def timed_verify(id_, params, digits):
    start = time.perf_counter()
    report = registry.verify(id_, params, PrecisionContext(digits))
    return report, time.perf_counter() - start


def sides_within(report, tol):
    with mpmath.workdps(60):
        return report.passed and abs(report.lhs - report.rhs) <= tol * max(1, abs(report.lhs), abs(report.rhs))


def test_telescoping_sum(criterion):
    checks = []
    for b in ("1/2", "1", "2"):
        report, wall = timed_verify("eqno6", {"b": b}, 30)
        with mpmath.workdps(60):
            bb = mpnum.parse_number(b)
            closed = 1 / (2 * mpmath.sinh(bb / 2) ** 2)
            exact = abs(report.lhs - closed) <= mpf(10) ** -30 * closed
        checks.append((b, report.passed and exact and wall < 1, wall))
    ok = all(c[1] for c in checks)
    assert criterion(1, ok, "eqno6 at b=1/2,1,2 to 30 digits; " + ", ".join(f"b={b} {w:.2f}s" for b, _, w in checks))


def test_inverse_sinh_doubling(criterion):
    report, wall = timed_verify("Ts2", None, 40)
    with mpmath.workdps(60):
        exact = abs(report.lhs - (mpmath.coth(mpf(1) / 2) - 1)) <= mpf(10) ** -40
    ok = report.passed and exact and wall < 1
    assert criterion(2, ok, f"Ts2 to 40 digits ({report.digits_agreed} agreed) in {wall:.2f}s")


def test_lambert_and_q_digamma(criterion):
    results = []
    for id_ in ("X3a", "Eq3", "Eq4", "Pid1"):
        for a in ("2", "3"):
            report, wall = timed_verify(id_, {"a": a}, 30)
            results.append((id_, a, report.passed and wall < 5, wall))
    ok = all(r[2] for r in results)
    slowest = max(results, key=lambda r: r[3])
    failed = [f"{i}(a={a})" for i, a, good, _ in results if not good]
    assert criterion(3, ok, f"X3a/Eq3/Eq4/Pid1 at a=2,3 to 30 digits; slowest {slowest[0]}(a={slowest[1]}) "
                            f"{slowest[3]:.2f}s" + (f"; failed {failed}" if failed else ""))


def test_theta_lambert_identity(criterion):
    reports = [registry.verify("Ls", {"x": x}, PrecisionContext(30)) for x in ("0.2", "1/3", "0.5")]
    ok = all(r.passed for r in reports)
    assert criterion(4, ok, "Ls at x=0.2,1/3,0.5 to 30 digits; agreed " + ", ".join(str(r.digits_agreed)
                                                                                   for r in reports))


def test_poisson_jacobi(criterion):
    ctx = PrecisionContext(30)
    reports = [registry.verify("SxId2", {"b": b}, ctx) for b in ("1/2", "2")]
    trivial = registry.verify("SxId2", {"b": "1"}, ctx)
    with ctx.activate():
        zero = trivial.passed and abs(trivial.lhs) < ctx.tol and abs(trivial.rhs) < ctx.tol
    ok = all(r.passed for r in reports) and zero
    assert criterion(5, ok, "SxId2 at b=1/2,2 to 30 digits; b=1 gives 0 = 0")


def test_contour_quadrature_against_closed_forms(criterion):
    cases = [("T2b2", {"b": "1"}), ("T2b3b", None), ("V3sm1", {"b": "2"}), ("F5", None)]
    rows = []
    for id_, params in cases:
        report, wall = timed_verify(id_, params, 25)
        rows.append((id_, report, wall, sides_within(report, mpf(10) ** -20) and wall < 60))
    v3 = rows[2][1]
    ctx = PrecisionContext(25)
    with ctx.activate():
        printed = v3sm1_rhs(mpf(2), ctx, constant=1)
        gap = printed - v3.lhs
        gap_is_three_halves_pi = abs(gap - 3 * mp.pi / 2) < ctx.tol
    ok = all(r[3] for r in rows) and gap_is_three_halves_pi
    timings = ", ".join(f"{i} {w:.1f}s" for i, _, w, _ in rows)
    assert criterion(6, ok, f"T2b2/T2b3b/V3sm1/F5 within 1e-20 ({timings}); V3sm1 printed form with +1 "
                            f"differs from quadrature by {mpmath.nstr(gap, 12)} = 3π/2")


def test_half_residue_family(criterion):
    ctx = PrecisionContext(20)
    cases = [("Fs2nc0", {"n": "1"}), ("Ga1", {"n": "1"})]
    cases += [(f"T3n{x}", {"n": "1", "b": "pi"}) for x in "ABCDE"]
    reports = [registry.verify(id_, params, ctx) for id_, params in cases]
    with ctx.activate():
        omega = series.omega(mp.pi, 2, ctx).value
    with mpmath.workdps(40):
        closed = mp.pi ** mpf(0.25) / (2 * mpmath.gamma(mpf(3) / 4)) - mpf(1) / 2
        omega_ok = abs(omega - closed) < mpf(10) ** -20
    ok = all(r.passed for r in reports) and omega_ok
    failed = [r.id for r in reports if not r.passed]
    assert criterion(7, ok, f"Fs2nc0, Ga1, T3nA–E at n=1, b=π to 20 digits; ω(π,2) = {mpmath.nstr(omega, 20)}"
                            + (f"; failed {failed}" if failed else ""))


def test_generalized_riemann_identity(criterion):
    ctx = PrecisionContext(20)
    points = [("2", "-1"), ("3", "-1/2"), ("3/2", "-2")]
    reports = [registry.verify("Jb", {"b": b, "s": s}, ctx) for b, s in points]
    with mpmath.workdps(40):
        classic = [mpmath.zeta(2) * mpmath.gamma(2), mpmath.zeta(mpf(3) / 2) * mpmath.gamma(3),
                   mpmath.zeta(3) * mpmath.gamma(mpf(3) / 2)]
        exact = all(abs(r.rhs - c) < mpf(10) ** -20 * abs(c) for r, c in zip(reports, classic))
    ok = all(r.passed for r in reports) and exact
    assert criterion(8, ok, "Jb at (2,−1), (3,−1/2), (3/2,−2) to 20 digits; agreed "
                            + ", ".join(str(r.digits_agreed) for r in reports))


def test_appendix_integrals_and_coth_chain(criterion):
    ctx = PrecisionContext(25)
    reports = [registry.verify(id_, {"b": b}, ctx) for id_ in ("J3a", "J3b") for b in ("1", "2")]
    reports += [registry.verify("T4b", {"a": "2"}, ctx), registry.verify("Sid", {"a": "2"}, ctx)]
    eqno10 = registry.verify("eqno10", {"a": "2"}, ctx)
    chain = coth_chain(2, ctx)
    with ctx.activate():
        chain_ok = abs(chain.value - eqno10.lhs) <= ctx.tol and chain.err <= ctx.tol
    ok = all(r.passed for r in reports) and eqno10.passed and chain_ok
    assert criterion(9, ok, f"J3a/J3b at b=1,2 to 25 digits; coth chain at a=2 = {mpmath.nstr(chain.value, 20)} "
                            f"matches the odd-zeta series to {mpmath.nstr(abs(chain.value - eqno10.lhs), 3)}")


def test_limit_trends(criterion):
    ctx = PrecisionContext(25)
    fig1 = limits.limit_report(limits.fig1(), range(6, 13), ctx)
    fig2 = [limits.limit_report(limits.fig2(b), range(4, 11), ctx) for b in (1, 2, 3)]
    sbid = limits.limit_report(limits.sbid(2), [200], ctx)
    residual = sbid.rows[-1].residual
    ok = fig1.decreasing_all and all(r.decreasing_all for r in fig2) and residual < mpf(10) ** -2
    assert criterion(10, ok, f"fig1 n=6..12 decreasing to {mpmath.nstr(fig1.rows[-1].residual, 3)}; "
                             f"fig2 n=4..10 decreasing at b=1,2,3; SbId residual at n=200, b=2 is "
                             f"{mpmath.nstr(residual, 3)}")


def test_odd_zeta_sine_series(criterion):
    report, wall = timed_verify("Ex1AB", None, 30)
    ok = report.passed and wall < 5
    assert criterion(11, ok, f"Ex1AB to 30 digits ({report.digits_agreed} agreed) in {wall:.2f}s")


def _property_violations():
    ctx = PrecisionContext(25)
    counts = {}
    grid = [mpc(x, y) for x in ("-2.5", "-0.3", "0.5", "1.7", "4") for y in ("-3", "0.4", "2.5")]

    bad = 0
    for z in grid:
        for name in ("exp", "sinh", "coth", "cos", "log"):
            lo = mpnum.eval_elementary(name, z, PrecisionContext(25))
            hi = mpnum.eval_elementary(name, z, PrecisionContext(45))
            with mpmath.workdps(60):
                bad += mpnum.digits_agreed(lo, hi) < 25
    counts["refinement stability"] = bad

    bad = 0
    for res, term, k0 in [
        (series.omega(mpf(1) / 3, mpf(3) / 2, ctx), lambda j: mpmath.exp(-mpf(j) ** mpf(1.5) / 3), 1),
        (series.lambert_sum(2, 1, ctx), lambda k: 1 / (mpf(2) ** k + 1), 1),
        (series.lambert_sum(3, -1, ctx), lambda k: 1 / (mpf(3) ** k - 1), 1),
        (series.telescoping_check(1, ctx), lambda j: 2 ** j * mpmath.cosh(2 ** j) / mpmath.sinh(2 ** j) ** 2, 0),
        (specfun.theta3(mpf("0.9"), ctx, detailed=True), lambda k: 2 * mpf("0.9") ** (k * k), 1),
    ]:
        n = res.terms_used
        with ctx.activate():
            once = series.naive_sum(term, k0, k0 + n - 1, ctx)
            twice = series.naive_sum(term, k0, k0 + 2 * n - 1, ctx)
            bad += abs(twice - once) > res.tail_bound + ctx.eps * max(1, abs(once))
    counts["tail honesty"] = bad

    bad = 0
    for z in grid:
        with ctx.activate():
            g = specfun.gamma(z, ctx) * specfun.gamma(1 - z, ctx)
            bad += abs(g * mpmath.sinpi(z) - mp.pi) > ctx.tol * max(1, abs(g))
    counts["gamma reflection"] = bad

    bad = 0
    for z in [mpc(x, y) for x in ("0.1", "0.3", "0.5", "0.8") for y in ("0", "1", "7", "25")]:
        with ctx.activate():
            left = specfun.upsilon(z, mp.pi, ctx)
            bad += abs(left - specfun.upsilon(1 - z, mp.pi, ctx)) > ctx.tol * max(1, abs(left))
    counts["upsilon symmetry"] = bad

    bad = 0
    for v in ("0.1", "1", "5", "20"):
        with ctx.activate():
            v = mpf(v)
            modulus = specfun.polar_parts("gamma-half-line", v, ctx).modulus
            bad += abs(modulus - mpmath.sqrt(mp.pi / mpmath.cosh(mp.pi * v))) > ctx.tol * modulus
    counts["gamma half-line modulus"] = bad
    return counts


def test_property_suites(criterion):
    counts = _property_violations()
    ok = not any(counts.values())
    assert criterion(12, ok, "violations: " + ", ".join(f"{k} {v}" for k, v in counts.items()))
