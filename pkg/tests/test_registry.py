import mpmath
import pytest
from mpmath import mp, mpf

from mellin_sum import registry
from mellin_sum.errors import InvalidParams
from mellin_sum.mpnum import PrecisionContext

CTX = PrecisionContext(25)
ALL_IDS = [r.id for r in registry.list_identities()]


@pytest.fixture(scope="module")
def catalog_reports():
    return {r.id: r for r in registry.verify_all(ctx=CTX)}


@pytest.mark.slow
@pytest.mark.parametrize("id_", ALL_IDS)
def test_default_parameters_pass(catalog_reports, id_):
    report = catalog_reports[id_]
    assert report.status == "pass", report.error or f"{report.digits_agreed} digits"
    if report.kind == registry.EQUALITY:
        with CTX.activate():
            scale = max(1, abs(report.lhs), abs(report.rhs))
            assert report.abs_diff <= CTX.tol * scale
        for alt in report.alternates.values():
            assert alt["pass"]


def test_verify_all_is_sorted_and_complete(catalog_reports):
    assert list(catalog_reports) == sorted(ALL_IDS)


# -- catalog content -------------------------------------------------------------------------


def test_catalog_size_and_groups():
    records = registry.list_identities()
    assert len(records) >= 45
    assert {r.group for r in records} == set(registry.GROUPS)
    assert all(r.anchor and r.title for r in records)


@pytest.mark.parametrize("group,expected", [
    ("G3", {"X3a", "Eq3", "Eq4", "Ls", "Triv", "Pid1"}),
    ("GA", {"Bsum1", "B2k-bridge", "Sumx", "J3a", "J3b"}),
    ("GB", {"T4b", "Aik", "Sid"}),
])
def test_group_filters(group, expected):
    assert {r.id for r in registry.list_identities(group)} == expected


def test_prefix_filter_and_empty_filter():
    assert {r.id for r in registry.list_identities("T3n")} == {f"T3n{x}" for x in "ABCDE"}
    assert registry.list_identities([]) == []
    assert registry.verify_all([], ctx=CTX) == []


@pytest.mark.parametrize("alias,id_", [("T2", "T2x"), ("PJt", "SxId2"), ("But", "T2eLIM"), ("eqno(6)", "eqno6"),
                                       ("X3", "X3a"), ("F1", "Fall4"), ("F5b", "F5b4")])
def test_aliases(alias, id_):
    assert registry.get(alias).id == id_


def test_unknown_identity():
    with pytest.raises(InvalidParams):
        registry.get("NoSuchIdentity")


def test_default_params_are_valid():
    for record in registry.list_identities():
        _, parsed = record.resolve()
        assert record.domain(parsed) is None, record.id


# -- domain enforcement ------------------------------------------------------------------------


@pytest.mark.parametrize("id_,params", [
    ("Jb", {"s": "1/2"}),
    ("Jb", {"b": "-1"}),
    ("Jb", {"b": "1", "s": "-1/2"}),
    ("X3a", {"a": "1"}),
    ("T4b", {"a": "1/2"}),
    ("Gd", {"n": "1/2"}),
])
def test_out_of_domain_parameters_are_rejected(id_, params):
    with pytest.raises(InvalidParams):
        registry.verify(id_, params, CTX)


def test_unknown_parameter_is_rejected():
    with pytest.raises(InvalidParams):
        registry.verify("Ts2", {"b": "2"}, CTX)


# -- named instances ----------------------------------------------------------------------------


def test_ts2_value():
    report = registry.verify("Ts2", ctx=CTX)
    assert report.passed
    assert mpmath.nstr(report.lhs, 16).startswith("1.163953413738653")


def test_cos_sq_known_case():
    report = registry.verify("CosSq", {"a": "1"}, CTX)
    assert report.passed
    with CTX.activate():
        assert abs(report.rhs - (1 / mp.pi - mpf(1) / 2)) < CTX.tol


def test_jb_classic_case():
    report = registry.verify("Jb", {"b": "3", "s": "-1/2"}, CTX)
    assert report.passed
    with mpmath.workdps(40):
        assert abs(report.rhs - mpmath.zeta(mpf(3) / 2) * 2) < mpf(10) ** -25


def test_j3a_closed_form_at_one():
    report = registry.verify("J3a", {"b": "1"}, PrecisionContext(30))
    assert report.passed
    with mpmath.workdps(40):
        assert abs(report.rhs - (mpmath.coth(mpf(1) / 2) - 2) / (2 * mp.pi)) < mpf(10) ** -30


# -- cross-record consistency ---------------------------------------------------------------------


def test_gd_at_one_reduces_to_f5():
    # Gd integrates over the full line while F5 carries the 1/2π normalisation
    gd = registry.verify("Gd", {"n": "1"}, CTX)
    f5 = registry.verify("F5", ctx=CTX)
    assert gd.passed and f5.passed
    with CTX.activate():
        assert abs(gd.lhs - 2 * mp.pi * f5.lhs) <= CTX.tol * abs(gd.lhs)


@pytest.mark.parametrize("n", [1, 2])
def test_g1a_is_gd_at_doubled_index(n):
    g1a = registry.verify("G1A", {"n": str(n)}, CTX)
    gd = registry.verify("Gd", {"n": str(2 * n)}, CTX)
    assert g1a.passed and gd.passed
    with CTX.activate():
        assert abs(g1a.lhs - gd.lhs) <= CTX.tol * max(1, abs(gd.lhs))


@pytest.mark.parametrize("b", ["1/2", "2"])
def test_poisson_jacobi_chain(b):
    reports = [registry.verify(id_, {"b": b}, CTX) for id_ in ("T3B", "T3Int", "T3B1", "SxId2")]
    assert all(r.passed for r in reports)
    with CTX.activate():
        bb = mpmath.mpmathify(mpf(1) / 2 if b == "1/2" else 2)
        assert abs(reports[-1].rhs - (bb ** (-mpf(1) / 2) / 2 - mpf(1) / 2)) < CTX.tol


def test_poisson_jacobi_trivial_case():
    report = registry.verify("SxId2", {"b": "1"}, CTX)
    assert report.passed
    with CTX.activate():
        assert abs(report.lhs) < CTX.tol and abs(report.rhs) < CTX.tol


def test_abscissa_independence_of_t2():
    values = [registry.verify("T2", {"s": "-1/2", "b": "2", "c": c}, CTX) for c in ("2.5", "3", "4")]
    assert all(r.passed for r in values)
    with CTX.activate():
        assert max(abs(r.lhs - values[0].lhs) for r in values) <= CTX.tol


def test_conjugate_symmetry_on_t2b1():
    for b in ("2", "3"):
        assert registry.verify("T2b1", {"b": b}, CTX).passed


def test_trend_report_exposes_residuals():
    report = registry.verify("Sgenf", {"b": "2", "n_lo": "4", "n_hi": "8"}, CTX)
    assert report.passed and len(report.residuals) == 5
    assert all(b < a for a, b in zip(report.residuals, report.residuals[1:]))


def test_parallel_and_serial_runs_agree():
    tasks = [("Ts2", None), ("X3a", {"a": "3"}), ("J3b", None)]
    serial = registry.run_tasks(tasks, CTX, jobs=1)
    parallel = registry.run_tasks(tasks, CTX, jobs=2)
    assert [(r.id, r.params, r.lhs, r.rhs) for r in serial] == [(r.id, r.params, r.lhs, r.rhs) for r in parallel]


def test_errors_become_reports():
    [report] = registry.run_tasks([("Jb", {"s": "1"})], CTX)
    assert report.status == "error" and "InvalidParams" in report.error
