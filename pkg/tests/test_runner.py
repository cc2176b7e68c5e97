# tests/test_runner.py
import pytest

from errors import PreconditionError, UsageError
from paramspec import parse_param_spec
from positivity.lcx import lcx_operator
from suites.options import SYMBOLIC_DEFAULT_ROWS, SuiteOptions, failed, row_sequence
from suites.positivity_suites import graded_slice
from suites.runner import ALL, SUITES, resolve_suites, run_suites
from triangle.build import build_triangle
from triangle.params import Params

REGIME_SUITES = ["interlace", "logconcave", "turan", "tp", "sm", "lcx3", "convolution"]


def test_resolve():
    assert resolve_suites(ALL) == list(SUITES)
    assert len(SUITES) == 17
    assert resolve_suites("hankel") == ["hankel"]
    with pytest.raises(UsageError):
        resolve_suites("nope")


@pytest.mark.anyio
async def test_every_suite_passes_on_stirling():
    reports = await run_suites(resolve_suites(ALL), SuiteOptions(rows=5))
    assert [report.suite for report in reports] == list(SUITES)
    failures = [report for report in reports if not report.passed]
    assert failures == []
    assert not any(report.skipped for report in reports)


@pytest.mark.anyio
async def test_numeric_suites_on_a_rational_point():
    options = SuiteOptions(spec=parse_param_spec("1,1,1,1,1"), rows=5)
    names = ["explicit", "egf", "roots", "interlace", "logconcave", "turan", "col0"]
    reports = await run_suites(names, options)
    assert all(report.passed for report in reports), reports


@pytest.mark.anyio
async def test_symbolic_run_skips_numeric_suites():
    options = SuiteOptions(symbolic=True, rows=3, order=2)
    reports = await run_suites(["recurrence", "egf", "cf"], options, skip_inapplicable=True)
    assert [(r.suite, r.passed, r.skipped) for r in reports] == [
        ("recurrence", True, False),
        ("egf", True, True),
        ("cf", True, False),
    ]
    with pytest.raises(PreconditionError):
        await run_suites(["recurrence", "egf"], options)


@pytest.mark.anyio
async def test_failed_report_keeps_its_place(monkeypatch):
    monkeypatch.setitem(SUITES, "production", lambda options: failed("production", "forced", {"n": 1}))
    monkeypatch.setenv("SWR_MAX_THREADS", "1")
    reports = await run_suites(["recurrence", "production", "factorization"], SuiteOptions(rows=3))
    assert [report.passed for report in reports] == [True, False, True]
    assert reports[1].witness == {"n": 1}


@pytest.mark.anyio
async def test_first_error_in_name_order_wins():
    options = SuiteOptions(rows=3, shift=2)
    with pytest.raises(PreconditionError, match="shift"):
        await run_suites(["recurrence", "hankel"], options)


@pytest.mark.anyio
@pytest.mark.parametrize("name", REGIME_SUITES)
async def test_positivity_suites_refuse_negative_parameters(name):
    options = SuiteOptions(spec=parse_param_spec("1,-3,0,1,0"), rows=4)
    with pytest.raises(PreconditionError):
        await run_suites([name], options)


@pytest.mark.anyio
async def test_negative_parameters_are_skipped_under_all():
    options = SuiteOptions(spec=parse_param_spec("1,-3,0,1,0"), rows=4)
    reports = await run_suites(REGIME_SUITES + ["roots"], options, skip_inapplicable=True)
    assert all(report.skipped for report in reports)


@pytest.mark.anyio
async def test_negative_q_binding_is_refused():
    options = SuiteOptions(spec=parse_param_spec("a1=1,a2=0,b1=0,b2=1,lam=0,q=-1"), order=2)
    with pytest.raises(PreconditionError, match="q"):
        await run_suites(["sm"], options)


@pytest.mark.anyio
async def test_root_hypothesis_gates_turan():
    # nonnegative, but a1(b1+b2) < b1·a2
    options = SuiteOptions(spec=parse_param_spec("1,3,1,1,0"), rows=4)
    with pytest.raises(PreconditionError, match="a1"):
        await run_suites(["turan"], options)


@pytest.mark.anyio
async def test_oracle_rows_past_the_guard_are_refused():
    with pytest.raises(PreconditionError, match="guard"):
        await run_suites(["oracle"], SuiteOptions(rows=5, guard=4))
    (report,) = await run_suites(["oracle"], SuiteOptions(rows=4, guard=4))
    assert report.passed


def test_symbolic_default_rows():
    assert SuiteOptions().rows == 8
    assert SuiteOptions(symbolic=True).rows == SYMBOLIC_DEFAULT_ROWS
    assert SuiteOptions(symbolic=True, rows=6).rows == 6


def test_graded_slice_choice():
    assert graded_slice(Params.symbolic(), None) == {"a2": 1, "b2": 1}
    assert graded_slice(Params.symbolic(), 2) == {"a2": 1}
    lam_bound = parse_param_spec("a1=sym,a2=sym,b1=sym,b2=sym,lam=1").params
    assert graded_slice(lam_bound, None) == {"a2": 1}
    a1_bound = parse_param_spec("a1=2,a2=sym,b1=sym,b2=sym,lam=sym").params
    assert graded_slice(a1_bound, None) == {"b2": 1}
    assert graded_slice(Params.numeric(1, 0, 0, 1, 0), None) == {}


def test_graded_slice_keeps_every_coefficient():
    full = Params.symbolic()
    sliced = full.bind(graded_slice(full, None))
    assert sliced.ring.vars == ("a1", "b1", "lam")
    once_full = lcx_operator(row_sequence(build_triangle(full, 4), 5))
    once_sliced = lcx_operator(row_sequence(build_triangle(sliced, 4), 5))
    for a, b in zip(once_full, once_sliced):
        assert sorted(a.terms.values()) == sorted(b.terms.values())


@pytest.mark.anyio
async def test_symbolic_lcx3_runs_on_the_slice():
    (report,) = await run_suites(["lcx3"], SuiteOptions(symbolic=True))
    assert report.passed, report
    assert "a2 = 1, b2 = 1" in report.detail


@pytest.mark.anyio
async def test_symbolic_minor_suites_run_on_the_slice():
    options = SuiteOptions(symbolic=True, matrix_size=4, order=2)
    tp, sm = await run_suites(["tp", "sm"], options)
    assert tp.passed and sm.passed
    assert "a2 = 1, b2 = 1" in tp.detail and "a2 = 1, b2 = 1" in sm.detail
    (bound_q,) = await run_suites(["sm"], SuiteOptions(spec=parse_param_spec("a1=sym,a2=sym,b1=sym,b2=sym,lam=sym,q=2"), order=2))
    assert bound_q.passed and "(at a2 = 1)" in bound_q.detail
