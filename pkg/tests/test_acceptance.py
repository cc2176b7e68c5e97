# tests/test_acceptance.py
"""Desk-scale runs of the verification claims; deselect with -m 'not slow'."""
from fractions import Fraction

import pytest

from jacobi.coefficients import jacobi_coeffs_rows
from jacobi.egf import egf_branch, egf_check
from jacobi.series import cf_to_series
from main import run
from paramspec import ParamSpec, parse_param_spec
from positivity.roots import interlacing_check, real_rooted_in_interval_check, row_polynomial_values
from positivity.stability import stability_check, turan_polynomial
from suites.options import SuiteOptions
from suites.runner import run_suites
from triangle.build import build_triangle, row_polynomial
from triangle.explicit import explicit_entry

pytestmark = pytest.mark.slow

ZERO_PATTERNS = [(False, False), (True, False), (False, True), (True, True)]


async def _single(name: str, options: SuiteOptions):
    (report,) = await run_suites([name], options)
    assert report.passed, report
    return report


@pytest.mark.anyio
@pytest.mark.parametrize("size, order", [(7, 3), (6, 4)])
async def test_symbolic_triangle_is_totally_positive(size, order):
    report = await _single("tp", SuiteOptions(symbolic=True, matrix_size=size, order=order))
    assert f"{size}x{size}" in report.detail
    assert "a2 = 1, b2 = 1" in report.detail


@pytest.mark.anyio
async def test_symbolic_row_polynomials_are_a_moment_sequence():
    await _single("sm", SuiteOptions(symbolic=True, order=4))


@pytest.mark.anyio
async def test_stirling_rows_are_three_fold_log_convex_in_q():
    report = await _single("lcx3", SuiteOptions(spec=parse_param_spec("stirling2"), rows=9))
    assert "T_9(q)" in report.detail


@pytest.mark.anyio
async def test_symbolic_rows_are_three_fold_log_convex():
    await _single("lcx3", SuiteOptions(symbolic=True, rows=7))


@pytest.mark.anyio
@pytest.mark.parametrize("spec", ["stirling2", "riordan_a049020"])
async def test_convolutions_pass_order_five(spec):
    await _single("convolution", SuiteOptions(spec=parse_param_spec(spec), order=5))


@pytest.mark.parametrize("a1_zero, b1_zero", ZERO_PATTERNS)
def test_explicit_formula_at_random_points(random_params, a1_zero, b1_zero):
    for _ in range(13):
        params = random_params(a1_zero=a1_zero, b1_zero=b1_zero)
        tri = build_triangle(params, 12)
        for n in range(13):
            for k in range(n + 1):
                assert explicit_entry(params, n, k) == tri.entry(n, k), (params, n, k)


@pytest.mark.parametrize("a1_zero, b1_zero", ZERO_PATTERNS)
def test_egf_at_random_points(random_params, a1_zero, b1_zero):
    branches = set()
    for i in range(20):
        params = random_params(a1_zero=a1_zero, b1_zero=b1_zero)
        branches.add(egf_branch(params))
        assert egf_check(build_triangle(params, 10), Fraction(i - 8, 3)) is None, params
    assert len(branches) == 1


def test_roots_and_interlacing_at_regime_points(regime_params):
    for _ in range(20):
        params = regime_params()
        tri = build_triangle(params, 12)
        for n in range(1, 13):
            assert real_rooted_in_interval_check(params, n, tri) is None, (params, n)
            assert interlacing_check(row_polynomial_values(tri, n - 1), row_polynomial_values(tri, n)) is None


def test_turan_polynomials_at_regime_points(regime_params):
    for _ in range(20):
        params = regime_params()
        tri = build_triangle(params, 9)
        for n in range(1, 9):
            assert stability_check(turan_polynomial(tri, n)).stable, (params, n)


def test_symbolic_fraction_round_trip(symbolic):
    tri = build_triangle(symbolic, 10)
    series = cf_to_series(jacobi_coeffs_rows(symbolic, 10), 10)
    assert series == [row_polynomial(tri, n) for n in range(11)]


@pytest.mark.parametrize("sequence_id", ["A008277", "A049020", "A008279", "A154602"])
def test_oeis_fixtures_over_twenty_rows(repo_root, sequence_id):
    assert run(["oeis", sequence_id, "--rows", "20", "--config", str(repo_root / "swr_config.json")]) == 0


@pytest.mark.anyio
async def test_regime_suites_on_regime_points(regime_params):
    for _ in range(3):
        options = SuiteOptions(spec=ParamSpec(regime_params()), rows=8)
        reports = await run_suites(["roots", "interlace", "logconcave", "turan"], options)
        assert all(report.passed for report in reports), reports
