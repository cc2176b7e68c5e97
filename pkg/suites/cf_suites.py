# suites/cf_suites.py
import logging
from fractions import Fraction

from errors import PreconditionError
from jacobi.coefficients import column0_cf_from_production, jacobi_coeffs_col0, jacobi_coeffs_rows, verify_moment_decomposition
from jacobi.egf import column0_egf_check, egf_check
from jacobi.first_column import first_column_shift_check
from jacobi.hankel import hankel_det_direct, hankel_det_via_cf
from jacobi.series import cf_to_series, cf_to_series_nested
from positivity.lcx import three_x_lcx_check
from positivity.minors import sm_check
from positivity.roots import column0_roots_check
from positivity.stability import column0_turan, stability_check
from serialization.documents import SuiteReport
from suites.options import SuiteOptions, failed, passed
from triangle.build import Witness, row_polynomial
from triangle.params import Params

# the nested-fraction oracle is only run this far
NESTED_ORACLE_ORDER = 5


def cf_suite(options: SuiteOptions) -> SuiteReport:
    """J-fraction expansion against the row polynomials, plus the nested-fraction oracle."""
    tri = options.triangle()
    cf = jacobi_coeffs_rows(options.params, tri.max_row)
    series = cf_to_series(cf, tri.max_row)
    for n, value in enumerate(series):
        expected = row_polynomial(tri, n)
        if value != expected:
            return failed("cf", "series coefficient differs from T_n(q)", Witness(n, -1, expected, value))

    nested_order = min(tri.max_row, NESTED_ORACLE_ORDER)
    nested = cf_to_series_nested(cf, nested_order)
    for n, value in enumerate(nested):
        if value != series[n]:
            return failed("cf", "nested evaluation differs from the path expansion", Witness(n, -1, series[n], value))

    index = verify_moment_decomposition(options.params, tri.max_row)
    if index is not None:
        return failed("cf", "s_n = a2 + u_n + v_n or r_{n+1} = u_{n+1}v_n fails", {"n": index})
    return passed("cf", f"J-fraction reproduces T_0(q)..T_{tri.max_row}(q)")


def hankel_suite(options: SuiteOptions) -> SuiteReport:
    """Hankel determinants of (T_n(q)) of every size up to --rows, directly and from the fraction."""
    size, shift = options.rows, options.shift
    if shift not in (0, 1):
        raise PreconditionError(f"Hankel shift must be 0 or 1, got {shift}")
    terms = 2 * size - 1 + shift
    cf = jacobi_coeffs_rows(options.params, max(terms, 1), q=options.q)
    series = cf_to_series(cf, terms - 1)
    for n in range(1, size + 1):
        direct = hankel_det_direct(series, n, shift)
        via_cf = hankel_det_via_cf(cf, n, shift)
        if direct != via_cf:
            return failed("hankel", f"determinant identity fails (shift {shift})", Witness(n, -1, direct, via_cf))
        logging.debug(f"Hankel determinant of size {n} agrees")
    return passed("hankel", f"Hankel determinants of size 1..{size}, shift {shift}, match the fraction")


def egf_suite(options: SuiteOptions) -> SuiteReport:
    """Closed-form EGF at a rational q (1 when q is not bound)."""
    params = options.numeric_params("egf")
    q = options.q if options.q is not None else Fraction(1)
    tri = options.triangle()
    witness = egf_check(tri, q)
    if witness:
        return failed("egf", f"n!·[t^n] of the closed form differs from T_n({q})", witness)
    return passed("egf", f"closed-form EGF matches T_n({q}) through t^{tri.max_row} for {params}")


def _column0_positivity(options: SuiteOptions, column: list) -> SuiteReport | None:
    order = min(options.order, (len(column) + 1) // 2)
    witness = sm_check(column, order)
    if witness:
        return failed("col0", f"first column fails the order-{order} Hankel test", witness)
    depth = min(3, (len(column) - 1) // 2)
    if depth >= 1:
        witness = three_x_lcx_check(column, depth)
        if witness:
            return failed("col0", f"first column fails {depth}-fold log-convexity", witness)
    return None


def _column0_roots(options: SuiteOptions) -> SuiteReport | None:
    params = options.params
    for n in range(1, options.rows + 1):
        witness = column0_roots_check(params, n)
        if witness:
            return failed("col0", "first-column polynomial is not real-rooted in its interval", witness)
    for n in range(1, options.rows):
        report = stability_check(column0_turan(params, n))
        if not report.stable:
            return failed("col0", f"first-column Turán polynomial {n} is not weakly stable", report)
    return None


def col0_suite(options: SuiteOptions) -> SuiteReport:
    params = options.params
    tri = options.triangle()
    column = tri.column(0)

    col0_cf = jacobi_coeffs_col0(params, tri.max_row)
    for n, value in enumerate(cf_to_series(col0_cf, tri.max_row)):
        if value != column[n]:
            return failed("col0", "first-column fraction differs from T_{n,0}", Witness(n, 0, column[n], value))

    from_production = column0_cf_from_production(params, tri.max_row)
    for n in range(tri.max_row):
        if from_production.s[n] != col0_cf.s[n] or from_production.r[n] != col0_cf.r[n]:
            return failed("col0", "production-matrix fraction differs", Witness(n, 0, col0_cf.s[n], from_production.s[n]))

    witness = first_column_shift_check(params, tri.max_row)
    if witness:
        return failed("col0", "shift identity 𝒯_n(λ+q) = T_n(q) fails", witness)

    if params.is_numeric:
        witness = column0_egf_check(tri)
        if witness:
            return failed("col0", "EGF at q = 0 differs from the first column", witness)
        if params.in_positivity_regime:
            report = _column0_positivity(options, column)
            if report:
                return report
        if _roots_apply(params):
            report = _column0_roots(options)
            if report:
                return report
    else:
        report = _column0_positivity(options, column)
        if report:
            return report

    return passed("col0", f"first column verified on rows 0..{tri.max_row}")


def _roots_apply(params: Params) -> bool:
    # hypothesis with λ dropped, nondegenerate family
    at_zero = Params.numeric(params.a1, params.a2, params.b1, params.b2, 0)
    return at_zero.satisfies_root_hypothesis() and params.a1 != 0 and params.b1 + params.b2 != 0
