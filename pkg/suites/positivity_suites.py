# suites/positivity_suites.py
import logging
from fractions import Fraction
from itertools import product

from positivity.convolution import SM_SEQUENCES, convolution_sm_check
from positivity.lcx import log_concavity_check, newton_check, three_x_lcx_check
from positivity.minors import sm_check, tp_check
from positivity.roots import (
    interlacing_check,
    interval_closure,
    real_rooted_in_interval_check,
    root_interval,
    row_polynomial_values,
)
from positivity.stability import stability_check, turan_polynomial
from serialization.documents import SuiteReport
from suites.options import SuiteOptions, failed, passed, row_sequence
from triangle.build import build_triangle
from triangle.params import Params

# depth of the iterated log-convexity test
LCX_DEPTH = 3


def roots_suite(options: SuiteOptions) -> SuiteReport:
    params = options.numeric_params("roots")
    tri = options.triangle()
    for n in range(1, tri.max_row + 1):
        witness = real_rooted_in_interval_check(params, n, tri)
        if witness:
            return failed("roots", "T_n(q) does not have n simple roots in its interval", witness)
    lo, hi = root_interval(params)
    lo_closed, hi_closed = interval_closure(params)
    left = f"[{lo}" if lo_closed else f"({'-inf' if lo is None else lo}"
    right = f"{hi}]" if hi_closed else f"{hi})"
    return passed("roots", f"T_1(q)..T_{tri.max_row}(q) have simple real roots in {left}, {right}")


def interlace_suite(options: SuiteOptions) -> SuiteReport:
    options.regime_params("interlace", roots=True)
    tri = options.triangle()
    for n in range(1, tri.max_row + 1):
        position = interlacing_check(row_polynomial_values(tri, n - 1), row_polynomial_values(tri, n))
        if position is not None:
            return failed("interlace", "roots of T_{n-1} do not interlace those of T_n", {"n": n, "position": position})
    return passed("interlace", f"T_(n-1) interlaces T_n for n = 1..{tri.max_row}")


def logconcave_suite(options: SuiteOptions) -> SuiteReport:
    """Coefficient rows of real-rooted T_n(q) are log-concave and satisfy Newton's inequalities."""
    options.regime_params("logconcave", roots=True)
    tri = options.triangle()
    for n, row in enumerate(tri.rows):
        index = log_concavity_check(row)
        if index is not None:
            return failed("logconcave", "row is not log-concave", {"n": n, "index": index})
        index = newton_check(row)
        if index is not None:
            return failed("logconcave", "row violates Newton's inequalities", {"n": n, "index": index})
    return passed("logconcave", f"rows 0..{tri.max_row} log-concave and Newton")


def turan_suite(options: SuiteOptions) -> SuiteReport:
    options.regime_params("turan", roots=True)
    tri = options.triangle()
    methods = set()
    for n in range(1, tri.max_row):
        report = stability_check(turan_polynomial(tri, n))
        methods.add(report.method)
        if not report.stable:
            return failed("turan", f"Turán polynomial {n} has a root in the right half-plane", report)
    return passed("turan", f"Turán polynomials 1..{tri.max_row - 1} weakly stable ({', '.join(sorted(methods)) or 'none'})")


def tp_suite(options: SuiteOptions) -> SuiteReport:
    params, sliced = on_graded_slice(options.regime_params("tp"), None, "tp")
    size = options.matrix_size
    tri = build_triangle(params, size - 1)
    witness = tp_check(tri.matrix(size), options.order, lower_triangular=True)
    if witness:
        return failed("tp", f"negative minor of order <= {options.order}{sliced}", witness)
    return passed("tp", f"all minors of order <= {options.order} of the {size}x{size} truncation nonnegative{sliced}")


def sm_suite(options: SuiteOptions) -> SuiteReport:
    """Hankel test of (T_n(q)) at full order."""
    params, sliced = on_graded_slice(options.regime_params("sm"), options.q, "sm")
    order = options.order
    tri = build_triangle(params, 2 * order - 2)
    witness = sm_check(row_sequence(tri, 2 * order - 1, options.q), order)
    if witness:
        return failed("sm", f"Hankel matrix of T_n(q) has a negative minor (order {order}){sliced}", witness)
    return passed("sm", f"[T_(i+j)(q)] minors nonnegative up to order {order}{sliced}")


def graded_slice(params: Params, q: Fraction | None) -> dict[str, int]:
    """
    Free parameters that can be set to 1 without merging two monomials.

    T_n(q) is homogeneous of degree n in (a1, a2, b1, b2), and has weight 0
    when b1, b2 weigh 1 and lam, q weigh -1; T_(n,k) then has degree n and
    weight k. Minors of the triangle, Hankel minors of (T_n(q)) and the
    log-convexity operator all keep both gradings, so with the other
    variables of a grading free or zero, a2 = 1 and b2 = 1 leave
    coefficientwise nonnegativity unchanged. Pass q=None when q plays no part.
    """
    values = params.as_dict()

    def free(name: str) -> bool:
        return name in params.ring.vars and values[name] == params.ring.gen(name)

    def free_or_zero(name: str) -> bool:
        return free(name) or values[name] == 0

    bindings = {}
    if free("a2") and all(free_or_zero(name) for name in ("a1", "b1", "b2")):
        bindings["a2"] = 1
    if free("b2") and free_or_zero("b1") and free_or_zero("lam") and (q is None or q == 0):
        bindings["b2"] = 1
    return bindings


def on_graded_slice(params: Params, q: Fraction | None, suite: str) -> tuple[Params, str]:
    """Params restricted to their graded slice, and a note naming the slice for the report."""
    bindings = graded_slice(params, q)
    if not bindings:
        return params, ""
    logging.debug(f"{suite} runs on the slice {bindings}")
    return params.bind(bindings), f" (at {', '.join(f'{name} = 1' for name in bindings)})"


def lcx3_suite(options: SuiteOptions) -> SuiteReport:
    params, sliced = on_graded_slice(options.regime_params("lcx3"), options.q, "lcx3")
    rows = max(options.rows, 2 * LCX_DEPTH)
    tri = build_triangle(params, rows)
    witness = three_x_lcx_check(row_sequence(tri, rows + 1, options.q), LCX_DEPTH)
    if witness:
        return failed("lcx3", f"iterated log-convexity fails{sliced}", witness)
    return passed("lcx3", f"L applied {LCX_DEPTH} times to T_0(q)..T_{rows}(q) stays nonnegative{sliced}")


def convolution_suite(options: SuiteOptions) -> SuiteReport:
    """Every pair of registered SM sequences convolved through the triangle stays SM."""
    params = options.regime_params("convolution")
    order = options.order
    tri = build_triangle(params, 2 * order - 2)
    for x_id, y_id in product(SM_SEQUENCES, repeat=2):
        witness = convolution_sm_check(tri, x_id, y_id, order)
        if witness:
            return failed("convolution", f"convolution of {x_id} and {y_id} is not SM", witness)
        logging.debug(f"Convolution of {x_id} and {y_id} passes order {order}")
    return passed("convolution", f"{len(SM_SEQUENCES) ** 2} convolutions pass the order-{order} Hankel test")
