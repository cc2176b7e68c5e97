# suites/triangle_suites.py
import logging
from fractions import Fraction

from errors import PreconditionError
from oracle.paths import enumerate_entry, enumerate_row_polynomial
from positivity.minors import tp_check
from serialization.documents import SuiteReport
from suites.options import SuiteOptions, failed, passed
from triangle.build import Witness, build_triangle, row_polynomial, verify_recurrence, verify_row_recurrence
from triangle.explicit import explicit_entry
from triangle.factorization import verify_a_production, verify_factorization
from triangle.params import Params
from triangle.production import conjugate_production_matrix, verify_production

# (a1, a2, b1, b2, lam) covering every zero pattern of (a1, b1)
SAMPLE_POINTS = (
    (1, 2, 3, 1, Fraction(1, 2)),
    (0, 1, 2, 1, 1),
    (2, 1, 0, 3, 1),
    (0, 2, 0, 1, 3),
    (Fraction(3, 2), 0, 1, Fraction(1, 3), 2),
    (1, -1, Fraction(-1, 2), 2, -1),
)


def recurrence_suite(options: SuiteOptions) -> SuiteReport:
    tri = options.triangle()
    witness = verify_recurrence(tri)
    if witness:
        return failed("recurrence", "stored entry differs from the recurrence", witness)
    witness = verify_row_recurrence(tri)
    if witness:
        return failed("recurrence", "row polynomial recurrence fails", witness)
    return passed("recurrence", f"rows 0..{tri.max_row} satisfy both recurrences")


def explicit_witness(params: Params, max_row: int) -> Witness | None:
    """First cell where the closed formula and the recurrence disagree."""
    tri = build_triangle(params, max_row)
    for n in range(max_row + 1):
        for k in range(n + 1):
            value = explicit_entry(params, n, k)
            if value != tri.entry(n, k):
                return Witness(n, k, tri.entry(n, k), value)
    return None


def explicit_suite(options: SuiteOptions) -> SuiteReport:
    """The closed formula is numeric only; without --params it sweeps the sample points."""
    if options.spec is not None:
        points = [options.numeric_params("explicit")]
    else:
        points = [Params.numeric(*values) for values in SAMPLE_POINTS]

    for params in points:
        witness = explicit_witness(params, options.rows)
        if witness:
            return failed("explicit", f"explicit formula differs for {params}", witness)
    return passed("explicit", f"explicit formula matches rows 0..{options.rows} at {len(points)} point(s)")


def production_suite(options: SuiteOptions) -> SuiteReport:
    tri = options.triangle()
    witness = verify_production(tri)
    if witness:
        return failed("production", "row n+1 differs from (row n)·J", witness)

    params = options.params
    if params.is_numeric and not params.in_positivity_regime:
        return passed("production", f"T̄ = TJ holds on rows 0..{tri.max_row}; J* minors skipped outside the regime")

    order = min(options.order, 3, options.matrix_size)
    conjugate = conjugate_production_matrix(params, options.matrix_size).as_matrix()
    witness = tp_check(conjugate, order)
    if witness:
        return failed("production", f"J* has a negative minor of order <= {order}", witness)
    return passed("production", f"T̄ = TJ holds on rows 0..{tri.max_row}; J* minors of order <= {order} nonnegative")


def factorization_suite(options: SuiteOptions) -> SuiteReport:
    tri = options.triangle()
    witness = verify_factorization(tri)
    if witness:
        return failed("factorization", "T differs from A·B", witness)
    witness = verify_a_production(options.params, tri.max_row)
    if witness:
        return failed("factorization", "row n+1 of A differs from (row n of A)·J_A", witness)
    return passed("factorization", f"T = A·B on rows 0..{tri.max_row}")


def oracle_suite(options: SuiteOptions) -> SuiteReport:
    """Weighted path counts against the recurrence, cell by cell and row by row."""
    params = options.params
    max_row = options.rows
    if max_row > options.guard:
        raise PreconditionError(
            f"Path enumeration up to row {max_row} exceeds the guard {options.guard}; lower --rows or raise --guard-override"
        )
    tri = build_triangle(params, max_row)
    for n in range(max_row + 1):
        for k in range(n + 1):
            value = enumerate_entry(params, n, k, guard=options.guard)
            if value != tri.entry(n, k):
                return failed("oracle", "path count differs from T_{n,k}", Witness(n, k, tri.entry(n, k), value))
        expected = row_polynomial(tri, n)
        value = enumerate_row_polynomial(params, n, guard=options.guard)
        if value != expected:
            return failed("oracle", "closed path count differs from T_n(q)", Witness(n, -1, expected, value))
        logging.debug(f"Path oracle agrees on row {n}")
    return passed("oracle", f"path enumeration agrees with rows 0..{max_row}")
