# positivity/minors.py
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from errors import UsageError
from jacobi.hankel import hankel_matrix
from ring.determinant import bareiss_determinant, cofactor_determinant
from ring.scalar import Scalar, is_nonnegative

# cofactor expansion is cheap and division-free up to this order
COFACTOR_MAX_ORDER = 4


@dataclass(frozen=True)
class MinorWitness:
    """A minor that is negative (or has a negative coefficient)."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    minor: Scalar


def minor(matrix: Sequence[Sequence[Scalar]], rows: Sequence[int], cols: Sequence[int]) -> Scalar:
    sub = [[matrix[i][j] for j in cols] for i in rows]
    if len(rows) <= COFACTOR_MAX_ORDER:
        return cofactor_determinant(sub)
    return bareiss_determinant(sub)


def _vanishes_below_diagonal(rows: tuple[int, ...], cols: tuple[int, ...]) -> bool:
    # in a lower-triangular matrix the minor is identically zero once some i_t < j_t
    return any(i < j for i, j in zip(rows, cols))


def index_pairs(n_rows: int, n_cols: int, max_order: int, lower_triangular: bool = False) -> Iterator[tuple]:
    """(rows, cols) index sets by order, then lexicographically."""
    for order in range(1, max_order + 1):
        for rows in combinations(range(n_rows), order):
            for cols in combinations(range(n_cols), order):
                if lower_triangular and _vanishes_below_diagonal(rows, cols):
                    continue
                yield rows, cols


def tp_check(
    matrix: Sequence[Sequence[Scalar]], max_order: int, lower_triangular: bool = False
) -> MinorWitness | None:
    """
    Every minor of order <= max_order is nonnegative: as a rational, or
    coefficientwise as a polynomial. Returns the first violation.

    `lower_triangular` skips the minors that vanish identically for a
    lower-triangular matrix.
    """
    n_rows = len(matrix)
    n_cols = len(matrix[0]) if matrix else 0
    if max_order > min(n_rows, n_cols):
        raise UsageError(f"Minor order {max_order} exceeds the {n_rows}x{n_cols} matrix")

    checked = 0
    for rows, cols in index_pairs(n_rows, n_cols, max_order, lower_triangular):
        value = minor(matrix, rows, cols)
        checked += 1
        if not is_nonnegative(value):
            logging.debug(f"Negative minor at rows={rows} cols={cols} after {checked} minors")
            return MinorWitness(rows, cols, value)
    logging.debug(f"All {checked} minors of order <= {max_order} are nonnegative")
    return None


def sm_check(seq: Sequence[Scalar], order: int) -> MinorWitness | None:
    """Stieltjes moment test on the order x order Hankel matrix [seq_{i+j}]."""
    if order < 1:
        raise UsageError(f"Hankel order must be >= 1, got {order}")
    return tp_check(hankel_matrix(seq, order), order)
