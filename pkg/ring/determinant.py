# ring/determinant.py
from typing import Sequence

from errors import UsageError
from ring.scalar import Scalar, common_ring


def _square(matrix: Sequence[Sequence[Scalar]]) -> int:
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise UsageError("Determinant needs a square matrix")
    return size


def bareiss_determinant(matrix: Sequence[Sequence[Scalar]], one: Scalar | None = None) -> Scalar:
    """
    Fraction-free (Bareiss) elimination over Q or Q[vars].

    Every division is exact in the integral domain, so polynomial entries
    never leave the polynomial ring. `one` fixes the ring of the empty
    determinant.
    """
    size = _square(matrix)
    if size == 0:
        return one if one is not None else 1
    ring = common_ring(value for row in matrix for value in row)
    if size == 1:
        return matrix[0][0]

    m = [list(row) for row in matrix]
    sign = 1
    previous = ring.one()
    for k in range(size - 1):
        # look for a pivot in the current column; no pivot means det == 0
        if m[k][k] == 0:
            for i in range(k + 1, size):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return ring.zero()

        pivot = m[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (pivot * m[i][j] - m[i][k] * m[k][j]) / previous
        previous = pivot

    return m[size - 1][size - 1] if sign > 0 else -m[size - 1][size - 1]


def cofactor_determinant(matrix: Sequence[Sequence[Scalar]], one: Scalar | None = None) -> Scalar:
    """Laplace expansion along the first row; no division at all."""
    size = _square(matrix)
    if size == 0:
        return one if one is not None else 1
    if size == 1:
        return matrix[0][0]
    if size == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]

    total = None
    for j, entry in enumerate(matrix[0]):
        if entry == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in (list(r) for r in matrix[1:])]
        term = entry * cofactor_determinant(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else matrix[0][0] * 0
