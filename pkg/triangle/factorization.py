# triangle/factorization.py
from math import comb

from ring.scalar import Scalar
from triangle.build import Triangle, Witness
from triangle.params import Params
from triangle.production import ProductionMatrix

LowerTriangular = tuple[tuple[Scalar, ...], ...]


def a_triangle(params: Params, max_row: int) -> LowerTriangular:
    """A_{n,k} = (a1k + a2)A_{n-1,k} + (b1k + b2)A_{n-1,k-1}, A_{0,0} = 1."""
    a1, a2, b1, b2, _ = params.values()
    zero = params.ring.zero()
    rows = [(params.ring.one(),)]
    for n in range(1, max_row + 1):
        previous = rows[-1]
        row = []
        for k in range(n + 1):
            value = zero
            if k < n:
                value = value + (a1 * k + a2) * previous[k]
            if k >= 1:
                value = value + (b1 * k + b2) * previous[k - 1]
            row.append(value)
        rows.append(tuple(row))
    return tuple(rows)


def b_triangle(params: Params, max_row: int) -> LowerTriangular:
    """B_{n,k} = C(n,k) λ^{n-k}, with 0^0 = 1."""
    lam = params.lam
    return tuple(tuple(lam ** (n - k) * comb(n, k) for k in range(n + 1)) for n in range(max_row + 1))


def factor_triangles(params: Params, max_row: int) -> tuple[LowerTriangular, LowerTriangular]:
    return a_triangle(params, max_row), b_triangle(params, max_row)


def a_production_matrix(params: Params, size: int) -> ProductionMatrix:
    """Upper bidiagonal J_n with diagonal a1k + a2 and superdiagonal b1(k+1) + b2."""
    a1, a2, b1, b2, _ = params.values()
    zero = params.ring.zero()
    return ProductionMatrix(
        r=tuple(b1 * (k + 1) + b2 for k in range(size)),
        s=tuple(a1 * k + a2 for k in range(size)),
        t=tuple(zero for _ in range(size)),
    )


def multiply_lower(left: LowerTriangular, right: LowerTriangular, zero: Scalar) -> LowerTriangular:
    size = min(len(left), len(right))
    rows = []
    for n in range(size):
        row = []
        for k in range(n + 1):
            value = zero
            for i in range(k, n + 1):
                value = value + left[n][i] * right[i][k]
            row.append(value)
        rows.append(tuple(row))
    return tuple(rows)


def verify_factorization(tri: Triangle) -> Witness | None:
    """T = A·B on the truncation of `tri`."""
    a, b = factor_triangles(tri.params, tri.max_row)
    product = multiply_lower(a, b, tri.ring.zero())
    for n, row in enumerate(product):
        for k, value in enumerate(row):
            if value != tri.entry(n, k):
                return Witness(n, k, value, tri.entry(n, k))
    return None


def verify_a_production(params: Params, max_row: int) -> Witness | None:
    """Row n+1 of A equals (row n of A)·J_n."""
    a = a_triangle(params, max_row)
    j = a_production_matrix(params, max_row + 2)
    zero = params.ring.zero()
    for n in range(max_row):
        for k in range(n + 2):
            value = zero
            for i, entry in enumerate(a[n]):
                if i in (k, k - 1):
                    value = value + entry * j.entry(i, k)
            expected = a[n + 1][k]
            if value != expected:
                return Witness(n + 1, k, expected, value)
    return None
