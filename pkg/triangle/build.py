# triangle/build.py
import logging
from dataclasses import dataclass

from errors import UsageError
from ring.multipoly import MultiPoly
from ring.scalar import Ring, Scalar
from triangle.params import Params


@dataclass(frozen=True)
class Triangle:
    """Rows 0..N of the Stirling-Whitney-Riordan triangle, row n holding T_{n,0..n}."""

    params: Params
    rows: tuple[tuple[Scalar, ...], ...]

    @property
    def ring(self) -> Ring:
        return self.params.ring

    @property
    def max_row(self) -> int:
        return len(self.rows) - 1

    def entry(self, n: int, k: int) -> Scalar:
        """T_{n,k}, zero outside 0 <= k <= n."""
        if n < 0 or n > self.max_row:
            raise UsageError(f"Row {n} outside the built range 0..{self.max_row}")
        if k < 0 or k > n:
            return self.ring.zero()
        return self.rows[n][k]

    def column(self, k: int) -> list[Scalar]:
        return [self.entry(n, k) for n in range(len(self.rows))]

    def matrix(self, size: int | None = None) -> list[list[Scalar]]:
        """Leading size×size block as a dense lower-triangular matrix."""
        size = len(self.rows) if size is None else size
        if size > len(self.rows):
            raise UsageError(f"Requested a {size}x{size} block from {len(self.rows)} rows")
        return [[self.entry(n, k) for k in range(size)] for n in range(size)]


@dataclass(frozen=True)
class Witness:
    """First cell where two constructions disagree."""

    n: int
    k: int
    expected: Scalar
    got: Scalar


def recurrence_coefficients(params: Params, k: int) -> tuple[Scalar, Scalar, Scalar]:
    """
    Weights of T_{n-1,k-1}, T_{n-1,k}, T_{n-1,k+1} in T_{n,k}:
    (b1k+b2, (2λb1+a1)k + a2 + λ(b1+b2), λ(a1+λb1)(k+1)).
    """
    a1, a2, b1, b2, lam = params.values()
    up = b1 * k + b2
    level = (2 * lam * b1 + a1) * k + a2 + lam * (b1 + b2)
    down = lam * (a1 + lam * b1) * (k + 1)
    return up, level, down


def next_row(params: Params, previous: tuple[Scalar, ...]) -> tuple[Scalar, ...]:
    n = len(previous)
    zero = params.ring.zero()
    row = []
    for k in range(n + 1):
        up, level, down = recurrence_coefficients(params, k)
        value = zero
        if k >= 1:
            value = value + up * previous[k - 1]
        if k < n:
            value = value + level * previous[k]
        if k + 1 < n:
            value = value + down * previous[k + 1]
        row.append(value)
    return tuple(row)


def build_triangle(params: Params, max_row: int) -> Triangle:
    """Rows 0..max_row from the three-term recurrence with T_{0,0} = 1."""
    if max_row < 0:
        raise UsageError(f"Row count must be >= 0, got {max_row}")

    rows = [(params.ring.one(),)]
    for n in range(1, max_row + 1):
        rows.append(next_row(params, rows[-1]))
        logging.debug(f"Built row {n} of the triangle ({params.ring.vars or 'rational'})")
    return Triangle(params=params, rows=tuple(rows))


def verify_recurrence(tri: Triangle) -> Witness | None:
    """Rebuild each row from the previous one and compare."""
    if tri.rows[0] != (tri.ring.one(),):
        return Witness(0, 0, tri.ring.one(), tri.rows[0][0])
    for n in range(1, len(tri.rows)):
        rebuilt = next_row(tri.params, tri.rows[n - 1])
        if len(tri.rows[n]) != n + 1:
            return Witness(n, len(tri.rows[n]), tri.ring.zero(), tri.ring.zero())
        for k, (expected, got) in enumerate(zip(rebuilt, tri.rows[n])):
            if expected != got:
                return Witness(n, k, expected, got)
    return None


def q_ring(ring: Ring, var: str = "q") -> Ring:
    return ring.extended(var)


def row_polynomial(tri: Triangle, n: int, var: str = "q") -> MultiPoly:
    """T_n(q) = sum_k T_{n,k} q^k over the triangle's ring extended by q."""
    ring = q_ring(tri.ring, var)
    q = ring.gen(var)
    result = ring.zero()
    power = ring.one()
    for k in range(n + 1):
        result = result + ring.embed(tri.entry(n, k)) * power
        power = power * q
    return result


def verify_row_recurrence(tri: Triangle, var: str = "q") -> Witness | None:
    """
    T_n(q) = [a2+(b1+b2)(q+λ)]T_{n-1}(q) + (q+λ)[a1+b1(q+λ)]T'_{n-1}(q),
    with the derivative taken formally in q.
    """
    ring = q_ring(tri.ring, var)
    a1, a2, b1, b2, lam = (ring.embed(v) for v in tri.params.values())
    p = ring.gen(var) + lam
    previous = row_polynomial(tri, 0, var)
    for n in range(1, len(tri.rows)):
        current = row_polynomial(tri, n, var)
        expected = (a2 + (b1 + b2) * p) * previous + p * (a1 + b1 * p) * previous.derivative(var)
        if expected != current:
            return Witness(n, -1, expected, current)
        previous = current
    return None
