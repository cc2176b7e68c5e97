# triangle/production.py
import logging
from dataclasses import dataclass

from errors import UsageError
from ring.scalar import Scalar
from triangle.build import Triangle, Witness
from triangle.params import Params


@dataclass(frozen=True)
class ProductionMatrix:
    """
    Tridiagonal J with superdiagonal r_n, diagonal s_n and subdiagonal t_n.

    r[n] = r_n and s[n] = s_n for n = 0..size-1; t[n] = t_n, with t[0] = 0
    (t_0 never appears in J).
    """

    r: tuple[Scalar, ...]
    s: tuple[Scalar, ...]
    t: tuple[Scalar, ...]

    @property
    def size(self) -> int:
        return len(self.s)

    def entry(self, i: int, j: int) -> Scalar:
        if j == i:
            return self.s[i]
        if j == i + 1:
            return self.r[i]
        if j == i - 1:
            return self.t[i]
        return self.s[0] * 0

    def as_matrix(self) -> list[list[Scalar]]:
        return [[self.entry(i, j) for j in range(self.size)] for i in range(self.size)]


def production_matrix(params: Params, size: int) -> ProductionMatrix:
    """
    r_n = b1·n + b1 + b2,
    s_n = (2λb1 + a1)n + a2 + λ(b1 + b2),
    t_n = λ(a1 + λb1)n.
    """
    a1, a2, b1, b2, lam = params.values()
    r = tuple(b1 * n + b1 + b2 for n in range(size))
    s = tuple((2 * lam * b1 + a1) * n + a2 + lam * (b1 + b2) for n in range(size))
    t = tuple(lam * (a1 + lam * b1) * n for n in range(size))
    return ProductionMatrix(r=r, s=s, t=t)


def conjugate_production_matrix(params: Params, size: int) -> ProductionMatrix:
    """
    J* = D J D^{-1} with D = diag(λ^{-n}): r*_n = λ·r_n, t*_n = (a1 + λb1)n.
    Its minors are polynomials whenever those of J are, and J is x-TP iff J* is.
    """
    a1, _, b1, _, lam = params.values()
    base = production_matrix(params, size)
    r = tuple(lam * value for value in base.r)
    t = tuple((a1 + lam * b1) * n for n in range(size))
    return ProductionMatrix(r=r, s=base.s, t=t)


def verify_production(tri: Triangle) -> Witness | None:
    """
    Check that row n+1 equals (row n)·J on the finite truncation, i.e.
    T_{n+1,k} = T_{n,k-1} r_{k-1} + T_{n,k} s_k + T_{n,k+1} t_{k+1}.
    """
    if len(tri.rows) < 2:
        raise UsageError("verify_production needs at least two rows")

    j = production_matrix(tri.params, len(tri.rows) + 1)
    zero = tri.ring.zero()
    for n in range(len(tri.rows) - 1):
        row = tri.rows[n]
        for k in range(n + 2):
            value = zero
            for i, entry in enumerate(row):
                if abs(i - k) <= 1:
                    value = value + entry * j.entry(i, k)
            if value != tri.entry(n + 1, k):
                logging.debug(f"Production check failed at ({n + 1}, {k})")
                return Witness(n + 1, k, value, tri.entry(n + 1, k))
    return None
