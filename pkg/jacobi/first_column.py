# jacobi/first_column.py
"""The first column T_{n,0} viewed as a polynomial in λ."""
import logging

from errors import UsageError
from ring.multipoly import MultiPoly
from triangle.build import Triangle, Witness, build_triangle, row_polynomial
from triangle.params import Params


def with_free_lambda(params: Params) -> Params:
    """The same parameters with λ promoted to an indeterminate."""
    ring = params.ring.extended("lam")
    lam = ring.gen("lam")
    if "lam" in params.ring.vars and params.lam != lam:
        raise UsageError(f"λ is tied to other indeterminates ({params.lam}); cannot free it")
    a1, a2, b1, b2, _ = (ring.embed(v) for v in params.values())
    return Params(a1, a2, b1, b2, lam, ring=ring)


def column0_triangle(params: Params, max_row: int) -> Triangle:
    return build_triangle(with_free_lambda(params), max_row)


def column0_polynomial(params: Params, n: int) -> MultiPoly:
    """𝒯_n(λ) = T_{n,0}, as a polynomial in λ (and any other free parameters)."""
    return column0_triangle(params, n).entry(n, 0)


def first_column_shift_check(params: Params, max_row: int) -> Witness | None:
    """
    𝒯_n(λ + q) = T_n(q) for n <= max_row, as polynomials.

    When λ is a rational in `params` the left side is specialized back to it
    after the shift.
    """
    column = column0_triangle(params, max_row)
    rows = build_triangle(params, max_row)
    ring = column.ring.extended("q")
    shift = ring.gen("lam") + ring.gen("q")
    lam_is_free = "lam" in params.ring.vars

    for n in range(max_row + 1):
        shifted = ring.embed(column.entry(n, 0)).substitute({"lam": shift}, ring.vars)
        if not lam_is_free:
            shifted = shifted.bind({"lam": params.lam})
        expected = row_polynomial(rows, n)
        if shifted != expected:
            logging.debug(f"First-column shift identity fails at n={n}")
            return Witness(n, 0, expected, shifted)
    return None
