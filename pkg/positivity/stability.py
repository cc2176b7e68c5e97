# positivity/stability.py
import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from errors import PreconditionError, UsageError
from jacobi.first_column import column0_triangle
from positivity.univariate import UniPoly, squarefree_part
from triangle.build import Triangle
from triangle.params import Params

# floating-point roots with real part at most this count as closed left half-plane
NUMERIC_TOLERANCE = 1e-9


@dataclass(frozen=True)
class StabilityReport:
    stable: bool
    method: str  # "exact", "numeric" or "vacuous"
    max_real_part: float | None
    zero_polynomial: bool = False


def turan_polynomial(tri: Triangle, n: int) -> UniPoly:
    """T_{n+1}(q)·T_{n-1}(q) - T_n(q)^2."""
    if not tri.params.is_numeric:
        raise PreconditionError("Turán polynomials are built from numeric rows")
    if n < 1 or n + 1 > tri.max_row:
        raise UsageError(f"Turán polynomial {n} needs rows {n - 1}..{n + 1}, the triangle has 0..{tri.max_row}")
    below, middle, above = (UniPoly(tri.rows[m]) for m in (n - 1, n, n + 1))
    return above * below - middle * middle


def routh_first_column(p: UniPoly) -> list[Fraction] | None:
    """
    First column of the Routh array (highest power first), or None when a
    zero pivot stops the exact construction.
    """
    coeffs = list(reversed(p.coeffs))
    if coeffs[0] < 0:
        coeffs = [-c for c in coeffs]
    previous = coeffs[0::2]
    current = coeffs[1::2]
    column = [previous[0]]
    for _ in range(p.degree):
        current = current + [Fraction(0)] * (len(previous) - len(current))
        if current[0] == 0:
            return None
        column.append(current[0])
        following = [
            (current[0] * previous[j + 1] - previous[0] * current[j + 1]) / current[0]
            for j in range(len(previous) - 1)
        ]
        previous, current = current, following or [Fraction(0)]
    return column


def max_real_part(p: UniPoly) -> float | None:
    """Largest real part among the floating-point roots of p (None without roots)."""
    if p.degree < 1:
        return None
    roots = np.roots([float(c) for c in reversed(p.coeffs)])
    return float(np.max(roots.real))


def stability_check(p: UniPoly) -> StabilityReport:
    """
    Weak Hurwitz stability: every root in the closed left half-plane.

    Roots at 0 are split off first. The squarefree rest gets an exact Routh
    test: a positive first column certifies stability, a sign change refutes
    it. A zero pivot (which boundary roots on the imaginary axis cause)
    falls back to floating-point roots within NUMERIC_TOLERANCE.
    """
    if p.is_zero():
        return StabilityReport(stable=True, method="vacuous", max_real_part=None, zero_polynomial=True)

    reduced = squarefree_part(p)
    numeric_max = max_real_part(reduced)
    rest, _ = reduced.strip_zero_roots()
    if rest.degree < 1:
        return StabilityReport(stable=True, method="exact", max_real_part=numeric_max)

    column = routh_first_column(rest)
    if column is not None:
        stable = all(c > 0 for c in column)
        return StabilityReport(stable=stable, method="exact", max_real_part=numeric_max)

    logging.debug(f"Zero pivot in the Routh array of a degree-{rest.degree} polynomial, using numeric roots")
    return StabilityReport(
        stable=numeric_max <= NUMERIC_TOLERANCE,
        method="numeric",
        max_real_part=numeric_max,
    )


def column0_turan(params: Params, n: int) -> UniPoly:
    """𝒯_{n+1}(λ)𝒯_{n-1}(λ) - 𝒯_n(λ)^2 with the other four parameters bound."""
    if n < 1:
        raise UsageError(f"Turán polynomials start at n = 1, got {n}")
    column = column0_triangle(params, n + 1)
    below, middle, above = (UniPoly.from_multipoly(column.entry(m, 0), "lam") for m in (n - 1, n, n + 1))
    return above * below - middle * middle
