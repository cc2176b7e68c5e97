# positivity/lcx.py
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from errors import UsageError
from ring.scalar import Scalar, is_nonnegative


@dataclass(frozen=True)
class LcxWitness:
    """Entry `index` of L applied `depth` times is negative."""

    depth: int
    index: int
    value: Scalar


def lcx_operator(seq: Sequence[Scalar]) -> list[Scalar]:
    """L(f)_i = f_{i-1}·f_{i+1} - f_i^2, for the interior indices."""
    return [seq[i - 1] * seq[i + 1] - seq[i] * seq[i] for i in range(1, len(seq) - 1)]


def three_x_lcx_check(seq: Sequence[Scalar], depth: int = 3) -> LcxWitness | None:
    """Apply L up to `depth` times; every intermediate sequence must be nonnegative."""
    if len(seq) < 2 * depth + 1:
        raise UsageError(f"Applying L {depth} times needs at least {2 * depth + 1} terms, got {len(seq)}")

    current = list(seq)
    for level in range(1, depth + 1):
        current = lcx_operator(current)
        for index, value in enumerate(current):
            if not is_nonnegative(value):
                return LcxWitness(level, index, value)
    return None


def log_concavity_check(coeffs: Sequence[Fraction]) -> int | None:
    """First interior index i with a_{i-1}·a_{i+1} > a_i^2, else None."""
    for i in range(1, len(coeffs) - 1):
        if coeffs[i - 1] * coeffs[i + 1] > coeffs[i] * coeffs[i]:
            return i
    return None


def newton_check(coeffs: Sequence[Fraction]) -> int | None:
    """
    Newton's inequalities a_k^2 >= a_{k-1}a_{k+1}(1 + 1/k)(1 + 1/(d - k)),
    d the degree. Every real-rooted polynomial satisfies them.
    """
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    d = len(coeffs) - 1
    for k in range(1, d):
        bound = coeffs[k - 1] * coeffs[k + 1] * (1 + Fraction(1, k)) * (1 + Fraction(1, d - k))
        if coeffs[k] * coeffs[k] < bound:
            return k
    return None
