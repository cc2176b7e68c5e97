# oracle/paths.py
"""
Brute-force weighted Motzkin path enumeration.

Paths are generated one step sequence at a time and weighed by a plain
product; nothing is memoized, so these sums share no code path with the
recurrence or the continued-fraction expansion they are checked against.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from errors import UsageError
from jacobi.coefficients import jacobi_coeffs_rows
from ring.scalar import Scalar
from triangle.params import Params

# 3^10 step sequences at most
DEFAULT_PATH_GUARD = 10


class Step(str, Enum):
    UP = "U"
    LEVEL = "L"
    DOWN = "D"


@dataclass(frozen=True)
class MotzkinPath:
    steps: tuple[Step, ...]

    @property
    def heights(self) -> tuple[int, ...]:
        """Height before each step, then the final height."""
        heights = [0]
        for step in self.steps:
            heights.append(heights[-1] + (step == Step.UP) - (step == Step.DOWN))
        return tuple(heights)

    @property
    def end(self) -> int:
        return self.heights[-1]

    def __str__(self):
        return "".join(step.value for step in self.steps)


@dataclass(frozen=True)
class PathWeights:
    """
    Height-indexed step weights of the triangle's path model:
    u_k = b1·k + b2 + b1, v_k = (2λb1 + a1)k + a2 + λ(b1 + b2), w_k = λ(a1 + λb1)k.
    """

    params: Params

    def u(self, k: int) -> Scalar:
        p = self.params
        return p.b1 * k + p.b2 + p.b1

    def v(self, k: int) -> Scalar:
        p = self.params
        return (2 * p.lam * p.b1 + p.a1) * k + p.a2 + p.lam * (p.b1 + p.b2)

    def w(self, k: int) -> Scalar:
        p = self.params
        return p.lam * (p.a1 + p.lam * p.b1) * k


def motzkin_paths(length: int, end: int | None = None) -> Iterator[MotzkinPath]:
    """All step sequences of `length` staying at height >= 0, depth first; `end` filters the final height."""

    def extend(steps: list[Step], height: int):
        remaining = length - len(steps)
        if remaining == 0:
            if end is None or height == end:
                yield MotzkinPath(tuple(steps))
            return
        # a path that cannot get back down to `end` in time is abandoned
        if end is not None and height - remaining > end:
            return
        for step, move in ((Step.UP, 1), (Step.LEVEL, 0), (Step.DOWN, -1)):
            if height + move < 0:
                continue
            steps.append(step)
            yield from extend(steps, height + move)
            steps.pop()

    yield from extend([], 0)


def _check_guard(n: int, guard: int | None):
    guard = DEFAULT_PATH_GUARD if guard is None else guard
    if n > guard:
        raise UsageError(f"Path enumeration of length {n} exceeds the guard {guard}; raise it explicitly")


def path_weight(path: MotzkinPath, weights: PathWeights) -> Scalar:
    """Up from height i-1 weighs u_{i-1}, level at height i weighs v_i, down from height i+1 weighs w_{i+1}."""
    weight = weights.params.ring.one()
    for step, height in zip(path.steps, path.heights):
        if step == Step.UP:
            weight = weight * weights.u(height)
        elif step == Step.LEVEL:
            weight = weight * weights.v(height)
        else:
            weight = weight * weights.w(height)
    return weight


def enumerate_entry(params: Params, n: int, k: int, guard: int | None = None) -> Scalar:
    """T_{n,k} as the weighted count of paths from (0,0) to (n,k)."""
    _check_guard(n, guard)
    weights = PathWeights(params)
    total = params.ring.zero()
    count = 0
    for path in motzkin_paths(n, end=k):
        total = total + path_weight(path, weights)
        count += 1
    logging.debug(f"Enumerated {count} paths to ({n}, {k})")
    return total


def enumerate_row_polynomial(params: Params, n: int, q_binding=None, guard: int | None = None) -> Scalar:
    """
    T_n(q) as the weighted count of closed paths of length n: up steps weigh
    1, a level step at height i weighs s_i, a down step from height i+1
    weighs r_{i+1}. Without `q_binding` the result is a polynomial in q.
    """
    _check_guard(n, guard)
    cf = jacobi_coeffs_rows(params, max(n, 1), q=q_binding)
    total = cf.ring.zero()
    for path in motzkin_paths(n, end=0):
        weight = cf.ring.one()
        for step, height in zip(path.steps, path.heights):
            if step == Step.LEVEL:
                weight = weight * cf.s[height]
            elif step == Step.DOWN:
                weight = weight * cf.r_at(height)
        total = total + weight
    return total
