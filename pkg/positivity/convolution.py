# positivity/convolution.py
from math import comb, factorial
from typing import Callable, Sequence

from errors import UsageError
from positivity.minors import MinorWitness, sm_check
from ring.scalar import Scalar
from triangle.build import Triangle

# Stieltjes moment sequences with a known representing measure
SM_SEQUENCES: dict[str, Callable[[int], int]] = {
    "one": lambda n: 1,
    "factorial": factorial,
    "power2": lambda n: 2 ** n,
    "catalan": lambda n: comb(2 * n, n) // (n + 1),
}


def sm_sequence(name: str, length: int) -> list[int]:
    try:
        term = SM_SEQUENCES[name]
    except KeyError:
        raise UsageError(f"Unknown SM sequence '{name}'; known: {', '.join(SM_SEQUENCES)}") from None
    return [term(n) for n in range(length)]


def convolution(tri: Triangle, x_seq: Sequence, y_seq: Sequence) -> list[Scalar]:
    """z_n = sum_k T_{n,k}·x_k·y_{n-k}, for every n the inputs cover."""
    length = min(len(tri.rows), len(x_seq), len(y_seq))
    zero = tri.ring.zero()
    return [
        sum((tri.entry(n, k) * x_seq[k] * y_seq[n - k] for k in range(n + 1)), zero)
        for n in range(length)
    ]


def convolution_sm_check(tri: Triangle, x_id: str, y_id: str, order: int) -> MinorWitness | None:
    """sm_check of the convolution of two registered SM sequences."""
    needed = 2 * order - 1
    if len(tri.rows) < needed:
        raise UsageError(f"An order-{order} Hankel test needs {needed} rows, the triangle has {len(tri.rows)}")
    z = convolution(tri, sm_sequence(x_id, needed), sm_sequence(y_id, needed))
    return sm_check(z, order)
