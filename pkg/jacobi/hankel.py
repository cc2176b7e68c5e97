# jacobi/hankel.py
from typing import Sequence

from errors import UsageError
from jacobi.coefficients import JacobiCF
from ring.determinant import bareiss_determinant
from ring.scalar import Scalar, common_ring


def hankel_matrix(seq: Sequence[Scalar], size: int, shift: int = 0) -> list[list[Scalar]]:
    """[seq_{i+j+shift}] for 0 <= i, j < size."""
    if shift not in (0, 1):
        raise UsageError(f"Hankel shift must be 0 or 1, got {shift}")
    needed = 2 * size - 1 + shift if size else 0
    if len(seq) < needed:
        raise UsageError(f"A {size}x{size} Hankel matrix with shift {shift} needs {needed} terms, got {len(seq)}")
    return [[seq[i + j + shift] for j in range(size)] for i in range(size)]


def hankel_det_direct(seq: Sequence[Scalar], size: int, shift: int = 0) -> Scalar:
    """Determinant of the Hankel matrix by fraction-free elimination."""
    matrix = hankel_matrix(seq, size, shift)
    return bareiss_determinant(matrix, one=common_ring(seq).one())


def q_sequence(cf: JacobiCF, size: int) -> list[Scalar]:
    """Q_0 = 1, Q_1 = s_0 and Q_{n+1} = s_n·Q_n - r_n·Q_{n-1}."""
    if size > cf.horizon:
        raise UsageError(f"Q_{size} needs horizon {size}, the fraction stores {cf.horizon}")
    q = [cf.ring.one()]
    if size >= 1:
        q.append(cf.s[0])
    for n in range(1, size):
        q.append(cf.s[n] * q[n] - cf.r_at(n) * q[n - 1])
    return q


def hankel_det_via_cf(cf: JacobiCF, size: int, shift: int = 0, u0: Scalar | None = None) -> Scalar:
    """
    Hankel determinant of the moments of `cf`, read off its coefficients:
    u0^n·r_1^{n-1}·r_2^{n-2}···r_{n-1} for shift 0, times Q_n for shift 1.
    `u0` is the leading moment (1 for a plain J-fraction).
    """
    if shift not in (0, 1):
        raise UsageError(f"Hankel shift must be 0 or 1, got {shift}")
    if size > cf.horizon:
        raise UsageError(f"A size-{size} determinant needs horizon {size}, the fraction stores {cf.horizon}")

    result = cf.ring.one()
    for k in range(1, size):
        result = result * cf.r_at(k) ** (size - k)
    if u0 is not None:
        result = result * cf.ring.embed(u0) ** size
    if shift == 1:
        result = result * q_sequence(cf, size)[size]
    return result
