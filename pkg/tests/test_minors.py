# tests/test_minors.py
import pytest

from errors import UsageError
from positivity.minors import index_pairs, minor, sm_check, tp_check
from ring.scalar import Ring
from triangle.build import build_triangle
from triangle.classical import bell_number
from triangle.production import production_matrix


def test_constructed_counterexample():
    witness = tp_check([[1, 2], [3, 1]], 2)
    assert (witness.rows, witness.cols, witness.minor) == ((0, 1), (0, 1), -5)


def test_first_order_violation_comes_first():
    witness = tp_check([[1, -1], [3, 1]], 2)
    assert (witness.rows, witness.cols, witness.minor) == ((0,), (1,), -1)


def test_stirling_matrix(stirling):
    tri = build_triangle(stirling, 6)
    assert tp_check(tri.matrix(7), 4, lower_triangular=True) is None
    assert tp_check(production_matrix(stirling, 3).as_matrix(), 3) is None


def test_lower_triangular_skips_vanishing_minors():
    full = list(index_pairs(3, 3, 2))
    lower = list(index_pairs(3, 3, 2, lower_triangular=True))
    assert len(full) == 9 + 9
    assert ((0,), (1,)) not in lower
    assert ((1, 2), (0, 1)) in lower
    assert ((0, 1), (1, 2)) not in lower


def test_large_minors_use_elimination():
    matrix = [[1 if i >= j else 0 for j in range(5)] for i in range(5)]
    assert minor(matrix, range(5), range(5)) == 1


def test_symbolic_minors():
    ring = Ring(("q",))
    q = ring.gen("q")
    assert tp_check([[q, ring.one()], [ring.one(), q]], 2).minor == q ** 2 - 1
    assert tp_check([[q + 1, ring.one()], [q, q + 1]], 2) is None


def test_stieltjes_moments():
    assert sm_check([bell_number(n) for n in range(7)], 4) is None
    witness = sm_check([1, 2, 1], 2)
    assert witness.minor == -3


def test_order_errors():
    with pytest.raises(UsageError):
        tp_check([[1, 2], [3, 4]], 3)
    with pytest.raises(UsageError):
        sm_check([1, 1, 1], 0)
