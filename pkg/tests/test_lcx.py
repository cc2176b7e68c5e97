# tests/test_lcx.py
import pytest

from errors import UsageError
from positivity.lcx import lcx_operator, log_concavity_check, newton_check, three_x_lcx_check
from triangle.classical import bell_number

BELL = [bell_number(n) for n in range(9)]


def test_operator_on_bell_numbers():
    assert lcx_operator(BELL[:5]) == [1, 1, 5]
    assert lcx_operator(lcx_operator(BELL)) == [4, 10, 480, 37544, 4994206]


def test_bell_numbers_are_three_log_convex():
    assert three_x_lcx_check(BELL, 3) is None


def test_witness():
    witness = three_x_lcx_check([1, 2, 1], 1)
    assert (witness.depth, witness.index, witness.value) == (1, 0, -3)
    with pytest.raises(UsageError):
        three_x_lcx_check([1, 2, 3], 2)


def test_log_concavity():
    assert log_concavity_check([1, 3, 1]) is None
    assert log_concavity_check([1, 1, 2]) == 1


def test_newton():
    assert log_concavity_check([1, 1, 1]) is None
    assert newton_check([1, 1, 1]) == 1
    assert newton_check([0, 1, 7, 6, 1]) is None
    assert newton_check([1, 2, 1, 0]) is None
