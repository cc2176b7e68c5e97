# tests/test_production.py
import pytest

from errors import UsageError
from triangle.build import Triangle, build_triangle
from triangle.params import Params
from triangle.production import conjugate_production_matrix, production_matrix, verify_production


def test_stirling_production_matrix(stirling):
    j = production_matrix(stirling, 3)
    assert j.as_matrix() == [[0, 1, 0], [0, 1, 1], [0, 0, 2]]


def test_riordan_production_matrix(riordan):
    j = production_matrix(riordan, 4)
    assert list(j.r) == [1, 1, 1, 1]
    assert list(j.s) == [1, 2, 3, 4]
    assert list(j.t) == [0, 1, 2, 3]
    assert j.entry(2, 1) == 2
    assert j.entry(0, 2) == 0


def test_conjugate_keeps_diagonal_and_products():
    params = Params.numeric(2, 1, 1, 3, 2)
    j = production_matrix(params, 5)
    star = conjugate_production_matrix(params, 5)
    assert star.s == j.s
    for n in range(1, 5):
        assert star.r[n - 1] * star.t[n] == j.r[n - 1] * j.t[n]


def test_verify_production(random_params, symbolic):
    assert verify_production(build_triangle(symbolic, 4)) is None
    for _ in range(5):
        assert verify_production(build_triangle(random_params(), 6)) is None


def test_verify_production_finds_tampering(riordan):
    tri = build_triangle(riordan, 3)
    tampered = Triangle(params=riordan, rows=tri.rows[:3] + ((5, 10, 7, 1),))
    witness = verify_production(tampered)
    assert (witness.n, witness.k, witness.expected, witness.got) == (3, 2, 6, 7)


def test_verify_production_needs_two_rows(stirling):
    with pytest.raises(UsageError):
        verify_production(build_triangle(stirling, 0))
