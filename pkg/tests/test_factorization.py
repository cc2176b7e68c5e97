# tests/test_factorization.py
from triangle.build import build_triangle
from triangle.classical import stirling2_number
from triangle.factorization import (
    a_production_matrix,
    a_triangle,
    b_triangle,
    factor_triangles,
    multiply_lower,
    verify_a_production,
    verify_factorization,
)
from triangle.params import Params


def test_a_triangle_is_stirling_for_riordan(riordan):
    a = a_triangle(riordan, 5)
    for n in range(6):
        assert list(a[n]) == [stirling2_number(n, k) for k in range(n + 1)]


def test_b_triangle_is_pascal(riordan, stirling):
    assert b_triangle(riordan, 3)[3] == (1, 3, 3, 1)
    # 0^0 = 1 keeps the diagonal when λ = 0
    assert b_triangle(stirling, 2) == ((1,), (0, 1), (0, 0, 1))


def test_product_rebuilds_riordan(riordan):
    a, b = factor_triangles(riordan, 3)
    assert multiply_lower(a, b, 0)[3] == (5, 10, 6, 1)


def test_verify_factorization(symbolic, random_params):
    assert verify_factorization(build_triangle(symbolic, 4)) is None
    for _ in range(5):
        params = random_params()
        assert verify_factorization(build_triangle(params, 6)) is None
        assert verify_a_production(params, 6) is None
    assert verify_a_production(symbolic, 4) is None


def test_factorization_witness():
    params = Params.numeric(1, 0, 0, 1, 1)
    tri = build_triangle(params, 2)
    wrong = type(tri)(params=Params.numeric(1, 0, 0, 1, 2), rows=tri.rows)
    witness = verify_factorization(wrong)
    assert (witness.n, witness.k) == (1, 0)


def test_a_production_matrix(stirling):
    j = a_production_matrix(stirling, 4)
    assert j.as_matrix() == [
        [0, 1, 0, 0],
        [0, 1, 1, 0],
        [0, 0, 2, 1],
        [0, 0, 0, 3],
    ]
