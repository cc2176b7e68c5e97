# tests/test_series.py
import pytest

from errors import UsageError
from jacobi.coefficients import jacobi_coeffs_col0, jacobi_coeffs_rows
from jacobi.series import cf_to_series, cf_to_series_nested
from triangle.build import build_triangle, row_polynomial
from triangle.classical import bell_number


def test_bell_numbers(stirling):
    cf = jacobi_coeffs_rows(stirling, 8, q=1)
    assert cf_to_series(cf, 8) == [bell_number(n) for n in range(9)]


def test_row_polynomials(riordan, symbolic):
    for params, rows in ((riordan, 6), (symbolic, 4)):
        tri = build_triangle(params, rows)
        series = cf_to_series(jacobi_coeffs_rows(params, rows), rows)
        assert series == [row_polynomial(tri, n) for n in range(rows + 1)]


def test_random_points(random_params):
    for a1_zero in (False, True):
        params = random_params(a1_zero=a1_zero)
        tri = build_triangle(params, 6)
        series = cf_to_series(jacobi_coeffs_rows(params, 6, q=2), 6)
        assert series == [sum(tri.entry(n, k) * 2 ** k for k in range(n + 1)) for n in range(7)]


def test_nested_fraction_agrees(stirling, symbolic):
    cf = jacobi_coeffs_rows(stirling, 6)
    assert cf_to_series_nested(cf, 6) == cf_to_series(cf, 6)
    cf = jacobi_coeffs_col0(symbolic, 4)
    assert cf_to_series_nested(cf, 4) == cf_to_series(cf, 4)


def test_first_column(riordan):
    tri = build_triangle(riordan, 6)
    assert cf_to_series(jacobi_coeffs_col0(riordan, 6), 6) == tri.column(0)


def test_order_limits(stirling):
    cf = jacobi_coeffs_rows(stirling, 3, q=1)
    assert cf_to_series(cf, 0) == [1]
    with pytest.raises(UsageError):
        cf_to_series(cf, 4)
    with pytest.raises(UsageError):
        cf_to_series(cf, -1)
