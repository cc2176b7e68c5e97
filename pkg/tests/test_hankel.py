# tests/test_hankel.py
import pytest

from errors import UsageError
from jacobi.coefficients import jacobi_coeffs_rows
from jacobi.hankel import hankel_det_direct, hankel_det_via_cf, hankel_matrix, q_sequence
from jacobi.series import cf_to_series
from triangle.specializations import parse_specialization


def test_bell_determinants(stirling):
    cf = jacobi_coeffs_rows(stirling, 5, q=1)
    bell = cf_to_series(cf, 5)
    assert hankel_det_direct(bell, 3, 0) == hankel_det_via_cf(cf, 3, 0) == 2
    assert hankel_det_direct(bell, 3, 1) == hankel_det_via_cf(cf, 3, 1) == 2
    assert q_sequence(cf, 3) == [1, 1, 1, 1]


def test_fubini_determinant():
    cf = jacobi_coeffs_rows(parse_specialization("tanny_geometric"), 5, q=1)
    fubini = cf_to_series(cf, 4)
    assert fubini == [1, 1, 3, 13, 75]
    assert hankel_det_direct(fubini, 3) == hankel_det_via_cf(cf, 3) == 32


def test_symbolic_identity(symbolic):
    cf = jacobi_coeffs_rows(symbolic, 4)
    series = cf_to_series(cf, 4)
    for shift in (0, 1):
        for size in (1, 2):
            assert hankel_det_direct(series, size, shift) == hankel_det_via_cf(cf, size, shift)


@pytest.mark.slow
def test_symbolic_identity_size_three(symbolic):
    cf = jacobi_coeffs_rows(symbolic, 6)
    series = cf_to_series(cf, 6)
    assert hankel_det_direct(series, 3, 1) == hankel_det_via_cf(cf, 3, 1)


def test_sequence_without_fraction():
    assert hankel_det_direct([1, 2, 1], 2) == -3


def test_leading_moment(stirling):
    cf = jacobi_coeffs_rows(stirling, 3, q=1)
    assert hankel_det_via_cf(cf, 2, u0=3) == 9 * hankel_det_via_cf(cf, 2)


def test_matrix_errors():
    with pytest.raises(UsageError):
        hankel_matrix([1, 2, 3], 2, shift=1)
    with pytest.raises(UsageError):
        hankel_matrix([1, 2, 3], 1, shift=2)
    assert hankel_matrix([1, 2, 3, 4], 2, shift=1) == [[2, 3], [3, 4]]
