# tests/test_stability.py
import pytest

from errors import PreconditionError, UsageError
from positivity.stability import column0_turan, routh_first_column, stability_check, turan_polynomial
from positivity.univariate import UniPoly
from triangle.build import build_triangle
from triangle.params import Params


def test_unstable_linear():
    report = stability_check(UniPoly([-1, 1]))
    assert not report.stable
    assert report.method == "exact"
    assert report.max_real_part == pytest.approx(1.0)


def test_imaginary_axis_roots_fall_back_to_numeric():
    assert routh_first_column(UniPoly([1, 0, 1])) is None
    report = stability_check(UniPoly([1, 0, 1]))
    assert report.stable and report.method == "numeric"


def test_routh_column():
    # (q + 1)(q + 2)(q + 3)
    p = UniPoly([6, 11, 6, 1])
    assert routh_first_column(p) == [1, 6, 10, 6]
    assert stability_check(p).stable


def test_zero_roots_are_split_off():
    report = stability_check(UniPoly([0, 0, 2, 1]))
    assert report.stable and report.method == "exact"
    vacuous = stability_check(UniPoly())
    assert vacuous.stable and vacuous.zero_polynomial


def test_stirling_turan(stirling):
    tri = build_triangle(stirling, 2)
    polynomial = turan_polynomial(tri, 1)
    assert polynomial == UniPoly([0, 1])
    assert stability_check(polynomial).stable


def test_turan_family():
    params = Params.numeric(1, 1, 0, 1, 0)
    tri = build_triangle(params, 3)
    assert stability_check(turan_polynomial(tri, 2)).stable


def test_regime_points(regime_params):
    for _ in range(5):
        params = regime_params()
        tri = build_triangle(params, 6)
        for n in range(1, 6):
            assert stability_check(turan_polynomial(tri, n)).stable


def test_first_column(stirling, riordan):
    assert column0_turan(stirling, 1) == UniPoly([0, 1])
    for n in range(1, 4):
        assert stability_check(column0_turan(riordan, n)).stable


def test_preconditions(stirling, symbolic):
    with pytest.raises(PreconditionError):
        turan_polynomial(build_triangle(symbolic, 2), 1)
    with pytest.raises(UsageError):
        turan_polynomial(build_triangle(stirling, 2), 2)
    with pytest.raises(UsageError):
        column0_turan(stirling, 0)
