# tests/test_build.py
import pytest

from errors import UsageError
from ring.scalar import Ring
from triangle.build import build_triangle, row_polynomial, verify_recurrence, verify_row_recurrence
from triangle.classical import (
    falling_factorial,
    fubini_number,
    ordered_partition_entry,
    riordan_entry,
    stirling2_number,
    whitney_entry,
)
from triangle.params import Params
from triangle.specializations import parse_specialization


def test_stirling_rows(stirling):
    tri = build_triangle(stirling, 4)
    assert tri.rows[4] == (0, 1, 7, 6, 1)
    assert tri.column(1) == [0, 1, 1, 1, 1]


def test_known_rows(riordan, falling):
    assert build_triangle(riordan, 3).rows[2:] == ((2, 3, 1), (5, 10, 6, 1))
    assert build_triangle(falling, 3).rows[3] == (1, 3, 6, 6)
    assert build_triangle(parse_specialization("a154602"), 3).rows[3] == (11, 19, 9, 1)


@pytest.mark.parametrize(
    "name, oracle",
    [
        ("stirling2", stirling2_number),
        ("tanny_geometric", ordered_partition_entry),
        ("riordan_a049020", riordan_entry),
        ("falling_factorial_a008279", falling_factorial),
        ("whitney:2", lambda n, k: whitney_entry(2, n, k)),
        ("whitney:1", lambda n, k: stirling2_number(n + 1, k + 1)),
    ],
)
def test_classical_closed_forms(name, oracle):
    tri = build_triangle(parse_specialization(name), 9)
    for n in range(10):
        assert list(tri.rows[n]) == [oracle(n, k) for k in range(n + 1)], n


def test_identity_parameters():
    tri = build_triangle(Params.numeric(0, 0, 0, 1, 0), 5)
    for n, row in enumerate(tri.rows):
        assert row[n] == 1
        assert all(value == 0 for value in row[:n])


def test_entry_bounds(stirling):
    tri = build_triangle(stirling, 3)
    assert tri.entry(2, 5) == 0
    assert tri.entry(2, -1) == 0
    with pytest.raises(UsageError):
        tri.entry(4, 0)
    with pytest.raises(UsageError):
        tri.matrix(5)
    with pytest.raises(UsageError):
        build_triangle(stirling, -1)


def test_symbolic_rows_specialize(symbolic):
    tri = build_triangle(symbolic, 5)
    assert verify_recurrence(tri) is None
    assert verify_row_recurrence(tri) is None
    point = {"a1": 2, "a2": 1, "b1": 3, "b2": 1, "lam": 1}
    numeric = build_triangle(Params.numeric(2, 1, 3, 1, 1), 5)
    for n in range(6):
        assert [value.bind(point) for value in tri.rows[n]] == list(numeric.rows[n])


def test_symbolic_entries_are_nonnegative(symbolic):
    tri = build_triangle(symbolic, 5)
    assert all(value.is_coefficientwise_nonneg() for row in tri.rows for value in row)


def test_row_polynomial(stirling):
    tri = build_triangle(stirling, 3)
    q = Ring(("q",)).gen("q")
    assert row_polynomial(tri, 3) == q ** 3 + 3 * q ** 2 + q


def test_verify_recurrence_reports_tampering(stirling):
    tri = build_triangle(stirling, 4)
    rows = list(tri.rows)
    rows[3] = (0, 1, 4, 1)
    tampered = type(tri)(params=tri.params, rows=tuple(rows))
    witness = verify_recurrence(tampered)
    assert (witness.n, witness.k, witness.expected, witness.got) == (3, 2, 3, 4)
    assert verify_row_recurrence(tampered).n == 3


def test_ordered_partition_rows_sum_to_fubini_numbers():
    tri = build_triangle(parse_specialization("tanny_geometric"), 7)
    assert [sum(tri.rows[n]) for n in range(8)] == [fubini_number(n) for n in range(8)]
    assert [fubini_number(n) for n in range(6)] == [1, 1, 3, 13, 75, 541]
