# triangle/classical.py
"""Closed forms for the classical members of the family, used as independent oracles."""
from math import comb, factorial


def stirling2_number(n: int, k: int) -> int:
    """S(n,k) from k!·S(n,k) = sum_j (-1)^{k-j} C(k,j) j^n."""
    if n < 0 or k < 0 or k > n:
        return 0
    if k == 0:
        return 1 if n == 0 else 0
    total = sum((-1) ** (k - j) * comb(k, j) * j ** n for j in range(1, k + 1))
    return total // factorial(k)


def bell_number(n: int) -> int:
    return sum(stirling2_number(n, k) for k in range(n + 1))


def ordered_partition_entry(n: int, k: int) -> int:
    """Tanny's geometric numbers k!·S(n,k)."""
    return factorial(k) * stirling2_number(n, k)


def fubini_number(n: int) -> int:
    return sum(ordered_partition_entry(n, k) for k in range(n + 1))


def riordan_entry(n: int, k: int) -> int:
    """Set partitions of [n] with k distinguished blocks: sum_i S(n,i) C(i,k)."""
    return sum(stirling2_number(n, i) * comb(i, k) for i in range(n + 1))


def falling_factorial(n: int, k: int) -> int:
    """n!/(n-k)!."""
    if k < 0 or k > n:
        return 0
    return factorial(n) // factorial(n - k)


def whitney_entry(m: int, n: int, k: int) -> int:
    """
    Whitney numbers of the second kind of the Dowling-type lattice,
    W_m(n,k) = sum_i C(n,i) m^{i-k} S(i,k).
    """
    return sum(comb(n, i) * m ** (i - k) * stirling2_number(i, k) for i in range(k, n + 1))
