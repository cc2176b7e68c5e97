# tests/conftest.py
import random
from fractions import Fraction
from pathlib import Path

import pytest

from environment import get_settings
from triangle.params import Params
from triangle.specializations import specialization_params

ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture
def anyio_backend():
    return "asyncio"


@pytest.fixture(autouse=True)
def fresh_settings():
    # settings are cached per process; tests that touch SWR_* need a clean read
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def repo_root() -> Path:
    return ROOT


@pytest.fixture
def stirling() -> Params:
    return specialization_params("stirling2")


@pytest.fixture
def riordan() -> Params:
    return specialization_params("riordan_a049020")


@pytest.fixture
def falling() -> Params:
    return specialization_params("falling_factorial_a008279")


@pytest.fixture
def symbolic() -> Params:
    return Params.symbolic()


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20241017)


def _rational(rng: random.Random, top: int, allow_zero: bool = True) -> Fraction:
    low = 0 if allow_zero else 1
    return Fraction(rng.randint(low, top), rng.randint(1, 3))


@pytest.fixture
def random_params(rng):
    """Rational points with a chosen zero pattern of (a1, b1); other parameters may be negative."""

    def make(a1_zero: bool = False, b1_zero: bool = False) -> Params:
        a1 = Fraction(0) if a1_zero else _rational(rng, 4, allow_zero=False) * rng.choice((1, -1))
        b1 = Fraction(0) if b1_zero else _rational(rng, 4, allow_zero=False) * rng.choice((1, -1))
        a2, b2, lam = (_rational(rng, 4) * rng.choice((1, -1)) for _ in range(3))
        return Params.numeric(a1, a2, b1, b2, lam)

    return make


@pytest.fixture
def regime_params(rng):
    """
    Nonnegative rational points with a1(b1+b2) >= b1·a2, a1 > 0, a2 > 0 and
    b1 + b2 > 0: the strict real-rootedness regime.
    """

    def make() -> Params:
        a1 = _rational(rng, 4, allow_zero=False)
        b1 = _rational(rng, 3)
        b2 = _rational(rng, 3, allow_zero=b1 != 0)
        lam = _rational(rng, 3)
        if b1 == 0:
            a2 = _rational(rng, 4, allow_zero=False)
        else:
            a2 = a1 * (b1 + b2) / b1 * Fraction(rng.randint(1, 10), 10)
        return Params.numeric(a1, a2, b1, b2, lam)

    return make
