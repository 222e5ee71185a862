import random

import pytest

from ckbundle import IntMatrix

A2 = IntMatrix([[5, 2], [2, 1]])
A3 = IntMatrix([[5, 1], [4, 1]])

FIB = IntMatrix([[1, 1], [1, 0]])


def a1(n: int) -> IntMatrix:
    return IntMatrix([[1, n], [0, 1]])


def random_matrix(rng: random.Random, rows: int, cols: int, lo: int = -20, hi: int = 20) -> IntMatrix:
    return IntMatrix([[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)])


def random_nonnegative(rng: random.Random, n: int, hi: int = 5) -> IntMatrix:
    return IntMatrix([[rng.randint(0, hi) for _ in range(n)] for _ in range(n)])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
