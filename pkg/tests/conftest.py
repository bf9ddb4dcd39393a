import random
from pathlib import Path

import pytest

from galerobust import IntegerMatrix, gale_transform, is_positively_graded, rank
from galerobust.errors import ZeroRowError
from galerobust.intlinalg import column_hnf

DATA = Path(__file__).parent / "data"

# The worked running example: 4x6, corank 2, strongly robust.
EXAMPLE_A = (
    (1, 0, 1, 0, 0, 0),
    (0, 1, 0, 0, 1, 0),
    (0, 1, 0, 1, 0, 1),
    (-2, 0, 0, 0, -4, 5),
)
EXAMPLE_GALE_ROWS = ((1, 2), (-2, 1), (-1, -2), (0, -1), (2, -1), (2, 0))
EXAMPLE_REDUCED_ROWS = ((-2, 1), (-1, -2), (2, -1), (1, 0), (1, 2), (0, 1))
EXAMPLE_UNION = {
    (1, 0), (-1, 0), (1, 1), (-1, -1), (1, 2), (-1, -2),
    (0, 1), (0, -1), (1, -1), (-1, 1), (2, -1), (-2, 1),
}
EXAMPLE_BINOMIALS = {
    ((0, 5, 0, 0, 0, 0), (0, 0, 0, 1, 5, 4)),
    ((1, 0, 0, 0, 2, 2), (0, 2, 1, 0, 0, 0)),
    ((1, 3, 0, 0, 0, 0), (0, 0, 1, 1, 3, 2)),
    ((2, 1, 0, 0, 0, 0), (0, 0, 2, 1, 1, 0)),
    ((3, 0, 0, 0, 1, 2), (0, 1, 3, 1, 0, 0)),
    ((5, 0, 0, 0, 0, 2), (0, 0, 5, 2, 0, 0)),
}

TWISTED_CUBIC = ((3, 2, 1, 0), (0, 1, 2, 3))


@pytest.fixture(scope="session")
def example_matrix() -> IntegerMatrix:
    return IntegerMatrix(EXAMPLE_A)


@pytest.fixture(scope="session")
def twisted_cubic() -> IntegerMatrix:
    return IntegerMatrix(TWISTED_CUBIC)


def lattices_equal(m1: IntegerMatrix, m2: IntegerMatrix) -> bool:
    """Column lattices coincide iff their canonical column forms do."""
    return column_hnf(m1) == column_hnf(m2)


def random_valid_instances(count: int, seed: int, sizes=(4, 5, 6, 7), bound: int = 4):
    """Random matrices filtered to corank 2, positive grading, no zero rows."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.choice(sizes)
        m = IntegerMatrix(
            [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n - 2)]
        )
        if rank(m) != n - 2:
            continue
        try:
            b = gale_transform(m)
        except ZeroRowError:
            continue
        if not is_positively_graded(b):
            continue
        out.append(m)
    return out


@pytest.fixture(scope="session")
def acceptance_suite():
    """The shared 100-instance random suite used by the acceptance tests."""
    return random_valid_instances(100, seed=20260810)
