import itertools
import random
from math import gcd

import pytest

from galerobust import (
    IntegerMatrix,
    determinant,
    hermite_normal_form,
    kernel_lattice_basis,
    rank,
)
from galerobust.intlinalg import column_hnf

from conftest import EXAMPLE_A, lattices_equal


def test_constructor_rejects_bad_input():
    with pytest.raises(ValueError):
        IntegerMatrix([[1, 2], [3]])
    with pytest.raises(TypeError):
        IntegerMatrix([[1, 2.5]])
    with pytest.raises(TypeError):
        IntegerMatrix([[True, 0]])
    with pytest.raises(ValueError):
        IntegerMatrix([])


def test_matmul_and_apply():
    a = IntegerMatrix([[1, 2], [3, 4]])
    b = IntegerMatrix([[0, 1], [1, 0]])
    assert (a @ b).rows == ((2, 1), (4, 3))
    assert a.apply((1, 1)) == (3, 7)
    with pytest.raises(ValueError):
        a @ IntegerMatrix([[1, 2, 3]])


def test_rank_identity_is_full():
    assert rank(IntegerMatrix.identity(2)) == 2


def test_rank_example_matrix():
    assert rank(IntegerMatrix(EXAMPLE_A)) == 4


def test_rank_zero_matrix():
    assert rank(IntegerMatrix([[0] * 3] * 3)) == 0


def test_hnf_single_column_gcd():
    m = IntegerMatrix([[2], [4]])
    h, u = hermite_normal_form(m)
    assert h.rows == ((2,), (0,))
    assert abs(determinant(u)) == 1
    assert u @ m == h


def test_hnf_identity():
    m = IntegerMatrix.identity(2)
    h, u = hermite_normal_form(m)
    assert h == m
    assert u == m


def test_hnf_4x2_has_two_nonzero_rows():
    m = IntegerMatrix([[3, 0], [2, 1], [1, 2], [0, 3]])
    h, u = hermite_normal_form(m)
    nonzero = [r for r in h.rows if any(r)]
    assert len(nonzero) == 2
    assert u @ m == h
    assert abs(determinant(u)) == 1


def _check_hnf_shape(h: IntegerMatrix):
    last_pivot = -1
    seen_zero_row = False
    for row in h.rows:
        cols = [j for j, x in enumerate(row) if x != 0]
        if not cols:
            seen_zero_row = True
            continue
        assert not seen_zero_row, "nonzero row after a zero row"
        j = cols[0]
        assert j > last_pivot
        last_pivot = j
        assert row[j] > 0
    # entries above each pivot reduced into [0, pivot)
    pivots = []
    for i, row in enumerate(h.rows):
        cols = [j for j, x in enumerate(row) if x != 0]
        if cols:
            pivots.append((i, cols[0]))
    for i, j in pivots:
        p = h.rows[i][j]
        for r in range(i):
            assert 0 <= h.rows[r][j] < p


def test_hnf_random_roundtrip():
    rng = random.Random(11)
    for _ in range(60):
        nr = rng.randint(1, 6)
        nc = rng.randint(1, 6)
        m = IntegerMatrix([[rng.randint(-9, 9) for _ in range(nc)] for _ in range(nr)])
        h, u = hermite_normal_form(m)
        assert u @ m == h
        assert abs(determinant(u)) == 1
        _check_hnf_shape(h)


def test_kernel_coordinate_projection():
    m = IntegerMatrix([[1, 0, 0], [0, 1, 0]])
    k = kernel_lattice_basis(m)
    assert lattices_equal(k, IntegerMatrix([[0], [0], [1]]))


def test_kernel_example_matrix_matches_reference_lattice():
    m = IntegerMatrix(EXAMPLE_A)
    k = kernel_lattice_basis(m)
    assert k.ncols == 2
    assert (m @ k).is_zero()
    ref = IntegerMatrix(
        [[1, 2], [-2, 1], [-1, -2], [0, -1], [2, -1], [2, 0]]
    )
    assert lattices_equal(k, ref)


def test_kernel_twisted_cubic_lattice():
    m = IntegerMatrix([[3, 2, 1, 0], [0, 1, 2, 3]])
    k = kernel_lattice_basis(m)
    assert (m @ k).is_zero()
    ref = IntegerMatrix([[1, 0], [-2, 1], [1, -2], [0, 1]])
    assert lattices_equal(k, ref)


def test_kernel_full_rank_is_empty():
    k = kernel_lattice_basis(IntegerMatrix.identity(3))
    assert k.nrows == 3 and k.ncols == 0


def _maximal_minors_gcd(k: IntegerMatrix) -> int:
    cols = k.ncols
    g = 0
    for rows in itertools.combinations(range(k.nrows), cols):
        sub = IntegerMatrix([[k.rows[i][j] for j in range(cols)] for i in rows])
        g = gcd(g, abs(determinant(sub)))
    return g


def test_kernel_random_saturation_and_annihilation():
    rng = random.Random(23)
    for _ in range(50):
        nr = rng.randint(1, 4)
        nc = rng.randint(nr + 1, nr + 3)
        m = IntegerMatrix([[rng.randint(-6, 6) for _ in range(nc)] for _ in range(nr)])
        k = kernel_lattice_basis(m)
        if k.ncols == 0:
            continue
        assert (m @ k).is_zero()
        assert _maximal_minors_gcd(k) == 1


def test_column_hnf_is_lattice_invariant():
    # Same lattice under a unimodular recombination of the columns.
    k1 = IntegerMatrix([[1, 2], [-2, 1], [-1, -2], [0, -1], [2, -1], [2, 0]])
    k2 = IntegerMatrix(
        [[r[0] + r[1], r[1]] for r in k1.rows]
    )
    assert column_hnf(k1) == column_hnf(k2)


def test_determinant_matches_cofactor_expansion():
    rng = random.Random(5)

    def cofactor_det(rows):
        n = len(rows)
        if n == 1:
            return rows[0][0]
        total = 0
        for j in range(n):
            minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
            total += (-1) ** j * rows[0][j] * cofactor_det(minor)
        return total

    for _ in range(40):
        n = rng.randint(1, 5)
        rows = [[rng.randint(-8, 8) for _ in range(n)] for _ in range(n)]
        assert determinant(IntegerMatrix(rows)) == cofactor_det(rows)


def test_exactness_with_huge_entries():
    big = 10**40
    m = IntegerMatrix([[big, big + 1], [big - 1, big]])
    assert determinant(m) == big * big - (big + 1) * (big - 1)
    h, u = hermite_normal_form(m)
    assert u @ m == h
    assert abs(determinant(u)) == 1
