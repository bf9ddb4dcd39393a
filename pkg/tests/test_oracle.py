import warnings

import pytest

from galerobust import (
    GaleConfiguration,
    GradingError,
    ShellWarning,
    enumerate_fiber,
    fan_radius_bound,
    gale_transform,
    graver_basis,
    graver_bruteforce,
    indispensable_set,
    is_indispensable_oracle,
    reduce_configuration,
)
from galerobust.oracle import SHELL_WIDTH
from galerobust.toric import Binomial, binomial_from_gale

from conftest import random_valid_instances


def default_radius(m):
    return fan_radius_bound(reduce_configuration(gale_transform(m))) + SHELL_WIDTH


def test_fiber_of_indispensable_has_two_points(example_matrix):
    b = gale_transform(example_matrix)
    fib = enumerate_fiber(b, (3, 0, 0, 0, 1, 2))
    assert fib.points == {(3, 0, 0, 0, 1, 2), (0, 1, 3, 1, 0, 0)}
    assert fib.target in fib.points


def test_fiber_of_origin(example_matrix):
    b = gale_transform(example_matrix)
    assert enumerate_fiber(b, (0,) * 6).points == {(0,) * 6}


def test_fiber_singleton(example_matrix):
    b = gale_transform(example_matrix)
    assert enumerate_fiber(b, (1, 0, 0, 0, 0, 0)).points == {(1, 0, 0, 0, 0, 0)}


def test_fiber_requires_grading():
    b = GaleConfiguration(rows=((1, 0), (0, 1), (1, 1)))
    with pytest.raises(GradingError):
        enumerate_fiber(b, (1, 1, 1))


def test_fiber_points_share_image(example_matrix):
    b = gale_transform(example_matrix)
    v = (2, 1, 0, 3, 0, 1)
    fib = enumerate_fiber(b, v)
    target_image = example_matrix.apply(v)
    for w in fib.points:
        assert example_matrix.apply(w) == target_image
        assert all(x >= 0 for x in w)


def test_fiber_count_equals_polygon_lattice_count(example_matrix):
    # Count lattice points of {alpha : B alpha <= v} by an independent scan.
    b = gale_transform(example_matrix)
    v = (3, 2, 1, 1, 2, 2)
    fib = enumerate_fiber(b, v)
    count = 0
    for a1 in range(-20, 21):
        for a2 in range(-20, 21):
            if all(r[0] * a1 + r[1] * a2 <= t for r, t in zip(b.rows, v)):
                count += 1
    assert len(fib.points) == count


def test_indispensable_oracle_on_example_generators(example_matrix):
    b = gale_transform(example_matrix)
    for binom in indispensable_set(example_matrix):
        assert is_indispensable_oracle(b, binom)


def test_indispensable_oracle_rejects_double(example_matrix):
    b = gale_transform(example_matrix)
    doubled = binomial_from_gale(b, (2, 2))
    assert not is_indispensable_oracle(b, doubled)


def test_indispensable_oracle_overlapping_supports(example_matrix):
    b = gale_transform(example_matrix)
    base = binomial_from_gale(b, (1, 1))
    plus = tuple(x + 1 for x in base.plus[:1]) + base.plus[1:]
    minus = (base.minus[0] + 1,) + base.minus[1:]
    assert not is_indispensable_oracle(b, (plus, minus))


def test_indispensable_oracle_rejects_non_kernel(example_matrix):
    b = gale_transform(example_matrix)
    with pytest.raises(ValueError):
        is_indispensable_oracle(b, ((1, 0, 0, 0, 0, 0), (0, 0, 0, 0, 0, 0)))


def test_bruteforce_example_radius_8(example_matrix):
    b = gale_transform(example_matrix)
    assert graver_bruteforce(b, 8) == graver_basis(example_matrix)


def test_bruteforce_twisted_cubic(twisted_cubic):
    b = gale_transform(twisted_cubic)
    brute = graver_bruteforce(b, 8)
    assert indispensable_set(twisted_cubic) < brute
    assert brute == graver_basis(twisted_cubic)


def test_bruteforce_antichain(example_matrix):
    b = gale_transform(example_matrix)
    brute = sorted(graver_bruteforce(b, 8))

    def divides(x: Binomial, y: Binomial) -> bool:
        return all(p <= q for p, q in zip(x.plus, y.plus)) and all(
            p <= q for p, q in zip(x.minus, y.minus)
        )

    for x in brute:
        for y in brute:
            if x != y:
                assert not divides(x, y)


def test_shell_warning_on_small_radius(twisted_cubic):
    b = gale_transform(twisted_cubic)
    with pytest.warns(ShellWarning):
        graver_bruteforce(b, 2)


def test_no_shell_warning_at_default_radius(example_matrix):
    b = gale_transform(example_matrix)
    with warnings.catch_warnings():
        warnings.simplefilter("error", ShellWarning)
        graver_bruteforce(b, default_radius(example_matrix))


def test_bruteforce_matches_fan_on_random_instances():
    for m in random_valid_instances(25, seed=5150):
        b = gale_transform(m)
        assert graver_bruteforce(b, default_radius(m)) == graver_basis(m)


def test_oracle_indispensable_agrees_on_random_instances():
    for m in random_valid_instances(10, seed=616):
        b = gale_transform(m)
        graver = graver_basis(m)
        via_oracle = frozenset(x for x in graver if is_indispensable_oracle(b, x))
        assert via_oracle == indispensable_set(m)
