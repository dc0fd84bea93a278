import random

import pytest

from wallfact import (PrimeField, diagonal_space, enumerate_group,
                      is_positive_isometry)


@pytest.fixture(scope="session")
def f3():
    return PrimeField(3)


@pytest.fixture(scope="session")
def f5():
    return PrimeField(5)


@pytest.fixture(scope="session")
def census_f3_d2(f3):
    return enumerate_group(diagonal_space(f3, [1, 1]))


@pytest.fixture(scope="session")
def census_f3_d2_split(f3):
    # diag(1, 2) over F_3 is the isotropic binary form
    return enumerate_group(diagonal_space(f3, [1, 2]))


@pytest.fixture(scope="session")
def census_f3_d3(f3):
    return enumerate_group(diagonal_space(f3, [1, 1, 1]))


@pytest.fixture(scope="session")
def census_f3_d4(f3):
    return enumerate_group(diagonal_space(f3, [1, 1, -1, -1]))


@pytest.fixture(scope="session")
def census_f5_d2(f5):
    return enumerate_group(diagonal_space(f5, [1, 1]))


@pytest.fixture(scope="session")
def census_f5_d3(f5):
    return enumerate_group(diagonal_space(f5, [1, 1, 1]))


def random_nonsingular_vector(space, rng, bound=2):
    while True:
        v = tuple(rng.randint(-bound, bound) for _ in range(space.dim))
        if any(v) and space.q_value(v):
            return v


def random_isometry(space, rng, reflections=None):
    k = reflections if reflections is not None else rng.randint(1, 4)
    f = space.identity_isometry()
    for _ in range(k):
        f = f @ space.reflection(random_nonsingular_vector(space, rng))
    return f


def random_positive_isometry(space, rng, reflections=None):
    while True:
        f = random_isometry(space, rng, reflections)
        if not f.is_identity() and is_positive_isometry(f):
            return f


@pytest.fixture
def rng():
    return random.Random(20240817)
