import random

import pytest

from eaqeckit import FMatrix, field_new, from_generator


def random_matrix(rng: random.Random, field, nrows: int, ncols: int) -> FMatrix:
    return FMatrix(field, [[rng.randrange(field.q) for _ in range(ncols)]
                           for _ in range(nrows)], ncols)


def random_code(rng: random.Random, field, n: int, rows: int):
    """Random nonzero code of length n spanned by `rows` random rows."""
    while True:
        code = from_generator(random_matrix(rng, field, rows, n), allow_zero=True)
        if code.k > 0:
            return code


@pytest.fixture(scope="session")
def f2():
    return field_new(2, 1)


@pytest.fixture(scope="session")
def f4():
    return field_new(2, 2)


@pytest.fixture(scope="session")
def f9():
    return field_new(3, 2)


@pytest.fixture(scope="session")
def f13():
    return field_new(13, 1)


@pytest.fixture(scope="session")
def f27():
    return field_new(3, 3)
