import numpy as np
import pytest

from pizzacut.generate import disk_pair, offset_square, random_pair, square_pair


@pytest.fixture(scope="session")
def disks():
    return disk_pair(1.0, 2.0, 512)


@pytest.fixture(scope="session")
def squares():
    return square_pair(1.0, 2.0)


@pytest.fixture(scope="session")
def offset():
    return offset_square()


def random_pizzas(count, seed=0):
    rng = np.random.default_rng(seed)
    return [random_pair(rng) for _ in range(count)]


@pytest.fixture(scope="session")
def randoms():
    return random_pizzas(20, seed=7)
