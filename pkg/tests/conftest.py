import numpy as np
import pytest

from spinorlab import clifford


@pytest.fixture
def rng():
    return np.random.Generator(np.random.Philox(key=20240917))


@pytest.fixture(scope="session")
def gamma():
    return clifford.build()


def random_spinor(rng, n=None):
    shape = (4,) if n is None else (n, 4)
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
