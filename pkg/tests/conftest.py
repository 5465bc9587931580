import numpy as np
import pytest

from rieszops import basis, build_bundle, explicit


def random_generator_matrix(rng, dim):
    """Well-conditioned seeded generator, same recipe as the random suite."""
    real = rng.uniform(0.0, 1.0, size=(dim, dim))
    imag = rng.uniform(0.0, 1.0, size=(dim, dim))
    return np.eye(dim) + 0.3 * (real + 1j * imag)


def random_vector(rng, dim):
    return rng.normal(size=dim) + 1j * rng.normal(size=dim)


def random_pair(dim, seed):
    rng = np.random.default_rng(seed)
    return basis.from_generator(random_generator_matrix(rng, dim))


@pytest.fixture
def rng():
    return np.random.default_rng(0)


@pytest.fixture
def seeded_pair():
    return random_pair(8, 3)


@pytest.fixture
def seeded_bundle(seeded_pair):
    return build_bundle(seeded_pair, explicit(np.arange(8, dtype=float)))
