import pytest

from sl3frieze.cyclic import GroundSet
from sl3frieze.fixtures import canonical_family
from sl3frieze.mutation import random_maximal_family


@pytest.fixture(scope="session")
def small_corpus():
    """A shared pool of random maximal families keyed by n."""
    corpus = {}
    for n in (6, 7, 8):
        corpus[n] = [random_maximal_family(GroundSet(n), steps=25, seed=s) for s in range(10)]
    return corpus


@pytest.fixture(scope="session")
def canonical():
    return {n: canonical_family(n) for n in (6, 7, 8)}
