import random

import hypothesis
import hypothesis.strategies as st
import pytest

from bookturan import graph as gc

hypothesis.settings.register_profile("default", max_examples=200, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=20, deadline=None)
hypothesis.settings.load_profile("default")


@st.composite
def graphs(draw, min_order=0, max_order=12):
    n = draw(st.integers(min_order, max_order))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return gc.from_edges(n, [e for e, k in zip(pairs, keep) if k])


def random_graph(rng, n, density=None):
    q = rng.random() if density is None else density
    return gc.from_edges(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < q])


def random_perm(rng, n):
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


@pytest.fixture
def rng():
    return random.Random(20261016)
