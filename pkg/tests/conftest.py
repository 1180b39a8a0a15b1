import numpy as np
import pytest

from mccut import graph as gm

RED = gm.EdgeColor.RED
BLUE = gm.EdgeColor.BLUE


def random_colored_graph(rng, n=None, p=0.5, red_prob=0.6, min_n=3, max_n=12):
    """Random weighted mixed-color instance for oracle-scale tests."""
    if n is None:
        n = int(rng.integers(min_n, max_n + 1))
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                c = RED if rng.random() < red_prob else BLUE
                edges.append((u, v, float(rng.random() * 0.999 + 0.001), c))
    return gm.build(n, edges)


@pytest.fixture
def k2_red():
    return gm.build(2, [(0, 1, 1.0, RED)])


@pytest.fixture
def k2_blue():
    return gm.build(2, [(0, 1, 1.0, BLUE)])


@pytest.fixture
def c5_red():
    return gm.generate("cycle", 5, red_fraction=1.0, seed=0)


@pytest.fixture
def triangle_red():
    return gm.build(3, [(0, 1, 1.0, RED), (1, 2, 1.0, RED), (0, 2, 1.0, RED)])


@pytest.fixture
def path3_red():
    return gm.build(3, [(0, 1, 1.0, RED), (1, 2, 1.0, RED)])
