import random

import pytest

from isolab import graphs as G
from isolab import lab


@pytest.fixture(scope="session")
def small_connected():
    """Connected catalogs for orders 1..7, parsed once."""
    return {
        n: [G.parse_graph6(line) for line in lab.enumerate_connected(n)]
        for n in range(1, 8)
    }


def random_graph(rng: random.Random, n: int, p: float) -> G.Graph:
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return G.Graph(n, tuple(adj))


def random_connected_graph(rng: random.Random, n: int) -> G.Graph:
    while True:
        g = random_graph(rng, n, rng.choice([0.15, 0.25, 0.4, 0.6, 0.8]))
        if G.is_connected(g):
            return g
