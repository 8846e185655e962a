"""Shared helpers for the test suite."""
from __future__ import annotations

import itertools
import random

from relpoly.graphs import SimpleGraph


def random_graph(rng: random.Random, n: int, m: int) -> SimpleGraph:
    pool = list(itertools.combinations(range(n), 2))
    return SimpleGraph(n, tuple(rng.sample(pool, m)))


def random_connected_graph(rng: random.Random, n: int, m: int) -> SimpleGraph:
    while True:
        g = random_graph(rng, n, m)
        if g.is_connected():
            return g


def random_connected(rng: random.Random, n_max: int = 8, m_max: int = 20) -> SimpleGraph:
    n = rng.randint(2, n_max)
    m = rng.randint(n - 1, min(m_max, n * (n - 1) // 2))
    return random_connected_graph(rng, n, m)


def all_labeled_graphs(n: int, m: int):
    for subset in itertools.combinations(itertools.combinations(range(n), 2), m):
        yield SimpleGraph(n, subset)
