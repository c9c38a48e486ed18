"""Shared instance builders for the test suite."""

import random

from cutkit import VertexSet, WeightedGraph, gnp_graph


def rand_graph(n: int, seed: int, p: float = 0.5, w_max: int = 8) -> WeightedGraph:
    """Connected random graph; deterministic in its arguments."""
    return gnp_graph(n, p, seed=seed, w_max=w_max)


def rand_terminals(n: int, count: int, seed: int) -> VertexSet:
    rng = random.Random(seed)
    return VertexSet.from_ids(n, rng.sample(range(n), count))


def st_pair(n: int, seed: int) -> tuple[int, int]:
    rng = random.Random(seed)
    s, t = rng.sample(range(n), 2)
    return s, t
