"""Shared helpers for building random test graphs."""

from __future__ import annotations

import random

from stratmst import GraphSpec, WeightDist, gen_random, graph_from_edges

DISTS = (
    WeightDist.uniform(),
    WeightDist.half_normal(),
    WeightDist.pareto(),
    WeightDist.clustered(),
)


def tiny_graph(
    rng: random.Random,
    max_n: int = 8,
    max_m: int = 20,
    dist: WeightDist | None = None,
) -> GraphSpec:
    """Small connected random graph within the exhaustive oracle's bounds."""
    n = rng.randint(2, max_n)
    cap = min(n * (n - 1) // 2, max_m)
    m = rng.randint(n - 1, cap)
    if dist is None:
        dist = DISTS[rng.randrange(len(DISTS))]
    return gen_random(n, m, dist, rng.randrange(2**32))


def disconnected_graph(rng: random.Random, parts: int = 2) -> GraphSpec:
    """Union of several small connected graphs on disjoint vertex ranges."""
    triples: list[tuple[int, int, float]] = []
    offset = 0
    for _ in range(parts):
        g = tiny_graph(rng, max_n=6, max_m=10)
        triples.extend((e.u + offset, e.v + offset, e.weight) for e in g.edges)
        offset += g.n
    return graph_from_edges(offset, triples)
