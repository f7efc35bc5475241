"""Quantile-boundary estimation and stratified edge partitioning.

A small uniform edge sample estimates the weight distribution; interior
sample quantiles become bucket boundaries, and a single linear pass drops
every edge into its weight-ordered bucket via binary search. Boundaries
only ever need to be weight-consistent, never exact quantiles: a misplaced
boundary changes bucket sizes, not the result of any downstream solver.
"""

from __future__ import annotations

import math
import random
from bisect import bisect_right
from dataclasses import dataclass
from typing import Sequence

from .graph import EdgeRecord

# Below this edge count a single global sort beats sampling + partitioning.
MIN_EDGES_FOR_STRATA = 200


def sample_size(m: int) -> int:
    """Sample size for boundary estimation: min(m, max(20, floor(2*sqrt(m))))."""
    if m < 0:
        raise ValueError(f"edge count must be non-negative, got {m}")
    return min(m, max(20, math.floor(2.0 * math.sqrt(m))))


def optimal_k(m: int) -> int:
    """Stratum count balancing partition overhead against per-bucket sort cost.

    Evaluates ceil(sqrt(m / ln(m + 1))), with a fallback to a single stratum
    below MIN_EDGES_FOR_STRATA where the sampling overhead cannot pay off.
    """
    if m < 0:
        raise ValueError(f"edge count must be non-negative, got {m}")
    if m < MIN_EDGES_FOR_STRATA:
        return 1
    return math.ceil(math.sqrt(m / math.log(m + 1)))


@dataclass(frozen=True)
class StrataParams:
    """Stratification knobs: explicit stratum count (None = automatic) and PRNG seed."""

    k: int | None = None
    seed: int = 0

    def __post_init__(self) -> None:
        if self.k is not None and self.k < 1:
            raise ValueError(f"stratum count must be >= 1, got {self.k}")

    def resolve_k(self, m: int) -> int:
        return self.k if self.k is not None else optimal_k(m)


@dataclass(frozen=True)
class Boundaries:
    """Strictly increasing cut points; empty means a single stratum (global sort)."""

    values: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        for i, b in enumerate(self.values):
            if not math.isfinite(b):
                raise ValueError(f"boundary {i} is not finite: {b!r}")
            if i > 0 and self.values[i - 1] >= b:
                raise ValueError("boundaries must be strictly increasing")

    def __len__(self) -> int:
        return len(self.values)


@dataclass
class Stratification:
    """Weight-ordered edge buckets: bucket i holds b[i-1] <= w < b[i] (half-open)."""

    buckets: list[list[EdgeRecord]]


def sample_weights(edges: Sequence[EdgeRecord], size: int, rng: random.Random) -> list[float]:
    """Weights of `size` edges drawn uniformly without replacement.

    Partial Fisher-Yates over the edge indices, so clamping size to the edge
    count degenerates gracefully to the whole population.
    """
    if not 0 <= size <= len(edges):
        raise ValueError(f"sample size {size} out of range for {len(edges)} edges")
    idx = list(range(len(edges)))
    for j in range(size):
        r = rng.randrange(j, len(idx))
        idx[j], idx[r] = idx[r], idx[j]
    return [edges[i].weight for i in idx[:size]]


def estimate_boundaries(edges: Sequence[EdgeRecord], k: int, seed: int) -> Boundaries:
    """Estimate the k-1 interior quantile boundaries from a seeded sample.

    The sorted sample is cut at positions floor(i*s/k) for i = 1..k-1 and
    duplicates collapse, so fewer than k-1 boundaries (possibly none) can
    come back; that merely shrinks the effective stratum count.
    """
    if k < 1:
        raise ValueError(f"stratum count must be >= 1, got {k}")
    m = len(edges)
    if k == 1 or m == 0:
        return Boundaries()
    rng = random.Random(seed)
    sample = sample_weights(edges, sample_size(m), rng)
    sample.sort()
    s = len(sample)
    cuts: list[float] = []
    for i in range(1, k):
        value = sample[(i * s) // k]
        if not cuts or value > cuts[-1]:
            cuts.append(value)
    return Boundaries(tuple(cuts))


def partition(edges: Sequence[EdgeRecord], boundaries: Boundaries) -> Stratification:
    """Assign every edge to its stratum by binary search on the boundaries.

    Half-open rule: a weight equal to a boundary lands in the bucket above
    it. Input order is preserved inside each bucket, so downstream sorts
    stay stable.
    """
    cuts = boundaries.values
    buckets: list[list[EdgeRecord]] = [[] for _ in range(len(cuts) + 1)]
    for e in edges:
        buckets[bisect_right(cuts, e.weight)].append(e)
    return Stratification(buckets)
