import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stratmst import (
    Boundaries,
    EdgeRecord,
    StrataParams,
    estimate_boundaries,
    optimal_k,
    partition,
    sample_size,
    sample_weights,
)


def edges_with_weights(weights):
    return [EdgeRecord(0, 0, w, i) for i, w in enumerate(weights)]


def test_sample_size_values():
    assert sample_size(0) == 0
    assert sample_size(4) == 4
    assert sample_size(50) == 20
    assert sample_size(10000) == 200
    assert sample_size(1) == 1


def test_optimal_k_values():
    assert optimal_k(0) == 1
    assert optimal_k(100) == 1
    assert optimal_k(199) == 1
    assert optimal_k(200) == 7
    assert optimal_k(600) == 10
    assert optimal_k(40000) == 62


def test_strata_params_validation():
    with pytest.raises(ValueError):
        StrataParams(k=0)
    assert StrataParams(k=3).resolve_k(10**6) == 3
    assert StrataParams().resolve_k(600) == 10
    assert StrataParams().resolve_k(50) == 1


def test_boundaries_must_strictly_increase():
    Boundaries((1.0, 2.0, 3.0))
    with pytest.raises(ValueError):
        Boundaries((1.0, 1.0))
    with pytest.raises(ValueError):
        Boundaries((2.0, 1.0))
    with pytest.raises(ValueError):
        Boundaries((float("nan"),))


def test_estimate_boundaries_whole_population_sample():
    # m=10 <= 20 so the sample is the full edge set and the cuts are exact.
    edges = edges_with_weights([5.0, 1.0, 9.0, 2.0, 8.0, 3.0, 7.0, 4.0, 6.0, 10.0])
    b = estimate_boundaries(edges, 5, seed=99)
    assert b.values == (3.0, 5.0, 7.0, 9.0)


def test_estimate_boundaries_deduplicates_constants():
    edges = edges_with_weights([5.0] * 12)
    for k in (2, 3, 8):
        assert estimate_boundaries(edges, k, seed=0).values == (5.0,)


def test_estimate_boundaries_degenerate_cases():
    edges = edges_with_weights([1.0, 2.0])
    assert estimate_boundaries(edges, 1, seed=0).values == ()
    assert estimate_boundaries([], 5, seed=0).values == ()
    with pytest.raises(ValueError):
        estimate_boundaries(edges, 0, seed=0)


def test_estimate_boundaries_deterministic():
    rng = random.Random(17)
    edges = edges_with_weights([rng.uniform(0, 1000) for _ in range(400)])
    a = estimate_boundaries(edges, 9, seed=123)
    b = estimate_boundaries(edges, 9, seed=123)
    assert a == b


def test_sample_weights_is_without_replacement():
    edges = edges_with_weights([float(i) for i in range(30)])
    got = sample_weights(edges, 30, random.Random(4))
    assert sorted(got) == [float(i) for i in range(30)]
    with pytest.raises(ValueError):
        sample_weights(edges, 31, random.Random(4))


def test_partition_example():
    edges = edges_with_weights([2.0, 3.0, 5.0, 7.0, 9.0])
    strat = partition(edges, Boundaries((3.0, 7.0)))
    assert [len(b) for b in strat.buckets] == [1, 2, 2]
    # weights equal to a boundary land in the bucket above it
    assert [e.weight for e in strat.buckets[1]] == [3.0, 5.0]
    assert [e.weight for e in strat.buckets[2]] == [7.0, 9.0]


def test_partition_no_boundaries_single_bucket():
    edges = edges_with_weights([9.0, 1.0, 5.0])
    strat = partition(edges, Boundaries())
    assert len(strat.buckets) == 1
    assert [e.id for e in strat.buckets[0]] == [0, 1, 2]


def test_partition_empty_edges():
    strat = partition([], Boundaries((1.0, 2.0)))
    assert [len(b) for b in strat.buckets] == [0, 0, 0]


finite = st.floats(min_value=-1e9, max_value=1e9, allow_nan=False)
edge_lists = st.lists(finite, max_size=60).map(edges_with_weights)
boundary_vectors = st.lists(finite, unique=True, max_size=8).map(
    lambda vs: Boundaries(tuple(sorted(vs)))
)


@settings(max_examples=1000, deadline=None)
@given(edges=edge_lists, b=boundary_vectors)
def test_partition_is_a_partition(edges, b):
    strat = partition(edges, b)
    assert len(strat.buckets) == len(b) + 1
    got = Counter((e.weight, e.id) for bucket in strat.buckets for e in bucket)
    want = Counter((e.weight, e.id) for e in edges)
    assert got == want


@settings(max_examples=300, deadline=None)
@given(edges=edge_lists, b=boundary_vectors)
def test_partition_weight_consistency(edges, b):
    buckets = partition(edges, b).buckets
    tops = [(i, max(e.weight for e in bk)) for i, bk in enumerate(buckets) if bk]
    for (i, hi), (j, _) in zip(tops, tops[1:]):
        lo_j = min(e.weight for e in buckets[j])
        assert hi <= lo_j, (i, j)


@settings(max_examples=300, deadline=None)
@given(edges=edge_lists, b=boundary_vectors)
def test_partition_keeps_input_order(edges, b):
    for bucket in partition(edges, b).buckets:
        ids = [e.id for e in bucket]
        assert ids == sorted(ids)
