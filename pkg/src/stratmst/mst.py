"""Minimum spanning tree and forest solvers with uniform instrumentation.

Three interchangeable solvers over the same union-find core:

* ``kruskal_std``  - global sort, then greedy accept (the baseline).
* ``kruskal_heap`` - O(m) heapify, then lazy pops in weight order.
* ``kruskal_eds``  - sample, partition into weight strata, sort strata on
  demand, and stop the moment the spanning forest is complete.

All three accept the same inputs (parallel edges, self-loops, negative
weights, disconnected graphs) and produce identical accepted edge sets:
ties always break by edge id, so every solver walks the same total order.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass

from .graph import DisjointSetForest, EdgeRecord, GraphSpec
from .strata import Boundaries, StrataParams, estimate_boundaries, partition

WEIGHT_RTOL = 1e-9


@dataclass(frozen=True)
class Metrics:
    """Per-run instrumentation.

    ``sort_ops`` counts edges that passed through a sort, summed over every
    sort the run performed (for the heap solver: the number of pops). It
    never exceeds m. Phase timings come from a monotonic clock in
    nanoseconds and are machine- and runtime-specific; nothing asserts on
    them. ``accepted_per_stratum`` and ``strata_nonempty`` are extra
    diagnostics used by the profile and summary reports.
    """

    sort_ops: int = 0
    strata_processed: int = 0
    strata_total: int = 0
    phase1_ns: int = 0
    phase2_ns: int = 0
    phase3_ns: int = 0
    union_calls: int = 0
    strata_nonempty: int = 0
    accepted_per_stratum: tuple[int, ...] = ()


@dataclass(frozen=True)
class MstResult:
    """Accepted edges of a minimum spanning forest plus run metrics."""

    edges: tuple[EdgeRecord, ...]
    total_weight: float
    accepted_count: int
    metrics: Metrics


def _edge_key(e: EdgeRecord) -> tuple[float, int]:
    return (e.weight, e.id)


def _empty_result() -> MstResult:
    return MstResult((), 0.0, 0, Metrics())


def _result(accepted: list[EdgeRecord], metrics: Metrics) -> MstResult:
    return MstResult(
        tuple(accepted),
        sum(e.weight for e in accepted),
        len(accepted),
        metrics,
    )


def kruskal_std(g: GraphSpec) -> MstResult:
    """Baseline Kruskal: sort all m edges by weight, then greedily accept."""
    if g.n <= 1 or g.m == 0:
        return _empty_result()
    t0 = time.perf_counter_ns()
    order = sorted(g.edges, key=_edge_key)
    forest = DisjointSetForest(g.n)
    accepted: list[EdgeRecord] = []
    target = g.n - 1
    union_calls = 0
    for e in order:
        union_calls += 1
        if forest.union(e.u, e.v):
            accepted.append(e)
            if len(accepted) == target:
                break
    phase3 = time.perf_counter_ns() - t0
    metrics = Metrics(
        sort_ops=g.m,
        strata_processed=1,
        strata_total=1,
        phase3_ns=phase3,
        union_calls=union_calls,
        strata_nonempty=1,
        accepted_per_stratum=(len(accepted),),
    )
    return _result(accepted, metrics)


def kruskal_heap(g: GraphSpec) -> MstResult:
    """Heap-based Kruskal: heapify every edge, then pop lazily in weight order.

    Pops stop once the spanning forest is complete; on disconnected input
    the heap simply drains. ``sort_ops`` records the pops performed.
    """
    if g.n <= 1 or g.m == 0:
        return _empty_result()
    t0 = time.perf_counter_ns()
    heap = [(e.weight, e.id, e) for e in g.edges]
    heapq.heapify(heap)
    t1 = time.perf_counter_ns()
    forest = DisjointSetForest(g.n)
    accepted: list[EdgeRecord] = []
    target = g.n - 1
    pops = 0
    while heap and len(accepted) < target:
        _, _, e = heapq.heappop(heap)
        pops += 1
        if forest.union(e.u, e.v):
            accepted.append(e)
    t2 = time.perf_counter_ns()
    metrics = Metrics(
        sort_ops=pops,
        strata_processed=1,
        strata_total=1,
        phase2_ns=t1 - t0,
        phase3_ns=t2 - t1,
        union_calls=pops,
        strata_nonempty=1,
        accepted_per_stratum=(len(accepted),),
    )
    return _result(accepted, metrics)


def kruskal_eds(
    g: GraphSpec,
    params: StrataParams | None = None,
    boundaries: Boundaries | None = None,
) -> MstResult:
    """Stratified Kruskal with early termination.

    Phase 1 estimates stratum boundaries from a small uniform edge sample.
    Phase 2 partitions all edges into weight-ordered buckets by binary
    search, with no global sort. Phase 3 sorts buckets lightest-first,
    feeding each through union-find, and returns the moment the spanning
    forest is complete, leaving heavier buckets unsorted. Disconnected
    inputs run through every bucket and yield the minimum spanning forest.

    When the resolved stratum count is 1 (explicitly, or via the automatic
    fallback on small inputs) phases 1 and 2 are skipped entirely and the
    run degenerates to the baseline's single global sort.

    ``boundaries`` bypasses phase 1 with pre-computed cut points; any
    strictly increasing vector is valid, and boundary placement affects
    only performance, never the accepted edges.
    """
    if params is None:
        params = StrataParams()
    if g.n <= 1 or g.m == 0:
        return _empty_result()
    k = params.resolve_k(g.m)
    if boundaries is None and k == 1:
        return kruskal_std(g)

    t0 = time.perf_counter_ns()
    if boundaries is None:
        boundaries = estimate_boundaries(g.edges, k, params.seed)
    t1 = time.perf_counter_ns()
    strat = partition(g.edges, boundaries)
    t2 = time.perf_counter_ns()

    forest = DisjointSetForest(g.n)
    accepted: list[EdgeRecord] = []
    target = g.n - 1
    sort_ops = 0
    strata_processed = 0
    union_calls = 0
    accepted_per = [0] * len(strat.buckets)
    done = False
    for i, bucket in enumerate(strat.buckets):
        strata_processed += 1
        bucket.sort(key=_edge_key)
        sort_ops += len(bucket)
        for e in bucket:
            union_calls += 1
            if forest.union(e.u, e.v):
                accepted.append(e)
                accepted_per[i] += 1
                if len(accepted) == target:
                    done = True
                    break
        if done:
            break
    t3 = time.perf_counter_ns()
    metrics = Metrics(
        sort_ops=sort_ops,
        strata_processed=strata_processed,
        strata_total=len(strat.buckets),
        phase1_ns=t1 - t0,
        phase2_ns=t2 - t1,
        phase3_ns=t3 - t2,
        union_calls=union_calls,
        strata_nonempty=sum(1 for b in strat.buckets if b),
        accepted_per_stratum=tuple(accepted_per),
    )
    return _result(accepted, metrics)


def mst_weight_equal(a: MstResult, b: MstResult) -> bool:
    """True when two results agree on accepted count and total weight.

    Weights compare within 1e-9 relative tolerance (floored at 1 absolute),
    absorbing summation-order noise between solvers.
    """
    tol = WEIGHT_RTOL * max(1.0, abs(a.total_weight))
    return (
        a.accepted_count == b.accepted_count
        and abs(a.total_weight - b.total_weight) <= tol
    )
