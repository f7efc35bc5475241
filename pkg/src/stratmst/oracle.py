"""Independent MST oracles for cross-validation.

``prim_dense`` shares no machinery with the Kruskal solvers (no edge sort,
no union-find), which is what gives the cross-checks their bug-detection
power. ``exhaustive_mst`` is brute-force ground truth for tiny graphs.
Both trade speed for simplicity on purpose.
"""

from __future__ import annotations

from itertools import combinations

from .graph import EdgeRecord, GraphSpec, component_count
from .mst import Metrics, MstResult

EXHAUSTIVE_MAX_N = 10
EXHAUSTIVE_MAX_M = 20

_INF = float("inf")


def prim_dense(g: GraphSpec) -> MstResult:
    """O(n^2) array-based Prim, run once per connected component.

    Keeps only the cheapest parallel edge per vertex pair and grows each
    component's tree with linear scans over a best-attachment array.
    """
    n = g.n
    cheapest: list[dict[int, EdgeRecord]] = [{} for _ in range(n)]
    for e in g.edges:
        if e.u == e.v:
            continue
        known = cheapest[e.u].get(e.v)
        if known is None or e.weight < known.weight:
            cheapest[e.u][e.v] = e
            cheapest[e.v][e.u] = e

    in_tree = [False] * n
    cost = [_INF] * n
    via: list[EdgeRecord | None] = [None] * n
    accepted: list[EdgeRecord] = []
    for seed in range(n):
        if in_tree[seed]:
            continue
        cost[seed] = 0.0
        while True:
            u = -1
            u_cost = _INF
            for x in range(n):
                if not in_tree[x] and cost[x] < u_cost:
                    u_cost = cost[x]
                    u = x
            if u < 0:
                break
            in_tree[u] = True
            if via[u] is not None:
                accepted.append(via[u])
            for v, e in cheapest[u].items():
                if not in_tree[v] and e.weight < cost[v]:
                    cost[v] = e.weight
                    via[v] = e
    total = sum(e.weight for e in accepted)
    return MstResult(tuple(accepted), total, len(accepted), Metrics())


def exhaustive_mst(g: GraphSpec) -> float:
    """Minimum spanning forest weight by enumerating all candidate edge subsets.

    Every combination of n - c edge indices is tested for acyclicity with a
    throwaway union-find; only tiny graphs are allowed.
    """
    if g.n > EXHAUSTIVE_MAX_N or g.m > EXHAUSTIVE_MAX_M:
        raise ValueError(
            f"graph too large to enumerate: n={g.n} (max {EXHAUSTIVE_MAX_N}), "
            f"m={g.m} (max {EXHAUSTIVE_MAX_M})"
        )
    target = g.n - component_count(g)
    if target == 0:
        return 0.0
    edges = g.edges
    best = _INF
    for combo in combinations(range(g.m), target):
        parent = list(range(g.n))
        weight = 0.0
        acyclic = True
        for idx in combo:
            e = edges[idx]
            a = e.u
            while parent[a] != a:
                a = parent[a]
            b = e.v
            while parent[b] != b:
                b = parent[b]
            if a == b:
                acyclic = False
                break
            parent[a] = b
            weight += e.weight
        if acyclic and weight < best:
            best = weight
    return best
