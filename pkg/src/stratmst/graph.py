"""Graph primitives: weighted edges, immutable graph specs, and union-find."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True, slots=True)
class EdgeRecord:
    """Undirected weighted edge; ``id`` is the edge's position in the input sequence."""

    u: int
    v: int
    weight: float
    id: int


@dataclass(frozen=True)
class GraphSpec:
    """Vertex count plus an immutable edge sequence.

    Parallel edges, self-loops and disconnected graphs are all legal input.
    Weights must be finite: NaN or infinite weights break the total order
    the solvers rely on, so they are rejected here, at construction.
    """

    n: int
    edges: tuple[EdgeRecord, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        object.__setattr__(self, "edges", tuple(self.edges))
        for pos, e in enumerate(self.edges):
            if not (0 <= e.u < self.n and 0 <= e.v < self.n):
                raise ValueError(
                    f"edge {pos}: endpoints ({e.u}, {e.v}) out of range for n={self.n}"
                )
            if not math.isfinite(e.weight):
                raise ValueError(f"edge {pos}: weight {e.weight!r} is not finite")
            if e.id != pos:
                raise ValueError(f"edge {pos}: id {e.id} does not match its position")

    @property
    def m(self) -> int:
        return len(self.edges)


def graph_from_edges(n: int, edges: Iterable[tuple[int, int, float]]) -> GraphSpec:
    """Build a GraphSpec from (u, v, weight) triples, assigning ids by position."""
    records = tuple(
        EdgeRecord(u, v, float(w), i) for i, (u, v, w) in enumerate(edges)
    )
    return GraphSpec(n, records)


class DisjointSetForest:
    """Union-find over dense 0-based indices with union by rank and path compression.

    Single-owner mutable: one execution context at a time.
    """

    __slots__ = ("parent", "rank", "components")

    def __init__(self, n: int) -> None:
        if n < 0:
            raise ValueError(f"size must be non-negative, got {n}")
        self.parent = list(range(n))
        self.rank = [0] * n
        self.components = n

    def find(self, x: int) -> int:
        parent = self.parent
        if not 0 <= x < len(parent):
            raise IndexError(f"vertex {x} out of range for forest of size {len(parent)}")
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        """Merge the components of a and b; True iff they were distinct."""
        ra = self.find(a)
        rb = self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        self.components -= 1
        return True


def component_count(g: GraphSpec) -> int:
    """Number of connected components, computed by unioning every edge."""
    forest = DisjointSetForest(g.n)
    for e in g.edges:
        forest.union(e.u, e.v)
    return forest.components
