"""The 12-case correctness suite behind the CLI's ``validate`` subcommand.

Fixed-weight cases assert exact golden totals; generated cases assert
agreement with the independent Prim oracle. Each constructed case was
cross-checked against exhaustive enumeration before its expected value was
frozen (the test suite re-verifies that).
"""

from __future__ import annotations

from dataclasses import dataclass

from .generators import WeightDist, gen_grid, gen_path, gen_random
from .graph import GraphSpec, graph_from_edges
from .mst import kruskal_eds, kruskal_heap, kruskal_std
from .oracle import prim_dense
from .strata import StrataParams

VALIDATION_SEED = 424242

REL_TOL = 1e-9

# Classic 9-vertex textbook MST example (vertices a..i mapped to 0..8).
CLRS_EDGES: tuple[tuple[int, int, float], ...] = (
    (0, 1, 4.0),
    (1, 2, 8.0),
    (2, 3, 7.0),
    (3, 4, 9.0),
    (4, 5, 10.0),
    (5, 6, 2.0),
    (6, 7, 1.0),
    (7, 0, 8.0),
    (1, 7, 11.0),
    (2, 8, 2.0),
    (8, 7, 7.0),
    (8, 6, 6.0),
    (2, 5, 4.0),
    (3, 5, 14.0),
)


@dataclass(frozen=True)
class ValidationCase:
    """One suite entry; expected=None means 'compare against the Prim oracle'."""

    name: str
    graph: GraphSpec
    expected: float | None


def make_cases(seed: int = VALIDATION_SEED) -> list[ValidationCase]:
    uniform = WeightDist.uniform()
    complete_5 = [(u, v, 1.0) for u in range(5) for v in range(u + 1, 5)]
    return [
        ValidationCase("clrs-textbook", graph_from_edges(9, CLRS_EDGES), 37.0),
        ValidationCase(
            "triangle",
            graph_from_edges(3, [(0, 1, 1.0), (1, 2, 2.0), (0, 2, 3.0)]),
            3.0,
        ),
        ValidationCase(
            "disconnected-forest",
            graph_from_edges(4, [(0, 1, 3.0), (2, 3, 5.0)]),
            8.0,
        ),
        ValidationCase("single-vertex", GraphSpec(1, ()), 0.0),
        ValidationCase(
            "duplicate-edges",
            graph_from_edges(2, [(0, 1, 2.0), (0, 1, 5.0), (0, 1, 7.0)]),
            2.0,
        ),
        ValidationCase(
            "negative-weights",
            graph_from_edges(3, [(0, 1, -5.0), (1, 2, -3.0), (0, 2, -1.0)]),
            -8.0,
        ),
        ValidationCase("path-10", gen_path(10, uniform, seed), None),
        ValidationCase("grid-4x4", gen_grid(4, 4, uniform, seed + 1), None),
        ValidationCase("sparse-50", gen_random(50, 80, uniform, seed + 2), None),
        ValidationCase("dense-50", gen_random(50, 1225, uniform, seed + 3), None),
        ValidationCase("random-200", gen_random(200, 400, uniform, seed + 4), None),
        ValidationCase("equal-weights", graph_from_edges(5, complete_5), 4.0),
    ]


@dataclass(frozen=True)
class CaseResult:
    case: str
    algo: str
    weight: float
    expected: float
    passed: bool


def _weights_match(got: float, want: float) -> bool:
    return abs(got - want) <= REL_TOL * max(1.0, abs(want))


def run_validation(
    cases: list[ValidationCase] | None = None,
    fault_offset: float = 0.0,
) -> list[CaseResult]:
    """Run every case under all three solvers.

    ``fault_offset`` perturbs each reported weight before comparison; it
    exists so tests can prove the comparator rejects wrong answers.
    """
    if cases is None:
        cases = make_cases()
    runners = (
        ("std", kruskal_std),
        ("eds", lambda g: kruskal_eds(g, StrataParams(seed=VALIDATION_SEED))),
        ("heap", kruskal_heap),
    )
    results: list[CaseResult] = []
    for case in cases:
        expected = (
            case.expected
            if case.expected is not None
            else prim_dense(case.graph).total_weight
        )
        for algo, run in runners:
            got = run(case.graph).total_weight + fault_offset
            results.append(
                CaseResult(case.name, algo, got, expected, _weights_match(got, expected))
            )
    return results
