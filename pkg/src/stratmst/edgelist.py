"""Plain-text edge list format shared by the CLI and the generators.

The first non-comment line is ``n m``; each of the m following lines is
``u v w`` with 0-based integer endpoints and a decimal weight in plain or
scientific notation. Lines starting with ``#`` are comments and may appear
anywhere; blank lines are ignored.
"""

from __future__ import annotations

import math
from typing import IO, Iterable, Iterator

from .graph import EdgeRecord, GraphSpec


class EdgeListError(ValueError):
    """Malformed edge-list input; the message names the offending line."""

    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _content_lines(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    for no, raw in enumerate(lines, start=1):
        text = raw.strip()
        if text and not text.startswith("#"):
            yield no, text


def read_edge_list(stream: IO[str]) -> GraphSpec:
    """Parse an edge-list stream into a GraphSpec."""
    lines = _content_lines(stream)
    header = next(lines, None)
    if header is None:
        raise EdgeListError(0, "empty input, expected an 'n m' header")
    last_no, text = header
    parts = text.split()
    try:
        if len(parts) != 2:
            raise ValueError
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise EdgeListError(last_no, f"expected header 'n m', got {text!r}") from None
    if n < 0 or m < 0:
        raise EdgeListError(last_no, "n and m must be non-negative")

    edges: list[EdgeRecord] = []
    for last_no, text in lines:
        if len(edges) == m:
            raise EdgeListError(last_no, f"more than the declared {m} edge lines")
        parts = text.split()
        try:
            if len(parts) != 3:
                raise ValueError
            u, v, w = int(parts[0]), int(parts[1]), float(parts[2])
        except ValueError:
            raise EdgeListError(last_no, f"expected 'u v w', got {text!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(last_no, f"endpoints ({u}, {v}) out of range for n={n}")
        if not math.isfinite(w):
            raise EdgeListError(last_no, f"weight {parts[2]!r} is not finite")
        edges.append(EdgeRecord(u, v, w, len(edges)))
    if len(edges) != m:
        raise EdgeListError(last_no, f"expected {m} edges, found only {len(edges)}")
    return GraphSpec(n, tuple(edges))


def load_edge_list(path: str) -> GraphSpec:
    with open(path, "r", encoding="utf-8") as stream:
        return read_edge_list(stream)


def write_edge_list(g: GraphSpec, stream: IO[str]) -> None:
    """Write a GraphSpec in the edge-list format; weights round-trip exactly."""
    stream.write(f"{g.n} {g.m}\n")
    for e in g.edges:
        stream.write(f"{e.u} {e.v} {e.weight!r}\n")
