"""Exhaustive small-graph corpus for property testing and oracle agreement.

Enumerates *labeled* graphs — every edge subset on vertices "1".."n" — in a
deterministic order, optionally filtered to connected ones.  Membership in
Ass and diameter are isomorphism-invariant, so labeled duplication costs
only time and spares us canonical forms.  Hard ceiling n = 7 (2^21 graphs).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graphs import Graph, connected_components

MAX_VERTICES = 7


@dataclass(frozen=True)
class CorpusSpec:
    max_vertices: int
    connected_only: bool = True

    def __post_init__(self):
        if self.max_vertices < 1:
            raise ValueError("max_vertices must be at least 1")
        if self.max_vertices > MAX_VERTICES:
            raise ValueError(f"max_vertices capped at {MAX_VERTICES} (2^21 labeled graphs)")


def graphs_on(n: int, connected_only: bool = True) -> Iterator[Graph]:
    """All labeled graphs on vertices "1".."n", by ascending edge bitmask."""
    vertices = [str(i) for i in range(1, n + 1)]
    pairs = [
        (vertices[i], vertices[j])
        for i in range(n)
        for j in range(i + 1, n)
    ]
    m = len(pairs)
    for mask in range(1 << m):
        edges = [pairs[b] for b in range(m) if mask >> b & 1]
        g = Graph(vertices, edges)
        if connected_only and len(connected_components(g)) != 1:
            continue
        yield g


def enumerate_graphs(spec: CorpusSpec) -> Iterator[Graph]:
    """Stream the corpus for n = 1..max_vertices in deterministic order."""
    for n in range(1, spec.max_vertices + 1):
        yield from graphs_on(n, spec.connected_only)
