"""Explicit rook-graph colourings: the independent cross-check for the verifier.

The p x q rook graph has vertex set [0,p) x [0,q) and an edge between two
cells iff they share a row or a column.  Properness and completeness are
re-derived here edge by edge, without reusing the matrix-side line scans.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .matrix import ColourMatrix


@dataclass(frozen=True)
class GridColouring:
    """A vertex colouring of the p x q rook graph."""

    p: int
    q: int
    assignment: tuple[tuple[int, ...], ...]  # colour of cell (i, j)

    def colour(self, i: int, j: int) -> int:
        return self.assignment[i][j]

    def colours_used(self) -> set[int]:
        return {c for row in self.assignment for c in row}


def rook_edges(p: int, q: int) -> Iterator[tuple[tuple[int, int], tuple[int, int]]]:
    """All edges of the p x q rook graph, each once."""
    for i in range(p):
        for j1 in range(q):
            for j2 in range(j1 + 1, q):
                yield (i, j1), (i, j2)
    for j in range(q):
        for i1 in range(p):
            for i2 in range(i1 + 1, p):
                yield (i1, j), (i2, j)


def edge_count(p: int, q: int) -> int:
    return p * (q * (q - 1) // 2) + q * (p * (p - 1) // 2)


def to_graph_colouring(m: ColourMatrix) -> GridColouring:
    """Materialize the vertex colouring induced by the matrix entries."""
    return GridColouring(m.p, m.q, m.entries)


def validate_on_graph(colouring: GridColouring) -> tuple[bool, bool]:
    """(proper, complete) of the colouring, decided by edge enumeration.

    Proper: no edge is monochromatic.  Complete: every unordered pair of used
    colours appears on some edge.
    """
    proper = True
    seen_pairs: set[tuple[int, int]] = set()
    for (i1, j1), (i2, j2) in rook_edges(colouring.p, colouring.q):
        a = colouring.colour(i1, j1)
        b = colouring.colour(i2, j2)
        if a == b:
            proper = False
        else:
            seen_pairs.add((a, b) if a < b else (b, a))
    k = len(colouring.colours_used())
    complete = len(seen_pairs) == k * (k - 1) // 2
    return proper, complete
