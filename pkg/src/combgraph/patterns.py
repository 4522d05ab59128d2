"""Certified detection of the six fixed induced patterns.

The recognizers reason with P4, C4, co-C4 (two disjoint edges), C5, the
chair (edges xy, yz, zt, zv) and its complement the co-chair.  A search
returns a Witness mapping pattern positions to host vertices; witnesses
are reproducible byte for byte because pattern vertex orderings are fixed
and ties are broken lexicographically.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Optional

from .core import Graph


class PatternKind(enum.Enum):
    P4 = "P4"
    C4 = "C4"
    CO_C4 = "CO_C4"
    C5 = "C5"
    CHAIR = "CHAIR"
    CO_CHAIR = "CO_CHAIR"

    @property
    def size(self) -> int:
        return _SIZE[self]

    @property
    def canonical_edges(self) -> frozenset[tuple[int, int]]:
        return _EDGES[self]

    @property
    def complement_kind(self) -> "PatternKind":
        return _COMPLEMENT[self]


_EDGES: dict[PatternKind, frozenset[tuple[int, int]]] = {
    PatternKind.P4: frozenset({(0, 1), (1, 2), (2, 3)}),
    PatternKind.C4: frozenset({(0, 1), (1, 2), (2, 3), (0, 3)}),
    PatternKind.CO_C4: frozenset({(0, 1), (2, 3)}),
    PatternKind.C5: frozenset({(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}),
    PatternKind.CHAIR: frozenset({(0, 1), (1, 2), (2, 3), (2, 4)}),
    PatternKind.CO_CHAIR: frozenset({(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (3, 4)}),
}

_SIZE: dict[PatternKind, int] = {
    PatternKind.P4: 4,
    PatternKind.C4: 4,
    PatternKind.CO_C4: 4,
    PatternKind.C5: 5,
    PatternKind.CHAIR: 5,
    PatternKind.CO_CHAIR: 5,
}

_COMPLEMENT: dict[PatternKind, PatternKind] = {
    PatternKind.P4: PatternKind.P4,
    PatternKind.C4: PatternKind.CO_C4,
    PatternKind.CO_C4: PatternKind.C4,
    PatternKind.C5: PatternKind.C5,
    PatternKind.CHAIR: PatternKind.CO_CHAIR,
    PatternKind.CO_CHAIR: PatternKind.CHAIR,
}

#: Scan order used by find_any_forbidden.
FORBIDDEN_KINDS = (
    PatternKind.C4,
    PatternKind.CO_C4,
    PatternKind.C5,
    PatternKind.CHAIR,
    PatternKind.CO_CHAIR,
)


def pattern_graph(kind: PatternKind) -> Graph:
    """The pattern itself as a Graph on vertices 0..k-1."""
    from .core import build_graph

    return build_graph(kind.size, sorted(kind.canonical_edges))


@dataclass(frozen=True)
class Witness:
    """An induced occurrence of a pattern: position i maps to vertices[i]."""

    kind: PatternKind
    vertices: tuple[int, ...]


def iter_induced(g: Graph, kind: PatternKind) -> Iterator[tuple[int, ...]]:
    """All induced occurrences as ordered vertex tuples, lexicographically.

    Exhaustive over ordered k-tuples with adjacency pruning: placing a
    vertex intersects the candidate mask of every later position with its
    neighborhood (pattern edge) or non-neighborhood (pattern non-edge), so
    dead branches are cut as early as possible.
    """
    k = kind.size
    n = g.n
    if n < k:
        return
    edges = kind.canonical_edges
    rows = g.rows
    full = (1 << n) - 1
    chosen = [0] * k

    def rec(pos: int, masks: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        m = masks[0]
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            chosen[pos] = v
            if pos == k - 1:
                yield tuple(chosen)
                continue
            rv = rows[v]
            non_rv = full & ~rv & ~low
            nxt = []
            dead = False
            for j in range(pos + 1, k):
                nm = masks[j - pos] & (rv if (pos, j) in edges else non_rv)
                if nm == 0:
                    dead = True
                    break
                nxt.append(nm)
            if not dead:
                yield from rec(pos + 1, tuple(nxt))

    yield from rec(0, (full,) * k)


def find_induced(g: Graph, kind: PatternKind) -> Optional[Witness]:
    """Lexicographically smallest induced occurrence, or None."""
    for tup in iter_induced(g, kind):
        return Witness(kind, tup)
    return None


def find_any_forbidden(g: Graph) -> Optional[Witness]:
    """First witness among C4, co-C4, C5, chair, co-chair, scanned in
    that fixed order; None means none of the five occurs induced."""
    for kind in FORBIDDEN_KINDS:
        w = find_induced(g, kind)
        if w is not None:
            return w
    return None


def verify_witness(g: Graph, w: Witness) -> bool:
    """True iff w's vertices are distinct, in range, and the position map
    is an induced isomorphism onto the pattern's canonical edges.

    Returns False (never raises) on malformed input.
    """
    k = w.kind.size
    vs = w.vertices
    if len(vs) != k or len(set(vs)) != k:
        return False
    if not all(isinstance(v, int) and 0 <= v < g.n for v in vs):
        return False
    edges = w.kind.canonical_edges
    for i in range(k):
        for j in range(i + 1, k):
            if g.has_edge(vs[i], vs[j]) != ((i, j) in edges):
                return False
    return True
