"""Immutable simple graphs backed by per-vertex adjacency bitmasks.

Every other module consumes this value type.  Adjacency rows are plain
Python integers, so neighborhood equality, completeness and stability
checks are single mask operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

#: Practical cap for library operations; pattern search is meant for
#: desk-scale inputs far below this.
MAX_VERTICES = 100_000


class GraphError(ValueError):
    """Malformed construction input or out-of-range vertex."""


def _check_vertex(n: int, v: int) -> None:
    if not 0 <= v < n:
        raise GraphError(f"vertex {v} out of range for graph on {n} vertices")


def mask_of(members: Iterable[int]) -> int:
    m = 0
    for v in members:
        m |= 1 << v
    return m


def set_of(mask: int) -> frozenset[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on dense vertex indices 0..n-1.

    ``rows[v]`` is the bitmask of neighbors of ``v``; the relation is
    irreflexive and symmetric.  Instances are immutable and safe to share
    between threads.
    """

    n: int
    rows: tuple[int, ...]

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def row(self, v: int) -> int:
        _check_vertex(self.n, v)
        return self.rows[v]

    def has_edge(self, u: int, v: int) -> bool:
        _check_vertex(self.n, u)
        _check_vertex(self.n, v)
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.row(v).bit_count()

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) with u < v, in ascending order."""
        for u in range(self.n):
            rest = self.rows[u] >> (u + 1)
            for off in iter_bits(rest):
                yield (u, u + 1 + off)

    def vertices(self) -> range:
        return range(self.n)


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicates are merged.

    Raises GraphError for self-loops or out-of-range endpoints, naming
    the offending pair.
    """
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    if n > MAX_VERTICES:
        raise GraphError(f"vertex count {n} exceeds the supported cap {MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError(f"self-loop ({u}, {v}) is not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for graph on {n} vertices")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complement(g: Graph) -> Graph:
    """Graph on the same vertices with edge uv iff uv is absent in g."""
    full = g.full_mask
    rows = tuple(full & ~g.rows[v] & ~(1 << v) for v in range(g.n))
    return Graph(g.n, rows)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``s`` plus the map new index -> old index.

    Vertices are reindexed densely in ascending original order.
    """
    keep = sorted(set(s))
    for v in keep:
        _check_vertex(g.n, v)
    pos = {old: new for new, old in enumerate(keep)}
    rows = []
    for old in keep:
        m = 0
        for w in iter_bits(g.rows[old]):
            new_w = pos.get(w)
            if new_w is not None:
                m |= 1 << new_w
        rows.append(m)
    return Graph(len(keep), tuple(rows)), tuple(keep)


def neighborhood(g: Graph, v: int) -> frozenset[int]:
    """The set of vertices adjacent to v (v itself excluded)."""
    return set_of(g.row(v))


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    """True iff every two distinct members of s are adjacent."""
    members = set(s)
    smask = 0
    for v in members:
        _check_vertex(g.n, v)
        smask |= 1 << v
    return all(g.rows[v] & smask == smask & ~(1 << v) for v in members)


def is_stable(g: Graph, s: Iterable[int]) -> bool:
    """True iff no two members of s are adjacent."""
    members = set(s)
    smask = 0
    for v in members:
        _check_vertex(g.n, v)
        smask |= 1 << v
    return all(g.rows[v] & smask == 0 for v in members)
