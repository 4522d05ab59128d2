"""Split partitions and the layered threshold decomposition.

``split_partition`` either produces a stable-set/clique partition or a
witness of kind C4, co-C4 or C5.  ``threshold_decompose`` refines a split
partition into the nested A/X layer structure (or returns a P4 witness),
working inductively over the clique side in minimum degree order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .core import Graph, iter_bits, mask_of, set_of
from .patterns import PatternKind, Witness, find_induced


class PartitionError(ValueError):
    """A supplied (S, K) pair is not a valid partition for the graph."""


class DecompositionError(RuntimeError):
    """Internal invariant of an inductive construction failed; indicates a
    bug or malformed input rather than a property of the graph."""


@dataclass(frozen=True)
class SplitPartition:
    """Partition of the vertices into a stable set S and a clique K."""

    S: frozenset[int]
    K: frozenset[int]


@dataclass(frozen=True)
class Violation:
    """A named axiom violation with the vertices (or levels) involved."""

    code: str
    vertices: tuple[int, ...]
    message: str


def _sorted_violations(vs: list[Violation]) -> list[Violation]:
    return sorted(vs, key=lambda v: (v.code, v.vertices, v.message))


@dataclass(frozen=True)
class ThresholdDecomposition:
    """Layered sets A_0..A_n (stable side) and X_1..X_{n+1} (clique side).

    ``A[i]`` holds A_i and ``X[j]`` holds X_{j+1}.  Every vertex of A_i is
    adjacent to every vertex of X_j exactly when j <= i.
    """

    n: int
    A: tuple[frozenset[int], ...]
    X: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"level count must be nonnegative, got {self.n}")
        if len(self.A) != self.n + 1 or len(self.X) != self.n + 1:
            raise ValueError(
                f"expected {self.n + 1} A-sets and X-sets, "
                f"got {len(self.A)} and {len(self.X)}"
            )

    @property
    def stable_side(self) -> frozenset[int]:
        return frozenset().union(*self.A) if self.A else frozenset()

    @property
    def clique_side(self) -> frozenset[int]:
        return frozenset().union(*self.X) if self.X else frozenset()


def check_partition(g: Graph, part: SplitPartition) -> None:
    """Raise PartitionError unless part is a valid split partition of g."""
    smask = mask_of(part.S)
    kmask = mask_of(part.K)
    full = g.full_mask
    if smask & kmask:
        raise PartitionError(f"S and K overlap on {sorted(set_of(smask & kmask))}")
    if smask | kmask != full or (smask | kmask) & ~full:
        raise PartitionError("S and K do not partition the vertex set")
    for v in part.S:
        if g.rows[v] & smask:
            raise PartitionError(f"S is not stable: {v} has a neighbor in S")
    for v in part.K:
        if g.rows[v] & kmask != kmask & ~(1 << v):
            raise PartitionError(f"K is not a clique: {v} misses a K-vertex")


def split_partition(g: Graph) -> Union[SplitPartition, Witness]:
    """Compute a split partition, or a witness of kind C4, co-C4 or C5.

    Vertices are scanned in descending degree order (ties by index); the
    largest prefix forming a clique is the candidate K.  If the remainder
    is not stable, endpoints of offending edges that are complete to K are
    promoted into K greedily before giving up and extracting a witness.
    """
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    kmask = 0
    for v in order:
        if g.rows[v] & kmask == kmask:
            kmask |= 1 << v
        else:
            break
    full = g.full_mask

    def bad_pair(km: int) -> Optional[tuple[int, int]]:
        sm = full & ~km
        for u in iter_bits(sm):
            hits = g.rows[u] & sm & ~((1 << (u + 1)) - 1)
            if hits:
                return u, next(iter_bits(hits))
        return None

    while True:
        pair = bad_pair(kmask)
        if pair is None:
            return SplitPartition(S=set_of(full & ~kmask), K=set_of(kmask))
        u, v = pair
        if g.rows[u] & kmask == kmask:
            kmask |= 1 << u
        elif g.rows[v] & kmask == kmask:
            kmask |= 1 << v
        else:
            break

    for kind in (PatternKind.C4, PatternKind.CO_C4, PatternKind.C5):
        w = find_induced(g, kind)
        if w is not None:
            return w
    raise DecompositionError(
        "no split partition found yet none of C4, co-C4, C5 occurs induced"
    )


def _check_disjoint_subsets(g: Graph, S, K) -> tuple[int, int]:
    smask = mask_of(S)
    kmask = mask_of(K)
    if smask & kmask:
        raise PartitionError(f"S and K overlap on {sorted(set_of(smask & kmask))}")
    if (smask | kmask) >> g.n:
        raise PartitionError("member out of range")
    return smask, kmask


def is_complete_split(g: Graph, S, K) -> bool:
    """True iff S is stable, K is a clique, and S is complete to K."""
    smask, kmask = _check_disjoint_subsets(g, S, K)
    for v in iter_bits(smask):
        if g.rows[v] & smask:
            return False
        if g.rows[v] & kmask != kmask:
            return False
    for v in iter_bits(kmask):
        if g.rows[v] & kmask != kmask & ~(1 << v):
            return False
    return True


def is_perfect_split(g: Graph, S, K) -> bool:
    """True iff S is stable, K is a clique, and the S-K edges form a
    perfect matching covering all of S and K."""
    smask, kmask = _check_disjoint_subsets(g, S, K)
    for v in iter_bits(smask):
        if g.rows[v] & smask:
            return False
        if (g.rows[v] & kmask).bit_count() != 1:
            return False
    for v in iter_bits(kmask):
        if g.rows[v] & kmask != kmask & ~(1 << v):
            return False
        if (g.rows[v] & smask).bit_count() != 1:
            return False
    return True


def threshold_decompose(
    g: Graph, part: SplitPartition
) -> Union[ThresholdDecomposition, Witness]:
    """Layer a P4-free split graph into a threshold decomposition.

    Returns a P4 witness when one exists.  Otherwise the clique side is
    reinserted in decreasing (degree, index) order on top of the base
    layering A_0 = S; each reinserted vertex x either joins X_{n+1} (no
    neighbors in A_n), joins X_n (complete to a nonempty A_n, n >= 1), or
    splits A_n and opens a new level.  The n = 0 complete case also goes
    through the split branch so that x ends up alone in a fresh X_1.
    """
    check_partition(g, part)
    w = find_induced(g, PatternKind.P4)
    if w is not None:
        return w

    smask = mask_of(part.S)
    A: list[set[int]] = [set(part.S)]
    X: list[set[int]] = [set()]
    n = 0
    order = sorted(part.K, key=lambda v: (g.degree(v), v))
    for x in reversed(order):
        s_neighbors = set_of(g.rows[x] & smask)
        if not s_neighbors <= A[n]:
            raise DecompositionError(
                f"minimum-degree invariant failed reinserting {x}: neighbors "
                f"{sorted(s_neighbors - A[n])} lie below the top stable level"
            )
        hit = s_neighbors & A[n]
        if not hit:
            X[n].add(x)
        elif hit == A[n] and n >= 1:
            X[n - 1].add(x)
        else:
            A[n] -= hit
            A.append(set(hit))
            X.insert(n, {x})
            n += 1
    return ThresholdDecomposition(
        n=n, A=tuple(frozenset(a) for a in A), X=tuple(frozenset(x) for x in X)
    )


def validate_threshold(g: Graph, dec: ThresholdDecomposition) -> list[Violation]:
    """All violations of the threshold axioms, sorted by code then vertices.

    Codes: TH1 partition, TH2 clique/stable, TH3 nonemptiness,
    TH4 required completeness, TH5 forbidden extra edges.
    """
    out: list[Violation] = []
    full = g.full_mask
    seen = 0
    names = [(f"A_{i}", s) for i, s in enumerate(dec.A)]
    names += [(f"X_{j + 1}", s) for j, s in enumerate(dec.X)]
    for label, s in names:
        for v in s:
            if not 0 <= v < g.n:
                out.append(Violation("TH1", (v,), f"{label} member {v} out of range"))
            elif seen >> v & 1:
                out.append(Violation("TH1", (v,), f"{v} assigned to more than one set"))
            else:
                seen |= 1 << v
    missing = full & ~seen
    for v in iter_bits(missing):
        out.append(Violation("TH1", (v,), f"{v} not covered by the decomposition"))
    if out:
        return _sorted_violations(out)

    amask = mask_of(dec.stable_side)
    xmask = mask_of(dec.clique_side)
    for v in iter_bits(amask):
        for u in iter_bits(g.rows[v] & amask):
            if u > v:
                out.append(Violation("TH2", (v, u), "stable side contains an edge"))
    for v in iter_bits(xmask):
        miss = xmask & ~g.rows[v] & ~(1 << v)
        for u in iter_bits(miss):
            if u > v:
                out.append(Violation("TH2", (v, u), "clique side misses an edge"))

    for i in range(1, dec.n + 1):
        if not dec.A[i]:
            out.append(Violation("TH3", (), f"A_{i} must be nonempty"))
        if not dec.X[i - 1]:
            out.append(Violation("TH3", (), f"X_{i} must be nonempty"))

    for i, a_set in enumerate(dec.A):
        required = mask_of(frozenset().union(*dec.X[:i]) if i else frozenset())
        forbidden = xmask & ~required
        for v in sorted(a_set):
            for u in iter_bits(required & ~g.rows[v]):
                out.append(
                    Violation("TH4", (v, u), f"A_{i} vertex {v} not adjacent to {u}")
                )
            for u in iter_bits(forbidden & g.rows[v]):
                out.append(
                    Violation("TH5", (v, u), f"edge {v}-{u} not allowed by the layering")
                )
    return _sorted_violations(out)


def is_threshold(g: Graph) -> bool:
    """True iff a split partition exists and it layers without a P4."""
    part = split_partition(g)
    if isinstance(part, Witness):
        return False
    return isinstance(threshold_decompose(g, part), ThresholdDecomposition)
