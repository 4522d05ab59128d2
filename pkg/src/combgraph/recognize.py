"""Inductive comb recognition: a validated decomposition or a certified
forbidden-pattern witness for every input graph.

The algorithm follows the structure of the class characterization: find a
split partition (or a C4/co-C4/C5 witness); if the graph is P4-free,
layer it as a threshold graph and embed; otherwise pick an induced path
a-b-b'-a', check the mirror symmetry of its endpoints and midpoints (a
failure yields a chair or co-chair witness), recurse on the graph minus
{a', b'}, and splice the removed pair back into the returned decomposition
by a table of surgeries.  Every surgery result is gated by the axiom
validator; when one path fails, the next induced path is tried.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .comb import CombDecomposition, _roles, threshold_to_comb, validate_comb
from .core import Graph, induced_subgraph, iter_bits, mask_of
from .patterns import PatternKind, Witness, find_induced, iter_induced, verify_witness
from .splitgraph import (
    DecompositionError,
    SplitPartition,
    ThresholdDecomposition,
    split_partition,
    threshold_decompose,
)


@dataclass(frozen=True)
class RecognitionResult:
    """Exactly one of a validated decomposition or a pattern witness."""

    decomposition: Optional[CombDecomposition] = None
    witness: Optional[Witness] = None

    def __post_init__(self) -> None:
        if (self.decomposition is None) == (self.witness is None):
            raise ValueError("exactly one of decomposition and witness must be set")

    @property
    def is_comb(self) -> bool:
        return self.decomposition is not None


def _mirror_violation_witness(g: Graph, p4: tuple[int, int, int, int]) -> Optional[Witness]:
    """Build a chair or co-chair witness from a vertex breaking the mirror
    symmetry of the induced path p4 = (a, b, b2, a2)."""
    a, b, b2, a2 = p4
    path = mask_of(p4)
    for x in iter_bits((g.rows[a] ^ g.rows[a2]) & ~path):
        if g.rows[a] >> x & 1:
            w = Witness(PatternKind.CO_CHAIR, (b2, a, a2, x, b))
        else:
            w = Witness(PatternKind.CO_CHAIR, (b, a2, a, x, b2))
        if verify_witness(g, w):
            return w
    for x in iter_bits((g.rows[b] ^ g.rows[b2]) & ~path):
        if g.rows[b] >> x & 1:
            w = Witness(PatternKind.CHAIR, (a2, b2, b, x, a))
        else:
            w = Witness(PatternKind.CHAIR, (a, b, b2, x, a2))
        if verify_witness(g, w):
            return w
    return None


def _mirror_holds(g: Graph, p4: tuple[int, int, int, int]) -> bool:
    a, b, b2, a2 = p4
    path = mask_of(p4)
    return (
        g.rows[a] & ~path == g.rows[a2] & ~path
        and g.rows[b] & ~path == g.rows[b2] & ~path
    )


# ---------------------------------------------------------------------------
# Surgery machinery: mutable working copies of a decomposition


def _work(dec: CombDecomposition) -> dict:
    return {
        "n": dec.n,
        "l": dec.l,
        "A": [set(s) for s in dec.A],
        "X": [set(s) for s in dec.X],
        "M": [set(s) for s in dec.M],
        "Y": [set(s) for s in dec.Y],
        "match": [set(p) for p in dec.matchings],
    }


def _y_set(w: dict, i: int) -> set[int]:
    """Y_i of a working copy; Y_1 is X_1."""
    if i == 1:
        return w["X"][0]
    return w["Y"][i - 2]


def _role_set(w: dict, role: tuple[str, int]) -> set[int]:
    kind, lev = role
    if kind == "A":
        return w["A"][lev]
    if kind == "X":
        return w["X"][lev - 1]
    if kind == "M":
        return w["M"][lev - 1]
    return w["Y"][lev - 2]


def _choose_k0(g: Graph, w: dict) -> int:
    """Largest prefix of tooth levels the Y_{l+1} set is complete to; falls
    back to l when Y_{l+1} is empty (the value is then unobservable)."""
    l = w["l"]
    top = w["Y"][l - 1]
    if not top:
        return l
    k0 = 0
    for i in range(1, l + 1):
        mmask = mask_of(w["M"][i - 1])
        if all(g.rows[y] & mmask == mmask for y in top):
            k0 = i
        else:
            break
    return max(k0, 1)


def _freeze(g: Graph, w: dict) -> CombDecomposition:
    return CombDecomposition(
        n=w["n"],
        l=w["l"],
        k0=_choose_k0(g, w),
        A=tuple(frozenset(s) for s in w["A"]),
        X=tuple(frozenset(s) for s in w["X"]),
        M=tuple(frozenset(s) for s in w["M"]),
        Y=tuple(frozenset(s) for s in w["Y"]),
        matchings=tuple(tuple(sorted(p)) for p in w["match"]),
    )


def _relabel(dec: CombDecomposition, mapping: tuple[int, ...]) -> CombDecomposition:
    remap = lambda s: frozenset(mapping[v] for v in s)  # noqa: E731
    return CombDecomposition(
        n=dec.n,
        l=dec.l,
        k0=dec.k0,
        A=tuple(remap(s) for s in dec.A),
        X=tuple(remap(s) for s in dec.X),
        M=tuple(remap(s) for s in dec.M),
        Y=tuple(remap(s) for s in dec.Y),
        matchings=tuple(
            tuple(sorted((mapping[y], mapping[m]) for y, m in pairs))
            for pairs in dec.matchings
        ),
    )


def _surgery_candidates(
    g: Graph, dec: CombDecomposition, a: int, b: int, b2: int, a2: int
) -> Iterator[CombDecomposition]:
    """Candidate splices of the twin pair (a2, b2) into a decomposition of
    g - {a2, b2}, tried in a fixed order.  Every candidate is still subject
    to full validation by the caller."""
    loc: dict[int, tuple[str, int]] = {}
    for role, members in _roles(dec):
        for v in members:
            loc[v] = role
    ra, rb = loc[a], loc[b]
    n0, l0 = dec.n, dec.l
    a_stable = ra[0] in ("A", "M")
    b_clique = rb[0] in ("X", "Y")

    def y_level_of(role: tuple[str, int]) -> Optional[int]:
        if role[0] == "X" and role[1] == 1:
            return 1
        if role[0] == "Y":
            return role[1]
        return None

    # Matched twin: a is a tooth of b; mirror the pair one level across.
    if ra[0] == "M" and y_level_of(rb) == ra[1] and (b, a) in dec.matchings[ra[1] - 1]:
        w = _work(dec)
        w["M"][ra[1] - 1].add(a2)
        _y_set(w, ra[1]).add(b2)
        w["match"][ra[1] - 1].add((b2, a2))
        yield _freeze(g, w)

    # Twin placement into the same sets.
    if a_stable and b_clique:
        w = _work(dec)
        _role_set(w, ra).add(a2)
        _role_set(w, rb).add(b2)
        yield _freeze(g, w)

    # Extend the matching of each tooth level with the new pair.
    for i in range(1, l0 + 1):
        w = _work(dec)
        w["M"][i - 1].add(a2)
        _y_set(w, i).add(b2)
        w["match"][i - 1].add((b2, a2))
        yield _freeze(g, w)

    # Top-level swap: a sits in X_n over the singleton A_n = {b}.
    if (
        n0 >= 1
        and ra == ("X", n0)
        and rb == ("A", n0)
        and dec.A[n0] == {b}
        and not dec.X[n0]
    ):
        w = _work(dec)
        w["X"][n0 - 1].discard(a)
        w["X"][n0 - 1].add(b)
        w["A"][n0] = {a}
        w["X"][n0].add(b2)
        w["A"].append({a2})
        w["X"].append(set())
        w["n"] = n0 + 1
        yield _freeze(g, w)

    # Level-1 swap: the single tooth pair (a, b) flips orientation.
    if (
        n0 == 0
        and ra == ("X", 1)
        and rb == ("M", 1)
        and dec.X[0] == {a}
        and dec.M[0] == {b}
    ):
        w = _work(dec)
        w["X"][0] = {b, b2}
        w["M"][0] = {a, a2}
        w["match"][0] = {(b, a), (b2, a2)}
        yield _freeze(g, w)

    # Rotation: a in Y_2 reaches the level-1 tooth b below the lone Y_1
    # vertex c; the pair drops to level 1 and c moves up.
    if (
        n0 == 0
        and ra == ("Y", 2)
        and rb == ("M", 1)
        and l0 == 2
        and len(dec.X[0]) == 1
        and dec.M[0] == {b}
        and not dec.M[1]
    ):
        c = next(iter(dec.X[0]))
        w = _work(dec)
        w["X"][0] = {b, b2}
        w["M"][0] = {a, a2}
        w["match"][0] = {(b, a), (b2, a2)}
        w["Y"][0].discard(a)
        w["Y"][0].add(c)
        yield _freeze(g, w)

    # Conversion: a and b share X_1 of a toothless decomposition; they
    # become the first tooth pair and the rest of X_1 moves up the spine.
    if ra == ("X", 1) and rb == ("X", 1) and l0 == 1 and not dec.M[0]:
        w = _work(dec)
        displaced = (w["X"][0] - {a, b}) | w["Y"][0] | w["Y"][1]
        w["X"][0] = {b, b2}
        w["M"][0] = {a, a2}
        w["match"][0] = {(b, a), (b2, a2)}
        teeth = mask_of((a, a2))
        w["Y"][0] = {c for c in displaced if g.rows[c] & teeth == teeth}
        w["Y"][1] = displaced - w["Y"][0]
        yield _freeze(g, w)

    # Ladder shift: a leaves its A-layer to pair with b from X_1 as the
    # new tooth level 1, and the remaining layered structure re-slots by
    # contact profile: vertices touching the teeth climb to Y_{l+1},
    # clique vertices seeing the whole remaining A-side go to Y_{l+2},
    # those seeing none of it form the new top X level.
    if (
        ra[0] == "A"
        and ra[1] >= 1
        and rb == ("X", 1)
        and l0 == 1
        and not dec.M[0]
    ):
        teeth = mask_of((a, a2))
        a_rest = [s - {a} for s in dec.A[1:]]
        a_rest = [s for s in a_rest if s]
        k_rest = set().union(*dec.X, *dec.Y) - {b}
        y2_pool = {c for c in k_rest if g.rows[c] & teeth}
        rest = k_rest - y2_pool
        cand: Optional[dict] = None
        if not a_rest:
            cand = {
                "n": 0,
                "l": 1,
                "A": [set(dec.A[0])],
                "X": [{b, b2}],
                "M": [{a, a2}],
                "Y": [set(y2_pool), set(rest)],
                "match": [{(b, a), (b2, a2)}],
            }
        else:
            amask = mask_of(frozenset().union(*a_rest))
            y3_pool = {c for c in rest if g.rows[c] & amask == amask}
            top_pool = {c for c in rest if not g.rows[c] & amask}
            partial = rest - y3_pool - top_pool
            interiors = [set(level) & partial for level in dec.X[1:]]
            interiors = [s for s in interiors if s]
            if len(interiors) == len(a_rest) - 1:
                cand = {
                    "n": len(a_rest),
                    "l": 1,
                    "A": [set(dec.A[0])] + [set(s) for s in a_rest],
                    "X": [{b, b2}] + interiors + [set(top_pool)],
                    "M": [{a, a2}],
                    "Y": [set(y2_pool), set(y3_pool)],
                    "match": [{(b, a), (b2, a2)}],
                }
                # Teeth-contacted vertices that also see the A-side need
                # an untoothed spine level above the new teeth.
                spine = {c for c in y2_pool if g.rows[c] & amask}
                if spine:
                    variant = {
                        "n": cand["n"],
                        "l": 2,
                        "A": [set(s) for s in cand["A"]],
                        "X": [set(s) for s in cand["X"]],
                        "M": [{a, a2}, set()],
                        "Y": [set(spine), set(y2_pool - spine), set(y3_pool)],
                        "match": [{(b, a), (b2, a2)}, set()],
                    }
                    yield _freeze(g, variant)
        if cand is not None:
            yield _freeze(g, cand)

    # Tooth graft: a2 becomes the tooth of a lone untoothed spine vertex
    # p it is adjacent to, and b2 parks on Y_{l+1}.
    for t in range(1, l0 + 1):
        if dec.M[t - 1]:
            continue
        y_old = dec.y_level(t)
        if len(y_old) != 1:
            continue
        p = next(iter(y_old))
        if not g.has_edge(a2, p):
            continue
        w = _work(dec)
        w["M"][t - 1] = {a2}
        w["match"][t - 1] = {(p, a2)}
        w["Y"][l0 - 1].add(b2)
        yield _freeze(g, w)

    # Park b2 on one of the two top clique levels.
    if a_stable:
        for y_index in (l0 - 1, l0):
            w = _work(dec)
            w["Y"][y_index].add(b2)
            _role_set(w, ra).add(a2)
            yield _freeze(g, w)

    # Open a fresh top tooth level holding exactly the new pair.
    w = _work(dec)
    w["M"].append({a2})
    w["Y"].insert(l0 - 1, {b2})
    w["match"].append({(b2, a2)})
    w["l"] = l0 + 1
    yield _freeze(g, w)


class RecognitionError(DecompositionError):
    """Every surgery and repair failed validation; this indicates a gap in
    the amended case table rather than a property of the input."""


def comb_decompose(g: Graph) -> RecognitionResult:
    """Recognize g: a validated CombDecomposition exactly when none of C4,
    co-C4, C5, chair, co-chair occurs induced, else a certified witness."""
    part = split_partition(g)
    if isinstance(part, Witness):
        return RecognitionResult(witness=part)
    return _decompose_split(g, part)


def _decompose_split(g: Graph, part: SplitPartition) -> RecognitionResult:
    if find_induced(g, PatternKind.P4) is None:
        dec = threshold_decompose(g, part)
        if not isinstance(dec, ThresholdDecomposition):  # pragma: no cover
            raise DecompositionError("threshold layering failed on a P4-free graph")
        return RecognitionResult(decomposition=threshold_to_comb(dec))

    for p4 in iter_induced(g, PatternKind.P4):
        if not _mirror_holds(g, p4):
            w = _mirror_violation_witness(g, p4)
            if w is None:  # pragma: no cover
                raise DecompositionError(
                    "mirror symmetry failed but no witness could be built"
                )
            return RecognitionResult(witness=w)
        a, b, b2, a2 = p4
        keep = [v for v in range(g.n) if v != a2 and v != b2]
        sub, mapping = induced_subgraph(g, keep)
        # Recurse with the aligned partition so the removed pair's twins
        # always sit on the expected sides of the inner decomposition.
        inv = {old: new for new, old in enumerate(mapping)}
        sub_part = SplitPartition(
            S=frozenset(inv[v] for v in part.S if v != a2),
            K=frozenset(inv[v] for v in part.K if v != b2),
        )
        inner = _decompose_split(sub, sub_part)
        if inner.witness is not None:
            lifted = Witness(
                inner.witness.kind,
                tuple(mapping[v] for v in inner.witness.vertices),
            )
            return RecognitionResult(witness=lifted)
        dec = _relabel(inner.decomposition, mapping)
        for cand in _surgery_candidates(g, dec, a, b, b2, a2):
            if not validate_comb(g, cand):
                return RecognitionResult(decomposition=cand)
    raise RecognitionError(
        f"no surgery produced a valid decomposition for a graph on {g.n} "
        f"vertices with no forbidden pattern found"
    )


def is_comb(g: Graph) -> bool:
    """True iff recognition produces a decomposition."""
    return comb_decompose(g).is_comb
