"""Generators, exhaustive enumeration with isomorphism reduction, census
tables, and the independent brute-force labeling oracle used in tests.

Canonical codes are computed by explicit permutation minimization of the
column-major upper-triangle bit string (vectorized with numpy); corpus
sizes keep the simple method fast and auditable.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional

import numpy as np

from .comb import CombDecomposition, validate_comb
from .core import Graph, GraphError, build_graph, is_clique, is_stable, iter_bits, set_of
from .patterns import PatternKind, find_induced

MAX_ISO_VERTICES = 8
MAX_LABELED_VERTICES = 7
MAX_CODE_VERTICES = 10


@dataclass(frozen=True)
class CombParams:
    """Size parameters of a comb to generate.

    ``a_sizes`` covers A_0..A_n, ``x_sizes`` X_1..X_{n+1}, ``m_sizes``
    M_1..M_l and ``y_sizes`` Y_2..Y_{l+2}.  The seed shuffles the
    assignment of vertex labels to roles; the edge set is determined by
    the sizes alone, up to isomorphism.
    """

    n: int
    l: int
    k0: int
    a_sizes: tuple[int, ...]
    x_sizes: tuple[int, ...]
    m_sizes: tuple[int, ...]
    y_sizes: tuple[int, ...]
    seed: int = 0

    def check(self) -> None:
        if self.n < 0:
            raise ValueError(f"n must be nonnegative, got {self.n}")
        if self.l < 1:
            raise ValueError(f"l must be at least 1, got {self.l}")
        if not 1 <= self.k0 <= self.l:
            raise ValueError(f"k0 must lie in [1, {self.l}], got {self.k0}")
        shapes = (
            ("a_sizes", self.a_sizes, self.n + 1),
            ("x_sizes", self.x_sizes, self.n + 1),
            ("m_sizes", self.m_sizes, self.l),
            ("y_sizes", self.y_sizes, self.l + 1),
        )
        for name, seq, want in shapes:
            if len(seq) != want:
                raise ValueError(f"{name} must have length {want}, got {len(seq)}")
            if any(s < 0 for s in seq):
                raise ValueError(f"{name} must be nonnegative")
        for i in range(1, self.n + 1):
            if self.a_sizes[i] == 0:
                raise ValueError(f"A_{i} must be nonempty")
            if self.x_sizes[i - 1] == 0:
                raise ValueError(f"X_{i} must be nonempty")
        for i in range(1, self.l):
            if self.m_sizes[i - 1] == 0:
                raise ValueError(f"M_{i} must be nonempty")
        for t in range(2, self.l + 1):
            if self.y_sizes[t - 2] == 0:
                raise ValueError(f"Y_{t} must be nonempty")
        for i in range(1, self.l + 1):
            m = self.m_sizes[i - 1]
            y = self.x_sizes[0] if i == 1 else self.y_sizes[i - 2]
            if m > 0 and m != y:
                raise ValueError(
                    f"level {i} teeth require matching sizes, got |Y_{i}|={y} "
                    f"and |M_{i}|={m}"
                )


def generate_comb(params: CombParams) -> tuple[Graph, CombDecomposition]:
    """Build the comb with the given level sizes plus its decomposition.

    Emits exactly the mandated edges: the clique on the X and Y sets,
    A_i complete to X_j for j <= i and to the spine levels Y_2..Y_l,
    ascending-index matchings per tooth level, Y_j complete to M_i for
    i < j <= l and Y_{l+1} complete to M_i for i <= k0.
    """
    params.check()
    counts = (
        list(params.a_sizes)
        + list(params.x_sizes)
        + list(params.m_sizes)
        + list(params.y_sizes)
    )
    total = sum(counts)
    labels = list(range(total))
    random.Random(params.seed).shuffle(labels)
    blocks: list[frozenset[int]] = []
    at = 0
    for c in counts:
        blocks.append(frozenset(labels[at : at + c]))
        at += c
    na = params.n + 1
    A = tuple(blocks[:na])
    X = tuple(blocks[na : 2 * na])
    M = tuple(blocks[2 * na : 2 * na + params.l])
    Y = tuple(blocks[2 * na + params.l :])

    def y_level(i: int) -> frozenset[int]:
        return X[0] if i == 1 else Y[i - 2]

    edges: list[tuple[int, int]] = []
    clique = sorted(frozenset().union(*X, *Y))
    for i, u in enumerate(clique):
        for v in clique[i + 1 :]:
            edges.append((u, v))
    for i in range(1, params.n + 1):
        for j in range(1, i + 1):
            edges.extend((u, v) for u in A[i] for v in X[j - 1])
    spine_and_top = [Y[t - 2] for t in range(2, params.l + 1)] + [Y[params.l]]
    for block in spine_and_top:
        for i in range(1, params.n + 1):
            edges.extend((u, v) for u in A[i] for v in block)
    matchings = []
    for i in range(1, params.l + 1):
        pairs = tuple(zip(sorted(y_level(i)), sorted(M[i - 1])))
        matchings.append(pairs)
        edges.extend(pairs)
    for i in range(1, params.l + 1):
        for t in range(i + 1, params.l + 1):
            edges.extend((y, m) for y in Y[t - 2] for m in M[i - 1])
    for i in range(1, params.k0 + 1):
        edges.extend((y, m) for y in Y[params.l - 1] for m in M[i - 1])

    g = build_graph(total, edges)
    dec = CombDecomposition(
        n=params.n,
        l=params.l,
        k0=params.k0,
        A=A,
        X=X,
        M=M,
        Y=Y,
        matchings=tuple(matchings),
    )
    return g, dec


def random_comb_params(seed: int, max_vertices: int = 200) -> CombParams:
    """Deterministically draw a size profile with at most max_vertices."""
    rng = random.Random(seed)
    while True:
        n = rng.randint(0, 3)
        l = rng.randint(1, 4)
        k0 = rng.randint(1, l)
        a_sizes = [rng.randint(0, 10)] + [rng.randint(1, 12) for _ in range(n)]
        x_sizes = [rng.randint(1, 12) for _ in range(n)] + [rng.randint(0, 10)]
        if n == 0 and rng.random() < 0.3:
            x_sizes = [0]
        m_sizes = [rng.randint(1, 12) for _ in range(l - 1)] + [rng.randint(0, 12)]
        y_sizes = []
        for t in range(2, l + 1):
            y_sizes.append(m_sizes[t - 1] if m_sizes[t - 1] > 0 else rng.randint(1, 12))
        y_sizes += [rng.randint(0, 10), rng.randint(0, 10)]
        if m_sizes[0] > 0:
            x_sizes[0] = m_sizes[0]
        for t in range(2, l + 1):
            if m_sizes[t - 1] > 0:
                y_sizes[t - 2] = m_sizes[t - 1]
        params = CombParams(
            n=n,
            l=l,
            k0=k0,
            a_sizes=tuple(a_sizes),
            x_sizes=tuple(x_sizes),
            m_sizes=tuple(m_sizes),
            y_sizes=tuple(y_sizes),
            seed=rng.getrandbits(32),
        )
        try:
            params.check()
        except ValueError:
            continue
        if sum(params.a_sizes) + sum(params.x_sizes) + sum(params.m_sizes) + sum(
            params.y_sizes
        ) <= max_vertices:
            return params


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi style graph; identical seed gives an identical graph."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v))
    return build_graph(n, edges)


def _pair_index(n: int) -> list[tuple[int, int]]:
    """Column-major upper-triangle pair order, as in the graph6 encoding."""
    return [(i, j) for j in range(1, n) for i in range(j)]


@lru_cache(maxsize=None)
def _perm_tables(n: int) -> np.ndarray:
    """Gather table: for each permutation row, the flat adjacency-matrix
    index feeding each code bit."""
    pairs = _pair_index(n)
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    i_idx = np.array([i for i, _ in pairs], dtype=np.int64)
    j_idx = np.array([j for _, j in pairs], dtype=np.int64)
    return perms[:, i_idx] * n + perms[:, j_idx]


def canonical_code(g: Graph) -> bytes:
    """Permutation-minimal encoding: one byte of vertex count, then the
    lexicographically smallest packed upper-triangle bit string over all
    vertex orderings.  Equal codes hold exactly for isomorphic graphs."""
    n = g.n
    if n > MAX_CODE_VERTICES:
        raise GraphError(f"canonical codes support at most {MAX_CODE_VERTICES} vertices")
    if n <= 1:
        return bytes([n])
    flat = np.zeros(n * n, dtype=np.uint8)
    for u in range(n):
        for v in iter_bits(g.rows[u]):
            flat[u * n + v] = 1
    best: Optional[bytes] = None
    if n <= 8:
        tables = [_perm_tables(n)]
    else:
        tables = _chunked_perm_tables(n)
    for table in tables:
        bits = flat[table]
        packed = np.packbits(bits, axis=1)
        order = np.lexsort(packed[:, ::-1].T)
        cand = packed[order[0]].tobytes()
        if best is None or cand < best:
            best = cand
    return bytes([n]) + best


def _chunked_perm_tables(n: int, chunk: int = 40320) -> Iterator[np.ndarray]:
    pairs = _pair_index(n)
    i_idx = np.array([i for i, _ in pairs], dtype=np.int64)
    j_idx = np.array([j for _, j in pairs], dtype=np.int64)
    it = itertools.permutations(range(n))
    while True:
        block = list(itertools.islice(it, chunk))
        if not block:
            return
        perms = np.array(block, dtype=np.int64)
        yield perms[:, i_idx] * n + perms[:, j_idx]


def _graph_from_code(code: bytes) -> Graph:
    n = code[0]
    pairs = _pair_index(n)
    bits = np.unpackbits(np.frombuffer(code[1:], dtype=np.uint8))
    edges = [pairs[k] for k in range(len(pairs)) if bits[k]]
    return build_graph(n, edges)


@lru_cache(maxsize=None)
def _iso_codes(n: int) -> tuple[bytes, ...]:
    """Sorted canonical codes of all isomorphism classes on n vertices,
    grown by vertex augmentation from the classes one size down."""
    if n == 0:
        return (bytes([0]),)
    seen: set[bytes] = set()
    for parent_code in _iso_codes(n - 1):
        parent = _graph_from_code(parent_code)
        base_edges = list(parent.edges())
        for mask in range(1 << (n - 1)):
            edges = base_edges + [(v, n - 1) for v in iter_bits(mask)]
            seen.add(canonical_code(build_graph(n, edges)))
    return tuple(sorted(seen))


def enumerate_graphs(n: int, up_to_iso: bool) -> Iterator[Graph]:
    """All labeled graphs on n vertices, or one representative per
    isomorphism class, in deterministic order."""
    if up_to_iso:
        if n > MAX_ISO_VERTICES:
            raise GraphError(
                f"isomorphism-reduced enumeration supports at most "
                f"{MAX_ISO_VERTICES} vertices"
            )
        for code in _iso_codes(n):
            yield _graph_from_code(code)
        return
    if n > MAX_LABELED_VERTICES:
        raise GraphError(
            f"labeled enumeration supports at most {MAX_LABELED_VERTICES} vertices"
        )
    pairs = _pair_index(n)
    for mask in range(1 << len(pairs)):
        yield build_graph(n, [pairs[k] for k in iter_bits(mask)])


@dataclass(frozen=True)
class CensusRow:
    n: int
    total: int
    split: int
    threshold: int
    comb: int


_SPLIT_KINDS = (PatternKind.C4, PatternKind.CO_C4, PatternKind.C5)
_THRESHOLD_KINDS = (PatternKind.C4, PatternKind.CO_C4, PatternKind.P4)
_COMB_KINDS = (
    PatternKind.C4,
    PatternKind.CO_C4,
    PatternKind.C5,
    PatternKind.CHAIR,
    PatternKind.CO_CHAIR,
)


def census(max_n: int) -> list[CensusRow]:
    """Isomorphism-class counts per vertex count, computed directly from
    the forbidden-pattern searches so the table is independent of the
    constructive recognizers."""
    if max_n > 7:
        raise GraphError("census supports at most 7 vertices")
    rows = []
    for n in range(1, max_n + 1):
        total = split = threshold = comb = 0
        for g in enumerate_graphs(n, up_to_iso=True):
            total += 1
            if not any(find_induced(g, k) for k in _SPLIT_KINDS):
                split += 1
            if not any(find_induced(g, k) for k in _THRESHOLD_KINDS):
                threshold += 1
            if not any(find_induced(g, k) for k in _COMB_KINDS):
                comb += 1
        rows.append(CensusRow(n=n, total=total, split=split, threshold=threshold, comb=comb))
    return rows


def census_csv(rows: list[CensusRow]) -> str:
    lines = ["n,total,split,threshold,comb"]
    lines += [f"{r.n},{r.total},{r.split},{r.threshold},{r.comb}" for r in rows]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Brute-force labeling oracle


def _split_masks(g: Graph) -> Iterator[tuple[int, int]]:
    """All (stable mask, clique mask) partitions, ascending by clique mask."""
    full = g.full_mask
    for kmask in range(full + 1):
        if is_clique(g, set_of(kmask)) and is_stable(g, set_of(full & ~kmask)):
            yield full & ~kmask, kmask


def _ordered_partitions(items: tuple[int, ...], slots: int) -> Iterator[list[list[int]]]:
    """All assignments of items into an ordered list of (possibly empty)
    slots."""
    out: list[list[int]] = [[] for _ in range(slots)]

    def rec(k: int) -> Iterator[list[list[int]]]:
        if k == len(items):
            yield out
            return
        for s in range(slots):
            out[s].append(items[k])
            yield from rec(k + 1)
            out[s].pop()

    yield from rec(0)


def brute_force_comb_label(g: Graph, limit_n: int = 6) -> Optional[CombDecomposition]:
    """Search all role assignments for one passing the axiom validator.

    Independent of the inductive recognizer: it enumerates split
    partitions, clique-side level assignments, then derives the forced
    placement of every stable-side vertex.  Used to arbitrate validator
    semantics in tests.
    """
    if g.n > limit_n:
        raise GraphError(f"brute-force labeling supports at most {limit_n} vertices")
    for smask, kmask in _split_masks(g):
        s_vertices = tuple(iter_bits(smask))
        k_vertices = tuple(iter_bits(kmask))
        isolated = [v for v in s_vertices if not g.rows[v]]
        movable = tuple(v for v in s_vertices if g.rows[v])
        max_n = min(len(k_vertices), len(movable))
        for n_lev in range(0, max_n + 1):
            for l in range(1, len(movable) + len(k_vertices) + 2):
                if l - 1 > len(movable) or l - 1 > len(k_vertices):
                    break
                dec = _try_shapes(g, k_vertices, movable, isolated, n_lev, l)
                if dec is not None:
                    return dec
    return None


def _try_shapes(
    g: Graph,
    k_vertices: tuple[int, ...],
    movable: tuple[int, ...],
    isolated: list[int],
    n_lev: int,
    l: int,
) -> Optional[CombDecomposition]:
    """Try all clique-side layerings with the given level counts; stable
    vertices then have at most a few feasible placements each."""
    slots = (n_lev + 1) + (l + 1)  # X_1..X_{n+1}, Y_2..Y_{l+2}
    for assignment in _ordered_partitions(k_vertices, slots):
        X = [set(s) for s in assignment[: n_lev + 1]]
        Y = [set(s) for s in assignment[n_lev + 1 :]]
        if any(not X[i] for i in range(1, n_lev)) and n_lev >= 2:
            continue
        if any(not X[i - 1] for i in range(1, n_lev + 1)):
            continue
        if any(not Y[t - 2] for t in range(2, l + 1)):
            continue
        dec = _place_stable(g, X, Y, movable, isolated, n_lev, l)
        if dec is not None:
            return dec
    return None


def _place_stable(
    g: Graph,
    X: list[set[int]],
    Y: list[set[int]],
    movable: tuple[int, ...],
    isolated: list[int],
    n_lev: int,
    l: int,
) -> Optional[CombDecomposition]:
    x_masks = [sum(1 << v for v in s) for s in X]
    y_masks = [sum(1 << v for v in s) for s in Y]
    a_reach = sum(y_masks[: l - 1]) + y_masks[l]  # Y_2..Y_l and Y_{l+2}

    def x_prefix(i: int) -> int:
        return sum(x_masks[:i])

    A: list[set[int]] = [set(isolated)] + [set() for _ in range(n_lev)]
    M: list[set[int]] = [set() for _ in range(l)]
    partner: dict[int, int] = {}

    def rec(k: int) -> Optional[CombDecomposition]:
        if k == len(movable):
            for i in range(1, n_lev + 1):
                if not A[i]:
                    return None
            for i in range(1, l):
                if not M[i - 1]:
                    return None
            matchings = []
            for i in range(1, l + 1):
                y_set = X[0] if i == 1 else Y[i - 2]
                if M[i - 1] and len(y_set) != len(M[i - 1]):
                    return None
                matchings.append(
                    tuple(sorted((partner[m], m) for m in M[i - 1]))
                )
            cand = CombDecomposition(
                n=n_lev,
                l=l,
                k0=_bf_choose_k0(g, Y, M, l),
                A=tuple(frozenset(s) for s in A),
                X=tuple(frozenset(s) for s in X),
                M=tuple(frozenset(s) for s in M),
                Y=tuple(frozenset(s) for s in Y),
                matchings=tuple(matchings),
            )
            if not validate_comb(g, cand):
                return cand
            return None
        v = movable[k]
        row = g.rows[v]
        # A_i: complete to X_1..X_i, the spine and Y_{l+2}, nothing else
        for i in range(1, n_lev + 1):
            if row == x_prefix(i) | a_reach:
                A[i].add(v)
                res = rec(k + 1)
                if res is not None:
                    return res
                A[i].discard(v)
        # M_i: one partner in level i, complete to Y_{i+1}..Y_l and
        # possibly Y_{l+1}
        for i in range(1, l + 1):
            level_mask = x_masks[0] if i == 1 else y_masks[i - 2]
            hits = row & level_mask
            if hits.bit_count() != 1:
                continue
            p = next(iter_bits(hits))
            if p in partner.values():
                continue
            upper = sum(y_masks[t - 2] for t in range(i + 1, l + 1))
            rest = row & ~level_mask & ~upper
            if rest and rest != y_masks[l - 1]:
                continue
            if row & upper != upper:
                continue
            M[i - 1].add(v)
            partner[v] = p
            res = rec(k + 1)
            if res is not None:
                return res
            del partner[v]
            M[i - 1].discard(v)
        return None

    return rec(0)


def _bf_choose_k0(g: Graph, Y: list[set[int]], M: list[set[int]], l: int) -> int:
    top = Y[l - 1]
    if not top:
        return l
    k0 = 0
    for i in range(1, l + 1):
        mmask = sum(1 << v for v in M[i - 1])
        if all(g.rows[y] & mmask == mmask for y in top):
            k0 = i
        else:
            break
    return max(k0, 1)
