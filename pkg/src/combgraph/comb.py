"""The comb decomposition: data model, axiom validator, mirror check and
the threshold embedding.

A comb decomposition extends the threshold layering with matched "teeth":
stable sets M_1..M_l perfectly matched into clique levels Y_1..Y_l, where
Y_1 is an alias for X_1 and is never stored twice.  Higher Y levels are
complete to lower M levels; Y_{l+1} is complete to M_1..M_{k0} only, and
Y_{l+2} sees no teeth at all.  ``validate_comb`` checks the ten axioms
CB1..CB10 and reports violations deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Graph, GraphError, iter_bits, mask_of
from .splitgraph import ThresholdDecomposition, Violation, _sorted_violations


@dataclass(frozen=True)
class CombDecomposition:
    """Sets of a comb: A_0..A_n, X_1..X_{n+1}, M_1..M_l, Y_2..Y_{l+2},
    plus one matching per tooth level and the reach index k0.

    ``A[i]`` = A_i, ``X[j]`` = X_{j+1}, ``M[i]`` = M_{i+1}, ``Y[i]`` =
    Y_{i+2}; Y_1 coincides with X_1.  ``matchings[i]`` holds the (y, m)
    pairs of tooth level i+1.
    """

    n: int
    l: int
    k0: int
    A: tuple[frozenset[int], ...]
    X: tuple[frozenset[int], ...]
    M: tuple[frozenset[int], ...]
    Y: tuple[frozenset[int], ...]
    matchings: tuple[tuple[tuple[int, int], ...], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"n must be nonnegative, got {self.n}")
        if self.l < 1:
            raise ValueError(f"l must be at least 1, got {self.l}")
        if not 1 <= self.k0 <= self.l:
            raise ValueError(f"k0 must lie in [1, {self.l}], got {self.k0}")
        shapes = (
            ("A", self.A, self.n + 1),
            ("X", self.X, self.n + 1),
            ("M", self.M, self.l),
            ("Y", self.Y, self.l + 1),
            ("matchings", self.matchings, self.l),
        )
        for name, seq, want in shapes:
            if len(seq) != want:
                raise ValueError(f"{name} must have length {want}, got {len(seq)}")

    def y_level(self, i: int) -> frozenset[int]:
        """Y_i for 1 <= i <= l+2; Y_1 is X_1."""
        if i == 1:
            return self.X[0]
        return self.Y[i - 2]

    @property
    def stable_side(self) -> frozenset[int]:
        return frozenset().union(*self.A, *self.M)

    @property
    def clique_side(self) -> frozenset[int]:
        return frozenset().union(*self.X, *self.Y)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "l": self.l,
            "k0": self.k0,
            "A": [sorted(s) for s in self.A],
            "X": [sorted(s) for s in self.X],
            "M": [sorted(s) for s in self.M],
            "Y": [sorted(s) for s in self.Y],
            "matchings": [
                [[y, m] for y, m in pairs] for pairs in self.matchings
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "CombDecomposition":
        try:
            return cls(
                n=int(data["n"]),
                l=int(data["l"]),
                k0=int(data["k0"]),
                A=tuple(frozenset(map(int, s)) for s in data["A"]),
                X=tuple(frozenset(map(int, s)) for s in data["X"]),
                M=tuple(frozenset(map(int, s)) for s in data["M"]),
                Y=tuple(frozenset(map(int, s)) for s in data["Y"]),
                matchings=tuple(
                    tuple(sorted((int(y), int(m)) for y, m in pairs))
                    for pairs in data["matchings"]
                ),
            )
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed decomposition document: {exc}") from exc


Role = tuple[str, int]


def _roles(dec: CombDecomposition) -> list[tuple[Role, frozenset[int]]]:
    out: list[tuple[Role, frozenset[int]]] = []
    out += [(("A", i), s) for i, s in enumerate(dec.A)]
    out += [(("X", j + 1), s) for j, s in enumerate(dec.X)]
    out += [(("M", i + 1), s) for i, s in enumerate(dec.M)]
    out += [(("Y", t + 2), s) for t, s in enumerate(dec.Y)]
    return out


def _role_name(r: Role) -> str:
    return f"{r[0]}_{r[1]}"


def _classify(ru: Role, rv: Role, l: int, k0: int) -> tuple[str, str]:
    """Decide what the axioms say about edges between two roles.

    Returns (mode, code): mode 'req' means every pair must be an edge and a
    missing one violates ``code``; 'forb' means no pair may be an edge and a
    present one violates CB10 (or CB2 inside the stable side); 'match'
    means only the recorded matching pairs are edges (CB6/CB10).

    A_0 collects isolated vertices.  A_1..A_n reach X_1..X_i, every spine
    level Y_1..Y_l, and the toothless top level Y_{l+2}; they never touch
    Y_{l+1}, whose vertices instead reach the teeth M_1..M_{k0}.
    """
    if ru[0] in ("X", "Y") and rv[0] in ("X", "Y"):
        return ("req", "CB3")
    if ru[0] in ("A", "M") and rv[0] in ("A", "M"):
        return ("forb", "CB2")
    if ru[0] in ("X", "Y"):
        ru, rv = rv, ru
    kind, level = ru
    if kind == "A":
        if level == 0:
            return ("forb", "CB10")
        if rv[0] == "X":
            if rv[1] <= level:
                return ("req", "CB4")
            return ("forb", "CB10")
        if rv[1] <= l or rv[1] == l + 2:
            return ("req", "CB5")
        return ("forb", "CB10")
    # kind == "M"
    i = level
    if rv[0] == "X" and rv[1] >= 2:
        return ("forb", "CB10")
    t = 1 if rv[0] == "X" else rv[1]
    if t == i:
        return ("match", "CB6")
    if i < t <= l:
        return ("req", "CB7")
    if t == l + 1 and i <= k0:
        return ("req", "CB8")
    return ("forb", "CB10")


def validate_comb(g: Graph, dec: CombDecomposition) -> list[Violation]:
    """All violations of the comb axioms CB1..CB10, sorted by code then
    vertices.  An empty list certifies the decomposition against g."""
    out: list[Violation] = []
    roles = _roles(dec)

    seen = 0
    for role, members in roles:
        for v in members:
            if not 0 <= v < g.n:
                out.append(
                    Violation("CB1", (v,), f"{_role_name(role)} member {v} out of range")
                )
            elif seen >> v & 1:
                out.append(Violation("CB1", (v,), f"{v} assigned to more than one set"))
            else:
                seen |= 1 << v
    for v in iter_bits(g.full_mask & ~seen):
        out.append(Violation("CB1", (v,), f"{v} not covered by the decomposition"))
    if out:
        return _sorted_violations(out)

    # CB9 nonemptiness (X_1 is exempt exactly when n = 0, where it is X_{n+1})
    for i in range(1, dec.n + 1):
        if not dec.A[i]:
            out.append(Violation("CB9", (), f"A_{i} must be nonempty"))
        if not dec.X[i - 1]:
            out.append(Violation("CB9", (), f"X_{i} must be nonempty"))
    for i in range(1, dec.l):
        if not dec.M[i - 1]:
            out.append(Violation("CB9", (), f"M_{i} must be nonempty"))
    for t in range(2, dec.l + 1):
        if not dec.Y[t - 2]:
            out.append(Violation("CB9", (), f"Y_{t} must be nonempty"))

    # CB6 matching structure per tooth level
    match_pairs: list[set[tuple[int, int]]] = []
    for i in range(1, dec.l + 1):
        pairs = dec.matchings[i - 1]
        y_set = dec.y_level(i)
        m_set = dec.M[i - 1]
        good: set[tuple[int, int]] = set()
        if not m_set:
            if pairs:
                out.append(
                    Violation("CB6", (), f"level {i} has no teeth but a matching")
                )
            match_pairs.append(good)
            continue
        y_seen: set[int] = set()
        m_seen: set[int] = set()
        for y, m in pairs:
            if y not in y_set or m not in m_set:
                out.append(
                    Violation("CB6", (y, m), f"pair ({y}, {m}) not within level {i}")
                )
                continue
            if y in y_seen or m in m_seen:
                out.append(
                    Violation("CB6", (y, m), f"pair ({y}, {m}) repeats a matched vertex")
                )
                continue
            y_seen.add(y)
            m_seen.add(m)
            good.add((y, m))
        for y in sorted(y_set - y_seen):
            out.append(Violation("CB6", (y,), f"Y_{i} vertex {y} is unmatched"))
        for m in sorted(m_set - m_seen):
            out.append(Violation("CB6", (m,), f"M_{i} vertex {m} is unmatched"))
        match_pairs.append(good)

    # Pairwise edge axioms
    for a in range(len(roles)):
        role_u, set_u = roles[a]
        for b in range(a, len(roles)):
            role_v, set_v = roles[b]
            if a == b:
                mode, code = _classify(role_u, role_v, dec.l, dec.k0)
                members = sorted(set_u)
                for i, u in enumerate(members):
                    for v in members[i + 1 :]:
                        present = g.has_edge(u, v)
                        if mode == "req" and not present:
                            out.append(
                                Violation(code, (u, v), f"{u}-{v} missing within "
                                          f"{_role_name(role_u)}")
                            )
                        elif mode == "forb" and present:
                            out.append(
                                Violation(code, (u, v), f"edge {u}-{v} inside "
                                          f"{_role_name(role_u)} is not allowed")
                            )
                continue
            mode, code = _classify(role_u, role_v, dec.l, dec.k0)
            if mode == "match":
                level = role_u[1] if role_u[0] == "M" else role_v[1]
                pairs = match_pairs[level - 1]
                for u in sorted(set_u):
                    for v in sorted(set_v):
                        y, m = (u, v) if role_u[0] in ("X", "Y") else (v, u)
                        present = g.has_edge(y, m)
                        if (y, m) in pairs:
                            if not present:
                                out.append(
                                    Violation("CB6", (y, m),
                                              f"matched pair {y}-{m} is not an edge")
                                )
                        elif present:
                            out.append(
                                Violation("CB10", (min(y, m), max(y, m)),
                                          f"edge {y}-{m} is not a matching edge")
                            )
                continue
            for u in sorted(set_u):
                for v in sorted(set_v):
                    present = g.has_edge(u, v)
                    lo, hi = min(u, v), max(u, v)
                    if mode == "req" and not present:
                        out.append(
                            Violation(code, (lo, hi),
                                      f"{_role_name(role_u)} vertex and "
                                      f"{_role_name(role_v)} vertex {lo}-{hi} "
                                      f"must be adjacent")
                        )
                    elif mode == "forb" and present:
                        out.append(
                            Violation(code, (lo, hi),
                                      f"edge {lo}-{hi} between {_role_name(role_u)} "
                                      f"and {_role_name(role_v)} is not allowed")
                        )
    return _sorted_violations(out)


def p4_mirror_holds(g: Graph, m: int, b: int, b2: int, m2: int) -> bool:
    """Mirror symmetry of an induced path m-b-b2-m2.

    True iff, outside the path itself, m and m2 have identical
    neighborhoods and so do b and b2.  Raises GraphError when the four
    vertices do not form an induced P4 in that order.
    """
    vs = (m, b, b2, m2)
    if len(set(vs)) != 4:
        raise GraphError(f"vertices {vs} are not distinct")
    for v in vs:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    edges = {(0, 1), (1, 2), (2, 3)}
    for i in range(4):
        for j in range(i + 1, 4):
            if g.has_edge(vs[i], vs[j]) != ((i, j) in edges):
                raise GraphError(f"vertices {vs} do not form an induced path")
    path = mask_of(vs)
    return (
        g.rows[m] & ~path == g.rows[m2] & ~path
        and g.rows[b] & ~path == g.rows[b2] & ~path
    )


def threshold_to_comb(dec: ThresholdDecomposition) -> CombDecomposition:
    """Embed a threshold decomposition as a comb with a single empty tooth
    level: identical A and X layers, l = 1, M_1 and both extra Y levels
    empty, k0 = 1."""
    return CombDecomposition(
        n=dec.n,
        l=1,
        k0=1,
        A=dec.A,
        X=dec.X,
        M=(frozenset(),),
        Y=(frozenset(), frozenset()),
        matchings=((),),
    )
