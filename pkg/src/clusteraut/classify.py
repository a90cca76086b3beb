"""Finite type and finite mutation type recognition.

Mutation classes are enumerated by breadth-first search over exchange
matrices, deduplicated by an exact canonical form (lexicographically minimal
adjacency encoding over all relabelings, searched with color-refinement
pruning).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .matrices import ExchangeMatrix, as_matrix, is_indecomposable
from .mutation import mutate_rows

MAX_CANONICAL_RANK = 12


class RankTooLarge(ValueError):
    pass


class Inconclusive(RuntimeError):
    """Budget exhausted before a decision could be made."""


class Inapplicable(ValueError):
    """The multiplicity criterion does not apply to this input."""


CanonicalForm = tuple


# -- canonical forms -------------------------------------------------------

def _refine_colors(rows) -> list[int]:
    n = len(rows)
    sig = [tuple(sorted((rows[v][u], rows[u][v]) for u in range(n) if rows[v][u])) for v in range(n)]
    colors = _relabel(sig)
    while True:
        sig = [
            (colors[v], tuple(sorted((colors[u], rows[v][u], rows[u][v]) for u in range(n) if rows[v][u])))
            for v in range(n)
        ]
        new = _relabel(sig)
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _relabel(sig) -> list[int]:
    order = {s: i for i, s in enumerate(sorted(set(sig)))}
    return [order[s] for s in sig]


def canonical_labeling(B) -> tuple[CanonicalForm, tuple[int, ...]]:
    """Return ``(form, order)`` where ``order[p]`` is the vertex placed at position ``p``."""
    rows = as_matrix(B).entries
    n = len(rows)
    if n > MAX_CANONICAL_RANK:
        raise RankTooLarge(f"canonical form supports rank <= {MAX_CANONICAL_RANK}, got {n}")
    colors = _refine_colors(rows)
    slot_color = sorted(colors)
    best: list = [None]
    best_order: list = [None]
    placed: list[int] = []
    used = [False] * n
    cur_rows: list[tuple] = []

    def search(p: int):
        if p == n:
            cand = tuple(cur_rows)
            if best[0] is None or cand < best[0]:
                best[0] = cand
                best_order[0] = tuple(placed)
            return
        on_best = best[0] is not None and tuple(cur_rows) == best[0][:p]
        for v in range(n):
            if used[v] or colors[v] != slot_color[p]:
                continue
            row = tuple(x for w in placed for x in (rows[v][w], rows[w][v]))
            if on_best and row > best[0][p]:
                continue
            used[v] = True
            placed.append(v)
            cur_rows.append(row)
            search(p + 1)
            cur_rows.pop()
            placed.pop()
            used[v] = False
            on_best = best[0] is not None and tuple(cur_rows) == best[0][:p]

    search(0)
    return (n,) + best[0], best_order[0]


def canonical_quiver(Q) -> CanonicalForm:
    """Isomorphism-invariant key for a quiver or exchange matrix."""
    return canonical_labeling(Q)[0]


# -- Dynkin recognition ----------------------------------------------------

@dataclass(frozen=True)
class TypeLabel:
    family: str
    rank: int

    def __str__(self) -> str:
        if self.family in ("Ã", "T"):
            return f"{self.family}{self.rank - 1 if self.family == 'Ã' else self.rank}"
        return f"{self.family}{self.rank}"


def dynkin_type(B) -> TypeLabel | None:
    """Label of ``B`` if its valued underlying graph is a Dynkin diagram.

    B/C are told apart by the end vertex of the valued edge: when the end
    vertex ``e`` has ``|b_eu| = 2`` the label is B, otherwise C.
    """
    rows = as_matrix(B).entries
    n = len(rows)
    if n == 0 or not is_indecomposable(as_matrix(B)):
        return None
    if n == 1:
        return TypeLabel("A", 1)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rows[u][v]]
    if len(edges) != n - 1:
        return None
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    prods = {(u, v): abs(rows[u][v] * rows[v][u]) for u, v in edges}
    heavy = [e for e, p in prods.items() if p != 1]
    if any(p >= 4 for p in prods.values()) or len(heavy) > 1:
        return None
    if not heavy:
        branch = [v for v in range(n) if deg[v] >= 3]
        if not branch:
            return TypeLabel("A", n)
        if len(branch) > 1 or deg[branch[0]] > 3:
            return None
        arms = sorted(_arm_length(rows, branch[0], u) for u in range(n) if rows[branch[0]][u])
        if arms[0] == 1 and arms[1] == 1:
            return TypeLabel("D", n)
        if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
            return TypeLabel("E", n)
        return None
    if max(deg) > 2:
        return None
    (u, v), = heavy
    p = prods[(u, v)]
    if p == 3:
        return TypeLabel("G", 2) if n == 2 else None
    if n == 2:
        return TypeLabel("B", 2)
    if deg[u] == 1 or deg[v] == 1:
        e, w = (u, v) if deg[u] == 1 else (v, u)
        return TypeLabel("B" if abs(rows[e][w]) == 2 else "C", n)
    if n == 4:
        return TypeLabel("F", 4)
    return None


def _arm_length(rows, center: int, start: int) -> int:
    n = len(rows)
    length, prev, cur = 1, center, start
    while True:
        nxt = [w for w in range(n) if rows[cur][w] and w != prev]
        if not nxt:
            return length
        prev, cur = cur, nxt[0]
        length += 1


# -- mutation classes ------------------------------------------------------

@dataclass
class QuiverClass:
    members: dict[CanonicalForm, ExchangeMatrix]
    paths: dict[CanonicalForm, tuple[int, ...]]
    complete: bool
    max_multiplicity_seen: int
    witness_dynkin: tuple[TypeLabel, ExchangeMatrix] | None = None
    violation: tuple[int, ...] | None = None

    def __len__(self) -> int:
        return len(self.members)


def _multiplicity(rows) -> int:
    return max((abs(x) for r in rows for x in r), default=0)


def mutation_class(Q, budget: int = 10_000, mode: str = "class") -> QuiverClass:
    """Breadth-first enumeration of the mutation class up to relabeling.

    ``mode="mutation-finite"`` stops as soon as a multiplicity above 2 shows
    up and records the mutation sequence (0-based directions, applied to the
    input labeling) that reached it. ``mode="finite-type"`` stops at the
    first Dynkin member.
    """
    B = as_matrix(Q)
    start = B.entries
    form = canonical_quiver(B)
    members = {form: B}
    paths = {form: ()}
    maxmult = _multiplicity(start)
    out = QuiverClass(members, paths, False, maxmult)
    if mode == "mutation-finite" and maxmult > 2:
        out.violation = ()
        return out
    label = dynkin_type(B)
    if label is not None:
        out.witness_dynkin = (label, B)
        if mode == "finite-type":
            return out
    queue = deque([(start, ())])
    n = B.n
    while queue:
        rows, path = queue.popleft()
        for k in range(n):
            new = mutate_rows(rows, k)
            mult = _multiplicity(new)
            newpath = path + (k,)
            if mult > out.max_multiplicity_seen:
                out.max_multiplicity_seen = mult
            if mode == "mutation-finite" and mult > 2:
                out.violation = newpath
                return out
            M = ExchangeMatrix(new)
            f = canonical_quiver(M)
            if f in members:
                continue
            if len(members) >= budget:
                return out
            members[f] = M
            paths[f] = newpath
            if out.witness_dynkin is None:
                label = dynkin_type(M)
                if label is not None:
                    out.witness_dynkin = (label, M)
                    if mode == "finite-type":
                        return out
            queue.append((new, newpath))
    out.complete = True
    return out


def finite_type_check(Q, budget: int = 10_000) -> TypeLabel | None:
    """Dynkin label of the mutation class, or ``None`` if it is not of finite type.

    A member with ``|b_ij b_ji| >= 4`` settles the negative answer early.

    Raises
    ------
    Inconclusive
        If the budget runs out with neither a Dynkin member nor an obstruction.
    """
    B = as_matrix(Q)
    start = B.entries
    if _max_product(start) >= 4:
        return None
    label = dynkin_type(B)
    if label is not None:
        return label
    seen = {canonical_quiver(B)}
    queue = deque([start])
    while queue:
        rows = queue.popleft()
        for k in range(B.n):
            new = mutate_rows(rows, k)
            if _max_product(new) >= 4:
                return None
            M = ExchangeMatrix(new)
            f = canonical_quiver(M)
            if f in seen:
                continue
            label = dynkin_type(M)
            if label is not None:
                return label
            if len(seen) >= budget:
                raise Inconclusive(f"no decision within {budget} class members")
            seen.add(f)
            queue.append(new)
    return None


def _max_product(rows) -> int:
    n = len(rows)
    return max((abs(rows[i][j] * rows[j][i]) for i in range(n) for j in range(i + 1, n)), default=0)


@dataclass
class MutationFiniteReport:
    finite: bool
    class_size: int | None
    certificate: tuple[int, ...] | QuiverClass

    def to_json(self) -> dict:
        cert = self.certificate
        if isinstance(cert, QuiverClass):
            cert = {"class_size": len(cert), "max_multiplicity": cert.max_multiplicity_seen}
        else:
            cert = {"sequence": [k + 1 for k in cert]}
        return {"finite": self.finite, "class_size": self.class_size, "certificate": cert}


def is_mutation_finite(Q, budget: int = 10_000) -> MutationFiniteReport:
    """Decide finite mutation type by the arrow-multiplicity criterion.

    Rank 2 is always mutation-finite. Non-skew-symmetric input of rank 3 or
    more is accepted only when it is of finite type.
    """
    B = as_matrix(Q)
    if not is_indecomposable(B):
        raise ValueError("quiver must be connected")
    if B.n <= 2:
        cls = mutation_class(B, budget)
        return MutationFiniteReport(True, len(cls), cls)
    if not B.is_skew_symmetric():
        if finite_type_check(B, budget) is None:
            raise Inapplicable("the multiplicity criterion needs a skew-symmetric quiver")
        cls = mutation_class(B, budget)
        return MutationFiniteReport(True, len(cls), cls)
    cls = mutation_class(B, budget, mode="mutation-finite")
    if cls.violation is not None:
        return MutationFiniteReport(False, None, cls.violation)
    if not cls.complete:
        raise Inconclusive(f"mutation class exceeds {budget} members without a multiplicity above 2")
    return MutationFiniteReport(True, len(cls), cls)


# -- rank-3 full subquivers -------------------------------------------------

def rank3_type(Q) -> str:
    """Classify a connected rank-3 quiver as ``A3``, ``Ã2``, ``T3``, another
    finite type label, or ``infinite`` (not mutation-finite)."""
    from .builtin import builtin_matrix

    B = as_matrix(Q)
    if B.n != 3 or not is_indecomposable(B):
        raise ValueError("expected a connected quiver with three vertices")
    if not B.is_skew_symmetric():
        label = finite_type_check(B)
        return str(label) if label is not None else "other"
    cls = mutation_class(B, budget=1000, mode="mutation-finite")
    if cls.violation is not None:
        return "infinite"
    if cls.witness_dynkin is not None:
        return str(cls.witness_dynkin[0])
    if canonical_quiver(builtin_matrix("markov")) in cls.members:
        return "T3"
    if canonical_quiver(builtin_matrix("atilde2")) in cls.members:
        return "Ã2"
    return "other"


@dataclass
class Rank3Scan:
    types: dict[tuple[int, ...], str]
    violations: list[tuple[int, ...]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "subquivers": [{"vertices": [v + 1 for v in k], "type": t} for k, t in self.types.items()],
            "violations": [[v + 1 for v in k] for k in self.violations],
        }


def rank3_subquiver_scan(Q) -> Rank3Scan:
    """Type of every connected full subquiver on three vertices; anything other
    than A3 or Ã2 is reported as a violation."""
    B = as_matrix(Q)
    scan = Rank3Scan({})
    for trip in combinations(range(B.n), 3):
        sub = B.submatrix(trip)
        if not is_indecomposable(sub):
            continue
        t = rank3_type(sub)
        scan.types[trip] = t
        if t not in ("A3", "Ã2"):
            scan.violations.append(trip)
    return scan


# -- layer-signature conjecture --------------------------------------------

@dataclass
class ConjectureReport:
    vertices: int
    signature_classes: int
    pairs_checked: int
    part1_counterexamples: list[tuple[int, int]]
    part2_violations: list[tuple[int, int]]
    part2_excluded: bool
    type_label: str | None

    @property
    def counterexamples(self) -> list[tuple[int, int]]:
        """Pairs that refute a part of the conjecture that applies to this graph."""
        if self.part2_excluded:
            return list(self.part1_counterexamples)
        return sorted(set(self.part1_counterexamples) | set(self.part2_violations))

    def to_json(self) -> dict:
        return {
            "vertices": self.vertices,
            "signature_classes": self.signature_classes,
            "pairs_checked": self.pairs_checked,
            "part1_counterexamples": [list(p) for p in self.part1_counterexamples],
            "part2_violations": [list(p) for p in self.part2_violations],
            "part2_excluded": self.part2_excluded,
            "type": self.type_label,
            "counterexamples": [list(p) for p in self.counterexamples],
        }


def check_signature_conjecture(G) -> ConjectureReport:
    """Test, on one complete exchange graph, that equal layer signatures at two
    seeds imply (1) a graph automorphism between them and (2) isomorphic or
    opposite quivers. Part (2) is not expected for rank 2 and F4, so
    violations there are recorded without counting as counterexamples.
    """
    from .exchange_graph import all_layer_signatures, geodesic_loops
    from .groups import graph_automorphism_group, orbits
    from .matrices import matrix_isomorphisms

    loops = geodesic_loops(G)
    sigs = all_layer_signatures(G, loops)
    group = graph_automorphism_group(G, loops)
    orbit_of = {}
    for i, orb in enumerate(orbits(group)):
        for v in orb:
            orbit_of[v] = i
    by_sig: dict[tuple, list[int]] = {}
    for v, s in enumerate(sigs):
        by_sig.setdefault(s.layers, []).append(v)
    try:
        label = finite_type_check(G.seeds[G.root].matrix)
    except Inconclusive:
        label = None
    excluded = G.n == 2 or (label is not None and str(label) == "F4")
    part1, part2, pairs = [], [], 0
    for members in by_sig.values():
        for i, v in enumerate(members):
            for w in members[i + 1:]:
                pairs += 1
                if orbit_of[v] != orbit_of[w]:
                    part1.append((v, w))
                if not matrix_isomorphisms(G.seeds[v].matrix, G.seeds[w].matrix, allow_opposite=True):
                    part2.append((v, w))
    return ConjectureReport(len(G), len(by_sig), pairs, part1, part2, excluded,
                            str(label) if label is not None else None)
