"""Automorphism groups of exchange graphs and cluster automorphism groups.

Groups here are small (order at most a few dozen at desk scale), so they are
stored as explicit element lists of vertex permutations. A permutation is a
tuple ``p`` with ``p[v]`` the image of vertex ``v``; products compose right
to left, ``(p * q)[v] = p[q[v]]``.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

from .exchange_graph import ExchangeGraph, geodesic_loops, incident_loop_sizes
from .matrices import matrix_isomorphisms

Perm = tuple[int, ...]


class IncompleteGraph(ValueError):
    """Group computations need a fully enumerated (finite) exchange graph."""


class TransportInconsistency(RuntimeError):
    """Parallel transport of a seed isomorphism produced a non-function."""


def compose(p: Perm, q: Perm) -> Perm:
    return tuple(p[x] for x in q)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def identity(n: int) -> Perm:
    return tuple(range(n))


def perm_order(p: Perm) -> int:
    seen = [False] * len(p)
    result = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        length, j = 0, i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        result = result * length // gcd(result, length)
    return result


def closure(gens: Iterable[Perm], degree: int) -> set[Perm]:
    gens = list(gens)
    e = identity(degree)
    out = {e}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose(g, x)
            if y not in out:
                out.add(y)
                queue.append(y)
    return out


@dataclass
class GroupShape:
    order: int
    is_abelian: bool
    is_cyclic: bool
    dihedral_n: int | None
    center_order: int
    order_profile: tuple[tuple[int, int], ...]

    def describe(self) -> str:
        if self.is_cyclic:
            return f"Z{self.order}"
        if self.dihedral_n is not None:
            return f"D{self.dihedral_n}"
        return f"order {self.order}, {'abelian' if self.is_abelian else 'non-abelian'}"

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "is_abelian": self.is_abelian,
            "is_cyclic": self.is_cyclic,
            "dihedral_n": self.dihedral_n,
            "center_order": self.center_order,
            "order_profile": [list(t) for t in self.order_profile],
            "name": self.describe(),
        }


@dataclass
class PermGroup:
    degree: int
    elements: list[Perm]
    generators: list[Perm] = field(default_factory=list)

    @classmethod
    def from_elements(cls, elements: Iterable[Perm], degree: int) -> "PermGroup":
        """Group from a list that must already be closed under composition."""
        elems = sorted(set(elements))
        if set(elems) != closure(elems, degree):
            raise ValueError("element list is not closed under composition")
        return cls(degree, elems, minimal_generators(elems, degree))

    @classmethod
    def generated_by(cls, gens: Iterable[Perm], degree: int) -> "PermGroup":
        elems = sorted(closure(gens, degree))
        return cls(degree, elems, minimal_generators(elems, degree))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Perm) -> bool:
        return p in self._set

    @property
    def _set(self) -> set[Perm]:
        s = self.__dict__.get("_cached_set")
        if s is None:
            s = self.__dict__["_cached_set"] = set(self.elements)
        return s

    def is_closed(self) -> bool:
        e = identity(self.degree)
        s = self._set
        return e in s and all(compose(p, q) in s for p in s for q in s) and all(inverse(p) in s for p in s)

    def shape(self) -> GroupShape:
        return group_shape(self)


def minimal_generators(elements: Sequence[Perm], degree: int) -> list[Perm]:
    """Greedy generating subset, then drop any generator the others already produce."""
    target = len(set(elements))
    gens: list[Perm] = []
    span = {identity(degree)}
    # prefer high-order elements: they cover more of the group
    for p in sorted(elements, key=lambda q: (-perm_order(q), q)):
        if p not in span:
            gens.append(p)
            span = closure(gens, degree)
            if len(span) == target:
                break
    changed = True
    while changed:
        changed = False
        for g in list(gens):
            rest = [h for h in gens if h != g]
            if len(closure(rest, degree)) == target:
                gens = rest
                changed = True
                break
    return gens


def group_shape(g: PermGroup) -> GroupShape:
    elems = g.elements
    order = len(elems)
    orders = {p: perm_order(p) for p in elems}
    center = [p for p in elems if all(compose(p, q) == compose(q, p) for q in elems)]
    abelian = len(center) == order
    cyclic = any(o == order for o in orders.values())
    dihedral = None
    if order % 2 == 0 and order >= 4:
        n = order // 2
        for r in (p for p in elems if orders[p] == n):
            rpowers = closure([r], g.degree)
            rinv = inverse(r)
            if any(orders[s] == 2 and s not in rpowers and compose(compose(s, r), s) == rinv for s in elems):
                dihedral = n
                break
    profile = tuple(sorted(Counter(orders.values()).items()))
    return GroupShape(order, abelian, cyclic, dihedral, len(center), profile)


# -- Aut(E) ----------------------------------------------------------------

def _refined_colors(adj: list[list[int]], initial: Sequence) -> list[int]:
    def relabel(sig):
        table = {s: i for i, s in enumerate(sorted(set(sig)))}
        return [table[s] for s in sig]

    colors = relabel(list(initial))
    while True:
        sig = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(len(adj))]
        new = relabel(sig)
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def graph_automorphisms(G: ExchangeGraph, loops=None) -> list[Perm]:
    """All edge-preserving vertex bijections of a complete exchange graph.

    Vertices are first colored by the multiset of sizes of loops through them
    and refined by neighbor colors; automorphisms are then found by
    backtracking along a breadth-first order from the root.
    """
    if not G.complete:
        raise IncompleteGraph("graph is truncated; automorphism group unsupported for infinite graphs")
    N = len(G)
    adj = [sorted(a) for a in G.adjacency()]
    adjset = [set(a) for a in adj]
    sizes = incident_loop_sizes(G, loops) if G.n >= 2 else [()] * N
    colors = _refined_colors(adj, [(len(adj[v]), sizes[v]) for v in range(N)])

    order, parent = [G.root], {G.root: None}
    for u in order:
        for w in adj[u]:
            if w not in parent:
                parent[w] = u
                order.append(w)
    if len(order) != N:
        raise ValueError("exchange graph is disconnected")

    image = [-1] * N
    used = [False] * N
    found: list[Perm] = []

    def consistent(w: int, c: int) -> bool:
        mapped_nb = {image[x] for x in adj[w] if image[x] >= 0}
        if not mapped_nb <= adjset[c]:
            return False
        return sum(1 for y in adj[c] if used[y]) == len(mapped_nb)

    def extend(i: int):
        if i == N:
            found.append(tuple(image))
            return
        w = order[i]
        for c in adj[image[parent[w]]]:
            if used[c] or colors[c] != colors[w] or not consistent(w, c):
                continue
            image[w] = c
            used[c] = True
            extend(i + 1)
            used[c] = False
            image[w] = -1

    root = G.root
    for t in range(N):
        if colors[t] != colors[root]:
            continue
        image[root] = t
        used[t] = True
        extend(1)
        used[t] = False
        image[root] = -1
    return sorted(found)


def graph_isomorphism(G: ExchangeGraph, H: ExchangeGraph, loops_G=None, loops_H=None) -> Perm | None:
    """One vertex bijection carrying the edges of ``G`` onto those of ``H``, or ``None``."""
    if not (G.complete and H.complete):
        raise IncompleteGraph("isomorphism test needs complete graphs")
    N = len(G)
    if N != len(H) or len(G.edges) != len(H.edges):
        return None
    adj = [sorted(a) for a in G.adjacency()] + [sorted(w + N for w in a) for a in H.adjacency()]
    adjset = [set(a) for a in adj]
    sizes = incident_loop_sizes(G, loops_G) + incident_loop_sizes(H, loops_H)
    colors = _refined_colors(adj, [(len(adj[v]), sizes[v]) for v in range(2 * N)])
    if sorted(colors[:N]) != sorted(colors[N:]):
        return None

    order, parent = [G.root], {G.root: None}
    for u in order:
        for w in adj[u]:
            if w not in parent:
                parent[w] = u
                order.append(w)
    image = [-1] * N
    used = [False] * (2 * N)

    def extend(i: int) -> bool:
        if i == N:
            return True
        w = order[i]
        for c in adj[image[parent[w]]]:
            if used[c] or colors[c] != colors[w]:
                continue
            mapped = {image[x] for x in adj[w] if image[x] >= 0}
            if not mapped <= adjset[c] or sum(1 for y in adj[c] if used[y]) != len(mapped):
                continue
            image[w], used[c] = c, True
            if extend(i + 1):
                return True
            image[w], used[c] = -1, False
        return False

    for t in range(N, 2 * N):
        if colors[t] != colors[G.root]:
            continue
        image[G.root], used[t] = t, True
        if extend(1):
            return tuple(c - N for c in image)
        image[G.root], used[t] = -1, False
    return None


def graph_automorphism_group(G: ExchangeGraph, loops=None) -> PermGroup:
    return PermGroup.from_elements(graph_automorphisms(G, loops), len(G))


def is_graph_automorphism(G: ExchangeGraph, p: Perm) -> bool:
    if sorted(p) != list(range(len(G))):
        return False
    edges = set(G.edges)
    return all((min(p[u], p[v]), max(p[u], p[v])) in edges for u, v in G.edges)


# -- Aut(A) ----------------------------------------------------------------

@dataclass
class ClusterAutomorphism:
    base: int
    target_vertex: int
    variable_map: tuple[int, ...]
    orientation: str
    induced: Perm
    variable_perm: dict[int, int] = field(repr=False)

    @property
    def direct(self) -> bool:
        return self.orientation == "direct"


def transport(G: ExchangeGraph, base: int, target: int, phi: Sequence[int]) -> tuple[Perm, dict[int, int]]:
    """Extend ``x_i -> x'_phi(i)`` at ``base -> target`` to the whole graph by
    following matching mutations.

    Returns the induced vertex permutation and the permutation of cluster
    variable ids.
    """
    if not G.complete:
        raise IncompleteGraph("transport needs a complete graph")
    f = {G.clusters[base][i]: G.clusters[target][phi[i]] for i in range(G.n)}
    vmap = {base: target}
    queue = deque([base])
    while queue:
        u = queue.popleft()
        u2 = vmap[u]
        for k in range(G.n):
            w = G.direction_map[u][k]
            x = G.clusters[u][k]
            k2 = G.position_of(u2, f[x])
            w2 = G.direction_map[u2][k2]
            y = G.new_variable(u, k)
            y2 = G.new_variable(u2, k2)
            if f.setdefault(y, y2) != y2:
                raise TransportInconsistency(f"variable {y} sent to both {f[y]} and {y2}")
            if w in vmap:
                if vmap[w] != w2:
                    raise TransportInconsistency(f"vertex {w} sent to both {vmap[w]} and {w2}")
            else:
                vmap[w] = w2
                queue.append(w)
    perm = tuple(vmap[v] for v in range(len(G)))
    if sorted(perm) != list(range(len(G))) or len(set(f.values())) != len(f):
        raise TransportInconsistency("transported map is not a bijection")
    return perm, f


def cluster_automorphisms(G: ExchangeGraph, base: int | None = None) -> list[ClusterAutomorphism]:
    """Every cluster automorphism, found by matching the base quiver against each
    seed's quiver (directly or with all arrows reversed)."""
    if base is None:
        base = G.root
    B = G.seeds[base].matrix
    out: dict[Perm, ClusterAutomorphism] = {}
    for t in range(len(G)):
        for phi, orient in matrix_isomorphisms(B, G.seeds[t].matrix, allow_opposite=True):
            perm, f = transport(G, base, t, phi)
            orientation = "direct" if orient == "direct" else "inverse"
            if perm in out:
                raise TransportInconsistency(f"two cluster automorphisms induce the same permutation {perm}")
            out[perm] = ClusterAutomorphism(base, t, tuple(phi), orientation, perm, f)
    return [out[p] for p in sorted(out)]


def cluster_automorphism_group(G: ExchangeGraph, base: int | None = None):
    auts = cluster_automorphisms(G, base)
    return PermGroup.from_elements([a.induced for a in auts], len(G)), auts


def direct_subgroup(auts: Sequence[ClusterAutomorphism], degree: int | None = None) -> PermGroup:
    """Subgroup of direct cluster automorphisms; its index is checked to be 1 or 2."""
    if degree is None:
        degree = len(auts[0].induced)
    sub = PermGroup.from_elements([a.induced for a in auts if a.direct], degree)
    index, rem = divmod(len(auts), sub.order)
    if rem or index not in (1, 2):
        raise ValueError(f"direct cluster automorphisms have index {len(auts) / sub.order}")
    return sub


def induced_by_variable_map(G: ExchangeGraph, f: dict[int, int]) -> Perm:
    """Vertex permutation induced by a permutation of cluster variable ids."""
    index = {frozenset(c): v for v, c in enumerate(G.clusters)}
    return tuple(index[frozenset(f[x] for x in G.clusters[v])] for v in range(len(G)))


@dataclass
class GroupComparison:
    aut_A: PermGroup
    aut_E: PermGroup
    cluster_automorphisms: list[ClusterAutomorphism]
    witness: Perm | None

    @property
    def aut_A_order(self) -> int:
        return self.aut_A.order

    @property
    def aut_E_order(self) -> int:
        return self.aut_E.order

    @property
    def equal(self) -> bool:
        return self.aut_A.order == self.aut_E.order


def compare_groups(G: ExchangeGraph, base: int | None = None, loops=None) -> GroupComparison:
    """Embed Aut(A) into Aut(E_A) through induced permutations and compare orders.

    When the embedding is proper, ``witness`` is the smallest graph
    automorphism that no cluster automorphism induces.
    """
    if loops is None:
        loops = geodesic_loops(G)
    aut_a, auts = cluster_automorphism_group(G, base)
    aut_e = graph_automorphism_group(G, loops)
    missing = [p for p in aut_e.elements if p not in aut_a]
    if any(p not in aut_e for p in aut_a.elements):
        raise AssertionError("an induced permutation is not a graph automorphism")
    return GroupComparison(aut_a, aut_e, auts, missing[0] if missing else None)


def orbits(g: PermGroup) -> list[list[int]]:
    seen = [False] * g.degree
    out = []
    for v in range(g.degree):
        if seen[v]:
            continue
        orb = sorted({p[v] for p in g.elements})
        for w in orb:
            seen[w] = True
        out.append(orb)
    return out
