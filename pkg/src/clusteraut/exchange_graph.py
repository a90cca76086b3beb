"""Exchange graphs, geodesic loops and layer signatures.

Seeds are enumerated breadth-first from an initial labeled seed and
identified by their cluster alone (:func:`canonical_seed_key`). A geodesic
loop is the set of seeds sharing ``n - 2`` fixed cluster variables; in finite
type it is a polygon with ``h + 2`` edges, otherwise it may be an infinite
line.
"""

from __future__ import annotations

import json
import math
import os
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .laurent import LaurentPolynomial
from .matrices import ExchangeMatrix, is_indecomposable
from .mutation import mutate_seed
from .seeds import LabeledSeed, SeedKey, canonical_seed_key

INFINITE = math.inf
UNKNOWN = None

DEFAULT_MAX_VERTICES = 10**6


class UnsupportedAlgebra(ValueError):
    """Enumeration refused: seeds are not known to be determined by clusters."""


class Unreachable(ValueError):
    pass


def default_max_vertices() -> int:
    return int(os.environ.get("CLUSTERAUT_MAX_VERTICES", DEFAULT_MAX_VERTICES))


@dataclass
class ExchangeGraph:
    n: int
    seeds: list[LabeledSeed]
    edges: list[tuple[int, int]]
    direction_map: list[tuple[int | None, ...]]
    complete: bool
    root: int = 0
    keys: list[SeedKey] = field(default_factory=list, compare=False, repr=False)
    variables: list[LaurentPolynomial] = field(default_factory=list, compare=False, repr=False)
    clusters: list[tuple[int, ...]] = field(default_factory=list, compare=False, repr=False)

    def __post_init__(self):
        if not self.keys:
            self.keys = [canonical_seed_key(s) for s in self.seeds]
        if not self.clusters:
            index: dict[str, int] = {}
            for s in self.seeds:
                ids = []
                for x in s.cluster:
                    t = x.serialize()
                    if t not in index:
                        index[t] = len(self.variables)
                        self.variables.append(x)
                    ids.append(index[t])
                self.clusters.append(tuple(ids))
        self._index = {k: i for i, k in enumerate(self.keys)}

    def __len__(self) -> int:
        return len(self.seeds)

    @property
    def num_vertices(self) -> int:
        return len(self.seeds)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def index_of(self, seed: LabeledSeed) -> int | None:
        return self._index.get(canonical_seed_key(seed))

    def neighbors(self, v: int) -> list[int]:
        return [w for w in self.direction_map[v] if w is not None]

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in self.seeds]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def is_regular(self) -> bool:
        adj = self.adjacency()
        return all(len(a) == self.n for a in adj)

    def position_of(self, v: int, var: int) -> int:
        return self.clusters[v].index(var)

    def new_variable(self, u: int, k: int) -> int:
        """Variable id gained by mutating vertex ``u`` at position ``k``."""
        w = self.direction_map[u][k]
        (x,) = set(self.clusters[w]) - set(self.clusters[u])
        return x


def _check_supported(B: ExchangeMatrix) -> None:
    if not is_indecomposable(B):
        raise ValueError("exchange matrix must be indecomposable")
    if B.is_skew_symmetric():
        return
    from .classify import Inconclusive, finite_type_check

    try:
        label = finite_type_check(B)
    except Inconclusive:
        label = None
    if label is None:
        raise UnsupportedAlgebra(
            "non-skew-symmetric matrix of infinite (or undecided) type: clusters may not determine seeds"
        )


def build_graph(seed, max_vertices: int | None = None, max_radius: int | None = None) -> ExchangeGraph:
    """Breadth-first enumeration of the exchange graph.

    Vertices are numbered in discovery order with directions scanned in
    ascending order. Vertices at distance ``max_radius`` are still mutated so
    that edges between known seeds are recorded, but no new seed is added
    beyond the limits; the result is then marked ``complete=False``.
    """
    s0 = seed if isinstance(seed, LabeledSeed) else LabeledSeed.initial(seed)
    _check_supported(s0.matrix)
    if max_vertices is None:
        max_vertices = default_max_vertices()
    n = s0.n
    seeds = [s0]
    keys = [canonical_seed_key(s0)]
    index = {keys[0]: 0}
    depth = [0]
    dirs: list[list[int | None]] = [[None] * n]
    edges: set[tuple[int, int]] = set()
    truncated = False
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for k in range(n):
            s = mutate_seed(seeds[u], k)
            key = canonical_seed_key(s)
            v = index.get(key)
            if v is None:
                if (max_radius is not None and depth[u] >= max_radius) or len(seeds) >= max_vertices:
                    truncated = True
                    continue
                v = len(seeds)
                index[key] = v
                seeds.append(s)
                keys.append(key)
                depth.append(depth[u] + 1)
                dirs.append([None] * n)
                queue.append(v)
            dirs[u][k] = v
            edges.add((min(u, v), max(u, v)))
    return ExchangeGraph(
        n=n,
        seeds=seeds,
        edges=sorted(edges),
        direction_map=[tuple(d) for d in dirs],
        complete=not truncated,
        root=0,
        keys=keys,
    )


def distances_from(G: ExchangeGraph, v: int) -> list[int | None]:
    dist: list[int | None] = [None] * len(G)
    dist[v] = 0
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in G.neighbors(u):
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(G: ExchangeGraph, v: int, w: int) -> int:
    d = distances_from(G, v)[w]
    if d is None:
        raise Unreachable(f"vertex {w} is not reachable from {v}")
    return d


@dataclass(frozen=True)
class GeodesicLoop:
    anchor: int
    frozen: tuple[int, ...]
    frozen_variables: frozenset[int]
    vertices: tuple[int, ...]
    size: int | float | None

    @property
    def is_infinite(self) -> bool:
        return self.size == INFINITE


def residual_product(B: ExchangeMatrix, a: int, b: int) -> int:
    return abs(B.entries[a][b] * B.entries[b][a])


_FINITE_LOOP_SIZE = {0: 4, 1: 5, 2: 6, 3: 8}


def _walk_loop(G: ExchangeGraph, start: int, frozen_vars: frozenset[int]) -> tuple[list[int], bool]:
    """Vertices of the loop through ``start`` (cycle order when closed) and whether it closed."""

    def free_neighbors(u):
        return [G.direction_map[u][k] for k, x in enumerate(G.clusters[u]) if x not in frozen_vars]

    first = free_neighbors(start)
    if any(w is None for w in first):
        closed = False
    else:
        closed = True
    # walk forward along the first free direction, then backward if the walk opens up
    order = [start]
    prev, cur = start, first[0]
    while cur is not None and cur != start:
        order.append(cur)
        nxt = [w for w in free_neighbors(cur) if w != prev]
        if len(nxt) != 1 or nxt[0] is None:
            closed = False
            cur = None
            break
        prev, cur = cur, nxt[0]
    if cur == start:
        return order, closed
    back = []
    prev, cur = start, first[1]
    while cur is not None and cur not in order:
        back.append(cur)
        nxt = [w for w in free_neighbors(cur) if w != prev]
        if len(nxt) != 1 or nxt[0] is None:
            break
        prev, cur = cur, nxt[0]
    return list(reversed(back)) + order, False


def geodesic_loops(G: ExchangeGraph) -> list[GeodesicLoop]:
    """One entry per geodesic loop, keyed by its set of fixed variables.

    A loop whose residual rank-2 product ``|b_ab b_ba|`` is at least 4 is
    reported as infinite without walking it. Loops that run into the
    enumeration frontier of a truncated graph get size ``UNKNOWN``.
    """
    if G.n < 2:
        raise ValueError("geodesic loops need rank at least 2")
    seen: set[frozenset[int]] = set()
    loops = []
    for u in range(len(G)):
        cl = G.clusters[u]
        B = G.seeds[u].matrix
        for a, b in combinations(range(G.n), 2):
            frozen_vars = frozenset(cl) - {cl[a], cl[b]}
            if frozen_vars in seen:
                continue
            seen.add(frozen_vars)
            vertices, closed = _walk_loop(G, u, frozen_vars)
            p = residual_product(B, a, b)
            if p >= 4:
                size = INFINITE
            elif closed:
                size = len(vertices)
                assert size == _FINITE_LOOP_SIZE[p], f"loop of size {size} for residual product {p}"
            else:
                size = UNKNOWN
            frozen = tuple(k for k in range(G.n) if k not in (a, b))
            loops.append(GeodesicLoop(u, frozen, frozen_vars, tuple(vertices), size))
    return loops


def _size_key(s):
    if s is UNKNOWN:
        return (2, 0)
    if s == INFINITE:
        return (1, 0)
    return (0, s)


def sort_sizes(sizes) -> tuple:
    return tuple(sorted(sizes, key=_size_key))


def format_size(s) -> str | int:
    if s is UNKNOWN:
        return "?"
    if s == INFINITE:
        return "inf"
    return s


@dataclass(frozen=True)
class LayerSignature:
    base: int
    layers: tuple[tuple, ...]
    truncated_at: int | None = None

    def to_json(self) -> dict:
        return {
            "base": self.base,
            "layers": [[format_size(s) for s in layer] for layer in self.layers],
            "truncated_at": self.truncated_at,
        }


def layer_signature(G: ExchangeGraph, base: int, max_m: int | None = None,
                    loops: Sequence[GeodesicLoop] | None = None) -> LayerSignature:
    """Multisets of loop sizes, grouped by the distance from ``base`` to each loop.

    On a truncated graph ``truncated_at`` is the distance from ``base`` to the
    nearest vertex with unexplored mutations; layers from there on may be
    incomplete.
    """
    if loops is None:
        loops = geodesic_loops(G)
    dist = distances_from(G, base)
    buckets: dict[int, list] = {}
    for L in loops:
        ds = [dist[v] for v in L.vertices if dist[v] is not None]
        if not ds:
            continue
        m = min(ds)
        if max_m is not None and m > max_m:
            continue
        buckets.setdefault(m, []).append(L.size)
    top = max(buckets, default=-1)
    layers = tuple(sort_sizes(buckets.get(m, ())) for m in range(top + 1))
    truncated_at = None
    if not G.complete:
        open_ds = [dist[v] for v in range(len(G))
                   if dist[v] is not None and any(w is None for w in G.direction_map[v])]
        truncated_at = min(open_ds) if open_ds else None
    return LayerSignature(base, layers, truncated_at)


def all_layer_signatures(G: ExchangeGraph, loops: Sequence[GeodesicLoop] | None = None) -> list[LayerSignature]:
    if loops is None:
        loops = geodesic_loops(G)
    return [layer_signature(G, v, loops=loops) for v in range(len(G))]


def incident_loop_sizes(G: ExchangeGraph, loops: Sequence[GeodesicLoop] | None = None) -> list[tuple]:
    """Per vertex, the sorted multiset of sizes of loops through it."""
    if loops is None:
        loops = geodesic_loops(G)
    out: list[list] = [[] for _ in range(len(G))]
    for L in loops:
        for v in L.vertices:
            out[v].append(L.size)
    return [sort_sizes(x) for x in out]


# -- export / import -------------------------------------------------------

def graph_to_json(G: ExchangeGraph) -> dict:
    return {
        "n": G.n,
        "complete": G.complete,
        "root": G.root,
        "vertices": [
            {"index": i, "b": [list(r) for r in s.matrix.entries],
             "cluster": [x.to_term_list() for x in s.cluster]}
            for i, s in enumerate(G.seeds)
        ],
        "edges": [list(e) for e in G.edges],
        "directions": [list(d) for d in G.direction_map],
    }


def graph_from_json(data) -> ExchangeGraph:
    if isinstance(data, (str, bytes)):
        data = json.loads(data)
    n = data["n"]
    seeds = [
        LabeledSeed(tuple(LaurentPolynomial.from_term_list(n, t) for t in v["cluster"]), ExchangeMatrix(v["b"]))
        for v in data["vertices"]
    ]
    return ExchangeGraph(
        n=n,
        seeds=seeds,
        edges=[tuple(e) for e in data["edges"]],
        direction_map=[tuple(d) for d in data["directions"]],
        complete=data["complete"],
        root=data["root"],
    )


def export_graph(G: ExchangeGraph, format: str = "json", annotate: bool = False) -> str:
    """Deterministic DOT or JSON text for a graph.

    With ``annotate`` each DOT node also shows the Dynkin label of its quiver
    when that quiver is itself a Dynkin diagram.
    """
    if format == "json":
        return json.dumps(graph_to_json(G), sort_keys=True) + "\n"
    if format != "dot":
        raise ValueError(f"unknown format {format!r}")
    from .classify import dynkin_type

    lines = ["graph exchange_graph {"]
    for i, s in enumerate(G.seeds):
        label = str(i)
        if annotate:
            t = dynkin_type(s.matrix)
            if t is not None:
                label += f"\\n{t}"
        attrs = f'label="{label}"'
        if any(w is None for w in G.direction_map[i]):
            attrs += ", style=dashed"
        lines.append(f"  {i} [{attrs}];")
    for u, v in G.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
