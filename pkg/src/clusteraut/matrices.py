"""Skew-symmetrizable exchange matrices and valued quivers.

Vertices and matrix indices are 0-based throughout the Python API. The entry
``B[j][i]`` is ``b_ji``; an arrow ``j -> i`` carrying the value
pair ``(b_ji, -b_ij)`` exists exactly when ``b_ji > 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from fractions import Fraction
from typing import Iterator, Sequence

Rows = tuple[tuple[int, ...], ...]


class NotSkewSymmetrizable(ValueError):
    pass


def _as_rows(entries: Sequence[Sequence[int]]) -> Rows:
    rows = tuple(tuple(int(x) for x in row) for row in entries)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("exchange matrix must be square")
    return rows


def _components(rows: Rows) -> list[list[int]]:
    n = len(rows)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], []
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in range(n):
                if not seen[v] and (rows[u][v] or rows[v][u]):
                    seen[v] = True
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


def find_symmetrizer(entries: Sequence[Sequence[int]]) -> tuple[int, ...] | None:
    """Minimal positive diagonal ``d`` with ``d_j b_ji = -d_i b_ij``, or ``None``.

    Ratios ``d_i / d_j = |b_ij| / |b_ji|`` are propagated along the support
    graph; each connected component is scaled to coprime integers.
    """
    rows = _as_rows(entries)
    n = len(rows)
    for i in range(n):
        if rows[i][i]:
            return None
        for j in range(i + 1, n):
            a, b = rows[i][j], rows[j][i]
            if (a > 0) != (b < 0) or (a == 0) != (b == 0):
                return None
    d: list[Fraction | None] = [None] * n
    for comp in _components(rows):
        root = comp[0]
        d[root] = Fraction(1)
        stack = [root]
        while stack:
            u = stack.pop()
            for v in range(n):
                if rows[u][v] == 0:
                    continue
                # d_v b_vu = -d_u b_uv
                want = -d[u] * rows[u][v] / rows[v][u]
                if d[v] is None:
                    d[v] = want
                    stack.append(v)
                elif d[v] != want:
                    return None
        den = reduce(lambda x, y: x * y // gcd(x, y), (d[i].denominator for i in comp), 1)
        ints = [int(d[i] * den) for i in comp]
        g = reduce(gcd, ints)
        for i, v in zip(comp, ints):
            d[i] = Fraction(v // g)
    return tuple(int(x) for x in d)


@dataclass(frozen=True, init=False)
class ExchangeMatrix:
    """Integer skew-symmetrizable ``n x n`` matrix, validated at construction."""

    entries: Rows
    symmetrizer: tuple[int, ...] = field(compare=False, repr=False, default=())

    def __init__(self, entries: Sequence[Sequence[int]]):
        rows = _as_rows(entries)
        d = find_symmetrizer(rows)
        if d is None:
            raise NotSkewSymmetrizable(f"matrix is not skew-symmetrizable: {rows}")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "symmetrizer", d)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, idx: tuple[int, int]) -> int:
        j, i = idx
        return self.entries[j][i]

    def __neg__(self) -> "ExchangeMatrix":
        return ExchangeMatrix([[-x for x in row] for row in self.entries])

    def is_skew_symmetric(self) -> bool:
        return all(x == 1 for x in self.symmetrizer)

    def permute(self, perm: Sequence[int]) -> "ExchangeMatrix":
        """Relabel: position ``i`` moves to ``perm[i]``."""
        n = self.n
        out = [[0] * n for _ in range(n)]
        for j in range(n):
            for i in range(n):
                out[perm[j]][perm[i]] = self.entries[j][i]
        return ExchangeMatrix(out)

    def submatrix(self, idx: Sequence[int]) -> "ExchangeMatrix":
        return ExchangeMatrix([[self.entries[j][i] for i in idx] for j in idx])

    def max_multiplicity(self) -> int:
        """Largest ``max(|b_ij|, |b_ji|)`` over all pairs."""
        return max((abs(x) for row in self.entries for x in row), default=0)

    def max_product(self) -> int:
        """Largest ``|b_ij b_ji|``; 4 or more rules out finite type."""
        n = self.n
        return max((abs(self.entries[i][j] * self.entries[j][i])
                    for i in range(n) for j in range(i + 1, n)), default=0)

    def to_json(self) -> dict:
        return {"n": self.n, "b": [list(r) for r in self.entries]}


def is_indecomposable(B: ExchangeMatrix) -> bool:
    """True iff the undirected support graph of ``B`` is connected."""
    return len(_components(B.entries)) <= 1


@dataclass(frozen=True, order=True)
class Arrow:
    source: int
    target: int
    v1: int
    v2: int


@dataclass(frozen=True)
class ValuedQuiver:
    n: int
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        seen = set()
        for a in self.arrows:
            if not (0 <= a.source < self.n and 0 <= a.target < self.n):
                raise ValueError(f"arrow {a} has an endpoint outside 0..{self.n - 1}")
            if a.source == a.target:
                raise ValueError(f"loop at vertex {a.source}")
            if a.v1 <= 0 or a.v2 <= 0:
                raise ValueError(f"arrow {a} needs positive values")
            pair = frozenset((a.source, a.target))
            if pair in seen:
                raise ValueError(f"2-cycle or repeated arrow between {a.source} and {a.target}")
            seen.add(pair)
        object.__setattr__(self, "arrows", tuple(sorted(self.arrows)))

    @classmethod
    def from_arrows(cls, n: int, arrows) -> "ValuedQuiver":
        """Build from ``(source, target)`` or ``(source, target, (v1, v2))`` tuples; a bare
        multiplicity ``m`` as third entry means the pair ``(m, m)``."""
        out = []
        for a in arrows:
            if len(a) == 2:
                v = (1, 1)
            elif isinstance(a[2], int):
                v = (a[2], a[2])
            else:
                v = tuple(a[2])
            out.append(Arrow(a[0], a[1], v[0], v[1]))
        return cls(n, tuple(out))

    def opposite(self) -> "ValuedQuiver":
        return ValuedQuiver(self.n, tuple(Arrow(a.target, a.source, a.v2, a.v1) for a in self.arrows))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "arrows": [{"from": a.source + 1, "to": a.target + 1, "v": [a.v1, a.v2]} for a in self.arrows],
        }


def matrix_to_quiver(B: ExchangeMatrix) -> ValuedQuiver:
    n = B.n
    arrows = [
        Arrow(j, i, B.entries[j][i], -B.entries[i][j])
        for j in range(n) for i in range(n) if B.entries[j][i] > 0
    ]
    return ValuedQuiver(n, tuple(arrows))


def quiver_to_matrix(Q: ValuedQuiver) -> ExchangeMatrix:
    rows = [[0] * Q.n for _ in range(Q.n)]
    for a in Q.arrows:
        rows[a.source][a.target] = a.v1
        rows[a.target][a.source] = -a.v2
    return ExchangeMatrix(rows)


def as_matrix(obj) -> ExchangeMatrix:
    if isinstance(obj, ExchangeMatrix):
        return obj
    if isinstance(obj, ValuedQuiver):
        return quiver_to_matrix(obj)
    return ExchangeMatrix(obj)


def _isomorphisms(P: Rows, R: Rows, sign: int) -> Iterator[tuple[int, ...]]:
    # all phi with R[phi j][phi i] == sign * P[j][i]
    n = len(P)
    if len(R) != n:
        return

    def profile(M, v, s):
        return sorted((s * M[v][u], s * M[u][v]) for u in range(n) if M[v][u])

    prof_p = [profile(P, v, sign) for v in range(n)]
    prof_r = [profile(R, v, 1) for v in range(n)]
    cands = [[w for w in range(n) if prof_r[w] == prof_p[v]] for v in range(n)]
    phi = [-1] * n
    used = [False] * n

    def extend(v):
        if v == n:
            yield tuple(phi)
            return
        for w in cands[v]:
            if used[w]:
                continue
            if all(R[w][phi[u]] == sign * P[v][u] for u in range(v)):
                phi[v] = w
                used[w] = True
                yield from extend(v + 1)
                used[w] = False
        phi[v] = -1

    yield from extend(0)


def matrix_isomorphisms(B: ExchangeMatrix, C: ExchangeMatrix, allow_opposite: bool = True):
    """List ``(phi, orientation)`` with ``C[phi j][phi i] = +-B[j][i]``.

    ``orientation`` is ``"direct"`` for ``+`` and ``"opposite"`` for ``-``.
    """
    out = [(phi, "direct") for phi in _isomorphisms(B.entries, C.entries, 1)]
    if allow_opposite:
        out += [(phi, "opposite") for phi in _isomorphisms(B.entries, C.entries, -1)]
    return out


def quiver_isomorphisms(Q: ValuedQuiver, R: ValuedQuiver, allow_opposite: bool = True):
    """All vertex bijections carrying ``Q`` onto ``R`` (and onto ``R^op`` if allowed)."""
    return matrix_isomorphisms(quiver_to_matrix(Q), quiver_to_matrix(R), allow_opposite)
