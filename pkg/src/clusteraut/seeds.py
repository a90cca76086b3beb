"""Labeled seeds and their canonical (unlabeled) keys."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .laurent import LaurentPolynomial
from .matrices import ExchangeMatrix, as_matrix, matrix_to_quiver, ValuedQuiver

SeedKey = bytes


@dataclass(frozen=True)
class LabeledSeed:
    cluster: tuple[LaurentPolynomial, ...]
    matrix: ExchangeMatrix

    def __post_init__(self):
        cluster = tuple(self.cluster)
        object.__setattr__(self, "cluster", cluster)
        if len(cluster) != self.matrix.n:
            raise ValueError(f"cluster has {len(cluster)} variables but the matrix has rank {self.matrix.n}")
        if len(set(cluster)) != len(cluster):
            raise ValueError("cluster variables must be pairwise distinct")

    @classmethod
    def initial(cls, matrix) -> "LabeledSeed":
        """Seed ``((x1, ..., xn), B)`` for a matrix, nested list or valued quiver."""
        B = as_matrix(matrix)
        return cls(tuple(LaurentPolynomial.variable(B.n, i) for i in range(B.n)), B)

    @property
    def n(self) -> int:
        return self.matrix.n

    @property
    def quiver(self) -> ValuedQuiver:
        return matrix_to_quiver(self.matrix)

    def relabel(self, perm: Sequence[int]) -> "LabeledSeed":
        """Move position ``i`` to ``perm[i]`` in both the cluster and the matrix."""
        cluster = [None] * self.n
        for i, p in enumerate(perm):
            cluster[p] = self.cluster[i]
        return LabeledSeed(tuple(cluster), self.matrix.permute(perm))

    def key(self) -> SeedKey:
        return canonical_seed_key(self)

    def to_json(self) -> dict:
        out = self.matrix.to_json()
        out["cluster"] = [x.to_term_list() for x in self.cluster]
        return out


def canonical_seed_key(seed: LabeledSeed) -> SeedKey:
    """Sorted canonical serializations of the cluster variables.

    The matrix is left out: for finite type and skew-symmetric algebras the
    cluster determines the seed.
    """
    return "|".join(sorted(x.serialize() for x in seed.cluster)).encode()
