"""Matrix and seed mutation."""

from __future__ import annotations

from typing import Iterable, Sequence

from .laurent import LaurentPolynomial, NonExactDivision, laurent_exact_div
from .matrices import ExchangeMatrix
from .seeds import LabeledSeed

MutationSequence = Sequence[int]


class LaurentPhenomenonViolation(RuntimeError):
    """An exchange relation failed to divide exactly (an internal bug, never a user error)."""


def _check_direction(n: int, k: int) -> None:
    if not 0 <= k < n:
        raise IndexError(f"mutation direction {k} out of range for rank {n}")


def mutate_rows(B: Sequence[Sequence[int]], k: int) -> tuple[tuple[int, ...], ...]:
    """Raw matrix mutation on nested integer sequences (no validation)."""
    n = len(B)
    out = []
    for j in range(n):
        row = []
        bjk = B[j][k]
        for i in range(n):
            bji = B[j][i]
            if i == k or j == k:
                row.append(-bji)
                continue
            bki = B[k][i]
            twice = abs(bjk) * bki + bjk * abs(bki)
            assert twice % 2 == 0, "odd correction term in matrix mutation"
            row.append(bji + twice // 2)
        out.append(tuple(row))
    return tuple(out)


def mutate_matrix(B: ExchangeMatrix, k: int) -> ExchangeMatrix:
    """``b'_ji = -b_ji`` on row/column ``k``, else ``b_ji + (|b_jk| b_ki + b_jk |b_ki|) / 2``."""
    _check_direction(B.n, k)
    return ExchangeMatrix(mutate_rows(B.entries, k))


def exchange_binomial(seed: LabeledSeed, k: int) -> LaurentPolynomial:
    """Right-hand side of the exchange relation at ``k``; empty products are 1."""
    n = seed.n
    pos = LaurentPolynomial.constant(n, 1)
    neg = LaurentPolynomial.constant(n, 1)
    for j in range(n):
        b = seed.matrix.entries[j][k]
        if b > 0:
            pos = pos * seed.cluster[j] ** b
        elif b < 0:
            neg = neg * seed.cluster[j] ** (-b)
    return pos + neg


def mutate_seed(seed: LabeledSeed, k: int) -> LabeledSeed:
    _check_direction(seed.n, k)
    try:
        new = laurent_exact_div(exchange_binomial(seed, k), seed.cluster[k])
    except NonExactDivision as exc:
        raise LaurentPhenomenonViolation(f"exchange relation at direction {k} is not Laurent") from exc
    cluster = list(seed.cluster)
    cluster[k] = new
    return LabeledSeed(tuple(cluster), mutate_matrix(seed.matrix, k))


def apply_sequence(seed: LabeledSeed, seq: Iterable[int]) -> LabeledSeed:
    for k in seq:
        seed = mutate_seed(seed, k)
    return seed
