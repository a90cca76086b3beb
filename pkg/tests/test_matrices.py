import random
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clusteraut.builtin import builtin_matrix, builtin_quiver
from clusteraut.matrices import (
    Arrow,
    ExchangeMatrix,
    NotSkewSymmetrizable,
    ValuedQuiver,
    find_symmetrizer,
    is_indecomposable,
    matrix_isomorphisms,
    matrix_to_quiver,
    quiver_isomorphisms,
    quiver_to_matrix,
)
from clusteraut.mutation import mutate_rows
from oracles import brute_isomorphisms

A3 = [[0, 1, 0], [-1, 0, -1], [0, 1, 0]]
EX25 = [[0, 1, 0, 0], [-1, 0, -1, 0], [0, 2, 0, 2], [0, 0, -2, 0]]


def test_symmetrizer_identity_for_skew_symmetric():
    assert find_symmetrizer(A3) == (1, 1, 1)


def test_symmetrizer_worked_example():
    assert find_symmetrizer(EX25) == (2, 2, 1, 1)


def test_symmetrizer_absent_on_sign_violation():
    assert find_symmetrizer([[0, 1], [2, 0]]) is None
    with pytest.raises(NotSkewSymmetrizable):
        ExchangeMatrix([[0, 1], [2, 0]])


def test_symmetrizer_absent_on_inconsistent_cycle():
    # ratios around the triangle multiply to 2, not 1
    assert find_symmetrizer([[0, 1, -1], [-2, 0, 1], [1, -1, 0]]) is None


def test_symmetrizer_normalized_per_component():
    assert find_symmetrizer([[0, 2, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 3], [0, 0, -1, 0]]) == (1, 2, 1, 3)


def test_worked_example_quiver():
    Q = matrix_to_quiver(ExchangeMatrix(EX25))
    assert set(Q.arrows) == {Arrow(0, 1, 1, 1), Arrow(2, 1, 2, 1), Arrow(2, 3, 2, 2)}


def test_quiver_of_empty_and_unit():
    assert matrix_to_quiver(ExchangeMatrix([[0, 0], [0, 0]])).arrows == ()
    assert matrix_to_quiver(ExchangeMatrix([[0, 1], [-1, 0]])).arrows == (Arrow(0, 1, 1, 1),)


def test_a3_quiver_to_matrix():
    assert quiver_to_matrix(builtin_quiver("a3")).entries == tuple(map(tuple, A3))


def test_b3_valued_arrow():
    B = builtin_matrix("b3")
    assert (B[2, 1], B[1, 2]) == (2, -1)


def test_two_cycle_rejected():
    with pytest.raises(ValueError):
        ValuedQuiver(2, (Arrow(0, 1, 1, 1), Arrow(1, 0, 1, 1)))


def test_non_symmetrizable_quiver_rejected():
    with pytest.raises(NotSkewSymmetrizable):
        quiver_to_matrix(ValuedQuiver(3, (Arrow(0, 1, 2, 1), Arrow(1, 2, 1, 1), Arrow(2, 0, 1, 1))))


def test_indecomposable():
    assert is_indecomposable(ExchangeMatrix(A3))
    assert not is_indecomposable(ExchangeMatrix([[0, 0], [0, 0]]))
    assert is_indecomposable(ExchangeMatrix(EX25))


@pytest.mark.parametrize("name", ["a3", "b3", "c3", "f4", "g2", "markov", "x6", "e66", "te7"])
def test_round_trip(name):
    Q = builtin_quiver(name)
    assert matrix_to_quiver(quiver_to_matrix(Q)) == Q
    B = quiver_to_matrix(Q)
    assert quiver_to_matrix(matrix_to_quiver(B)) == B


# -- isomorphisms, checked against a brute-force oracle ---------------------

def test_a3_isomorphisms():
    Q = builtin_quiver("a3")
    isos = quiver_isomorphisms(Q, Q, allow_opposite=True)
    assert sorted(p for p, t in isos if t == "direct") == [(0, 1, 2), (2, 1, 0)]
    # vertex 2 is a sink in Q but a source in Q^op, so no opposite isomorphism exists
    assert sorted(p for p, t in isos if t == "opposite") == []
    assert isos == brute_isomorphisms(quiver_to_matrix(Q).entries, quiver_to_matrix(Q).entries)


def test_markov_rotations():
    Q = builtin_quiver("markov")
    direct = sorted(p for p, t in quiver_isomorphisms(Q, Q, allow_opposite=False))
    assert direct == [(0, 1, 2), (1, 2, 0), (2, 0, 1)]


def test_b3_c3_not_isomorphic():
    assert quiver_isomorphisms(builtin_quiver("b3"), builtin_quiver("c3"), allow_opposite=True) == []


@pytest.mark.parametrize("name", ["a3", "b3", "c3", "markov", "atilde2", "d4", "f4", "a4"])
def test_isomorphisms_match_brute_force(name):
    rng = random.Random(name)
    B = builtin_matrix(name)
    rows = B.entries
    for _ in range(4):
        k = rng.randrange(B.n)
        C = ExchangeMatrix(mutate_rows(rows, k))
        got = sorted(matrix_isomorphisms(B, C, allow_opposite=True))
        assert got == brute_isomorphisms(B.entries, C.entries)
        rows = C.entries


# -- symmetrizer is preserved by mutation ----------------------------------

@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["b3", "c3", "f4", "g2", "b4", "c4", "x6", "te6"]),
       st.lists(st.integers(0, 10), max_size=12))
def test_symmetrizer_preserved(name, seq):
    B = builtin_matrix(name)
    d = B.symmetrizer
    rows = B.entries
    for k in seq:
        rows = mutate_rows(rows, k % B.n)
        n = len(rows)
        assert all(d[i] * rows[i][j] == -d[j] * rows[j][i] for i in range(n) for j in range(n))
        assert find_symmetrizer(rows) == d


def test_permute_matches_definition():
    B = ExchangeMatrix(EX25)
    for perm in permutations(range(4)):
        P = B.permute(perm)
        assert all(P[perm[i], perm[j]] == B[i, j] for i in range(4) for j in range(4))
