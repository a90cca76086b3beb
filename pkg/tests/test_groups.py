import pytest

from clusteraut.exchange_graph import build_graph, layer_signature
from clusteraut.builtin import builtin_quiver
from clusteraut.groups import (
    IncompleteGraph,
    PermGroup,
    cluster_automorphism_group,
    compare_groups,
    compose,
    direct_subgroup,
    graph_automorphism_group,
    graph_automorphisms,
    graph_isomorphism,
    group_shape,
    identity,
    inverse,
    is_graph_automorphism,
    perm_order,
)
from oracles import (
    brute_graph_automorphisms,
    d4_times_s3,
    dihedral_profile,
    profile_and_center,
)

_CMP = {}


def cmp_of(graph, name):
    if name not in _CMP:
        G, loops = graph(name)
        _CMP[name] = compare_groups(G, loops=loops)
    return _CMP[name]


# -- permutation helpers ---------------------------------------------------

def test_compose_inverse_order():
    p, q = (1, 2, 0, 3), (0, 1, 3, 2)
    assert compose(p, q) == (1, 2, 3, 0)
    assert compose(p, inverse(p)) == identity(4)
    assert perm_order(compose(p, q)) == 4


def test_from_elements_requires_closure():
    with pytest.raises(ValueError):
        PermGroup.from_elements([(0, 1, 2), (1, 2, 0)], 3)


def test_pentagon_shape():
    g = PermGroup.generated_by([(1, 2, 3, 4, 0), (0, 4, 3, 2, 1)], 5)
    s = group_shape(g)
    assert (s.order, s.dihedral_n, s.is_abelian, s.is_cyclic) == (10, 5, False, False)
    assert g.is_closed()


def test_cyclic_shape():
    s = group_shape(PermGroup.generated_by([(1, 2, 3, 0)], 4))
    assert s.is_cyclic and s.is_abelian and s.describe() == "Z4"


# -- Aut(E) ----------------------------------------------------------------

@pytest.mark.parametrize("name", ["a2", "b2", "c2", "g2"])
def test_rank2_graph_automorphisms_brute_force(graph, name):
    G, loops = graph(name)
    assert graph_automorphisms(G, loops) == brute_graph_automorphisms(len(G), G.edges)


@pytest.mark.parametrize("name,order,dihedral", [("a2", 10, 5), ("a3", 12, 6), ("a4", 14, 7),
                                                 ("b3", 8, 4), ("c3", 8, 4), ("f4", 28, 14),
                                                 ("g2", 16, 8)])
def test_graph_group_orders(graph, name, order, dihedral):
    G, loops = graph(name)
    g = graph_automorphism_group(G, loops)
    assert g.order == order
    assert all(is_graph_automorphism(G, p) for p in g.elements)
    s = g.shape()
    assert s.dihedral_n == dihedral
    assert (s.order_profile, s.center_order) == dihedral_profile(dihedral)


def test_d4_matches_d4_times_s3(graph):
    G, loops = graph("d4")
    g = graph_automorphism_group(G, loops)
    s = g.shape()
    assert s.order == 48 and not s.is_abelian and s.dihedral_n is None
    assert (s.order_profile, s.center_order) == profile_and_center(d4_times_s3())


def test_incomplete_graph_refused(graph):
    G, loops = graph("kronecker", 3)
    with pytest.raises(IncompleteGraph):
        graph_automorphism_group(G, loops)


@pytest.mark.parametrize("name", ["a3", "b3", "f4"])
def test_signatures_invariant(graph, name):
    G, loops = graph(name)
    sigs = [layer_signature(G, v, loops=loops).layers for v in range(len(G))]
    for p in graph_automorphisms(G, loops):
        assert all(sigs[v] == sigs[p[v]] for v in range(len(G)))


@pytest.mark.parametrize("name", ["a3", "b3", "c3", "a4", "d4", "f4"])
def test_determined_by_base_star(graph, name):
    G, loops = graph(name)
    star = [G.root] + G.neighbors(G.root)
    auts = graph_automorphisms(G, loops)
    assert len({tuple(p[v] for v in star) for p in auts}) == len(auts)


def test_graph_isomorphism(graph):
    (B, lb), (C, lc), (A, la) = graph("b3"), graph("c3"), graph("a3")
    phi = graph_isomorphism(B, C, lb, lc)
    assert phi is not None
    assert {tuple(sorted((phi[u], phi[v]))) for u, v in B.edges} == set(C.edges)
    assert graph_isomorphism(A, B, la, lb) is None


# -- Aut(A) and the comparison ---------------------------------------------

@pytest.mark.parametrize("name,order", [("a2", 10), ("b2", 6), ("c2", 6), ("g2", 8), ("a3", 12),
                                        ("b3", 8), ("c3", 8), ("a4", 14), ("d4", 48), ("f4", 14)])
def test_cluster_group_orders(graph, name, order):
    cmp = cmp_of(graph, name)
    assert cmp.aut_A.order == order
    sub = direct_subgroup(cmp.cluster_automorphisms)
    assert cmp.aut_A.order // sub.order in (1, 2) and cmp.aut_A.order % sub.order == 0


def test_a3_generators_recoverable(graph):
    G, _ = graph("a3")
    _, auts = cluster_automorphism_group(G)
    x1, x2, x3 = G.clusters[0]
    mu2 = G.direction_map[0][1]
    f_minus = [a for a in auts if a.target_vertex == mu2 and a.variable_map == (0, 1, 2)]
    f_zero = [a for a in auts if a.target_vertex == 0 and a.variable_map == (2, 1, 0)]
    assert len(f_minus) == 1 and len(f_zero) == 1
    f = f_minus[0].variable_perm
    assert f[x1] == x1 and f[x3] == x3 and f[x2] == G.new_variable(0, 1)
    assert f_zero[0].variable_perm[x1] == x3
    # both are reflections in perpendicular axes, so they commute
    a, b = f_minus[0].induced, f_zero[0].induced
    assert perm_order(a) == perm_order(b) == 2 and compose(a, b) == compose(b, a)
    assert cmp_of(graph, "a3").aut_A.order == 12


def test_a3_direct_index_two(graph):
    cmp = cmp_of(graph, "a3")
    assert direct_subgroup(cmp.cluster_automorphisms).order == 6


def test_direct_only_has_index_one(graph):
    cmp = cmp_of(graph, "a3")
    direct = [a for a in cmp.cluster_automorphisms if a.direct]
    assert direct_subgroup(direct).order == len(direct)


@pytest.mark.parametrize("name,equal", [("a2", True), ("b2", False), ("a3", True), ("b3", True),
                                        ("c3", True), ("a4", True), ("d4", True), ("f4", False)])
def test_compare(graph, name, equal):
    G, _ = graph(name)
    cmp = cmp_of(graph, name)
    assert cmp.equal is equal
    assert all(p in cmp.aut_E for p in cmp.aut_A.elements)
    if equal:
        assert cmp.witness is None
    else:
        assert is_graph_automorphism(G, cmp.witness) and cmp.witness not in cmp.aut_A


def test_f4_witness_not_a_quiver_map(graph):
    # the direction bijection the witness induces at its base is no quiver isomorphism
    from clusteraut.matrices import matrix_isomorphisms

    G, _ = graph("f4")
    w = cmp_of(graph, "f4").witness
    u, t = G.root, w[G.root]
    pi = tuple(G.direction_map[t].index(w[G.direction_map[u][k]]) for k in range(G.n))
    isos = {phi for phi, _ in matrix_isomorphisms(G.seeds[u].matrix, G.seeds[t].matrix, True)}
    assert pi not in isos


@pytest.mark.parametrize("name", ["a3", "b3"])
def test_embedding_is_injective_homomorphism(graph, name):
    auts = cmp_of(graph, name).cluster_automorphisms
    by_map = {tuple(sorted(a.variable_perm.items())): a for a in auts}
    assert len({a.induced for a in auts}) == len(auts)
    for a in auts:
        for b in auts:
            ab = {x: a.variable_perm[b.variable_perm[x]] for x in b.variable_perm}
            c = by_map[tuple(sorted(ab.items()))]
            assert c.induced == compose(a.induced, b.induced)


def test_incomplete_transport_refused():
    G = build_graph(builtin_quiver("markov"), max_radius=2)
    with pytest.raises(IncompleteGraph):
        cluster_automorphism_group(G)
