"""Compare cluster automorphisms with exchange-graph automorphisms."""

from clusteraut import build_graph, builtin_quiver, compare_groups

for name in ("a2", "b2", "a3", "b3", "d4", "f4"):
    G = build_graph(builtin_quiver(name))
    cmp = compare_groups(G)
    shape = cmp.aut_E.shape()
    print(f"{name}: |Aut(A)|={cmp.aut_A_order:3d}  |Aut(E)|={cmp.aut_E_order:3d}  "
          f"Aut(E)={shape.describe()}  equal={cmp.equal}")
    if cmp.witness is not None:
        moved = sum(1 for v, w in enumerate(cmp.witness) if v != w)
        print(f"    witness moves {moved} of {len(G)} seeds and is induced by no cluster automorphism")
