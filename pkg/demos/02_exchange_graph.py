"""Enumerate the A3 exchange graph and read off its geodesic-loop layers."""

from collections import Counter

from clusteraut import build_graph, builtin_quiver, geodesic_loops, layer_signature

G = build_graph(builtin_quiver("a3"))
loops = geodesic_loops(G)
print(f"{len(G)} seeds, {len(G.edges)} edges, complete={G.complete}")
print("loop sizes:", dict(sorted(Counter(L.size for L in loops).items())))

classes = Counter(layer_signature(G, v, loops=loops).layers for v in range(len(G)))
for layers, count in classes.items():
    print(f"{count:2d} seeds with layers {[list(x) for x in layers]}")

# Infinite type: the Markov quiver, explored to radius 3, has only infinite links
M = build_graph(builtin_quiver("markov"), max_radius=3)
sig = layer_signature(M, M.root, max_m=0)
print("Markov layer 0:", sig.layers[0], "truncated at", sig.truncated_at)
