"""Finite type, mutation-finiteness and mutation classes of small quivers."""

from clusteraut import builtin_quiver
from clusteraut.classify import (
    finite_type_check,
    is_mutation_finite,
    mutation_class,
    rank3_subquiver_scan,
)

for name in ("a3", "b3", "d4", "f4", "markov", "atilde2"):
    label = finite_type_check(builtin_quiver(name))
    print(f"{name:8s} finite type: {label}")

for name in ("markov", "atilde2", "x6", "x7", "te6", "triple3"):
    r = is_mutation_finite(builtin_quiver(name))
    print(f"{name:8s} mutation-finite={r.finite} class size={r.class_size}")

cls = mutation_class(builtin_quiver("a3"))
print("A3 class members, with a mutation path to each:")
for form, path in cls.paths.items():
    print("   ", [k + 1 for k in path])

scan = rank3_subquiver_scan(builtin_quiver("e66"))
print("E6^(1,1) rank-3 subquiver types:", sorted(set(scan.types.values())))
