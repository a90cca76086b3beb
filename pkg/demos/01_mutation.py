"""Mutate the B3 seed and watch the exchange relation at work."""

from clusteraut import LabeledSeed, builtin_quiver, mutate_seed
from clusteraut.mutation import exchange_binomial

seed = LabeledSeed.initial(builtin_quiver("b3"))
print("initial matrix:", seed.matrix.entries)

for k in (0, 1, 2, 1):
    new = mutate_seed(seed, k)
    # x_k * x_k' equals the exchange binomial of the old seed
    assert new.cluster[k] * seed.cluster[k] == exchange_binomial(seed, k)
    print(f"mu_{k + 1}: x{k + 1}' = {new.cluster[k]}")
    seed = new

print("final matrix:", seed.matrix.entries)
for k in range(3):
    assert mutate_seed(mutate_seed(seed, k), k) == seed
print("every mutation is an involution here")
