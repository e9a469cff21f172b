"""
Grounded partitions and their bijections
========================================

List small grounded partitions, turn minimal ones into crystal paths, and
split an arbitrary one into a minimal partition plus an ordinary partition.
"""

from primcrystal import (enumerate_grounded, euler_inverse, gf_grounded, grounded, merge_phi,
                         partition_to_path, path_to_partition, split_phi)

n, level = 2, 0

for pi in enumerate_grounded(n, level, 2, minimal=True):
    print(pi.weight, pi)

# a minimal partition is the same thing as a path ending in the ground
pi = grounded(0, [(3, "a1b1"), (3, "a1b0"), (1, "a0b1")])
path = partition_to_path(n, pi)
print(path)
assert path_to_partition(n, level, path) == pi

# any grounded partition = minimal one + an ordinary partition nu
big = grounded(0, [(8, "a0b0"), (5, "a1b0"), (3, "a0b1"), (2, "a1b1"), (1, "a0b0"), (1, "a0b0")])
mu, nu = split_phi(n, big)
print(big, "->", mu, "+", nu)
assert merge_phi(n, mu, nu) == big

# on generating functions the split is a factor 1/(q;q)
N = 8
assert gf_grounded(n, level, N, minimal=True) * euler_inverse(n, N) == gf_grounded(n, level, N)
print(gf_grounded(n, level, 3))
