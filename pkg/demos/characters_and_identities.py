"""
Characters from partitions
==========================

Four routes to the level-1 characters, the positive expansion in the simple
roots, and the Capparelli form of the same series.
"""

from primcrystal import (canonical_spec, char_kp, char_positive, gf_capparelli, gf_grounded,
                         gp_ct, gp_lattice, gp_theta, principal_spec, q_poch, to_alpha, verify_all)

n, N = 3, 8

# G^P as a constant term, a lattice sum and a sum of theta products
ct = gp_ct(n, N)
assert ct == gp_lattice(n, N) == gp_theta(n, N) == gf_grounded(n, 0, N)

for level in range(n):
    ch = char_kp(n, level, N)
    assert ch == char_positive(n, level, N) == gf_grounded(n, level, N, minimal=True)
    a = to_alpha(ch)
    print(f"level {level}: {len(a.terms)} alpha terms, positive: {a.is_positive()}")

# Capparelli partitions count (q;q) G^P
assert gf_capparelli(n, canonical_spec(n), N) == q_poch(n, N) * ct

# principal specialisation collapses G^P to 1/(q;q)
print(principal_spec(4, 20).to_text(timings=False))
print(verify_all(2, 1, 10).to_text(timings=False))
