"""
Energy on the pair crystal
==========================

Build the crystal of v_l (x) v_k^vee, propagate the energy function along
its 0-arrows and compare it with the closed-form minimal difference.
"""

from primcrystal import box_crystal, colours, delta, energy_table, pair_graph, verify_theorem

# the box crystal has n^2 vertices; its grounds are the n diagonal boxes
n = 3
bb = box_crystal(n)
print(len(list(bb.elements())), "vertices in the box crystal for n =", n)

# energy between consecutive parts, rows = earlier colour, columns = later colour
cs, rows = energy_table(n).matrix()
print("      " + " ".join(f"{c}" for c in cs))
for c, row in zip(cs, rows):
    print(f"{c}  " + "    ".join(str(h) for h in row))

# the table agrees with the closed form entry by entry
assert all(rows[i][j] == delta(n, cs[i], cs[j]) for i in range(len(cs)) for j in range(len(cs)))
for m in range(2, 8):
    print(verify_theorem(m))

# the pair crystal is connected, which is what makes the energy well defined
g = pair_graph(2)
print(len(g.vertices), "vertices,", len(g.edges), "edges, connected:", g.connected)
