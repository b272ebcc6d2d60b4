"""Signed K4: balance, switching, and what small lists can and cannot do.

Run with ``python demos/signed_k4_walkthrough.py``.
"""

from signedcolor import (
    PlaneGraph,
    SignedGraph,
    brute_force_l_coloring,
    check_choosability,
    constant_lists,
    cycle_sign,
    is_balanced,
    switch,
    symmetric_five_color,
)

# 4-cycle 0-1-2-3 positive, diagonals 0-2 and 1-3 negative; vertex 3 drawn inside triangle 0, 2, 1
edges = [(0, 1, 1), (1, 2, 1), (0, 2, -1), (0, 3, 1), (1, 3, -1), (2, 3, 1)]
g = SignedGraph(4, edges)
pg = PlaneGraph.from_rotation(g, [[1, 3, 2], [2, 3, 0], [0, 3, 1], [0, 1, 2]], [0, 2, 1])

print("Every triangle carries exactly one negative edge:")
for tri in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)):
    print(f"  sign of {tri} = {cycle_sign(g, tri):+d}")

w = is_balanced(g)
print(f"\nis_balanced -> negative cycle {w.negative_cycle}")
print("Switching at vertex 0 flips three edges but leaves every cycle sign alone:")
h = switch(g, {0})
print("  signs after switch:", [s for *_, s in h.edges()])
print("  still unbalanced:", not is_balanced(h).balanced)

print("\nLists {1,2,3} everywhere:")
res = brute_force_l_coloring(g, constant_lists(4, [1, 2, 3]))
print(f"  oracle says {res.status} with witness {res.witness}")
print("  positive colors never clash across a negative edge, so 1,2,1,2 works.")

print("\nEvery assignment of 3-subsets of [-2, 2] is colorable too:")
sweep = check_choosability(g, 3, range(-2, 3))
print(f"  choosable over that universe: {sweep.choosable} ({sweep.assignments_checked} assignments)")

print("\nThe symmetric palette {-2..2} always works on plane graphs:")
print("  ", symmetric_five_color(pg))
