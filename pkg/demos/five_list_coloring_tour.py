"""From a random stacked triangulation to a verified five-list coloring.

Run with ``python demos/five_list_coloring_tour.py [n] [seed]``.
"""

import sys

import numpy as np

from signedcolor import (
    ExtensionProblem,
    boundary_cycle,
    extend_precoloring,
    five_list_color,
    is_balanced,
    switch,
    transport_coloring,
    transport_lists,
    validate_list_coloring,
)
from signedcolor.generators import gen_lists, gen_stacked_triangulation, thomassen_precoloring

n = int(sys.argv[1]) if len(sys.argv) > 1 else 400
seed = int(sys.argv[2]) if len(sys.argv) > 2 else 7

inst = gen_stacked_triangulation(n, seed, negative_probability=0.5)
pg = inst.plane()
signs = np.array([s for *_, s in inst.edges])
print(f"{n} vertices, {len(signs)} edges, {np.mean(signs < 0):.0%} negative")
print("balanced:", is_balanced(inst.graph).balanced)

lists = gen_lists(inst, "uniform", 5, (-10, 10), seed)
c = five_list_color(pg, lists)
ok, report = validate_list_coloring(inst.graph, lists, c)
print("\nfive_list_color valid:", ok)
print("colors used:", np.unique(list(c.values())).tolist())

# the same solver handles the sharper boundary form: 3-lists on the outer cycle
thin = gen_lists(inst, "thomassen", seed=seed)
v1, c1, v2, c2 = thomassen_precoloring(inst, thin)
ext = extend_precoloring(ExtensionProblem(pg, thin, v1, c1, v2, c2))
print(f"\nouter cycle {boundary_cycle(pg)} with 3-lists, precolored {v1}->{c1}, {v2}->{c2}")
print("extension valid:", validate_list_coloring(inst.graph, thin, ext)[0])

u = np.flatnonzero(np.random.default_rng(seed).random(n) < 0.5).tolist()
moved = transport_coloring(c, u)
print(f"\nswitching at {len(u)} vertices and negating their colors keeps the coloring proper:",
      validate_list_coloring(switch(inst.graph, u), transport_lists(lists, u), moved)[0])
