"""Small hand-built instances shared across test modules."""

from __future__ import annotations

import numpy as np

from signedcolor import PlaneGraph, SignedGraph
from signedcolor.generators import gen_lists, gen_stacked_triangulation

# rim 0..4 in order, hub 5; outer face traced as 0,4,3,2,1
W5_ROT = [[(i + 1) % 5, 5, (i - 1) % 5] for i in range(5)] + [[0, 1, 2, 3, 4]]
K4_MATCHING = {frozenset((0, 2)), frozenset((1, 3))}


def triangle(s01: int = 1, s12: int = 1, s02: int = 1) -> PlaneGraph:
    g = SignedGraph(3, [(0, 1, s01), (1, 2, s12), (0, 2, s02)])
    return PlaneGraph.from_rotation(g, [[1, 2], [2, 0], [0, 1]], [0, 2, 1])


def wheel5(signs: dict[frozenset[int], int] | None = None) -> PlaneGraph:
    pairs = [(i, (i + 1) % 5) for i in range(5)] + [(i, 5) for i in range(5)]
    signs = signs or {}
    g = SignedGraph(6, [(u, v, signs.get(frozenset((u, v)), 1)) for u, v in pairs])
    return PlaneGraph.from_rotation(g, W5_ROT, [0, 4, 3, 2, 1])


def k4_plane(sign_of=None) -> PlaneGraph:
    """K4 with vertex 3 inside triangle 0, 2, 1; ``sign_of(u, v)`` defaults to +1."""
    pairs = [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3)]
    sign_of = sign_of or (lambda u, v: 1)
    g = SignedGraph(4, [(u, v, sign_of(u, v)) for u, v in pairs])
    return PlaneGraph.from_rotation(g, [[1, 3, 2], [2, 3, 0], [0, 3, 1], [0, 1, 2]], [0, 2, 1])


def signed_k4() -> PlaneGraph:
    """Positive 4-cycle 0-1-2-3 with the two diagonals negative."""
    return k4_plane(lambda u, v: -1 if frozenset((u, v)) in K4_MATCHING else 1)


def cycle_plane(n: int, signs=None) -> PlaneGraph:
    signs = signs or [1] * n
    g = SignedGraph(n, [(k, (k + 1) % n, signs[k]) for k in range(n)])
    rot = [[(k + 1) % n, (k - 1) % n] for k in range(n)]
    return PlaneGraph.from_rotation(g, rot, list(range(n))[::-1])


def stacked(n: int, seed: int, q: float = 0.5):
    inst = gen_stacked_triangulation(n, seed, q)
    return inst, inst.plane()


def random_graph(rng: np.random.Generator, n: int, p: float, q: float = 0.5) -> SignedGraph:
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v, -1 if rng.random() < q else 1))
    return SignedGraph(n, edges)


def classical_proper(edges, c) -> bool:
    """Unsigned check written independently of the package validators."""
    return all(c[u] != c[v] for u, v, *_ in edges)


def uniform_lists(inst, seed: int, k: int = 5, color_range=(-10, 10)):
    return gen_lists(inst, "uniform", k, color_range, seed)
