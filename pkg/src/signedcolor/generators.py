"""Seeded random instances.

All randomness goes through ``numpy.random.default_rng(seed)`` (PCG64), so
a seed fixes the output on every platform.
"""

from __future__ import annotations

import os
from typing import Literal

import numpy as np

from .embedding import boundary_cycle
from .errors import PreconditionError
from .graph_core import ListAssignment
from .instance import InstanceFile

SEED_ENV = "SIGNEDCOLOR_SEED"


def default_seed() -> int:
    return int(os.environ.get(SEED_ENV, "0"))


def _signs(rng: np.random.Generator, count: int, negative_probability: float) -> list[int]:
    if not 0.0 <= negative_probability <= 1.0:
        raise ValueError(f"negative_probability must lie in [0, 1], got {negative_probability}")
    draws = rng.random(count)
    return [-1 if d < negative_probability else 1 for d in draws]


def gen_stacked_triangulation(n: int, seed: int = 0, negative_probability: float = 0.0) -> InstanceFile:
    """Apollonian triangulation: insert each new vertex into a random bounded face.

    The result is maximal planar (``3n - 6`` edges) with outer triangle
    ``0, 2, 1``.
    """
    if n < 3:
        raise PreconditionError(f"stacked triangulation needs n >= 3, got {n}")
    rng = np.random.default_rng(seed)
    rot: list[list[int]] = [[1, 2], [2, 0], [0, 1]]
    pairs = [(0, 1), (1, 2), (0, 2)]
    faces = [(0, 1, 2)]
    picks = rng.integers(0, np.arange(1, 2 * (n - 3), 2)) if n > 3 else []
    for v, k in zip(range(3, n), picks):
        a, b, c = faces[k]
        # corner of face (a, b, c) at b sits just before a in rot[b]
        for x, before in ((a, c), (b, a), (c, b)):
            r = rot[x]
            r.insert(r.index(before), v)
        rot.append([a, b, c])
        pairs.extend(((a, v), (b, v), (c, v)))
        faces[k] = (a, b, v)
        faces.append((b, c, v))
        faces.append((c, a, v))
    signs = _signs(rng, len(pairs), negative_probability)
    edges = [(u, w, s) for (u, w), s in zip(pairs, signs)]
    return InstanceFile(n, edges, rotation=rot, outer_face=[0, 2, 1])


def gen_outerplanar(n: int, seed: int = 0, negative_probability: float = 0.0) -> InstanceFile:
    """Randomly triangulated convex polygon ``0..n-1`` built by clipping random ears."""
    if n < 3:
        raise PreconditionError(f"outerplanar instance needs n >= 3, got {n}")
    rng = np.random.default_rng(seed)
    pairs = [(k, (k + 1) % n) for k in range(n)]
    polygon = list(range(n))
    while len(polygon) > 3:
        k = int(rng.integers(len(polygon)))
        a, b = polygon[k - 1], polygon[(k + 1) % len(polygon)]
        pairs.append((a, b))
        del polygon[k]
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, w in pairs:
        nbrs[u].append(w)
        nbrs[w].append(u)
    # convex position: angular order around v follows polygon order
    rot = [sorted(nbrs[v], key=lambda w, v=v: -((w - v) % n)) for v in range(n)]
    signs = _signs(rng, len(pairs), negative_probability)
    edges = [(u, w, s) for (u, w), s in zip(pairs, signs)]
    return InstanceFile(n, edges, rotation=rot, outer_face=list(range(n))[::-1])


def gen_lists(
    inst: InstanceFile,
    profile: Literal["uniform", "thomassen"] = "uniform",
    k: int = 5,
    color_range: tuple[int, int] = (-10, 10),
    seed: int = 0,
) -> ListAssignment:
    """Random lists of distinct integers drawn from ``color_range`` (inclusive).

    ``uniform`` gives every vertex ``k`` colors. ``thomassen`` gives 3 colors
    to outer-cycle vertices and 5 to interior ones.
    """
    lo, hi = color_range
    universe = np.arange(lo, hi + 1)
    if profile == "uniform":
        sizes = [k] * inst.n
    elif profile == "thomassen":
        on_cycle = set(boundary_cycle(inst.plane()))
        sizes = [3 if v in on_cycle else 5 for v in range(inst.n)]
    else:
        raise ValueError(f"unknown list profile {profile!r}")
    if max(sizes, default=0) > len(universe):
        raise PreconditionError(f"color range {color_range} holds {len(universe)} colors, need {max(sizes)}")
    rng = np.random.default_rng(seed)
    return tuple(frozenset(int(x) for x in rng.choice(universe, size=s, replace=False)) for s in sizes)


def thomassen_precoloring(inst: InstanceFile, lists: ListAssignment) -> tuple[int, int, int, int]:
    """First two outer-cycle vertices with the smallest proper precolors from their lists."""
    cyc = boundary_cycle(inst.plane())
    v1, v2 = cyc[0], cyc[1]
    s = inst.graph.sign(v1, v2)
    c1 = min(lists[v1])
    c2 = min(a for a in lists[v2] if a != s * c1)
    return v1, c1, v2, c2
