"""Switching, walk signs, balance detection and transport across switches."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import GraphError
from .graph_core import Coloring, ListAssignment, SignedGraph, as_lists

SwitchSet = frozenset[int]


@dataclass(frozen=True)
class BalanceWitness:
    """Exactly one of ``balancing_set`` and ``negative_cycle`` is set.

    ``negative_cycle`` lists the cycle's vertices once each; the closing edge
    runs from the last vertex back to the first.
    """

    balancing_set: SwitchSet | None = None
    negative_cycle: tuple[int, ...] | None = None

    @property
    def balanced(self) -> bool:
        return self.balancing_set is not None


def _check_set(g: SignedGraph, members: Iterable[int]) -> SwitchSet:
    u = frozenset(members)
    bad = [v for v in u if not 0 <= v < g.vertex_count]
    if bad:
        raise GraphError(f"switch set contains vertices outside the graph: {sorted(bad)}")
    return u


def switch(g: SignedGraph, members: Iterable[int]) -> SignedGraph:
    """Negate every edge with exactly one endpoint in ``members``."""
    u = _check_set(g, members)
    return g.with_signs(lambda a, b, s: -s if (a in u) != (b in u) else s)


def walk_sign(g: SignedGraph, walk: Sequence[int]) -> int:
    sign = 1
    for a, b in zip(walk, walk[1:]):
        if not g.has_edge(a, b):
            raise GraphError(f"walk step ({a}, {b}) is not an edge")
        sign *= g.sign(a, b)
    return sign


def cycle_sign(g: SignedGraph, cycle: Sequence[int]) -> int:
    """Sign of the closed walk ``cycle[0] .. cycle[-1] cycle[0]``."""
    return walk_sign(g, list(cycle) + [cycle[0]])


def _tree_path(parent: list[int], v: int) -> list[int]:
    path = [v]
    while parent[v] != v:
        v = parent[v]
        path.append(v)
    return path


def is_balanced(g: SignedGraph) -> BalanceWitness:
    """Balancing switch set, or a negative cycle when none exists.

    A BFS forest rooted at the lowest vertex of each component labels every
    vertex with the sign of its tree path from the root. The graph is
    balanced iff every edge sign equals the product of its endpoint labels;
    the first edge that does not closes a negative cycle through the tree.
    """
    n = g.vertex_count
    label = [0] * n
    parent = list(range(n))
    for root in range(n):
        if label[root]:
            continue
        label[root] = 1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(g.neighbors(u)):
                if not label[w]:
                    label[w] = label[u] * g.sign(u, w)
                    parent[w] = u
                    queue.append(w)
    for u, v, s in g.edges():
        if s != label[u] * label[v]:
            pu = _tree_path(parent, u)
            pv = _tree_path(parent, v)
            # strip the shared root-side suffix down to the lowest common ancestor
            while len(pu) > 1 and len(pv) > 1 and pu[-2] == pv[-2]:
                pu.pop()
                pv.pop()
            cycle = pu + pv[-2::-1]
            return BalanceWitness(negative_cycle=tuple(cycle))
    return BalanceWitness(balancing_set=frozenset(v for v in range(n) if label[v] == -1))


def harary_bipartition(g: SignedGraph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Sides with positive edges inside and negative edges across, if balanced."""
    w = is_balanced(g)
    if not w.balanced:
        return None
    v2 = w.balancing_set
    return frozenset(g.vertices()) - v2, v2


def is_antibalanced(g: SignedGraph) -> bool:
    return is_balanced(g.negated()).balanced


def transport_lists(
    lists: Sequence[Iterable[int]] | Mapping[int, Iterable[int]], members: Iterable[int]
) -> ListAssignment:
    """Negate the lists of switched vertices elementwise."""
    n = len(lists) if not isinstance(lists, Mapping) else max(lists, default=-1) + 1
    lists = as_lists(lists, n)
    u = frozenset(members)
    return tuple(frozenset(-x for x in lst) if v in u else lst for v, lst in enumerate(lists))


def transport_coloring(c: Mapping[int, int], members: Iterable[int]) -> Coloring:
    u = frozenset(members)
    return {v: -x if v in u else x for v, x in c.items()}
