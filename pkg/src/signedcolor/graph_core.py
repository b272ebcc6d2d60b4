"""Signed graphs, list assignments, colorings and the signed validators.

A signed coloring must satisfy ``c(u) != sign(uv) * c(v)`` on every edge.
On a positive edge that is the usual ``c(u) != c(v)``; on a negative edge
it forbids ``c(u) + c(v) == 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import GraphError

#: Largest absolute color value accepted at I/O boundaries.
COLOR_BOUND = 2**30

Edge = tuple[int, int, int]
Coloring = dict[int, int]
ListAssignment = tuple[frozenset[int], ...]


class SignedGraph:
    """Simple undirected graph on vertices ``0..n-1`` with edge signs in {+1, -1}.

    Instances are immutable; every transformation returns a new graph.

    >>> g = SignedGraph(3, [(0, 1, 1), (1, 2, -1)])
    >>> g.sign(2, 1)
    -1
    >>> sorted(g.neighbors(1))
    [0, 2]
    """

    __slots__ = ("_n", "_adj", "_m")

    def __init__(self, vertex_count: int, edges: Iterable[Sequence[int]] = ()):
        if vertex_count < 0:
            raise GraphError(f"vertex count must be nonnegative, got {vertex_count}")
        adj: list[dict[int, int]] = [{} for _ in range(vertex_count)]
        m = 0
        for e in edges:
            u, v, s = (int(x) for x in e)
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphError(f"edge ({u}, {v}) references a vertex outside [0, {vertex_count})")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if s not in (1, -1):
                raise GraphError(f"sign must be +1 or -1, got {s} on edge ({u}, {v})")
            if v in adj[u]:
                raise GraphError(f"parallel edge ({u}, {v})")
            adj[u][v] = s
            adj[v][u] = s
            m += 1
        self._n = vertex_count
        self._adj = tuple(adj)
        self._m = m

    @classmethod
    def all_positive(cls, vertex_count: int, pairs: Iterable[Sequence[int]]) -> SignedGraph:
        return cls(vertex_count, ((u, v, 1) for u, v in pairs))

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return self._m

    def vertices(self) -> range:
        return range(self._n)

    def edges(self) -> Iterator[Edge]:
        """Yield each edge once as ``(u, v, sign)`` with ``u < v``, sorted."""
        for u in range(self._n):
            for v in sorted(self._adj[u]):
                if u < v:
                    yield (u, v, self._adj[u][v])

    def neighbors(self, v: int) -> Mapping[int, int]:
        """Neighbor -> sign mapping of ``v`` (read-only view by convention)."""
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self._n and v in self._adj[u]

    def sign(self, u: int, v: int) -> int:
        try:
            return self._adj[u][v]
        except (KeyError, IndexError):
            raise GraphError(f"({u}, {v}) is not an edge") from None

    def is_all_positive(self) -> bool:
        return all(s == 1 for nb in self._adj for s in nb.values())

    def with_signs(self, sign_of) -> SignedGraph:
        """Same underlying graph, sign of each edge given by ``sign_of(u, v, s)``."""
        return SignedGraph(self._n, ((u, v, sign_of(u, v, s)) for u, v, s in self.edges()))

    def negated(self) -> SignedGraph:
        return self.with_signs(lambda u, v, s: -s)

    def unsigned(self) -> SignedGraph:
        """The all-positive graph on the same edges."""
        return self.with_signs(lambda u, v, s: 1)

    def is_connected(self) -> bool:
        if self._n == 0:
            return True
        seen = [False] * self._n
        seen[0] = True
        todo = [0]
        while todo:
            u = todo.pop()
            for w in self._adj[u]:
                if not seen[w]:
                    seen[w] = True
                    todo.append(w)
        return all(seen)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, tuple(self.edges())))

    def __repr__(self) -> str:
        return f"SignedGraph({self._n}, {list(self.edges())})"


def as_lists(lists: Mapping[int, Iterable[int]] | Sequence[Iterable[int]], n: int) -> ListAssignment:
    """Normalize a list assignment to a tuple of frozensets, one per vertex.

    Missing vertices of a mapping get the empty list; solvers reject empty
    lists through their own preconditions.
    """
    if isinstance(lists, Mapping):
        extra = [v for v in lists if not 0 <= v < n]
        if extra:
            raise GraphError(f"list assignment references unknown vertices {sorted(extra)}")
        return tuple(frozenset(int(x) for x in lists.get(v, ())) for v in range(n))
    if len(lists) != n:
        raise GraphError(f"list assignment has {len(lists)} entries for {n} vertices")
    return tuple(frozenset(int(x) for x in lst) for lst in lists)


def constant_lists(n: int, colors: Iterable[int]) -> ListAssignment:
    palette = frozenset(colors)
    return (palette,) * n


@dataclass(frozen=True)
class ViolationReport:
    """Edges whose signed constraint fails, and per-vertex defect counts.

    ``membership_failures`` is only filled by :func:`validate_list_coloring`.
    """

    violating_edges: tuple[Edge, ...] = ()
    per_vertex_defect: Mapping[int, int] = field(default_factory=dict)
    membership_failures: tuple[int, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violating_edges and not self.membership_failures

    def __str__(self) -> str:
        if self.ok:
            return "proper"
        parts = []
        for u, v, s in self.violating_edges:
            parts.append(f"edge ({u}, {v}, {s:+d}) violated")
        for v in self.membership_failures:
            parts.append(f"vertex {v} colored outside its list")
        return "\n".join(parts)


def validate_coloring(g: SignedGraph, c: Mapping[int, int]) -> ViolationReport:
    """Report every edge with both ends colored and ``c(u) == sign * c(v)``."""
    bad = [v for v in c if not 0 <= v < g.vertex_count]
    if bad:
        raise GraphError(f"coloring references unknown vertices {sorted(bad)}")
    violations = []
    defect: dict[int, int] = {}
    for u, v, s in g.edges():
        cu = c.get(u)
        cv = c.get(v)
        if cu is None or cv is None:
            continue
        if cu == s * cv:
            violations.append((u, v, s))
            defect[u] = defect.get(u, 0) + 1
            defect[v] = defect.get(v, 0) + 1
    return ViolationReport(tuple(violations), defect)


def validate_list_coloring(
    g: SignedGraph, lists: Sequence[Iterable[int]] | Mapping[int, Iterable[int]], c: Mapping[int, int]
) -> tuple[bool, ViolationReport]:
    """Check that ``c`` is total, proper and picks each color from its list."""
    missing = [v for v in g.vertices() if v not in c]
    if missing:
        raise GraphError(f"coloring not total: vertices {missing[:10]} uncolored")
    lists = as_lists(lists, g.vertex_count)
    base = validate_coloring(g, c)
    outside = tuple(v for v in g.vertices() if c[v] not in lists[v])
    report = ViolationReport(base.violating_edges, base.per_vertex_defect, outside)
    return report.ok, report


def max_defect(report: ViolationReport) -> int:
    return max(report.per_vertex_defect.values(), default=0)
