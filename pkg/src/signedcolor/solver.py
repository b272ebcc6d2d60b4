"""Constructive list coloring of signed plane graphs.

The core is :func:`extend_precoloring`, Thomassen's boundary-extension
argument with every forbidden color multiplied by the sign of the edge it
travels along. The argument never looks at the signature otherwise, so the
same code colors unsigned graphs when every sign is +1.

Everything else (five-list coloring, two-vertex extension, the symmetric
palette, outerplanar three-list coloring) augments the input to a
near-triangulation and calls into the same engine.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .embedding import PlaneGraph, SignPolicy, boundary_cycle, is_near_triangulation, triangulate
from .errors import InvariantBreach, PreconditionError
from .graph_core import Coloring, ListAssignment, SignedGraph, as_lists, max_defect, validate_list_coloring

SYMMETRIC_PALETTE = (-2, -1, 0, 1, 2)


@dataclass(frozen=True)
class ExtensionProblem:
    """Near-triangulation, lists, and a proper precoloring of two adjacent outer vertices."""

    pg: PlaneGraph
    lists: ListAssignment
    v1: int
    c1: int
    v2: int
    c2: int

    def __post_init__(self):
        object.__setattr__(self, "lists", as_lists(self.lists, self.pg.vertex_count))

    def check(self) -> None:
        """Raise :class:`PreconditionError` on the first failed hypothesis."""
        pg, lists = self.pg, self.lists
        if not is_near_triangulation(pg):
            raise PreconditionError("input is not a near-triangulation (2-connected, bounded faces triangles)")
        cyc = boundary_cycle(pg)
        p = len(cyc)
        if self.v1 not in cyc or self.v2 not in cyc:
            raise PreconditionError("precolored vertices must lie on the outer cycle")
        k = cyc.index(self.v1)
        if self.v2 not in (cyc[(k + 1) % p], cyc[k - 1]):
            raise PreconditionError(f"precolored vertices {self.v1}, {self.v2} are not consecutive on the outer cycle")
        s = pg.graph.sign(self.v1, self.v2)
        if self.c1 == s * self.c2:
            raise PreconditionError(f"hypothesis (i) fails: c1 = {self.c1} equals sign(v1v2) * c2 = {s * self.c2}")
        if self.c1 not in lists[self.v1] or self.c2 not in lists[self.v2]:
            raise PreconditionError("hypothesis (i) fails: precolors must come from the lists of v1 and v2")
        on_cycle = set(cyc)
        for v in cyc:
            if v not in (self.v1, self.v2) and len(lists[v]) < 3:
                raise PreconditionError(f"hypothesis (ii) fails: outer vertex {v} has list size {len(lists[v])} < 3")
        for v in pg.graph.vertices():
            if v not in on_cycle and len(lists[v]) < 5:
                raise PreconditionError(f"hypothesis (iii) fails: interior vertex {v} has list size {len(lists[v])} < 5")


class _Engine:
    """Iterative form of the extension argument on one near-triangulation.

    Subproblems are induced subgraphs identified by their outer cycle,
    stored as a list ``[v1, v2, ..., vp]`` with the precolored pair in front
    and the interior on the left of the cycle's direction. Every chord of a
    subproblem's cycle is kept alongside it, so chord detection only ever
    inspects vertices that just joined a boundary.
    """

    def __init__(self, pg: PlaneGraph, lists: Sequence[Iterable[int]], mirrored: bool, defective: bool):
        g = pg.graph
        n = g.vertex_count
        self.adj = [g.neighbors(v) for v in range(n)]
        self.rot = [r[::-1] for r in pg.rotation] if mirrored else pg.rotation
        self.lists = [sorted(lst) for lst in lists]
        self.color: list[int | None] = [None] * n
        self.on_boundary = [False] * n
        self.defective = defective
        self.budget = [1] * n

    def run(self, cycle: list[int], c1: int, c2: int) -> list[int | None]:
        adj, color, on_boundary = self.adj, self.color, self.on_boundary
        color[cycle[0]] = c1
        color[cycle[1]] = c2
        for v in cycle:
            on_boundary[v] = True
        chords = []
        for k, a in enumerate(cycle):
            left, right = cycle[k - 1], cycle[(k + 1) % len(cycle)]
            for b in adj[a]:
                if a < b and on_boundary[b] and b != left and b != right:
                    chords.append((a, b))
        stack: list[tuple] = [("solve", cycle, chords)]
        while stack:
            task = stack.pop()
            if task[0] == "color":
                self._color_from(task[1], task[2])
            else:
                self._solve(task[1], task[2], stack)
        return color

    def _solve(self, cycle: list[int], chords: list[tuple[int, int]], stack: list) -> None:
        adj, lists, color = self.adj, self.lists, self.color
        while True:
            p = len(cycle)
            if chords:
                self._split(cycle, chords, stack)
                return
            v1, vprev, vp = cycle[0], cycle[-2], cycle[-1]
            fan = self._fan(vp, v1, vprev)
            if not fan:
                if p != 3:
                    raise InvariantBreach(f"chordless cycle of length {p} with an empty fan at {vp}")
                self._color_from(vp, lists[vp])
                return
            forbidden = adj[vp][v1] * color[v1]
            omega = [a for a in lists[vp] if a != forbidden]
            if self.defective:
                if not omega:
                    raise InvariantBreach(f"no reserve color left at {vp}")
                x = self._defective_reserve(vp, vprev, omega)
                for u in fan:
                    s = adj[vp][u]
                    lists[u] = [a for a in lists[u] if a != s * x]
                    if len(lists[u]) < 3:
                        raise InvariantBreach(f"list of {u} dropped below 3 after reserving {x}")
                stack.append(("color", vp, [x] + [a for a in lists[vp] if a != x]))
            else:
                if len(omega) < 2:
                    raise InvariantBreach(f"fewer than two reserve colors at {vp}")
                x, y = omega[0], omega[1]
                for u in fan:
                    s = adj[vp][u]
                    sx, sy = s * x, s * y
                    lists[u] = [a for a in lists[u] if a != sx and a != sy]
                    if len(lists[u]) < 3:
                        raise InvariantBreach(f"list of {u} dropped below 3 after reserving {x}, {y}")
                stack.append(("color", vp, (x, y)))
            cycle.pop()
            for u in reversed(fan):
                cycle.append(u)
                self.on_boundary[u] = True
            chords = self._new_chords(fan, vp, v1, vprev)

    def _defective_reserve(self, vp: int, vprev: int, omega: list[int]) -> int:
        # vprev is the only later neighbor that may still clash with the reserve;
        # prefer a reserve it cannot take, else strip it from a long enough list
        s = self.adj[vp][vprev]
        if self.color[vprev] is not None:
            taken = {s * self.color[vprev]}
        else:
            taken = {s * a for a in self.lists[vprev]}
        for x in omega:
            if x not in taken:
                return x
        x = omega[0]
        if self.color[vprev] is None and len(self.lists[vprev]) >= 4:
            self.lists[vprev] = [a for a in self.lists[vprev] if a != s * x]
        return x

    def _fan(self, vp: int, v1: int, vprev: int) -> list[int]:
        # interior neighbors sit between vprev and v1 going forward in the rotation;
        # walk backward from v1 so the fan starts next to v1
        r = self.rot[vp]
        d = len(r)
        t = r.index(v1)
        fan = []
        for _ in range(d):
            t = (t - 1) % d
            w = r[t]
            if w == vprev:
                return fan
            if self.on_boundary[w]:
                raise InvariantBreach(f"fan of {vp} reaches non-interior vertex {w}")
            fan.append(w)
        raise InvariantBreach(f"{vprev} missing from the rotation of {vp}")

    def _new_chords(self, fan: list[int], vp: int, v1: int, vprev: int) -> list[tuple[int, int]]:
        # neighbors of a former interior vertex all lie in the new disk, except vp
        adj, on_boundary = self.adj, self.on_boundary
        fresh = set(fan)
        m = len(fan)
        chords = []
        for k, u in enumerate(fan):
            left = v1 if k == 0 else fan[k - 1]
            right = vprev if k == m - 1 else fan[k + 1]
            for w in adj[u]:
                if w == left or w == right or w == vp or not on_boundary[w]:
                    continue
                if w in fresh and w < u:
                    continue
                chords.append((u, w))
        return chords

    def _split(self, cycle: list[int], chords: list[tuple[int, int]], stack: list) -> None:
        p = len(cycle)
        pos = {v: k for k, v in enumerate(cycle)}
        spans = [tuple(sorted((pos[a], pos[b]))) for a, b in chords]
        best = min(range(len(chords)), key=spans.__getitem__)
        i, j = spans[best]
        inside, outside = [], []
        for k, (a, b) in enumerate(spans):
            if k != best:
                (inside if i <= a and b <= j else outside).append(chords[k])
        arc = cycle[i : j + 1]
        rest = cycle[: i + 1] + cycle[j:]
        if i == 0:
            first, first_chords = arc, inside
            second, second_chords = [cycle[0]] + cycle[j:], outside
        else:
            first, first_chords = rest, outside
            second, second_chords = [cycle[j]] + cycle[i:j], inside
        if not (3 <= len(first) < p and 3 <= len(second) < p):
            raise InvariantBreach(f"chord split of a {p}-cycle produced pieces {len(first)}, {len(second)}")
        stack.append(("solve", second, second_chords))
        stack.append(("solve", first, first_chords))

    def _color_from(self, v: int, candidates: Sequence[int]) -> None:
        adj, color = self.adj, self.color
        nbrs = [(w, s) for w, s in adj[v].items() if color[w] is not None]
        if not self.defective:
            for a in candidates:
                if all(a != s * color[w] for w, s in nbrs):
                    color[v] = a
                    return
            raise InvariantBreach(f"no admissible color for {v} among {list(candidates)}")
        fallback = None
        for a in candidates:
            clash = [w for w, s in nbrs if a == s * color[w]]
            if not clash:
                color[v] = a
                return
            if fallback is None and len(clash) == 1 and self.budget[v] and self.budget[clash[0]]:
                fallback = (a, clash[0])
        if fallback is None:
            raise InvariantBreach(f"no color within the defect budget at {v}")
        a, w = fallback
        color[v] = a
        self.budget[v] -= 1
        self.budget[w] -= 1


def _run_engine(pg: PlaneGraph, lists: ListAssignment, v1: int, c1: int, v2: int, c2: int, defective: bool) -> Coloring:
    cyc = boundary_cycle(pg)
    k = cyc.index(v1)
    cyc = cyc[k:] + cyc[:k]
    mirrored = cyc[1] != v2
    if mirrored:
        cyc = [cyc[0]] + cyc[:0:-1]
    engine = _Engine(pg, lists, mirrored, defective)
    colors = engine.run(cyc, c1, c2)
    if any(c is None for c in colors):
        raise InvariantBreach("extension left vertices uncolored")
    return dict(enumerate(colors))


def extend_precoloring(prob: ExtensionProblem) -> Coloring:
    """Extend the precoloring of ``v1, v2`` to a proper list coloring.

    Raises :class:`PreconditionError` naming the first hypothesis that fails.
    """
    prob.check()
    return _run_engine(prob.pg, prob.lists, prob.v1, prob.c1, prob.v2, prob.c2, defective=False)


def _require_sizes(lists: ListAssignment, k: int, what: str) -> None:
    short = [v for v, lst in enumerate(lists) if len(lst) < k]
    if short:
        v = short[0]
        raise PreconditionError(f"{what} needs lists of size >= {k}; vertex {v} has {len(lists[v])}")


def _boundary_precolor(pg: PlaneGraph, lists: ListAssignment) -> tuple[int, int, int, int]:
    cyc = boundary_cycle(pg)
    v1, v2 = cyc[0], cyc[1]
    c1 = min(lists[v1])
    s = pg.graph.sign(v1, v2)
    c2 = min(a for a in lists[v2] if a != s * c1)
    return v1, c1, v2, c2


def five_list_color(
    pg: PlaneGraph, lists: Sequence[Iterable[int]] | Mapping[int, Iterable[int]], sign_policy: SignPolicy = "always_positive"
) -> Coloring:
    """Proper coloring from lists of size at least 5 on any plane signed graph."""
    lists = as_lists(lists, pg.vertex_count)
    _require_sizes(lists, 5, "five_list_color")
    tri = triangulate(pg, sign_policy)
    v1, c1, v2, c2 = _boundary_precolor(tri, lists)
    return extend_precoloring(ExtensionProblem(tri, lists, v1, c1, v2, c2))


def two_vertex_extension(
    pg: PlaneGraph,
    u: int,
    v: int,
    cu: int,
    cv: int,
    lists: Sequence[Iterable[int]] | Mapping[int, Iterable[int]],
    sign_policy: SignPolicy = "always_positive",
) -> Coloring:
    """Extend a proper precoloring of edge ``uv`` using lists of size 5 elsewhere."""
    g = pg.graph
    if not g.has_edge(u, v):
        raise PreconditionError(f"({u}, {v}) is not an edge")
    if cu == g.sign(u, v) * cv:
        raise PreconditionError(f"precoloring {cu}, {cv} is improper on edge ({u}, {v}, {g.sign(u, v):+d})")
    lists = list(as_lists(lists, pg.vertex_count))
    for w, lst in enumerate(lists):
        if w not in (u, v) and len(lst) < 5:
            raise PreconditionError(f"vertex {w} has list size {len(lst)} < 5")
    lists[u] = frozenset({cu})
    lists[v] = frozenset({cv})
    rerooted = pg.with_outer_face(pg.face_of_dart(u, v))
    tri = triangulate(rerooted, sign_policy, keep_edge=(u, v))
    return extend_precoloring(ExtensionProblem(tri, tuple(lists), u, cu, v, cv))


def symmetric_five_color(pg: PlaneGraph, sign_policy: SignPolicy = "always_positive") -> Coloring:
    """Proper coloring with every value in {-2, -1, 0, 1, 2}."""
    return five_list_color(pg, [SYMMETRIC_PALETTE] * pg.vertex_count, sign_policy)


def outerplanar_three_list_color(
    pg: PlaneGraph, lists: Sequence[Iterable[int]] | Mapping[int, Iterable[int]], sign_policy: SignPolicy = "always_positive"
) -> Coloring:
    """Proper coloring from 3-lists when every vertex lies on the outer face."""
    lists = as_lists(lists, pg.vertex_count)
    off = set(pg.graph.vertices()) - set(pg.outer.boundary)
    if off:
        raise PreconditionError(f"not outerplanar embedding: vertices {sorted(off)[:10]} are off the outer face")
    _require_sizes(lists, 3, "outerplanar_three_list_color")
    tri = triangulate(pg, sign_policy, outer="simple")
    v1, c1, v2, c2 = _boundary_precolor(tri, lists)
    return extend_precoloring(ExtensionProblem(tri, lists, v1, c1, v2, c2))


def degeneracy_order(g: SignedGraph) -> tuple[list[int], int]:
    """Repeatedly remove a minimum-degree vertex (smallest id on ties).

    Returns the removal order and the degeneracy.
    """
    deg = [g.degree(v) for v in g.vertices()]
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    gone = [False] * g.vertex_count
    order = []
    k = 0
    while heap:
        d, v = heapq.heappop(heap)
        if gone[v] or d != deg[v]:
            continue
        gone[v] = True
        order.append(v)
        k = max(k, d)
        for w in g.neighbors(v):
            if not gone[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return order, k


def degeneracy_greedy_color(g: SignedGraph, lists: Sequence[Iterable[int]] | Mapping[int, Iterable[int]]) -> Coloring:
    """Sequential coloring in reverse degeneracy order, smallest color first."""
    lists = as_lists(lists, g.vertex_count)
    order, d = degeneracy_order(g)
    _require_sizes(lists, d + 1, f"degeneracy {d} greedy coloring")
    color: Coloring = {}
    for v in reversed(order):
        banned = {s * color[w] for w, s in g.neighbors(v).items() if w in color}
        pick = next((a for a in sorted(lists[v]) if a not in banned), None)
        if pick is None:
            raise InvariantBreach(f"degeneracy argument failed at vertex {v}")
        color[v] = pick
    return color


def defective_four_list_color(
    pg: PlaneGraph, lists: Sequence[Iterable[int]] | Mapping[int, Iterable[int]], sign_policy: SignPolicy = "always_positive"
) -> Coloring:
    """Coloring from 4-lists in which every vertex has at most one violating neighbor.

    Runs the extension engine with a single reserve color per removed
    vertex and a defect allowance of one per vertex. The output is checked
    by the validator before it is returned.
    """
    lists = as_lists(lists, pg.vertex_count)
    _require_sizes(lists, 4, "defective_four_list_color")
    tri = triangulate(pg, sign_policy)
    v1, c1, v2, c2 = _boundary_precolor(tri, lists)
    coloring = _run_engine(tri, lists, v1, c1, v2, c2, defective=True)
    _, report = validate_list_coloring(pg.graph, lists, coloring)
    if report.membership_failures or max_defect(report) > 1:
        raise InvariantBreach(f"defective coloring has defect {max_defect(report)}")
    return coloring
