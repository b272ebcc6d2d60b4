"""Combinatorial plane embeddings given as rotation systems.

Rotations list each vertex's neighbors in clockwise order. Faces are traced
with one fixed rule: the dart after ``(u, v)`` is ``(v, w)`` where ``w``
immediately precedes ``u`` in the rotation of ``v``. Under this rule the
outer face of a near-triangulation is traced with the interior on the left,
and :func:`boundary_cycle` returns the outer cycle in that orientation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Literal, Sequence

from .errors import GraphError, TooSmallError
from .graph_core import SignedGraph

Rotation = tuple[tuple[int, ...], ...]
SignPolicy = Literal["always_positive", "always_negative", "alternating"]
SIGN_POLICIES = ("always_positive", "always_negative", "alternating")


@dataclass(frozen=True)
class Face:
    id: int
    boundary: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.boundary)

    def darts(self) -> Iterable[tuple[int, int]]:
        b = self.boundary
        return ((b[k], b[(k + 1) % len(b)]) for k in range(len(b)))


def _normalize_rotation(g: SignedGraph, rot: Sequence[Sequence[int]]) -> Rotation:
    if len(rot) != g.vertex_count:
        raise GraphError(f"rotation has {len(rot)} entries for {g.vertex_count} vertices")
    out = []
    for v, r in enumerate(rot):
        r = tuple(int(w) for w in r)
        if len(r) != len(set(r)) or set(r) != set(g.neighbors(v)):
            raise GraphError(f"rotation at vertex {v} is not a permutation of its neighbors")
        out.append(r)
    return tuple(out)


def trace_faces(g: SignedGraph, rot: Sequence[Sequence[int]]) -> list[Face]:
    """Partition the darts of ``g`` into faces of the rotation system."""
    rot = _normalize_rotation(g, rot)
    pos = [{w: k for k, w in enumerate(r)} for r in rot]
    seen: set[tuple[int, int]] = set()
    faces = []
    for v in range(g.vertex_count):
        for w in rot[v]:
            if (v, w) in seen:
                continue
            walk = []
            a, b = v, w
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append(a)
                r = rot[b]
                a, b = b, r[pos[b][a] - 1]
            faces.append(Face(len(faces), tuple(walk)))
    return faces


def validate_plane(g: SignedGraph, rot: Sequence[Sequence[int]]) -> bool:
    """Euler's formula ``V - E + F == 2`` for a connected graph."""
    if not g.is_connected():
        raise GraphError("graph is disconnected: connect components or split instance")
    f = len(trace_faces(g, rot))
    if g.vertex_count == 1:
        return True
    return g.vertex_count - g.edge_count + f == 2


def _cyclic_equal(a: Sequence[int], b: Sequence[int]) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    doubled = list(b) + list(b)
    k = len(a)
    return any(doubled[s : s + k] == list(a) for s in range(k))


@dataclass(frozen=True)
class PlaneGraph:
    """A connected plane signed graph with a designated outer face.

    ``labels`` optionally maps local vertex ids to the ids of a parent graph
    (set for pieces produced by :func:`split_along_chord`).
    """

    graph: SignedGraph
    rotation: Rotation
    outer_face: int
    labels: tuple[int, ...] | None = None

    def __post_init__(self):
        g = self.graph
        object.__setattr__(self, "rotation", _normalize_rotation(g, self.rotation))
        if g.vertex_count < 3:
            raise TooSmallError(f"plane graphs need at least 3 vertices, got {g.vertex_count}")
        if not g.is_connected():
            raise GraphError("graph is disconnected: connect components or split instance")
        if g.vertex_count - g.edge_count + len(self.faces) != 2:
            raise GraphError(
                f"rotation system is not planar: V - E + F = "
                f"{g.vertex_count - g.edge_count + len(self.faces)}, expected 2"
            )
        if not 0 <= self.outer_face < len(self.faces):
            raise GraphError(f"outer face id {self.outer_face} out of range [0, {len(self.faces)})")
        if self.labels is not None and len(self.labels) != g.vertex_count:
            raise GraphError("labels must name every vertex")

    @classmethod
    def from_rotation(
        cls,
        g: SignedGraph,
        rot: Sequence[Sequence[int]],
        outer: int | Sequence[int] | None = None,
        labels: Sequence[int] | None = None,
    ) -> PlaneGraph:
        """Build from a rotation system; ``outer`` is a face id or a vertex cycle.

        Without ``outer`` the longest face is chosen, ties going to the
        smallest face id.
        """
        faces = trace_faces(g, rot)
        if outer is None:
            outer_id = max(faces, key=lambda f: (len(f), -f.id)).id
        elif isinstance(outer, int):
            outer_id = outer
        else:
            cyc = [int(v) for v in outer]
            match = [f.id for f in faces if _cyclic_equal(cyc, f.boundary)]
            match += [f.id for f in faces if _cyclic_equal(cyc[::-1], f.boundary)]
            if not match:
                raise GraphError(f"outer face {cyc} is not a face of the rotation system")
            outer_id = match[0]
        return cls(g, tuple(tuple(r) for r in rot), outer_id, None if labels is None else tuple(labels))

    @cached_property
    def faces(self) -> list[Face]:
        return trace_faces(self.graph, self.rotation)

    @cached_property
    def _dart_face(self) -> dict[tuple[int, int], int]:
        return {d: f.id for f in self.faces for d in f.darts()}

    def face_of_dart(self, u: int, v: int) -> int:
        try:
            return self._dart_face[(u, v)]
        except KeyError:
            raise GraphError(f"({u}, {v}) is not a dart") from None

    @property
    def outer(self) -> Face:
        return self.faces[self.outer_face]

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    def label(self, v: int) -> int:
        return v if self.labels is None else self.labels[v]

    def with_outer_face(self, face_id: int) -> PlaneGraph:
        return PlaneGraph(self.graph, self.rotation, face_id, self.labels)

    def mirrored(self) -> PlaneGraph:
        """Same embedding seen from the other side; every face is reversed."""
        rot = tuple(r[::-1] for r in self.rotation)
        b = self.outer.boundary
        return _with_outer_dart(self.graph, rot, (b[1], b[0]), self.labels)


def _with_outer_dart(g: SignedGraph, rot, dart: tuple[int, int], labels) -> PlaneGraph:
    fid = next(f.id for f in trace_faces(g, rot) if dart in set(f.darts()))
    return PlaneGraph(g, tuple(tuple(r) for r in rot), fid, labels)


def is_near_triangulation(pg: PlaneGraph) -> bool:
    """Every bounded face a triangle and the graph 2-connected.

    A connected plane graph on at least 3 vertices is 2-connected exactly
    when every face is bounded by a simple cycle.
    """
    for f in pg.faces:
        if len(set(f.boundary)) != len(f.boundary):
            return False
        if f.id != pg.outer_face and len(f) != 3:
            return False
    return True


def boundary_cycle(pg: PlaneGraph) -> list[int]:
    """Outer cycle in tracing orientation, starting at its smallest vertex."""
    b = list(pg.outer.boundary)
    if len(set(b)) != len(b):
        raise GraphError("outer boundary is not a simple cycle: requires 2-connected input")
    k = b.index(min(b))
    return b[k:] + b[:k]


def find_chord(pg: PlaneGraph) -> tuple[int, int] | None:
    """Lexicographically smallest chord ``(i, j)`` of the outer cycle, 1-indexed."""
    cyc = boundary_cycle(pg)
    p = len(cyc)
    pos = {v: k for k, v in enumerate(cyc)}
    best = None
    for a in cyc:
        for b in pg.graph.neighbors(a):
            if b not in pos:
                continue
            i, j = sorted((pos[a], pos[b]))
            if j - i >= 2 and not (i == 0 and j == p - 1):
                if best is None or (i, j) < best:
                    best = (i, j)
    return None if best is None else (best[0] + 1, best[1] + 1)


def induced_plane(pg: PlaneGraph, vertices: Iterable[int], outer_dart: tuple[int, int]) -> PlaneGraph:
    """Induced sub-embedding on ``vertices`` with ids renumbered in sorted order."""
    keep = sorted(set(vertices))
    local = {v: k for k, v in enumerate(keep)}
    g = pg.graph
    edges = [(local[u], local[v], s) for u, v, s in g.edges() if u in local and v in local]
    sub = SignedGraph(len(keep), edges)
    rot = [tuple(local[w] for w in pg.rotation[v] if w in local) for v in keep]
    dart = (local[outer_dart[0]], local[outer_dart[1]])
    return _with_outer_dart(sub, rot, dart, tuple(pg.label(v) for v in keep))


def split_along_chord(pg: PlaneGraph, chord: tuple[int, int]) -> tuple[PlaneGraph, PlaneGraph]:
    """Cut a near-triangulation along chord ``(i, j)`` of its outer cycle.

    Returns ``(G1, G2)`` where ``G2`` contains the first two cycle vertices.
    Both pieces keep the chord; their ``labels`` give ids in ``pg``'s
    labelling.
    """
    cyc = boundary_cycle(pg)
    p = len(cyc)
    i, j = chord[0] - 1, chord[1] - 1
    if not (0 <= i < j < p) or j - i < 2 or (i == 0 and j == p - 1):
        raise GraphError(f"({chord[0]}, {chord[1]}) does not name a chord position")
    vi, vj = cyc[i], cyc[j]
    if not pg.graph.has_edge(vi, vj):
        raise GraphError(f"v{chord[0]} v{chord[1]} is not an edge")
    side = {vi, vj}
    todo = [cyc[i + 1]]
    side.add(cyc[i + 1])
    while todo:
        u = todo.pop()
        for w in pg.graph.neighbors(u):
            if w not in side:
                side.add(w)
                todo.append(w)
    other = (set(range(pg.vertex_count)) - side) | {vi, vj}
    arc = induced_plane(pg, side, (vi, cyc[i + 1]))
    rest = induced_plane(pg, other, (vj, cyc[(j + 1) % p]))
    if i == 0:
        return rest, arc
    return arc, rest


def fan_neighbors(pg: PlaneGraph, vp: int, v1: int, vprev: int) -> list[int]:
    """Interior neighbors of outer vertex ``vp`` from the ``v1`` side to ``vprev``."""
    cyc = pg.outer.boundary
    on_cycle = set(cyc)
    k = cyc.index(vp)
    succ, pred = cyc[(k + 1) % len(cyc)], cyc[k - 1]
    if {succ, pred} != {v1, vprev}:
        raise GraphError(f"{v1} and {vprev} are not the outer-cycle neighbors of {vp}")
    r = pg.rotation[vp]
    d = len(r)
    start = r.index(v1)
    step = -1 if succ == v1 else 1
    fan = []
    t = (start + step) % d
    while r[t] != vprev:
        if r[t] in on_cycle:
            raise GraphError(f"outer vertex {r[t]} lies in the fan of {vp}: the cycle has a chord at {vp}")
        fan.append(r[t])
        t = (t + step) % d
    return fan


def _sign_source(policy: str):
    if policy not in SIGN_POLICIES:
        raise GraphError(f"unknown sign policy {policy!r}; expected one of {SIGN_POLICIES}")
    count = 0

    def next_sign() -> int:
        nonlocal count
        count += 1
        if policy == "always_positive":
            return 1
        if policy == "always_negative":
            return -1
        return 1 if count % 2 else -1

    return next_sign


class _Surgery:
    """Mutable rotation system used while inserting chords into faces."""

    def __init__(self, pg: PlaneGraph, policy: str):
        self.rot = [list(r) for r in pg.rotation]
        self.adj = [set(r) for r in pg.rotation]
        self.edges = list(pg.graph.edges())
        self.next_sign = _sign_source(policy)

    def legal(self, a: int, b: int) -> bool:
        return a != b and b not in self.adj[a]

    def _insert(self, walk: list[int], t: int, z: int) -> None:
        # the corner at walk[t] lies just before its incoming neighbor
        w = walk[t]
        r = self.rot[w]
        r.insert(r.index(walk[t - 1]), z)

    def chord(self, walk: list[int], s: int, gap: int) -> tuple[list[int], list[int]]:
        """Join ``walk[s]`` and ``walk[s+gap]`` through the face; return both new faces."""
        k = len(walk)
        t = (s + gap) % k
        a, b = walk[s], walk[t]
        self._insert(walk, s, b)
        self._insert(walk, t, a)
        self.adj[a].add(b)
        self.adj[b].add(a)
        self.edges.append((a, b, self.next_sign()))
        first = [walk[(s + q) % k] for q in range(gap + 1)]
        second = [walk[(t + q) % k] for q in range(k - gap + 1)]
        return first, second

    def find(self, walk: list[int], ok=None) -> tuple[int, int] | None:
        k = len(walk)
        for gap in range(2, k - 1):
            for s in range(k):
                if self.legal(walk[s], walk[(s + gap) % k]) and (ok is None or ok(s, gap)):
                    return s, gap
        return None


def _contains_edge(walk: Sequence[int], u: int, v: int) -> bool:
    k = len(walk)
    return any({walk[q], walk[(q + 1) % k]} == {u, v} for q in range(k))


def triangulate(
    pg: PlaneGraph,
    sign_policy: SignPolicy = "always_positive",
    keep_edge: tuple[int, int] | None = None,
    outer: Literal["triangle", "simple"] = "triangle",
) -> PlaneGraph:
    """Add chords until every bounded face is a triangle.

    With ``outer="triangle"`` chords are also laid across the outer face
    until it is a triangle; ``keep_edge`` then stays on that triangle.
    With ``outer="simple"`` the outer face only loses repeated vertices,
    so every vertex stays on it (used for outerplanar inputs). New edges
    get signs from ``sign_policy``; existing edges and signs are untouched.
    """
    if pg.vertex_count < 3:
        raise TooSmallError("triangulation needs at least 3 vertices")
    if keep_edge is not None and not _contains_edge(pg.outer.boundary, *keep_edge):
        raise GraphError(f"edge {keep_edge} is not on the outer face")
    surgery = _Surgery(pg, sign_policy)
    outer_walk = list(pg.outer.boundary)
    work = [list(f.boundary) for f in pg.faces if f.id != pg.outer_face]

    if outer == "triangle":
        while len(outer_walk) > 3:

            def ok(s: int, gap: int) -> bool:
                if keep_edge is None:
                    return True
                k = len(outer_walk)
                rest = [outer_walk[(s + gap + q) % k] for q in range(k - gap + 1)]
                return _contains_edge(rest, *keep_edge)

            hit = surgery.find(outer_walk, ok)
            if hit is None:
                raise GraphError("no legal chord across the outer face")
            inner, outer_walk = surgery.chord(outer_walk, *hit)
            work.append(inner)
    elif outer == "simple":
        while len(set(outer_walk)) != len(outer_walk):
            k = len(outer_walk)
            hit = None
            for s in range(k):
                mid = outer_walk[(s + 1) % k]
                if outer_walk.count(mid) > 1 and surgery.legal(outer_walk[s], outer_walk[(s + 2) % k]):
                    hit = (s, 2)
                    break
            if hit is None:
                raise GraphError("cannot make the outer walk simple without enclosing a vertex")
            inner, outer_walk = surgery.chord(outer_walk, *hit)
            work.append(inner)
    else:
        raise ValueError(f"unknown outer mode {outer!r}")

    while work:
        walk = work.pop()
        if len(walk) <= 3:
            continue
        hit = surgery.find(walk)
        if hit is None:
            raise GraphError(f"face {walk} admits no legal chord")
        work.extend(surgery.chord(walk, *hit))

    g = SignedGraph(pg.vertex_count, surgery.edges)
    return _with_outer_dart(g, surgery.rot, (outer_walk[0], outer_walk[1]), pg.labels)
