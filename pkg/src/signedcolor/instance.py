"""JSON instance format shared by fixtures, generators and the CLI.

An instance is one JSON object::

    {
      "format_version": 1,
      "vertices": 4,                      # or a list of vertex names
      "edges": [[0, 1, 1], [1, 2, -1]],   # u, v, sign
      "rotation": {"0": [1, 3], ...},     # clockwise neighbor order
      "outer_face": [0, 1, 2, 3],         # optional vertex cycle
      "lists": {"0": [1, 2, 3], ...},     # optional
      "precoloring": {"0": 1}             # optional
    }

With a count, vertices are referred to by decimal index (object keys are
strings, as JSON requires). With a name list, every reference uses names.
Colorings use the same envelope with a single ``coloring`` field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Mapping, Sequence

from .embedding import PlaneGraph
from .errors import (
    DanglingVertexError,
    DuplicateEdgeError,
    InstanceFormatError,
    PreconditionError,
    RotationFormatError,
    SignValueError,
    UnknownFieldError,
)
from .graph_core import COLOR_BOUND, Coloring, ListAssignment, SignedGraph, as_lists

FORMAT_VERSION = 1
_FIELDS = {"format_version", "vertices", "edges", "rotation", "outer_face", "lists", "precoloring"}


@dataclass
class InstanceFile:
    """Parsed instance with vertices renumbered ``0..n-1``."""

    n: int
    edges: list[tuple[int, int, int]]
    names: list[str] | None = None
    rotation: list[list[int]] | None = None
    outer_face: list[int] | None = None
    lists: dict[int, list[int]] | None = None
    precoloring: dict[int, int] | None = None

    @property
    def graph(self) -> SignedGraph:
        return SignedGraph(self.n, self.edges)

    def plane(self) -> PlaneGraph:
        if self.rotation is None:
            raise InstanceFormatError("instance has no rotation system", "rotation")
        if self.n < 3:
            raise PreconditionError(f"planar solvers need at least 3 vertices, got {self.n}")
        return PlaneGraph.from_rotation(self.graph, self.rotation, self.outer_face)

    def list_assignment(self) -> ListAssignment:
        if self.lists is None:
            raise InstanceFormatError("instance has no lists", "lists")
        return as_lists(self.lists, self.n)

    def name(self, v: int) -> str:
        return self.names[v] if self.names is not None else str(v)


def _check_color(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InstanceFormatError(f"{where}: colors must be integers, got {value!r}", where)
    if abs(value) > COLOR_BOUND:
        raise InstanceFormatError(f"{where}: |{value}| exceeds the color bound 2^30", where)
    return value


class _Resolver:
    def __init__(self, vertices: Any):
        if isinstance(vertices, bool):
            raise InstanceFormatError("vertices must be a count or a list of names", "vertices")
        if isinstance(vertices, int):
            if vertices < 0:
                raise InstanceFormatError("vertex count must be nonnegative", "vertices")
            self.n = vertices
            self.names = None
            self.index = None
        elif isinstance(vertices, list) and all(isinstance(x, str) for x in vertices):
            if len(set(vertices)) != len(vertices):
                raise InstanceFormatError("vertex names must be unique", "vertices")
            self.n = len(vertices)
            self.names = list(vertices)
            self.index = {name: k for k, name in enumerate(vertices)}
        else:
            raise InstanceFormatError("vertices must be a count or a list of names", "vertices")

    def __call__(self, ref: Any, where: str) -> int:
        if self.index is not None:
            if ref not in self.index:
                raise DanglingVertexError(f"{where}: unknown vertex {ref!r}", where)
            return self.index[ref]
        if isinstance(ref, str):
            try:
                ref = int(ref, 10)
            except ValueError:
                raise DanglingVertexError(f"{where}: unknown vertex {ref!r}", where) from None
        if isinstance(ref, bool) or not isinstance(ref, int) or not 0 <= ref < self.n:
            raise DanglingVertexError(f"{where}: unknown vertex {ref!r}", where)
        return ref

    def key(self, v: int) -> str:
        return self.names[v] if self.names is not None else str(v)

    def ref(self, v: int) -> int | str:
        return self.names[v] if self.names is not None else v


def _mapping(data: Mapping[str, Any], name: str) -> Mapping[str, Any] | None:
    value = data.get(name)
    if value is None:
        return None
    if not isinstance(value, dict):
        raise InstanceFormatError(f"{name} must be an object keyed by vertex", name)
    return value


def instance_from_dict(data: Mapping[str, Any]) -> InstanceFile:
    if not isinstance(data, dict):
        raise InstanceFormatError("instance must be a JSON object")
    unknown = set(data) - _FIELDS
    if unknown:
        raise UnknownFieldError(f"unknown field(s): {', '.join(sorted(unknown))}", sorted(unknown)[0])
    version = data.get("format_version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise InstanceFormatError(f"unsupported format_version {version!r}", "format_version")
    if "vertices" not in data:
        raise InstanceFormatError("missing field: vertices", "vertices")
    resolve = _Resolver(data["vertices"])
    n = resolve.n

    edges = []
    seen: dict[frozenset[int], int] = {}
    for k, e in enumerate(data.get("edges", [])):
        where = f"edges[{k}]"
        if not isinstance(e, list) or len(e) != 3:
            raise InstanceFormatError(f"{where}: an edge is [u, v, sign]", "edges")
        u, v = resolve(e[0], where), resolve(e[1], where)
        s = e[2]
        if isinstance(s, bool) or s not in (1, -1):
            raise SignValueError(f"{where}: sign must be +1 or -1, got {s!r}", "edges")
        if u == v:
            raise InstanceFormatError(f"{where}: loop at vertex {resolve.key(u)}", "edges")
        pair = frozenset((u, v))
        if pair in seen:
            raise DuplicateEdgeError(
                f"{where}: duplicate edge {resolve.key(u)}-{resolve.key(v)} (first at edges[{seen[pair]}])", "edges"
            )
        seen[pair] = k
        edges.append((u, v, s))

    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v, _ in edges:
        nbrs[u].add(v)
        nbrs[v].add(u)

    rotation = None
    raw = _mapping(data, "rotation")
    if raw is not None:
        rotation = [None] * n
        for key, seq in raw.items():
            v = resolve(key, "rotation")
            if not isinstance(seq, list):
                raise RotationFormatError(f"rotation at vertex {key}: expected a list", "rotation")
            order = [resolve(w, f"rotation[{key}]") for w in seq]
            if len(order) != len(set(order)) or set(order) != nbrs[v]:
                raise RotationFormatError(
                    f"rotation at vertex {key} is not a permutation of its neighbors", "rotation"
                )
            rotation[v] = order
        for v in range(n):
            if rotation[v] is None:
                if nbrs[v]:
                    raise RotationFormatError(f"rotation missing for vertex {resolve.key(v)}", "rotation")
                rotation[v] = []

    outer = data.get("outer_face")
    if outer is not None:
        if not isinstance(outer, list):
            raise InstanceFormatError("outer_face must be a vertex list", "outer_face")
        outer = [resolve(v, "outer_face") for v in outer]

    lists = None
    raw = _mapping(data, "lists")
    if raw is not None:
        lists = {}
        for key, seq in raw.items():
            v = resolve(key, "lists")
            if not isinstance(seq, list):
                raise InstanceFormatError(f"lists at vertex {key}: expected a list", "lists")
            vals = [_check_color(x, f"lists[{key}]") for x in seq]
            if len(set(vals)) != len(vals):
                raise InstanceFormatError(f"lists at vertex {key} repeat a color", "lists")
            lists[v] = vals

    pre = None
    raw = _mapping(data, "precoloring")
    if raw is not None:
        pre = {resolve(key, "precoloring"): _check_color(x, f"precoloring[{key}]") for key, x in raw.items()}

    return InstanceFile(n, edges, resolve.names, rotation, outer, lists, pre)


def instance_to_dict(inst: InstanceFile) -> dict[str, Any]:
    r = _Resolver(inst.names if inst.names is not None else inst.n)
    out: dict[str, Any] = {"format_version": FORMAT_VERSION}
    out["vertices"] = list(inst.names) if inst.names is not None else inst.n
    out["edges"] = [[r.ref(u), r.ref(v), s] for u, v, s in inst.edges]
    if inst.rotation is not None:
        out["rotation"] = {r.key(v): [r.ref(w) for w in inst.rotation[v]] for v in range(inst.n)}
    if inst.outer_face is not None:
        out["outer_face"] = [r.ref(v) for v in inst.outer_face]
    if inst.lists is not None:
        out["lists"] = {r.key(v): list(inst.lists[v]) for v in sorted(inst.lists)}
    if inst.precoloring is not None:
        out["precoloring"] = {r.key(v): inst.precoloring[v] for v in sorted(inst.precoloring)}
    return out


def _dump(obj: Any, indent: int = 0) -> str:
    # short scalar lists stay on one line so edge lists read one edge per line
    pad = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_dump(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    if isinstance(obj, list):
        if all(not isinstance(x, (list, dict)) for x in obj):
            return json.dumps(obj)
        items = [f"{pad}{_dump(v, indent + 1)}" for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + "  " * indent + "]"
    return json.dumps(obj)


def parse_instance(text: str) -> InstanceFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"not valid JSON: {exc}") from None
    return instance_from_dict(data)


def serialize_instance(inst: InstanceFile) -> str:
    return _dump(instance_to_dict(inst)) + "\n"


def load_instance(path) -> InstanceFile:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def save_instance(inst: InstanceFile, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_instance(inst))


def serialize_coloring(c: Mapping[int, int], inst: InstanceFile | None = None) -> str:
    key = inst.name if inst is not None else str
    body = {key(v): c[v] for v in sorted(c)}
    return _dump({"format_version": FORMAT_VERSION, "coloring": body}) + "\n"


def parse_coloring(text: str, inst: InstanceFile) -> Coloring:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"not valid JSON: {exc}") from None
    if not isinstance(data, dict) or set(data) - {"format_version", "coloring"}:
        raise UnknownFieldError("a coloring file holds only format_version and coloring")
    if data.get("format_version", FORMAT_VERSION) != FORMAT_VERSION:
        raise InstanceFormatError("unsupported format_version", "format_version")
    raw = data.get("coloring")
    if not isinstance(raw, dict):
        raise InstanceFormatError("coloring must be an object keyed by vertex", "coloring")
    resolve = _Resolver(inst.names if inst.names is not None else inst.n)
    return {resolve(k, "coloring"): _check_color(x, f"coloring[{k}]") for k, x in raw.items()}


def plane_to_instance(
    pg: PlaneGraph,
    lists: Sequence[Sequence[int]] | None = None,
    precoloring: Mapping[int, int] | None = None,
) -> InstanceFile:
    return InstanceFile(
        pg.vertex_count,
        list(pg.graph.edges()),
        rotation=[list(r) for r in pg.rotation],
        outer_face=list(pg.outer.boundary),
        lists=None if lists is None else {v: sorted(lst) for v, lst in enumerate(lists)},
        precoloring=None if precoloring is None else dict(precoloring),
    )
