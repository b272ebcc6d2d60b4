"""Command line front end.

Exit codes::

    0   success (for ``verify``: the coloring is proper)
    1   ``verify`` found violations or membership failures
    2   a solver precondition failed
    3   unreadable or invalid input
    4   internal invariant breach (a bug)
    64  usage error

Diagnostics go to stderr; results go to stdout or the ``--output`` file.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Sequence

from .bench import run_bench
from .embedding import SIGN_POLICIES, PlaneGraph, triangulate
from .errors import GraphError, InstanceFormatError, InvariantBreach, PreconditionError
from .generators import SEED_ENV, default_seed, gen_lists, gen_outerplanar, gen_stacked_triangulation
from .graph_core import Coloring, ListAssignment, SignedGraph, validate_list_coloring
from .instance import InstanceFile, load_instance, parse_coloring, plane_to_instance, save_instance, serialize_coloring
from .oracle import brute_force_l_coloring
from .signature import is_balanced, switch, transport_lists
from .solver import (
    SYMMETRIC_PALETTE,
    ExtensionProblem,
    defective_four_list_color,
    degeneracy_greedy_color,
    extend_precoloring,
    five_list_color,
    outerplanar_three_list_color,
    symmetric_five_color,
)

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PRECONDITION = 2
EXIT_INPUT = 3
EXIT_INVARIANT = 4
EXIT_USAGE = 64

COLOR_MODES = ("five", "outerplanar", "defective", "degeneracy", "symmetric")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _components(g: SignedGraph) -> list[list[int]]:
    seen = [False] * g.vertex_count
    out = []
    for s in g.vertices():
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [], [s]
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(sorted(comp))
    return out


def _sub_plane(inst: InstanceFile, comp: list[int]) -> PlaneGraph:
    index = {v: k for k, v in enumerate(comp)}
    g = SignedGraph(len(comp), [(index[u], index[v], s) for u, v, s in inst.edges if u in index])
    rot = [[index[w] for w in inst.rotation[v]] for v in comp]
    outer = None
    if inst.outer_face is not None and all(v in index for v in inst.outer_face):
        outer = [index[v] for v in inst.outer_face]
    return PlaneGraph.from_rotation(g, rot, outer)


def _extension(inst: InstanceFile, policy: str) -> Coloring:
    pre = inst.precoloring
    if len(pre) != 2:
        raise PreconditionError(f"precoloring must fix exactly two adjacent outer vertices, got {len(pre)}")
    (v1, c1), (v2, c2) = sorted(pre.items())
    pg = triangulate(inst.plane(), policy, outer="simple")
    return extend_precoloring(ExtensionProblem(pg, inst.list_assignment(), v1, c1, v2, c2))


def _color(inst: InstanceFile, mode: str, policy: str) -> Coloring:
    g = inst.graph
    if mode == "degeneracy":
        return degeneracy_greedy_color(g, inst.list_assignment())
    if mode == "five" and inst.precoloring:
        return _extension(inst, policy)
    if inst.rotation is None:
        raise InstanceFormatError(f"mode {mode} needs a rotation system", "rotation")
    if mode == "symmetric":
        lists: ListAssignment = tuple(frozenset(SYMMETRIC_PALETTE) for _ in g.vertices())
    else:
        lists = inst.list_assignment()
    solve: Callable = {
        "five": five_list_color,
        "symmetric": lambda pg, lsts, pol: symmetric_five_color(pg, pol),
        "outerplanar": outerplanar_three_list_color,
        "defective": defective_four_list_color,
    }[mode]
    coloring: Coloring = {}
    for comp in _components(g):
        if len(comp) < 3:
            # a vertex or single edge: two colors from any list of size >= 2 suffice
            sub = SignedGraph(len(comp), [(0, 1, g.sign(*comp))] if len(comp) == 2 else [])
            part = degeneracy_greedy_color(sub, [lists[v] for v in comp])
        else:
            pg = _sub_plane(inst, comp)
            part = solve(pg, [lists[v] for v in comp], policy)
        coloring.update({comp[k]: a for k, a in part.items()})
    return coloring


def cmd_color(args) -> int:
    inst = load_instance(args.input)
    coloring = _color(inst, args.mode, args.sign_policy)
    _write(serialize_coloring(coloring, inst), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    inst = load_instance(args.input)
    with open(args.coloring, encoding="utf-8") as fh:
        c = parse_coloring(fh.read(), inst)
    if len(c) != inst.n:
        missing = [inst.name(v) for v in range(inst.n) if v not in c]
        print(f"coloring not total: missing {', '.join(missing[:10])}", file=sys.stderr)
        return EXIT_VERIFY
    if inst.lists is None or args.ignore_lists:
        lists = tuple(frozenset({c[v]}) for v in range(inst.n))
    else:
        lists = inst.list_assignment()
    ok, report = validate_list_coloring(inst.graph, lists, c)
    if ok:
        print("PROPER")
        return EXIT_OK
    print(report, file=sys.stderr)
    return EXIT_VERIFY


def cmd_balance(args) -> int:
    inst = load_instance(args.input)
    w = is_balanced(inst.graph)
    if w.balanced:
        print("BALANCED")
        print("balancing set: " + ",".join(inst.name(v) for v in sorted(w.balancing_set)))
    else:
        print("UNBALANCED")
        print("negative cycle: " + ",".join(inst.name(v) for v in w.negative_cycle))
    return EXIT_OK


def _vertex_set(inst: InstanceFile, text: str) -> list[int]:
    names = {inst.name(v): v for v in range(inst.n)}
    out = []
    for tok in filter(None, (t.strip() for t in text.split(","))):
        if tok not in names:
            raise InstanceFormatError(f"--set: unknown vertex {tok!r}", "set")
        out.append(names[tok])
    return out


def cmd_switch(args) -> int:
    inst = load_instance(args.input)
    members = _vertex_set(inst, args.set)
    g = switch(inst.graph, members)
    lists = None
    if inst.lists is not None:
        moved = transport_lists(inst.list_assignment(), members)
        lists = {v: sorted(moved[v]) for v in sorted(inst.lists)}
    pre = None
    if inst.precoloring is not None:
        pre = {v: (-a if v in set(members) else a) for v, a in inst.precoloring.items()}
    sign = {frozenset((u, v)): s for u, v, s in g.edges()}
    edges = [(u, v, sign[frozenset((u, v))]) for u, v, _ in inst.edges]
    out = InstanceFile(inst.n, edges, inst.names, inst.rotation, inst.outer_face, lists, pre)
    save_instance(out, args.output)
    return EXIT_OK


def cmd_triangulate(args) -> int:
    inst = load_instance(args.input)
    tri = triangulate(inst.plane(), args.sign_policy, outer=args.outer)
    lists = inst.list_assignment() if inst.lists is not None else None
    out = plane_to_instance(tri, lists, inst.precoloring)
    out.names = inst.names
    save_instance(out, args.output)
    return EXIT_OK


def cmd_oracle(args) -> int:
    inst = load_instance(args.input)
    lists = list(inst.list_assignment())
    for v, a in (inst.precoloring or {}).items():
        lists[v] = frozenset({a}) if a in lists[v] else frozenset()
    mode = "signed" if args.mode == "signed" else "positive_only"
    res = brute_force_l_coloring(inst.graph, lists, mode, args.budget)
    print(res.status)
    if res.witness is not None:
        sys.stdout.write(serialize_coloring(res.witness, inst))
    print(f"nodes explored: {res.nodes_explored}", file=sys.stderr)
    return EXIT_OK


def cmd_gen(args) -> int:
    seed = default_seed() if args.seed is None else args.seed
    if args.kind == "stacked":
        inst = gen_stacked_triangulation(args.n, seed, args.negative_probability)
    else:
        inst = gen_outerplanar(args.n, seed, args.negative_probability)
    if args.lists != "none":
        lo, hi = args.color_range
        lists = gen_lists(inst, args.lists, args.k, (lo, hi), seed)
        inst.lists = {v: sorted(lst) for v, lst in enumerate(lists)}
    save_instance(inst, args.output)
    return EXIT_OK


def cmd_bench(args) -> int:
    seed = default_seed() if args.seed is None else args.seed
    sizes = [int(x) for x in args.sizes.split(",")]
    report = run_bench(sizes, args.trials, seed)
    for row in report.rows:
        print(f"n={row.n:>7}  mean={row.mean_runtime:.6f}s  trials={row.trials}", file=sys.stderr)
    print(f"fitted exponent {report.fitted_exponent:.3f}", file=sys.stderr)
    _write(report.to_json(), args.report)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="signedcolor", description="List coloring of signed plane graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("color", help="run a solver and write the coloring")
    c.add_argument("--input", required=True)
    c.add_argument("--mode", choices=COLOR_MODES, default="five")
    c.add_argument("--sign-policy", choices=SIGN_POLICIES, default="always_positive")
    c.add_argument("--output", default="-")
    c.set_defaults(func=cmd_color)

    v = sub.add_parser("verify", help="check a coloring against an instance")
    v.add_argument("--input", required=True)
    v.add_argument("--coloring", required=True)
    v.add_argument("--ignore-lists", action="store_true", help="check properness only (for --mode symmetric output)")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("balance", help="balancing set or negative cycle")
    b.add_argument("--input", required=True)
    b.set_defaults(func=cmd_balance)

    s = sub.add_parser("switch", help="switch at a vertex set")
    s.add_argument("--input", required=True)
    s.add_argument("--set", required=True, help="comma separated vertices")
    s.add_argument("--output", required=True)
    s.set_defaults(func=cmd_switch)

    t = sub.add_parser("triangulate", help="augment to a near-triangulation")
    t.add_argument("--input", required=True)
    t.add_argument("--sign-policy", choices=SIGN_POLICIES, default="always_positive")
    t.add_argument("--outer", choices=("triangle", "simple"), default="triangle")
    t.add_argument("--output", required=True)
    t.set_defaults(func=cmd_triangulate)

    o = sub.add_parser("oracle", help="exhaustive search")
    o.add_argument("--input", required=True)
    o.add_argument("--mode", choices=("signed", "positive"), default="signed")
    o.add_argument("--budget", type=int, default=None)
    o.set_defaults(func=cmd_oracle)

    g = sub.add_parser("gen", help="generate a random instance")
    g.add_argument("--kind", choices=("stacked", "outerplanar"), required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=None, help=f"defaults to ${SEED_ENV} or 0")
    g.add_argument("--negative-probability", type=float, default=0.0)
    g.add_argument("--lists", choices=("none", "uniform", "thomassen"), default="none")
    g.add_argument("--k", type=int, default=5)
    g.add_argument("--color-range", type=int, nargs=2, default=(-10, 10), metavar=("LO", "HI"))
    g.add_argument("--output", default="-")
    g.set_defaults(func=cmd_gen)

    r = sub.add_parser("bench", help="time five_list_color and fit the scaling exponent")
    r.add_argument("--sizes", default="100,200,400,800,1600,3200")
    r.add_argument("--trials", type=int, default=5)
    r.add_argument("--seed", type=int, default=None)
    r.add_argument("--report", default="-")
    r.set_defaults(func=cmd_bench)
    return p


def cli_main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except InvariantBreach as exc:
        print(f"invariant breach: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (InstanceFormatError, GraphError, OSError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
