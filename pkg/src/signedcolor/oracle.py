"""Exhaustive search for signed list colorings on small instances.

Backtracking with minimum-remaining-values vertex choice and forward
checking. Values are tried smallest first and ties go to the smallest
vertex, so witnesses are reproducible. Test code treats UNSAT answers as
ground truth, so searches run unbounded unless a node budget is given.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Literal, Mapping, Sequence

from .errors import PreconditionError
from .graph_core import Coloring, SignedGraph, as_lists, validate_coloring, validate_list_coloring

Mode = Literal["signed", "positive_only"]


@dataclass(frozen=True)
class OracleResult:
    status: Literal["SAT", "UNSAT", "BUDGET"]
    witness: Coloring | None
    nodes_explored: int

    @property
    def sat(self) -> bool:
        return self.status == "SAT"


class _BudgetExhausted(Exception):
    pass


def _constraints(g: SignedGraph, mode: Mode) -> list[list[tuple[int, int]]]:
    if mode not in ("signed", "positive_only"):
        raise ValueError(f"unknown oracle mode {mode!r}")
    out = []
    for v in g.vertices():
        out.append([(w, s) for w, s in sorted(g.neighbors(v).items()) if mode == "signed" or s == 1])
    return out


def iter_l_colorings(
    g: SignedGraph,
    lists: Sequence[Iterable[int]] | Mapping[int, Iterable[int]],
    mode: Mode = "signed",
    budget: int | None = None,
    counter: list[int] | None = None,
) -> Iterator[Coloring]:
    """Yield every L-coloring in search order.

    ``counter[0]`` accumulates explored nodes when given.
    """
    n = g.vertex_count
    live = [set(lst) for lst in as_lists(lists, n)]
    nbrs = _constraints(g, mode)
    color: Coloring = {}
    count = counter if counter is not None else [0]

    def pick() -> int:
        best, best_size = -1, math.inf
        for v in range(n):
            if v not in color and len(live[v]) < best_size:
                best, best_size = v, len(live[v])
        return best

    def search() -> Iterator[Coloring]:
        if len(color) == n:
            yield dict(color)
            return
        v = pick()
        for a in sorted(live[v]):
            count[0] += 1
            if budget is not None and count[0] > budget:
                raise _BudgetExhausted
            pruned = []
            dead = False
            for w, s in nbrs[v]:
                if w in color:
                    continue
                banned = s * a
                if banned in live[w]:
                    live[w].discard(banned)
                    pruned.append((w, banned))
                    if not live[w]:
                        dead = True
                        break
            if not dead:
                color[v] = a
                yield from search()
                del color[v]
            for w, banned in pruned:
                live[w].add(banned)

    if any(not lst for lst in live):
        return
    yield from search()


def brute_force_l_coloring(
    g: SignedGraph,
    lists: Sequence[Iterable[int]] | Mapping[int, Iterable[int]],
    mode: Mode = "signed",
    budget: int | None = None,
) -> OracleResult:
    """First L-coloring found, or UNSAT after an exhaustive search.

    With ``budget`` set, the search stops after that many nodes and reports
    ``BUDGET`` instead of guessing.
    """
    counter = [0]
    try:
        for c in iter_l_colorings(g, lists, mode, budget, counter):
            if mode == "signed":
                ok, _ = validate_list_coloring(g, lists, c)
                assert ok, "oracle produced an invalid witness"
            return OracleResult("SAT", c, counter[0])
    except _BudgetExhausted:
        return OracleResult("BUDGET", None, counter[0])
    return OracleResult("UNSAT", None, counter[0])


@dataclass(frozen=True)
class ChoosabilityResult:
    """Outcome of a universe-bounded choosability sweep.

    ``choosable`` only means every assignment of ``k``-subsets of the given
    universe is colorable; it does not certify choosability over all
    integers.
    """

    choosable: bool
    bad_lists: tuple[frozenset[int], ...] | None
    assignments_checked: int


def check_choosability(
    g: SignedGraph, k: int, universe: Iterable[int], max_assignments: int = 2_000_000
) -> ChoosabilityResult:
    """Try every assignment of ``k``-subsets of ``universe`` to the vertices."""
    if k < 1:
        raise ValueError("k must be positive")
    colors = sorted(set(universe))
    subsets = [frozenset(c) for c in itertools.combinations(colors, k)]
    total = len(subsets) ** g.vertex_count
    if total > max_assignments:
        raise PreconditionError(
            f"{len(subsets)}^{g.vertex_count} = {total} list assignments exceeds the bound {max_assignments}"
        )
    checked = 0
    for assignment in itertools.product(subsets, repeat=g.vertex_count):
        checked += 1
        if not brute_force_l_coloring(g, assignment).sat:
            return ChoosabilityResult(False, tuple(assignment), checked)
    return ChoosabilityResult(True, None, checked)


def sandwich_check(
    g: SignedGraph, lists: Sequence[Iterable[int]] | Mapping[int, Iterable[int]], limit: int | None = None
) -> bool:
    """Every unsigned-proper coloring with positive values is signed-proper.

    Only the positive part of each list is used. Enumerates up to ``limit``
    unsigned-proper colorings of the underlying graph and validates each
    against the signature of ``g``.
    """
    positive = [frozenset(a for a in lst if a > 0) for lst in as_lists(lists, g.vertex_count)]
    unsigned = g.unsigned()
    for k, c in enumerate(iter_l_colorings(unsigned, positive)):
        if limit is not None and k >= limit:
            break
        if validate_coloring(g, c).violating_edges:
            return False
    return True
