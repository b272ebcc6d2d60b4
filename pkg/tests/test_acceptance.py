"""Acceptance checks. Run ``pytest tests/test_acceptance.py`` to get one
PASS/FAIL line per criterion in the terminal summary.

Every check is exact: a single invalid output or wrong SAT status fails it.
"""

from __future__ import annotations

import sys
import time

import numpy as np
import pytest

from helpers import classical_proper, random_graph, signed_k4, wheel5
from signedcolor import (
    ExtensionProblem,
    PlaneGraph,
    PreconditionError,
    SignedGraph,
    brute_force_l_coloring,
    constant_lists,
    defective_four_list_color,
    extend_precoloring,
    five_list_color,
    is_balanced,
    iter_l_colorings,
    max_defect,
    outerplanar_three_list_color,
    switch,
    transport_coloring,
    transport_lists,
    validate_coloring,
    validate_list_coloring,
    walk_sign,
)
from signedcolor.bench import run_bench
from signedcolor.generators import gen_lists, gen_outerplanar, gen_stacked_triangulation, thomassen_precoloring

NEG_PROBS = (0.0, 0.3, 0.5, 1.0)
SEEDS = range(500)

EXTENSION = "precoloring extension: 500 stacked triangulations, boundary 3-lists, interior 5-lists"
FIVE = "five-list coloring: 500 stacked triangulations, oracle SAT on every n <= 10"
K4 = "signed K4: oracle UNSAT for lists {1,2,3}, SAT for {1,2,3,4} and 200 random 4-list assignments"
WHEEL = "wheel W5 boundary: 2-lists rejected and UNSAT, 100 random 3-list rims extend"
SWITCHING = "switching invariance: 200 (instance, U) pairs"
BALANCE = "balance round trip: 200 switched graphs, 200 planted negative cycles"
OUTERPLANAR = "outerplanar 3-lists: 200 maximal outerplanar instances, n <= 100"
DEFECTIVE = "defective 4-lists: 200 stacked triangulations, max defect <= 1"
SANDWICH = "positive lists: every unsigned-proper witness is signed-proper on 100 instances"
RUNTIME = "runtime: fitted log-log exponent <= 2.3 over n = 100..3200"
UNSIGNED = "all-positive inputs pass an independent classical proper-coloring check"


def sweep_instance(seed: int):
    n = int(np.random.default_rng(seed).integers(4, 201))
    return gen_stacked_triangulation(n, seed, NEG_PROBS[seed % 4])


@pytest.mark.criterion(EXTENSION)
def test_extension_sweep():
    start = time.perf_counter()
    failures = []
    for seed in SEEDS:
        inst = sweep_instance(seed)
        lists = gen_lists(inst, "thomassen", color_range=(-10, 10), seed=seed)
        v1, c1, v2, c2 = thomassen_precoloring(inst, lists)
        try:
            c = extend_precoloring(ExtensionProblem(inst.plane(), lists, v1, c1, v2, c2))
        except Exception as exc:
            failures.append((seed, repr(exc)))
            continue
        if not validate_list_coloring(inst.graph, lists, c)[0] or (c[v1], c[v2]) != (c1, c2):
            failures.append((seed, "invalid"))
    assert failures == []
    assert time.perf_counter() - start < 30


@pytest.mark.criterion(FIVE)
def test_five_list_sweep():
    failures, small = [], 0
    for seed in SEEDS:
        inst = sweep_instance(seed)
        lists = gen_lists(inst, "uniform", 5, (-10, 10), seed)
        c = five_list_color(inst.plane(), lists)
        if not validate_list_coloring(inst.graph, lists, c)[0]:
            failures.append(seed)
        if inst.n <= 10:
            small += 1
            if brute_force_l_coloring(inst.graph, lists).status != "SAT":
                failures.append(("oracle", seed))
    assert failures == []
    assert small > 0


@pytest.mark.criterion(K4)
def test_signed_k4_three_lists_unsat():
    res = brute_force_l_coloring(signed_k4().graph, constant_lists(4, [1, 2, 3]))
    assert res.status == "UNSAT", f"oracle found witness {res.witness}"


@pytest.mark.criterion(K4)
def test_signed_k4_four_lists_sat():
    g = signed_k4().graph
    assert brute_force_l_coloring(g, constant_lists(4, [1, 2, 3, 4])).status == "SAT"
    rng = np.random.default_rng(62)
    universe = np.arange(-5, 6)
    for _ in range(200):
        lists = [set(rng.choice(universe, 4, replace=False).tolist()) for _ in range(4)]
        res = brute_force_l_coloring(g, lists)
        assert res.status == "SAT" and validate_list_coloring(g, lists, res.witness)[0]


@pytest.mark.criterion(WHEEL)
def test_wheel_boundary():
    pg = wheel5()
    lists = [{1, 2}] * 5 + [{1, 2, 3, 4, 5}]
    with pytest.raises(PreconditionError, match=r"hypothesis \(ii\)"):
        extend_precoloring(ExtensionProblem(pg, lists, 0, 1, 1, 2))
    pinned = [{1}, {2}] + lists[2:]
    assert brute_force_l_coloring(pg.graph, pinned).status == "UNSAT"

    rng = np.random.default_rng(63)
    universe = np.arange(-5, 6)

    def draw(size, must=None):
        pool = universe if must is None else universe[universe != must]
        picked = set(rng.choice(pool, size if must is None else size - 1, replace=False).tolist())
        return picked if must is None else picked | {must}

    for _ in range(100):
        lists = [draw(3, 1), draw(3, 2), draw(3), draw(3), draw(3), draw(5)]
        c = extend_precoloring(ExtensionProblem(pg, lists, 0, 1, 1, 2))
        assert validate_list_coloring(pg.graph, lists, c)[0] and (c[0], c[1]) == (1, 2)


@pytest.mark.criterion(SWITCHING)
def test_switching_invariance():
    rng = np.random.default_rng(31)
    for trial in range(200):
        n = int(rng.integers(4, 13))
        inst = gen_stacked_triangulation(n, trial, 0.5)
        pg = inst.plane()
        lists = gen_lists(inst, "uniform", 5, (-6, 6), trial)
        u = np.flatnonzero(rng.random(n) < 0.5).tolist()
        switched = switch(inst.graph, u)
        moved = transport_lists(lists, u)
        c = five_list_color(pg, lists)
        assert validate_list_coloring(switched, moved, transport_coloring(c, u))[0]
        assert brute_force_l_coloring(inst.graph, lists).sat == brute_force_l_coloring(switched, moved).sat
        # tighter lists make the SAT comparison non-trivial
        tight = [set(rng.choice(np.arange(-2, 3), 2, replace=False).tolist()) for _ in range(n)]
        a = brute_force_l_coloring(inst.graph, tight).sat
        assert a == brute_force_l_coloring(switched, transport_lists(tight, u)).sat


def planted_negative_cycle(rng, n):
    g = switch(random_graph(rng, n, 0.25, q=0.0), np.flatnonzero(rng.random(n) < 0.5).tolist())
    k = int(rng.integers(3, n + 1))
    cyc = rng.permutation(n)[:k].tolist()
    labels = {v: 1 for v in range(n)}
    w = is_balanced(g)
    for v in w.balancing_set:
        labels[v] = -1
    edges = {frozenset((a, b)): s for a, b, s in g.edges()}
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        edges.setdefault(frozenset((a, b)), labels[a] * labels[b])
    a, b = cyc[0], cyc[1]
    edges[frozenset((a, b))] *= -1
    return SignedGraph(n, [(*sorted(e), s) for e, s in edges.items()]), cyc


@pytest.mark.criterion(BALANCE)
def test_balance_round_trip():
    rng = np.random.default_rng(23)
    for _ in range(200):
        n = int(rng.integers(2, 25))
        base = random_graph(rng, n, float(rng.uniform(0.05, 0.6)), q=0.0)
        u = np.flatnonzero(rng.random(n) < 0.5).tolist()
        w = is_balanced(switch(base, u))
        assert w.balanced and switch(switch(base, u), w.balancing_set).is_all_positive()
    for _ in range(200):
        g, planted = planted_negative_cycle(rng, int(rng.integers(3, 25)))
        assert walk_sign(g, planted + planted[:1]) == -1
        w = is_balanced(g)
        assert not w.balanced
        cyc = list(w.negative_cycle)
        assert len(set(cyc)) == len(cyc) >= 3
        assert walk_sign(g, cyc + cyc[:1]) == -1


@pytest.mark.criterion(OUTERPLANAR)
def test_outerplanar_sweep():
    rng = np.random.default_rng(53)
    for trial in range(200):
        n = int(rng.integers(3, 101))
        inst = gen_outerplanar(n, trial, 0.5)
        lists = gen_lists(inst, "uniform", 3, (-5, 5), trial)
        c = outerplanar_three_list_color(inst.plane(), lists)
        assert validate_list_coloring(inst.graph, lists, c)[0]


@pytest.mark.criterion(DEFECTIVE)
def test_defective_sweep():
    rng = np.random.default_rng(55)
    for trial in range(200):
        n = int(rng.integers(4, 201))
        inst = gen_stacked_triangulation(n, trial, NEG_PROBS[trial % 4])
        lists = gen_lists(inst, "uniform", 4, (-5, 5), trial)
        c = defective_four_list_color(inst.plane(), lists)
        _, report = validate_list_coloring(inst.graph, lists, c)
        assert not report.membership_failures and max_defect(report) <= 1


@pytest.mark.criterion(DEFECTIVE)
def test_validator_rejects_defect_two():
    path = SignedGraph(3, [(0, 1, 1), (1, 2, -1)])
    assert max_defect(validate_coloring(path, {0: 1, 1: 1, 2: -1})) == 2


@pytest.mark.criterion(SANDWICH)
def test_sandwich():
    rng = np.random.default_rng(57)
    for _ in range(100):
        n = int(rng.integers(2, 8))
        g = random_graph(rng, n, 0.5)
        lists = [set(rng.choice(np.arange(1, 6), 3, replace=False).tolist()) for _ in range(n)]
        witnesses = 0
        for c in iter_l_colorings(g.unsigned(), lists):
            witnesses += 1
            assert validate_coloring(g, c).ok
            if witnesses >= 200:
                break


@pytest.mark.criterion(RUNTIME)
def test_runtime_exponent():
    start = time.perf_counter()
    report = run_bench([100, 200, 400, 800, 1600, 3200], trials=5, seed=0)
    print(f"fitted exponent {report.fitted_exponent:.3f}")
    assert report.fitted_exponent <= 2.3
    assert time.perf_counter() - start < 300


@pytest.mark.criterion(UNSIGNED)
def test_unsigned_regression():
    for seed in range(200):
        inst = gen_stacked_triangulation(int(np.random.default_rng(seed).integers(3, 150)), seed, 0.0)
        lists = gen_lists(inst, "uniform", 5, (0, 9), seed)
        c = five_list_color(inst.plane(), lists)
        assert classical_proper(inst.edges, c)
        assert all(c[v] in lists[v] for v in range(inst.n))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
