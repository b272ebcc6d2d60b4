import hypothesis.strategies as st
from hypothesis import given, settings

from helpers import classical_proper
from signedcolor import (
    SignedGraph,
    brute_force_l_coloring,
    cycle_sign,
    five_list_color,
    is_balanced,
    max_defect,
    outerplanar_three_list_color,
    switch,
    transport_coloring,
    transport_lists,
    validate_coloring,
    validate_list_coloring,
)
from signedcolor.generators import gen_outerplanar, gen_stacked_triangulation


@st.composite
def signed_graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    signs = draw(st.lists(st.sampled_from([1, -1]), min_size=len(chosen), max_size=len(chosen)))
    return SignedGraph(n, [(u, v, s) for (u, v), s in zip(chosen, signs)])


def colorings(n, lo=-3, hi=3):
    return st.lists(st.integers(lo, hi), min_size=n, max_size=n).map(lambda xs: dict(enumerate(xs)))


def subsets(n):
    return st.sets(st.integers(0, n - 1)) if n else st.just(set())


@given(signed_graphs(), st.data())
def test_violation_symmetry_and_defect(g, data):
    c = data.draw(colorings(g.vertex_count))
    r = validate_coloring(g, c)
    for u, v, s in g.edges():
        assert ((c[u] == s * c[v]) == (c[v] == s * c[u])) and ((u, v, s) in r.violating_edges) == (c[u] == s * c[v])
    counts = {}
    for u, v, _ in r.violating_edges:
        counts[u] = counts.get(u, 0) + 1
        counts[v] = counts.get(v, 0) + 1
    assert dict(r.per_vertex_defect) == counts
    assert (max_defect(r) == 0) == r.ok


@given(signed_graphs(), st.data())
def test_positive_graphs_match_classical_check(g, data):
    c = data.draw(colorings(g.vertex_count))
    assert validate_coloring(g.unsigned(), c).ok == classical_proper(g.edges(), c)


@given(signed_graphs(), st.data())
def test_switch_is_an_involution_that_composes(g, data):
    u = data.draw(subsets(g.vertex_count))
    w = data.draw(subsets(g.vertex_count))
    assert switch(switch(g, u), u) == g
    assert switch(switch(g, u), w) == switch(g, u ^ w)


@given(signed_graphs(), st.data())
def test_transport_preserves_propriety(g, data):
    n = g.vertex_count
    u = data.draw(subsets(n))
    c = data.draw(colorings(n))
    lists = [{c[v], c[v] + 1} for v in range(n)]
    before = validate_list_coloring(g, lists, c)[0]
    after = validate_list_coloring(switch(g, u), transport_lists(lists, u), transport_coloring(c, u))[0]
    assert before == after


@given(signed_graphs())
def test_balance_witness(g):
    w = is_balanced(g)
    if w.balanced:
        assert switch(g, w.balancing_set).is_all_positive()
    else:
        assert len(set(w.negative_cycle)) == len(w.negative_cycle) >= 3
        assert cycle_sign(g, w.negative_cycle) == -1


@settings(max_examples=40, deadline=None)
@given(signed_graphs(max_n=6), st.data())
def test_oracle_sat_invariant_under_switching(g, data):
    n = g.vertex_count
    u = data.draw(subsets(n))
    lists = data.draw(st.lists(st.sets(st.integers(-2, 2), min_size=1, max_size=3), min_size=n, max_size=n))
    a = brute_force_l_coloring(g, lists)
    b = brute_force_l_coloring(switch(g, u), transport_lists(lists, u))
    assert a.sat == b.sat
    if a.sat:
        assert validate_list_coloring(g, lists, a.witness)[0]


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 60), st.integers(0, 10**6), st.floats(0, 1), st.data())
def test_five_list_color_sound(n, seed, q, data):
    inst = gen_stacked_triangulation(n, seed, q)
    lists = data.draw(st.lists(st.sets(st.integers(-6, 6), min_size=5, max_size=6), min_size=n, max_size=n))
    c = five_list_color(inst.plane(), lists)
    assert validate_list_coloring(inst.graph, lists, c)[0]


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 40), st.integers(0, 10**6), st.floats(0, 1), st.data())
def test_outerplanar_sound(n, seed, q, data):
    inst = gen_outerplanar(n, seed, q)
    lists = data.draw(st.lists(st.sets(st.integers(-3, 3), min_size=3, max_size=4), min_size=n, max_size=n))
    c = outerplanar_three_list_color(inst.plane(), lists)
    assert validate_list_coloring(inst.graph, lists, c)[0]
