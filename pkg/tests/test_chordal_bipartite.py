import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import graph, names, po
from helpers import cb_instance
from searchorder.chordal_bipartite import (
    LayerConflict,
    NotChordalBipartiteError,
    build_layer_relations,
    normalize_layer_constraints,
    solve_psop_lbfs_cb_rooted,
)
from searchorder.graph import bfs_layering
from searchorder.oracle import brute_force_psop
from searchorder.order import PartialOrder, is_linear_extension
from searchorder.search import check_lbfs_4point, is_search_ordering


def named_pairs(g, rel, i):
    return [(set(g.name_of(sorted(a))), set(g.name_of(sorted(b)))) for a, b in rel.pairs(i)]


def test_normalize_examples(c4):
    lay = bfs_layering(c4, c4.vid("v1"))
    assert len(normalize_layer_constraints(po(c4, "v1 v3"), lay)) == 0
    with pytest.raises(LayerConflict) as info:
        normalize_layer_constraints(po(c4, "v3 v2"), lay)
    assert c4.name_of(info.value.pair) == ("v3", "v2")
    kept = po(c4, "v2 v4")
    assert normalize_layer_constraints(kept, lay) == kept


def test_layer_relations_ladder(ladder):
    lay = bfs_layering(ladder, ladder.vid("r"))
    rel = build_layer_relations(ladder, lay, po(ladder, "w1 w2"))
    assert named_pairs(ladder, rel, 2) == [({"w1"}, {"w2"})]
    assert named_pairs(ladder, rel, 1) == [(set(), {"u2"})]
    rel = build_layer_relations(ladder, lay, po(ladder, "w2 w1"))
    assert named_pairs(ladder, rel, 1) == [({"u2"}, set())]


def test_layer_relations_c4(c4):
    lay = bfs_layering(c4, c4.vid("v1"))
    rel = build_layer_relations(c4, lay, po(c4, "v2 v4"))
    assert named_pairs(c4, rel, 1) == [({"v2"}, {"v4"})]
    assert rel.pairs(2) == []


def test_solver_examples(ladder, c4):
    r = ladder.vid("r")
    assert not solve_psop_lbfs_cb_rooted(ladder, r, po(ladder, "w1 w2"))
    assert not brute_force_psop(ladder, "lbfs", po(ladder, "w1 w2"), root=r)
    got = solve_psop_lbfs_cb_rooted(ladder, r, po(ladder, "w2 w1"))
    assert names(ladder, got.ordering) == "r u1 u2 w2 w1"
    got = solve_psop_lbfs_cb_rooted(c4, c4.vid("v1"), po(c4, "v4 v2"))
    assert names(c4, got.ordering) == "v1 v4 v2 v3"


def test_infeasible_reports_layer(ladder):
    res = solve_psop_lbfs_cb_rooted(ladder, 0, po(ladder, "w1 w2"))
    assert res.stats["layer"] == 1
    assert set(ladder.name_of(res.witness)) == {"u1", "u2"}


def test_cross_layer_conflict_is_infeasible(c4):
    res = solve_psop_lbfs_cb_rooted(c4, c4.vid("v1"), po(c4, "v3 v2"))
    assert not res and c4.name_of(res.witness) == ("v3", "v2")


def test_class_is_checked_unless_assumed():
    c6 = graph("ab bc cd de ef fa")
    with pytest.raises(NotChordalBipartiteError):
        solve_psop_lbfs_cb_rooted(c6, 0, PartialOrder.empty(6))
    with pytest.raises(NotChordalBipartiteError):
        solve_psop_lbfs_cb_rooted(c6, 0, PartialOrder.empty(6), size_cap=4)
    assert solve_psop_lbfs_cb_rooted(c6, 0, PartialOrder.empty(6), assume_class=True)


def layer_structure_violations(g, lay, rel):
    """Tuples breaking the inclusion structure of pushed-up pairs."""
    bad = []
    for i in range(1, lay.k + 1):
        above = lay.layer(i - 1)
        for a, b in rel.pairs(i):
            nb_a = set().union(*(g.adj[x] for x in a)) & above if a else set()
            if any(not nb_a <= g.adj[x] for x in a):
                bad.append((i, a, b))
            if b:
                nb_b = set().union(*(g.adj[y] for y in b)) & above
                if not any(nb_b <= g.adj[y] for y in b):
                    bad.append((i, a, b))
    return bad


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**7))
def test_pushed_pairs_keep_inclusion_structure(seed):
    g, pi, r, _ = cb_instance(random.Random(seed))
    lay = bfs_layering(g, r)
    try:
        same = normalize_layer_constraints(pi, lay)
    except LayerConflict:
        return
    rel = build_layer_relations(g, lay, same)
    assert layer_structure_violations(g, lay, rel) == []


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**7))
def test_solver_agrees_with_exhaustive_search(seed):
    g, pi, r, forced = cb_instance(random.Random(seed))
    got = solve_psop_lbfs_cb_rooted(g, r, pi)
    assert bool(got) == bool(brute_force_psop(g, "lbfs", pi, root=r))
    if forced:
        assert got
    if got:
        sigma = got.ordering
        assert sigma[0] == r
        assert is_search_ordering(g, "lbfs", sigma) and check_lbfs_4point(g, sigma)
        assert is_linear_extension(sigma, pi)
