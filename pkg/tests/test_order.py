import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import po
from searchorder.order import CycleError, PartialOrder, build_partial_order, is_linear_extension


def pairs_strategy(max_n=7):
    return st.integers(1, max_n).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=10),
        )
    )


def acyclic(n, pairs, seed):
    perm = list(range(n))
    random.Random(seed).shuffle(perm)
    rank = {v: i for i, v in enumerate(perm)}
    return [(x, y) if rank[x] <= rank[y] else (y, x) for x, y in pairs]


def reachability(n, pairs):
    reach = [[False] * n for _ in range(n)]
    for x, y in pairs:
        if x != y:
            reach[x][y] = True
    for k in range(n):
        for i in range(n):
            if reach[i][k]:
                for j in range(n):
                    reach[i][j] |= reach[k][j]
    return {(i, j) for i in range(n) for j in range(n) if reach[i][j]}


def test_split7_order_is_already_closed(split7, split7_order):
    assert {split7.name_of(p) for p in split7_order.pairs()} == {("f", "e"), ("g", "d")}
    assert len(split7_order) == 2


def test_two_cycle_is_rejected():
    with pytest.raises(CycleError) as info:
        build_partial_order(2, [(0, 1), (1, 0)])
    assert set(info.value.cycle) == {0, 1}


def test_closure_adds_transitive_pair():
    pi = build_partial_order(3, [(0, 1), (1, 2)])
    assert pi.pairs() == [(0, 1), (0, 2), (1, 2)]


def test_reflexive_pairs_discarded_but_counted():
    pi = PartialOrder.from_pairs(2, [(0, 0), (0, 1)])
    assert pi.pairs() == [(0, 1)] and pi.input_size == 2


def test_out_of_range_pair():
    with pytest.raises(ValueError):
        PartialOrder.from_pairs(2, [(0, 5)])


def test_linear_extension_examples(split7, split7_order):
    assert is_linear_extension(split7.vids("f a b c e g d"), split7_order)
    assert not is_linear_extension(split7.vids("e f a b c g d"), split7_order)
    for sigma in itertools.permutations(range(4)):
        assert is_linear_extension(sigma, PartialOrder.empty(4))


def test_linear_extension_rejects_non_permutation():
    with pytest.raises(ValueError):
        is_linear_extension((0, 0, 1), PartialOrder.empty(3))


def test_with_minimum_and_covers():
    pi = build_partial_order(4, [(1, 2), (2, 3)])
    assert pi.covers() == [(1, 2), (2, 3)]
    rooted = pi.with_minimum(0)
    assert rooted.minimal_elements() == [0] and rooted.less(0, 3)


@settings(max_examples=200, deadline=None)
@given(pairs_strategy(), st.integers(0, 10**6))
def test_closure_matches_warshall(data, seed):
    n, raw = data
    pairs = acyclic(n, raw, seed)
    pi = PartialOrder.from_pairs(n, pairs)
    assert set(pi.pairs()) == reachability(n, pairs)
    assert PartialOrder.from_pairs(n, pi.pairs()) == pi


@settings(max_examples=200, deadline=None)
@given(pairs_strategy(5))
def test_cycle_error_iff_closure_not_antisymmetric(data):
    n, pairs = data
    closure = reachability(n, pairs)
    cyclic = any((y, x) in closure for x, y in closure) or any(x == y for x, y in closure)
    if cyclic:
        with pytest.raises(CycleError) as info:
            PartialOrder.from_pairs(n, pairs)
        cyc = info.value.cycle
        assert all((cyc[i], cyc[(i + 1) % len(cyc)]) in set(pairs) for i in range(len(cyc)))
    else:
        PartialOrder.from_pairs(n, pairs)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6), st.integers(0, 10**6))
def test_every_topological_order_is_a_linear_extension(n, seed):
    rng = random.Random(seed)
    pairs = acyclic(n, [(rng.randrange(n), rng.randrange(n)) for _ in range(rng.randint(0, 6))], seed)
    pi = PartialOrder.from_pairs(n, pairs)
    for sigma in itertools.permutations(range(n)):
        topo = all(sigma.index(x) < sigma.index(y) for x, y in pairs if x != y)
        assert is_linear_extension(sigma, pi) == topo
    weights = [rng.random() for _ in range(n)]
    assert is_linear_extension(pi.linear_extension(priority=weights.__getitem__), pi)


def test_po_helper_builds_named_pairs(p3):
    pi = po(p3, "c b")
    assert pi.pairs() == [(2, 1)]
