"""Instance samplers and invariant checkers shared by the unit and acceptance tests."""

import itertools
import random

from searchorder.generators import (
    order_from_ordering,
    random_chordal_bipartite_graph,
    random_connected_graph,
    random_partial_order,
    random_search_ordering,
    random_split_graph,
)
from searchorder.generic import solve_psop_unrooted
from searchorder.graph import bfs_layering, find_split_partition
from searchorder.oracle import brute_force_psop
from searchorder.oba import ObaInstance
from searchorder.order import CycleError, PartialOrder
from searchorder.reductions import (
    RootedTree,
    end_vertex_order,
    extract_f_tree,
    extract_l_tree,
    f_tree_to_psop,
    l_tree_to_psop_bipartite,
)
from searchorder.search import enumerate_search_orderings

# filled by the acceptance tests, printed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def gs_instance(rng: random.Random):
    n = rng.randint(1, 7)
    g = random_connected_graph(n, rng)
    if rng.random() < 0.5:
        pi = random_partial_order(n, rng.randint(0, 4), rng)
    else:
        pi = order_from_ordering(random_search_ordering(g, "gs", rng), rng.randint(0, 6), rng)
    return g, pi, rng.choice(pi.minimal_elements())


def oba_instance(rng: random.Random) -> ObaInstance:
    m = rng.randint(1, 7)
    ground = list(range(m))
    inst = ObaInstance(tuple(ground))
    for _ in range(rng.randint(0, 4)):
        inst.add_pair(
            rng.sample(ground, rng.randint(0, min(3, m))),
            rng.sample(ground, rng.randint(0, min(3, m))),
        )
    return inst


def cb_instance(rng: random.Random):
    """Returns ``(g, pi, root, forced)``; forced instances come from a real LBFS ordering."""
    n = rng.randint(2, 10)
    g = random_chordal_bipartite_graph(n, rng)
    r = rng.randrange(n)
    forced = rng.random() < 0.5
    if forced:
        pi = order_from_ordering(random_search_ordering(g, "lbfs", rng, root=r), rng.randint(0, 8), rng)
    else:
        pi = random_partial_order(n, rng.randint(0, 3), rng)
        if pi.pred[r]:
            r = rng.choice(pi.minimal_elements())
    return g, pi, r, forced


def independent_biased_order(g, rng: random.Random, k: int) -> PartialOrder:
    """Random pairs, most starting at an independent vertex, oriented along a hidden permutation."""
    sp = find_split_partition(g)
    ind, cli = sorted(sp.independent), sorted(sp.clique)
    perm = list(range(g.n))
    rng.shuffle(perm)
    rank = {v: i for i, v in enumerate(perm)}
    pairs = []
    for _ in range(k):
        if ind and rng.random() < 0.7:
            x, y = rng.choice(ind), rng.choice(cli + ind)
        else:
            x, y = rng.sample(range(g.n), 2)
        if x != y:
            pairs.append((x, y) if rank[x] < rank[y] else (y, x))
    return PartialOrder.from_pairs(g.n, pairs)


def split_instance(rng: random.Random, mode: str):
    """Returns ``(g, pi, forced)`` on a split graph with at most 9 vertices."""
    n = rng.randint(2, 9)
    g = random_split_graph(n, rng)
    roll = rng.random()
    forced = roll < 0.4
    if forced:
        pi = order_from_ordering(random_search_ordering(g, mode, rng), rng.randint(0, 10), rng)
    elif roll < 0.7:
        pi = independent_biased_order(g, rng, rng.randint(1, 5))
    else:
        pi = random_partial_order(n, rng.randint(0, 4), rng)
    return g, pi, forced


def neighbourhoods_comparable_below(g, r):
    """Comparability of previous-layer neighbourhoods for same-layer vertices with a common child."""
    lay = bfs_layering(g, r)
    for i in range(1, lay.k):
        below, above = lay.layer(i + 1), lay.layer(i - 1)
        for x, y in itertools.combinations(sorted(lay.layer(i)), 2):
            if not (g.adj[x] & g.adj[y] & below):
                continue
            nx, ny = g.adj[x] & above, g.adj[y] & above
            if not (nx <= g.adj[y] or ny <= g.adj[x]):
                return False
    return True


def separating_witness_violations(g, sigma, rho):
    ps = {v: i for i, v in enumerate(sigma)}
    pr = {v: i for i, v in enumerate(rho)}
    bad = []
    for u, v in itertools.permutations(range(g.n), 2):
        if ps[u] < ps[v] and pr[v] < pr[u]:
            if not any(ps[x] < ps[u] and x in g.adj[u] and x not in g.adj[v] for x in range(g.n)):
                bad.append((u, v))
    return bad


def premature_structure_violations(g, sp, sigma):
    pos = {v: i for i, v in enumerate(sigma)}
    bad = []
    for x in sp.independent:
        if not any(pos[c] > pos[x] for c in sp.clique):
            continue
        if any(pos[c] < pos[x] and c not in g.adj[x] for c in sp.clique):
            bad.append((x, "earlier clique vertex not adjacent"))
        last_nb = max((pos[w] for w in g.adj[x]), default=-1)
        for y in range(g.n):
            if y != x and y not in g.adj[x] and pos[x] < pos[y] < last_nb:
                bad.append((x, y))
    return bad


def random_spanning_tree(g, rng, root):
    edges = list(g.edges())
    rng.shuffle(edges)
    comp = list(range(g.n))

    def find(v):
        while comp[v] != v:
            comp[v] = comp[comp[v]]
            v = comp[v]
        return v

    adj = {v: [] for v in range(g.n)}
    for u, v in edges:
        if find(u) != find(v):
            comp[find(u)] = find(v)
            adj[u].append(v)
            adj[v].append(u)
    parent, stack = {}, [root]
    seen = {root}
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                parent[w] = u
                stack.append(w)
    return RootedTree.from_parents(root, parent, g.n)


def f_tree_agrees(g, kind, t):
    expected = any(extract_f_tree(g, s) == t for s in enumerate_search_orderings(g, kind, root=t.root))
    try:
        pi = f_tree_to_psop(g, t)
    except CycleError:
        return not expected
    return bool(brute_force_psop(g, kind, pi, root=t.root)) == expected


def l_tree_agrees(g, kind, t):
    expected = any(extract_l_tree(g, s) == t for s in enumerate_search_orderings(g, kind, root=t.root))
    try:
        pi = l_tree_to_psop_bipartite(g, t)
    except CycleError:
        return not expected
    return bool(brute_force_psop(g, kind, pi, root=t.root)) == expected


def sample_tree(g, kind, rng, extract):
    r = rng.randrange(g.n)
    if rng.random() < 0.5:
        return extract(g, random_search_ordering(g, kind, rng, root=r))
    return random_spanning_tree(g, rng, r)


def end_vertex_agrees(g, kind, rooted_solver, t):
    expected = any(s[-1] == t for s in enumerate_search_orderings(g, kind))
    return bool(solve_psop_unrooted(g, end_vertex_order(g, t), rooted_solver)) == expected
