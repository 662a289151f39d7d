"""Seeded random instances: connected graphs, split graphs, chordal bipartite graphs, orders."""

from __future__ import annotations

import random
import string
from typing import Sequence

from .graph import ClassCheck, Graph, check_chordal_bipartite, find_split_partition, is_connected
from .order import PartialOrder
from .search import LabelState, Search


def vertex_names(n: int) -> list[str]:
    if n <= 26:
        return list(string.ascii_lowercase[:n])
    return [f"v{i}" for i in range(1, n + 1)]


def _graph(n: int, edges) -> Graph:
    names = vertex_names(n)
    return Graph.from_edges(((names[u], names[v]) for u, v in edges), vertices=names)


def _random_tree_edges(n: int, rng: random.Random) -> set[tuple[int, int]]:
    return {tuple(sorted((v, rng.randrange(v)))) for v in range(1, n)}


def random_connected_graph(n: int, rng: random.Random, p: float | None = None) -> Graph:
    """Random spanning tree plus each remaining pair with probability ``p``."""
    p = rng.uniform(0.0, 0.6) if p is None else p
    edges = _random_tree_edges(n, rng)
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < p:
                edges.add((u, v))
    perm = list(range(n))
    rng.shuffle(perm)
    return _graph(n, [(perm[u], perm[v]) for u, v in edges])


def random_split_graph(n: int, rng: random.Random, clique_size: int | None = None) -> Graph:
    """Clique plus independent vertices with random non-empty clique neighbourhoods."""
    if n == 1:
        return _graph(1, [])
    k = clique_size if clique_size is not None else rng.randint(1, n - 1)
    k = max(1, min(k, n))
    clique, indep = list(range(k)), list(range(k, n))
    edges = [(u, v) for u in clique for v in clique if u < v]
    for x in indep:
        size = rng.randint(1, k)
        edges.extend((c, x) for c in rng.sample(clique, size))
    perm = list(range(n))
    rng.shuffle(perm)
    g = _graph(n, [(perm[u], perm[v]) for u, v in edges])
    assert is_connected(g) and find_split_partition(g) is not None
    return g


def random_chordal_bipartite_graph(n: int, rng: random.Random, extra: int | None = None) -> Graph:
    """Random tree, then random cross edges kept only while the class check passes."""
    parent = [None] + [rng.randrange(v) for v in range(1, n)]
    edges = {(parent[v], v) for v in range(1, n)}
    side = [0] * n
    for v in range(1, n):
        side[v] = 1 - side[parent[v]]
    cross = [(u, v) for u in range(n) for v in range(u + 1, n) if side[u] != side[v] and (u, v) not in edges]
    rng.shuffle(cross)
    budget = rng.randint(0, len(cross)) if extra is None else min(extra, len(cross))
    for e in cross[:budget]:
        trial = _graph(n, edges | {e})
        if check_chordal_bipartite(trial, size_cap=max(n, 16)) is ClassCheck.YES:
            edges.add(e)
    perm = list(range(n))
    rng.shuffle(perm)
    return _graph(n, [(perm[u], perm[v]) for u, v in edges])


def random_search_ordering(g: Graph, kind: Search | str, rng: random.Random, root: int | None = None) -> tuple[int, ...]:
    """An ordering of ``kind`` taking a uniformly random eligible vertex each step."""
    state = LabelState(g, Search.parse(kind))
    out = []
    for i in range(g.n):
        choices = [root] if i == 0 and root is not None else state.eligible()
        v = rng.choice(choices)
        state.visit(v)
        out.append(v)
    return tuple(out)


def random_partial_order(n: int, pairs: int, rng: random.Random) -> PartialOrder:
    """Closure of ``pairs`` random pairs oriented along a hidden random permutation."""
    perm = list(range(n))
    rng.shuffle(perm)
    return order_from_ordering(perm, pairs, rng)


def order_from_ordering(sigma: Sequence[int], pairs: int, rng: random.Random) -> PartialOrder:
    """Closure of random pairs ``(sigma[i], sigma[j])`` with ``i < j``; ``sigma`` extends it."""
    n = len(sigma)
    out = []
    if n >= 2:
        for _ in range(pairs):
            i, j = sorted(rng.sample(range(n), 2))
            out.append((sigma[i], sigma[j]))
    return PartialOrder.from_pairs(n, out)
