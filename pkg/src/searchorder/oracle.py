"""Exhaustive deciders used as ground truth on small instances.

Eligibility here is computed from visited-neighbour positions through per-search
sort keys, independently of the label comparator in :mod:`searchorder.search`.
"""

from __future__ import annotations

import itertools
import os

from .graph import Graph
from .oba import ObaInstance, check_oba
from .order import PartialOrder, is_linear_extension
from .search import Search, SearchResult, is_search_ordering

PSOP_SIZE_CAP = 10
OBA_SIZE_CAP = 8
ENV_SIZE_CAP = "SEARCH_ORDER_SIZE_CAP"


class OracleSizeError(ValueError):
    pass


def size_cap(default: int) -> int:
    value = os.environ.get(ENV_SIZE_CAP)
    return int(value) if value else default


def _eligible(kind: Search, g: Graph, seen: list[list[int]], free: list[int], first: bool) -> list[int]:
    """``seen[v]``: ascending 1-based positions of v's visited neighbours."""
    if first:
        return free
    if kind is Search.GS:
        out = [v for v in free if seen[v]]
        return out or free
    if kind is Search.MNS:
        sets = {v: set(seen[v]) for v in free}
        return [v for v in free if not any(sets[v] < sets[w] for w in free)]
    if kind is Search.MCS:
        key = {v: len(seen[v]) for v in free}
    elif kind is Search.BFS:
        key = {v: -seen[v][0] if seen[v] else float("-inf") for v in free}
    elif kind is Search.LBFS:
        # earlier positions weigh more; a proper prefix ranks lower
        key = {v: tuple(-i for i in seen[v]) for v in free}
    else:
        raise ValueError(kind)
    best = max(key.values())
    return [v for v in free if key[v] == best]


def brute_force_psop(
    g: Graph,
    kind: Search | str,
    pi: PartialOrder,
    root: int | None = None,
    cap: int | None = None,
) -> SearchResult:
    """Lexicographically first ordering of ``kind`` extending ``pi``, by exhaustive search."""
    kind = Search.parse(kind)
    limit = cap if cap is not None else size_cap(PSOP_SIZE_CAP)
    n = g.n
    if n > limit:
        raise OracleSizeError(f"{n} vertices exceeds the oracle cap of {limit}")
    if root is not None and pi.pred[root]:
        return SearchResult.infeasible("root is not minimal in the partial order", (root,))

    seen: list[list[int]] = [[] for _ in range(n)]
    missing = [len(p) for p in pi.pred]
    done = [False] * n
    prefix: list[int] = []
    dead: set = set()
    state_by_set = kind in (Search.GS, Search.MCS, Search.MNS)
    counter = {"nodes": 0}

    def state_key():
        mask = sum(1 << v for v in prefix)
        if state_by_set:
            return mask
        return mask, tuple(tuple(seen[v]) for v in range(n) if not done[v])

    def expand() -> bool:
        counter["nodes"] += 1
        if len(prefix) == n:
            return True
        key = state_key()
        if key in dead:
            return False
        free = [v for v in range(n) if not done[v]]
        choices = _eligible(kind, g, seen, free, not prefix)
        if not prefix and root is not None:
            choices = [root] if root in choices else []
        for v in choices:
            if missing[v]:
                continue
            step = len(prefix) + 1
            done[v] = True
            prefix.append(v)
            for w in g.adj[v]:
                if not done[w]:
                    seen[w].append(step)
            for w in pi.succ[v]:
                missing[w] -= 1
            if expand():
                return True
            for w in pi.succ[v]:
                missing[w] += 1
            for w in g.adj[v]:
                if not done[w]:
                    seen[w].pop()
            prefix.pop()
            done[v] = False
        dead.add(key)
        return False

    if n and expand():
        return SearchResult(tuple(prefix), stats={"nodes": counter["nodes"]})
    return SearchResult.infeasible("no ordering extends the partial order", nodes=counter["nodes"])


def brute_force_oba(inst: ObaInstance, cap: int | None = None) -> tuple | None:
    limit = cap if cap is not None else size_cap(OBA_SIZE_CAP)
    if len(inst.ground) > limit:
        raise OracleSizeError(f"{len(inst.ground)} elements exceeds the oracle cap of {limit}")
    for perm in itertools.permutations(inst.ground):
        if check_oba(perm, inst):
            return perm
    return None


def all_orderings_extending(g: Graph, kind: Search | str, pi: PartialOrder) -> list[tuple[int, ...]]:
    """Every ordering of ``kind`` that extends ``pi`` (filtered permutations; tiny graphs only)."""
    return [
        p
        for p in itertools.permutations(range(g.n))
        if is_linear_extension(p, pi) and is_search_ordering(g, kind, p)
    ]
