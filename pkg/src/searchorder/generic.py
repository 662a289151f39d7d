"""Rooted partial search order problem for Generic Search, and the try-all-roots wrapper."""

from __future__ import annotations

import heapq
from typing import Callable

from .graph import Graph
from .order import PartialOrder
from .search import SearchResult

RootedSolver = Callable[[Graph, int, PartialOrder], SearchResult]


def solve_psop_gs_rooted(g: Graph, r: int, pi: PartialOrder) -> SearchResult:
    """Greedy: repeatedly visit the smallest vertex that has a visited neighbour
    and no unvisited predecessor in ``pi``.

    Each adjacency list and each successor set of ``pi`` is scanned once;
    ``stats`` reports both counts.
    """
    n = g.n
    if pi.n != n:
        raise ValueError("partial order and graph differ in size")
    if pi.pred[r]:
        return SearchResult.infeasible("root is not minimal in the partial order", (r, min(pi.pred[r])))

    indeg = [len(p) for p in pi.pred]
    marked = [False] * n
    queued = [False] * n
    adjacency_scans = successor_scans = 0
    frontier = [r]
    queued[r] = marked[r] = True
    sigma = []
    adj, succ = g.adj, pi.succ
    while frontier:
        v = heapq.heappop(frontier)
        sigma.append(v)
        adjacency_scans += 1
        for w in adj[v]:
            if not marked[w]:
                marked[w] = True
                if indeg[w] == 0 and not queued[w]:
                    queued[w] = True
                    heapq.heappush(frontier, w)
        successor_scans += 1
        for y in succ[v]:
            indeg[y] -= 1
            if indeg[y] == 0 and marked[y] and not queued[y]:
                queued[y] = True
                heapq.heappush(frontier, y)

    stats = {"adjacency_scans": adjacency_scans, "successor_scans": successor_scans}
    if len(sigma) < n:
        stuck = next(v for v in range(n) if not queued[v])
        return SearchResult(None, "partial order cannot be linearized", (stuck,), stats)
    return SearchResult(tuple(sigma), stats=stats)


def solve_psop_unrooted(g: Graph, pi: PartialOrder, rooted_solver: RootedSolver) -> SearchResult:
    """Try every minimal element of ``pi`` as the start vertex, smallest id first."""
    tried = 0
    last = None
    for r in range(g.n):
        if pi.pred[r]:
            continue
        tried += 1
        last = rooted_solver(g, r, pi)
        if last:
            last.stats.setdefault("roots_tried", tried)
            return last
    return SearchResult.infeasible(
        "no start vertex admits an extension" if tried else "partial order has no minimal element",
        roots_tried=tried,
    )
