"""Strict partial orders over ``0..n-1`` stored as their transitive closure."""

from __future__ import annotations

import heapq
from typing import Iterable, Sequence


class CycleError(ValueError):
    """The relation's closure is not antisymmetric. ``cycle`` lists one witness cycle."""

    def __init__(self, cycle: Sequence[int], message: str | None = None):
        self.cycle = tuple(cycle)
        super().__init__(message or f"relation contains a cycle through {list(self.cycle)}")


class PartialOrder:
    """A partial order kept as per-element successor/predecessor sets.

    Reflexive input pairs are accepted and discarded. ``input_size`` keeps the
    number of distinct pairs handed in (reflexive ones included) for reporting.
    """

    __slots__ = ("n", "succ", "pred", "input_size", "_covers")

    def __init__(self, n: int, succ: Sequence[frozenset[int]], input_size: int = 0):
        self.n = n
        self.succ = tuple(succ)
        pred: list[set[int]] = [set() for _ in range(n)]
        for x, ys in enumerate(self.succ):
            for y in ys:
                pred[y].add(x)
        self.pred = tuple(frozenset(p) for p in pred)
        self.input_size = input_size
        self._covers = None

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> PartialOrder:
        """Transitive closure of ``pairs``; raises :class:`CycleError` on a cycle."""
        direct: list[set[int]] = [set() for _ in range(n)]
        seen = set()
        for x, y in pairs:
            if not (0 <= x < n and 0 <= y < n):
                raise ValueError(f"pair ({x}, {y}) outside universe of size {n}")
            seen.add((x, y))
            if x != y:
                direct[x].add(y)
        topo = _topological(direct)
        if len(topo) < n:
            raise CycleError(_find_cycle(direct, set(range(n)) - set(topo)))
        succ: list[frozenset[int]] = [frozenset()] * n
        for x in reversed(topo):
            ds = direct[x]
            if not ds:
                continue
            acc = set(ds)
            for y in ds:
                acc |= succ[y]
            succ[x] = frozenset(acc)
        return cls(n, succ, len(seen))

    @classmethod
    def empty(cls, n: int) -> PartialOrder:
        return cls(n, [frozenset()] * n)

    def __len__(self) -> int:
        """Number of strict pairs."""
        return sum(len(s) for s in self.succ)

    def __eq__(self, other) -> bool:
        return isinstance(other, PartialOrder) and self.n == other.n and self.succ == other.succ

    def __hash__(self):
        return hash((self.n, self.succ))

    def __repr__(self) -> str:
        return f"PartialOrder(n={self.n}, pairs={len(self)})"

    def less(self, x: int, y: int) -> bool:
        return y in self.succ[x]

    def pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.n) for y in sorted(self.succ[x])]

    def is_minimal(self, x: int) -> bool:
        return not self.pred[x]

    def minimal_elements(self) -> list[int]:
        return [x for x in range(self.n) if not self.pred[x]]

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges."""
        if self._covers is None:
            out = []
            for x in range(self.n):
                for y in self.succ[x]:
                    if not any(y in self.succ[z] for z in self.succ[x]):
                        out.append((x, y))
            self._covers = sorted(out)
        return self._covers

    def with_minimum(self, r: int) -> PartialOrder:
        """Add ``r < v`` for every other ``v`` (rooted problem as unrooted)."""
        return PartialOrder.from_pairs(self.n, self.pairs() + [(r, v) for v in range(self.n) if v != r])

    def union(self, pairs: Iterable[tuple[int, int]]) -> PartialOrder:
        return PartialOrder.from_pairs(self.n, self.pairs() + list(pairs))

    def linear_extension(self, priority=None) -> list[int]:
        """Topological order; ties go to the smallest ``priority(v)`` (default: id)."""
        key = priority or (lambda v: v)
        indeg = [len(p) for p in self.pred]
        heap = [(key(v), v) for v in range(self.n) if indeg[v] == 0]
        heapq.heapify(heap)
        out = []
        while heap:
            _, v = heapq.heappop(heap)
            out.append(v)
            for w in self.succ[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    heapq.heappush(heap, (key(w), w))
        return out


def build_partial_order(n: int, pairs: Iterable[tuple[int, int]]) -> PartialOrder:
    return PartialOrder.from_pairs(n, pairs)


def positions(sigma: Sequence[int]) -> list[int]:
    pos = [-1] * len(sigma)
    for i, v in enumerate(sigma):
        pos[v] = i
    return pos


def check_permutation(sigma: Sequence[int], n: int) -> None:
    if len(sigma) != n or sorted(sigma) != list(range(n)):
        raise ValueError(f"ordering is not a permutation of {n} vertices")


def is_linear_extension(sigma: Sequence[int], pi: PartialOrder) -> bool:
    check_permutation(sigma, pi.n)
    pos = positions(sigma)
    return all(pos[x] < pos[y] for x in range(pi.n) for y in pi.succ[x])


def _topological(direct: Sequence[set[int]]) -> list[int]:
    n = len(direct)
    indeg = [0] * n
    for ys in direct:
        for y in ys:
            indeg[y] += 1
    stack = [v for v in range(n) if indeg[v] == 0]
    out = []
    while stack:
        v = stack.pop()
        out.append(v)
        for w in direct[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return out


def _find_cycle(direct: Sequence[set[int]], stuck: set[int]) -> list[int]:
    # every stuck vertex has a stuck predecessor; walk backwards until a repeat
    pred = {v: None for v in stuck}
    for x in stuck:
        for y in direct[x]:
            if y in stuck and pred[y] is None:
                pred[y] = x
    v = min(stuck)
    seen: dict[int, int] = {}
    walk = []
    while v not in seen:
        seen[v] = len(walk)
        walk.append(v)
        v = pred[v]
    cycle = walk[seen[v]:]
    cycle.reverse()
    return cycle
