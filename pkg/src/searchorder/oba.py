"""One-Before-All orderings.

An instance is a ground set ``M``, a family of subsets of ``M`` and a
relation on that family. An ordering of ``M`` is valid when for every related
pair ``(A, B)`` with ``B`` non-empty some element of ``A`` comes before every
element of ``B``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from .order import PartialOrder


@dataclass
class ObaInstance:
    """Family members keep their own identity, so a set added twice counts twice."""

    ground: tuple
    family: list[frozenset] = field(default_factory=list)
    relation: list[tuple[int, int]] = field(default_factory=list)

    def __post_init__(self):
        self.ground = tuple(self.ground)
        if len(set(self.ground)) != len(self.ground):
            raise ValueError("ground set has repeated elements")
        members = set(self.ground)
        for s in self.family:
            if not s <= members:
                raise ValueError(f"family member {set(s)} not inside the ground set")
        for a, b in self.relation:
            if not (0 <= a < len(self.family) and 0 <= b < len(self.family)):
                raise ValueError(f"relation refers to unknown family member ({a}, {b})")

    def add_set(self, s: Iterable[Hashable]) -> int:
        s = frozenset(s)
        if not s <= set(self.ground):
            raise ValueError(f"{set(s)} not inside the ground set")
        self.family.append(s)
        return len(self.family) - 1

    def add_pair(self, a: Iterable[Hashable], b: Iterable[Hashable]) -> None:
        """Relate two fresh family members holding ``a`` and ``b``."""
        self.relation.append((self.add_set(a), self.add_set(b)))

    @classmethod
    def from_pairs(cls, ground: Iterable[Hashable], pairs: Iterable[tuple[Iterable, Iterable]]) -> ObaInstance:
        inst = cls(tuple(ground))
        for a, b in pairs:
            inst.add_pair(a, b)
        return inst

    def set_pairs(self) -> list[tuple[frozenset, frozenset]]:
        return [(self.family[a], self.family[b]) for a, b in self.relation]


def solve_oba(inst: ObaInstance, stats: dict | None = None) -> tuple | None:
    """A One-Before-All ordering of the ground set, or ``None`` if there is none.

    Counter scheme: ``waiting[B]`` counts unresolved pairs ``(A, B)``;
    ``blocked[x]`` counts members with a positive count that contain ``x``.
    An element may be placed once ``blocked[x]`` drops to zero. Ties go to the
    element earliest in ``inst.ground``.
    """
    ground = inst.ground
    rank = {x: i for i, x in enumerate(ground)}
    nq = len(inst.family)
    members = [[rank[x] for x in s] for s in inst.family]

    waiting = [0] * nq
    out_pairs: list[list[int]] = [[] for _ in range(nq)]
    for a, b in inst.relation:
        waiting[b] += 1
        out_pairs[a].append(b)
    containing: list[list[int]] = [[] for _ in ground]
    for q, elems in enumerate(members):
        for x in elems:
            containing[x].append(q)
    blocked = [0] * len(ground)
    for q in range(nq):
        if waiting[q] > 0:
            for x in members[q]:
                blocked[x] += 1

    ready = [x for x in range(len(ground)) if blocked[x] == 0]
    heapq.heapify(ready)
    retired = [False] * nq
    sigma = []
    touched = 0
    while ready:
        x = heapq.heappop(ready)
        sigma.append(x)
        for q in containing[x]:
            if retired[q]:
                continue
            retired[q] = True
            for b in out_pairs[q]:
                touched += 1
                waiting[b] -= 1
                if waiting[b] == 0:
                    for y in members[b]:
                        blocked[y] -= 1
                        if blocked[y] == 0:
                            heapq.heappush(ready, y)
    if stats is not None:
        stats["pairs_resolved"] = touched
    if len(sigma) < len(ground):
        return None
    return tuple(ground[x] for x in sigma)


def check_oba(sigma: Sequence[Hashable], inst: ObaInstance) -> bool:
    if sorted(map(repr, sigma)) != sorted(map(repr, inst.ground)) or len(set(sigma)) != len(sigma):
        raise ValueError("ordering is not a permutation of the ground set")
    pos = {x: i for i, x in enumerate(sigma)}
    for a, b in inst.set_pairs():
        if not b:
            continue
        if not a or min(pos[x] for x in a) >= min(pos[y] for y in b):
            return False
    return True


def encode_partial_order_as_oba(pi: PartialOrder) -> ObaInstance:
    return ObaInstance.from_pairs(range(pi.n), (({x}, {y}) for x, y in pi.pairs()))
