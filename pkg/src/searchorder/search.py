"""Label Search framework: label orders, tie-broken runs, checks and enumeration.

Labels are sets of 1-based visit indices. A search is fixed by a strict
partial order on labels; at every step any unnumbered vertex whose label is
not below another unnumbered vertex's label may be taken.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Collection, Iterator, Sequence

from .graph import Graph
from .order import check_permutation, positions


class Search(enum.Enum):
    GS = "gs"
    BFS = "bfs"
    LBFS = "lbfs"
    MCS = "mcs"
    MNS = "mns"

    @classmethod
    def parse(cls, value: "str | Search") -> "Search":
        if isinstance(value, cls):
            return value
        return cls(str(value).lower())


class Relation(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


def label_less(kind: Search, a: Collection[int], b: Collection[int]) -> bool:
    """``a`` strictly below ``b`` under the label order of ``kind``."""
    if kind is Search.GS:
        return not a and bool(b)
    if kind is Search.BFS:
        if not b:
            return False
        return not a or min(a) > min(b)
    if kind is Search.LBFS:
        sa, sb = set(a), set(b)
        if sa == sb:
            return False
        only_a, only_b = sa - sb, sb - sa
        return not only_a or (bool(only_b) and min(only_a) > min(only_b))
    if kind is Search.MCS:
        return len(a) < len(b)
    if kind is Search.MNS:
        sa = set(a)
        return len(sa) < len(b) and sa < set(b)
    raise ValueError(kind)


def compare_labels(kind: Search | str, a: Collection[int], b: Collection[int]) -> Relation:
    kind = Search.parse(kind)
    if label_less(kind, a, b):
        return Relation.LESS
    if label_less(kind, b, a):
        return Relation.GREATER
    return Relation.INCOMPARABLE


@dataclass
class SearchResult:
    """Outcome of a solver: an ordering, or ``None`` plus the reason it failed."""

    ordering: tuple[int, ...] | None
    reason: str = ""
    witness: tuple = ()
    stats: dict = field(default_factory=dict)

    @property
    def feasible(self) -> bool:
        return self.ordering is not None

    def __bool__(self) -> bool:
        return self.ordering is not None

    @classmethod
    def infeasible(cls, reason: str, witness: Sequence = (), **stats) -> SearchResult:
        return cls(None, reason, tuple(witness), dict(stats))


class LabelState:
    """Mutable labels for one run of the framework."""

    def __init__(self, g: Graph, kind: Search):
        self.g = g
        self.kind = kind
        self.labels: list[list[int]] = [[] for _ in range(g.n)]
        self.numbered = [False] * g.n
        self.step = 0

    def eligible(self) -> list[int]:
        """Unnumbered vertices with no unnumbered vertex of strictly larger label."""
        free = [v for v in range(self.g.n) if not self.numbered[v]]
        labels, kind = self.labels, self.kind
        return [x for x in free if not any(label_less(kind, labels[x], labels[y]) for y in free if y != x)]

    def visit(self, v: int) -> None:
        if self.numbered[v]:
            raise ValueError(f"vertex {v} already numbered")
        self.step += 1
        self.numbered[v] = True
        for w in self.g.adj[v]:
            if not self.numbered[w]:
                self.labels[w].append(self.step)


def run_plus_search(g: Graph, kind: Search | str, rho: Sequence[int]) -> tuple[int, ...]:
    """The search of ``kind`` breaking every tie by the leftmost vertex in ``rho``."""
    kind = Search.parse(kind)
    check_permutation(rho, g.n)
    rank = positions(rho)
    state = LabelState(g, kind)
    out = []
    for _ in range(g.n):
        v = min(state.eligible(), key=rank.__getitem__)
        state.visit(v)
        out.append(v)
    return tuple(out)


def is_search_ordering(g: Graph, kind: Search | str, sigma: Sequence[int]) -> bool:
    kind = Search.parse(kind)
    check_permutation(sigma, g.n)
    state = LabelState(g, kind)
    for v in sigma:
        if v not in state.eligible():
            return False
        state.visit(v)
    return True


def check_lbfs_4point(g: Graph, sigma: Sequence[int]) -> bool:
    """The four-point characterisation of LBFS orderings.

    For every ``a < b < c`` in ``sigma`` with ``ac`` an edge and ``ab`` not an
    edge there must be ``d < a`` adjacent to ``b`` but not to ``c``.
    """
    check_permutation(sigma, g.n)
    adj = g.adj
    n = len(sigma)
    for i in range(n):
        a = sigma[i]
        for k in range(i + 2, n):
            c = sigma[k]
            if c not in adj[a]:
                continue
            for j in range(i + 1, k):
                b = sigma[j]
                if b in adj[a]:
                    continue
                if not any(d in adj[b] and d not in adj[c] for d in sigma[:i]):
                    return False
    return True


@dataclass
class Enumeration:
    orderings: list[tuple[int, ...]]
    truncated: bool

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.orderings)

    def __len__(self) -> int:
        return len(self.orderings)


def enumerate_search_orderings(
    g: Graph, kind: Search | str, root: int | None = None, cap: int = 100_000
) -> Enumeration:
    """All orderings of ``kind`` in lexicographic id order, at most ``cap`` of them."""
    kind = Search.parse(kind)
    found: list[tuple[int, ...]] = []
    state = LabelState(g, kind)
    prefix: list[int] = []

    def expand() -> bool:
        if len(prefix) == g.n:
            if len(found) >= cap:
                return False
            found.append(tuple(prefix))
            return True
        choices = sorted(state.eligible())
        if not prefix and root is not None:
            choices = [root]
        for v in choices:
            saved = [list(state.labels[w]) for w in g.adj[v]]
            state.visit(v)
            prefix.append(v)
            go_on = expand()
            prefix.pop()
            state.numbered[v] = False
            state.step -= 1
            for w, lab in zip(g.adj[v], saved):
                state.labels[w] = lab
            if not go_on:
                return False
        return True

    complete = expand() if g.n else True
    return Enumeration(found, truncated=not complete)
