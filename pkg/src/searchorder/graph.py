"""Undirected graphs over dense integer ids, BFS layering and class checks."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence


class GraphError(ValueError):
    """Malformed graph input, or a graph outside the class a routine needs."""


class DisconnectedGraphError(GraphError):
    pass


class Graph:
    """Simple undirected graph with vertices ``0..n-1`` and display names.

    The canonical vertex order is the order of first appearance in the
    input. Self-loops and repeated edges are dropped on construction but
    counted, so :func:`validate_graph` can report them.
    """

    __slots__ = ("names", "adj", "loops", "duplicate_edges", "_index", "_masks")

    def __init__(
        self,
        names: Sequence[Hashable],
        adj: Sequence[Iterable[int]],
        loops: int = 0,
        duplicate_edges: int = 0,
    ):
        self.names = tuple(str(x) for x in names)
        self.adj = tuple(frozenset(a) for a in adj)
        if len(self.names) != len(self.adj):
            raise GraphError("names and adjacency differ in length")
        if len(set(self.names)) != len(self.names):
            raise GraphError("duplicate vertex names")
        for v, nb in enumerate(self.adj):
            for w in nb:
                if w == v or not 0 <= w < len(self.adj) or v not in self.adj[w]:
                    raise GraphError(f"adjacency not symmetric/loop-free at {v}-{w}")
        self.loops = loops
        self.duplicate_edges = duplicate_edges
        self._index = {name: i for i, name in enumerate(self.names)}
        self._masks = None

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[Hashable, Hashable]], vertices: Iterable[Hashable] = ()) -> Graph:
        """Build from name pairs. ``vertices`` fixes (part of) the canonical order first."""
        index: dict[str, int] = {}
        adj: list[set[int]] = []

        def vid(name):
            name = str(name)
            if name not in index:
                index[name] = len(adj)
                adj.append(set())
            return index[name]

        for v in vertices:
            vid(v)
        loops = dups = 0
        for a, b in edges:
            u, v = vid(a), vid(b)
            if u == v:
                loops += 1
            elif v in adj[u]:
                dups += 1
            else:
                adj[u].add(v)
                adj[v].add(u)
        return cls(list(index), adj, loops, dups)

    @classmethod
    def from_string(cls, text: str) -> Graph:
        """Whitespace-separated edges, e.g. ``"a-b b-c"`` or ``"ab bc"``."""
        edges = []
        for tok in text.split():
            edges.append(tuple(tok.split("-")) if "-" in tok else tuple(tok))
        return cls.from_edges(edges)

    @property
    def n(self) -> int:
        return len(self.adj)

    def __len__(self) -> int:
        return len(self.adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.names == other.names and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.names, self.adj))

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def neighborhood(self, vs: Iterable[int]) -> set[int]:
        out: set[int] = set()
        for v in vs:
            out |= self.adj[v]
        return out

    @property
    def masks(self) -> tuple[int, ...]:
        """Adjacency as int bitsets, built on first use."""
        if self._masks is None:
            self._masks = tuple(sum(1 << w for w in a) for a in self.adj)
        return self._masks

    def vid(self, name: Hashable) -> int:
        try:
            return self._index[str(name)]
        except KeyError:
            raise GraphError(f"unknown vertex {name!r}") from None

    def vids(self, names: Iterable[Hashable] | str) -> tuple[int, ...]:
        if isinstance(names, str):
            names = names.split()
        return tuple(self.vid(x) for x in names)

    def name_of(self, vs: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.names[v] for v in vs)

    def induced(self, vs: Iterable[int]) -> Graph:
        keep = sorted(set(vs))
        pos = {v: i for i, v in enumerate(keep)}
        return Graph([self.names[v] for v in keep], [[pos[w] for w in self.adj[v] if w in pos] for v in keep])


@dataclass(frozen=True)
class ValidationReport:
    simple: bool
    loop_free: bool
    connected: bool
    problems: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.simple and self.loop_free and self.connected

    def __bool__(self) -> bool:
        return self.ok


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        for w in g.adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def validate_graph(g: Graph) -> ValidationReport:
    problems = []
    if g.loops:
        problems.append(f"{g.loops} self-loop(s)")
    if g.duplicate_edges:
        problems.append(f"{g.duplicate_edges} repeated edge(s)")
    connected = g.n > 0 and is_connected(g)
    if not connected:
        problems.append("graph is empty" if g.n == 0 else "graph is not connected")
    return ValidationReport(
        simple=g.duplicate_edges == 0 and g.loops == 0,
        loop_free=g.loops == 0,
        connected=connected,
        problems=tuple(problems),
    )


def require_valid(g: Graph) -> None:
    report = validate_graph(g)
    if not report.connected:
        raise DisconnectedGraphError("; ".join(report.problems))
    if not report.ok:
        raise GraphError("; ".join(report.problems))


# -- BFS layers ---------------------------------------------------------------


@dataclass(frozen=True)
class BfsLayering:
    root: int
    layer_of: tuple[int, ...]
    layers: tuple[frozenset[int], ...]

    @property
    def k(self) -> int:
        return len(self.layers) - 1

    def layer(self, i: int) -> frozenset[int]:
        if 0 <= i < len(self.layers):
            return self.layers[i]
        return frozenset()


def bfs_layering(g: Graph, r: int) -> BfsLayering:
    dist = [-1] * g.n
    dist[r] = 0
    queue = deque([r])
    while queue:
        v = queue.popleft()
        for w in g.adj[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    if min(dist) < 0:
        raise DisconnectedGraphError(f"{g.names[dist.index(-1)]} unreachable from {g.names[r]}")
    layers: list[set[int]] = [set() for _ in range(max(dist) + 1)]
    for v, d in enumerate(dist):
        layers[d].add(v)
    return BfsLayering(r, tuple(dist), tuple(frozenset(x) for x in layers))


# -- split graphs ---------------------------------------------------------------


@dataclass(frozen=True)
class SplitPartition:
    clique: frozenset[int]
    independent: frozenset[int]
    notes: tuple[str, ...] = field(default=(), compare=False)


def is_split_partition(g: Graph, clique: Iterable[int], independent: Iterable[int]) -> bool:
    c, i = set(clique), set(independent)
    if c & i or len(c) + len(i) != g.n:
        return False
    if any(not (c - {v}) <= g.adj[v] for v in c):
        return False
    return all(not (g.adj[v] & i) for v in i)


def find_split_partition(g: Graph) -> SplitPartition | None:
    """Split partition via the degree-sequence test, or ``None`` if ``g`` is not split.

    A clique vertex without independent neighbours could sit on either side;
    one such vertex (the largest id) is moved to the independent side.
    """
    n = g.n
    if n == 0:
        return SplitPartition(frozenset(), frozenset())
    by_degree = sorted(range(n), key=lambda v: (-len(g.adj[v]), v))
    deg = [len(g.adj[v]) for v in by_degree]
    m = max(k for k in range(1, n + 1) if deg[k - 1] >= k - 1)
    if sum(deg[:m]) != m * (m - 1) + sum(deg[m:]):
        return None

    clique, indep = set(by_degree[:m]), set(by_degree[m:])
    notes = []
    if not is_split_partition(g, clique, indep):
        # boundary swap between the m-th and (m+1)-th vertex
        if m < n:
            a, b = by_degree[m - 1], by_degree[m]
            clique2, indep2 = (clique - {a}) | {b}, (indep - {b}) | {a}
            if is_split_partition(g, clique2, indep2):
                clique, indep = clique2, indep2
                notes.append(f"boundary swap {a}<->{b}")
        if not is_split_partition(g, clique, indep):
            return None

    movable = [v for v in clique if not (g.adj[v] & indep)]
    if movable:
        v = max(movable)
        clique.discard(v)
        indep.add(v)
        notes.append(f"vertex {g.names[v]} placed on the independent side")
    assert is_split_partition(g, clique, indep)
    return SplitPartition(frozenset(clique), frozenset(indep), tuple(notes))


# -- chordal bipartite graphs -----------------------------------------------------


class ClassCheck(enum.Enum):
    YES = "yes"
    NO = "no"
    TOO_LARGE = "too-large"


DEFAULT_SIZE_CAP = 16


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    return (
        frozenset(v for v in range(g.n) if color[v] == 0),
        frozenset(v for v in range(g.n) if color[v] == 1),
    )


def find_long_induced_cycle(g: Graph, min_length: int = 5) -> tuple[int, ...] | None:
    """An induced cycle with at least ``min_length`` vertices, or ``None``.

    Exhaustive: grows every chordless path whose smallest vertex is its start.
    """
    masks = g.masks
    for s in range(g.n):
        higher = ~((1 << (s + 1)) - 1)
        # path as list; `blocked` = path vertices plus their neighbours (except last's)
        for t in g.adj[s]:
            if t < s:
                continue
            stack = [([s, t], (1 << s) | (1 << t))]
            while stack:
                path, on_path = stack.pop()
                last = path[-1]
                inner = on_path & ~(1 << last) & ~(1 << s)
                cand = masks[last] & higher & ~on_path
                while cand:
                    low = cand & -cand
                    w = low.bit_length() - 1
                    cand ^= low
                    if masks[w] & inner:
                        continue
                    touches_start = masks[w] >> s & 1
                    if touches_start:
                        if len(path) + 1 >= min_length and len(path) >= 3:
                            return tuple(path) + (w,)
                        continue
                    stack.append((path + [w], on_path | low))
    return None


def check_chordal_bipartite(g: Graph, size_cap: int = DEFAULT_SIZE_CAP) -> ClassCheck:
    """Bipartite with no induced cycle on six or more vertices."""
    if bipartition(g) is None:
        return ClassCheck.NO
    if g.n > size_cap:
        return ClassCheck.TOO_LARGE
    return ClassCheck.NO if find_long_induced_cycle(g, 6) else ClassCheck.YES
