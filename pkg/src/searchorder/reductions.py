"""End-vertex and search-tree questions phrased as partial search order instances."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, GraphError, bfs_layering, bipartition
from .order import PartialOrder, check_permutation, positions


@dataclass(frozen=True)
class RootedTree:
    """``parent[v]`` is ``None`` exactly for the root."""

    root: int
    parent: tuple[int | None, ...]

    @classmethod
    def from_parents(cls, root: int, parent: dict[int, int], n: int) -> RootedTree:
        return cls(root, tuple(parent.get(v) if v != root else None for v in range(n)))

    def children(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in self.parent]
        for v, p in enumerate(self.parent):
            if p is not None:
                out[p].append(v)
        return out

    def edges(self) -> list[tuple[int, int]]:
        return [(p, v) for v, p in enumerate(self.parent) if p is not None]

    def validate(self, g: Graph) -> None:
        """Raise :class:`GraphError` unless this is a spanning tree of ``g``."""
        n = g.n
        if len(self.parent) != n:
            raise GraphError("tree does not span the graph")
        for v, p in enumerate(self.parent):
            if (p is None) != (v == self.root):
                raise GraphError(f"vertex {g.names[v]} has no parent" if p is None else "root has a parent")
            if p is not None and not g.has_edge(p, v):
                raise GraphError(f"tree edge {g.names[p]}-{g.names[v]} is not a graph edge")
        for v in range(n):
            seen = set()
            while v is not None:
                if v in seen:
                    raise GraphError("tree contains a cycle")
                seen.add(v)
                v = self.parent[v]


def end_vertex_order(g: Graph, t: int) -> PartialOrder:
    """Every other vertex before ``t``."""
    return PartialOrder.from_pairs(g.n, [(u, t) for u in range(g.n) if u != t])


def f_tree_to_psop(g: Graph, tree: RootedTree) -> PartialOrder:
    """Parent before child, and a parent before every other neighbour of its children.

    Raises :class:`~searchorder.order.CycleError` when no ordering can have
    ``tree`` as its leftmost-neighbour tree.
    """
    tree.validate(g)
    pairs = []
    for y, x in enumerate(tree.parent):
        if x is None:
            continue
        pairs.append((x, y))
        pairs.extend((x, w) for w in g.adj[y] if w != x)
    return PartialOrder.from_pairs(g.n, pairs)


def l_tree_to_psop_bipartite(g: Graph, tree: RootedTree) -> PartialOrder:
    """Rightmost-earlier-neighbour trees of BFS-type searches on bipartite graphs.

    Parent before child; every other neighbour of the child in the parent's
    BFS layer before the parent.
    """
    if bipartition(g) is None:
        raise GraphError("rightmost-neighbour trees reduce to partial orders only on bipartite graphs")
    tree.validate(g)
    layer = bfs_layering(g, tree.root).layer_of
    pairs = []
    for y, x in enumerate(tree.parent):
        if x is None:
            continue
        pairs.append((x, y))
        pairs.extend((z, x) for z in g.adj[y] if z != x and layer[z] == layer[x])
    return PartialOrder.from_pairs(g.n, pairs)


def _extract_tree(g: Graph, sigma: Sequence[int], leftmost: bool) -> RootedTree:
    check_permutation(sigma, g.n)
    pos = positions(sigma)
    parent: list[int | None] = [None] * g.n
    for i, v in enumerate(sigma[1:], start=1):
        earlier = [w for w in g.adj[v] if pos[w] < i]
        if not earlier:
            raise GraphError(f"{g.names[v]} has no earlier neighbour; not a connected search ordering")
        parent[v] = min(earlier, key=pos.__getitem__) if leftmost else max(earlier, key=pos.__getitem__)
    return RootedTree(sigma[0], tuple(parent))


def extract_f_tree(g: Graph, sigma: Sequence[int]) -> RootedTree:
    """Each vertex hangs from its leftmost neighbour in ``sigma``."""
    return _extract_tree(g, sigma, leftmost=True)


def extract_l_tree(g: Graph, sigma: Sequence[int]) -> RootedTree:
    """Each vertex hangs from its rightmost neighbour to its left in ``sigma``."""
    return _extract_tree(g, sigma, leftmost=False)
