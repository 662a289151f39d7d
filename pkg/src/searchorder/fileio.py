"""Plain-text formats.

graph     one edge ``u v`` per line (a lone name declares an isolated vertex)
order     one pair ``u v`` per line, meaning u before v
tree      ``root r`` on the first line, then ``parent child`` lines
ordering  a single line of whitespace-separated names

``#`` starts a comment. Vertex ids follow first appearance in the graph file.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .graph import Graph
from .order import PartialOrder
from .reductions import RootedTree


class FormatError(ValueError):
    pass


def _lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for no, line in enumerate(text.splitlines(), start=1):
        tokens = line.split("#", 1)[0].split()
        if tokens:
            yield no, tokens


def parse_graph(text: str) -> Graph:
    vertices, edges = [], []
    for no, tokens in _lines(text):
        if len(tokens) == 1:
            vertices.append(tokens[0])
        elif len(tokens) == 2:
            vertices.extend(tokens)
            edges.append((tokens[0], tokens[1]))
        else:
            raise FormatError(f"line {no}: expected 'u v', got {' '.join(tokens)!r}")
    return Graph.from_edges(edges, vertices=vertices)


def format_graph(g: Graph) -> str:
    lines = [f"{g.names[u]} {g.names[v]}" for u, v in g.edges()]
    # isolated vertices, and vertices whose first appearance would otherwise move
    order_seen: dict[str, None] = {}
    for u, v in g.edges():
        order_seen.setdefault(g.names[u])
        order_seen.setdefault(g.names[v])
    if list(order_seen) != list(g.names):
        lines = list(g.names) + lines
    return "\n".join(lines) + "\n"


def _vid(g: Graph, name: str, no: int) -> int:
    try:
        return g.vid(name)
    except ValueError:
        raise FormatError(f"line {no}: unknown vertex {name!r}") from None


def parse_order(text: str, g: Graph) -> PartialOrder:
    pairs = []
    for no, tokens in _lines(text):
        if len(tokens) != 2:
            raise FormatError(f"line {no}: expected 'u v'")
        pairs.append((_vid(g, tokens[0], no), _vid(g, tokens[1], no)))
    return PartialOrder.from_pairs(g.n, pairs)


def format_order(pi: PartialOrder, g: Graph) -> str:
    return "".join(f"{g.names[x]} {g.names[y]}\n" for x, y in pi.pairs())


def parse_ordering(text: str, g: Graph) -> tuple[int, ...]:
    tokens = [t for _, ts in _lines(text) for t in ts]
    sigma = tuple(_vid(g, t, 1) for t in tokens)
    if len(sigma) != g.n or len(set(sigma)) != g.n:
        raise FormatError(f"ordering must list each of the {g.n} vertices exactly once")
    return sigma


def format_ordering(sigma: Sequence[int], g: Graph) -> str:
    return " ".join(g.name_of(sigma)) + "\n"


def parse_tree(text: str, g: Graph) -> RootedTree:
    lines = list(_lines(text))
    if not lines or len(lines[0][1]) != 2 or lines[0][1][0] != "root":
        raise FormatError("tree file must start with 'root r'")
    root = _vid(g, lines[0][1][1], lines[0][0])
    parent: dict[int, int] = {}
    for no, tokens in lines[1:]:
        if len(tokens) != 2:
            raise FormatError(f"line {no}: expected 'parent child'")
        p, c = _vid(g, tokens[0], no), _vid(g, tokens[1], no)
        if c in parent or c == root:
            raise FormatError(f"line {no}: {tokens[1]} already has a parent")
        parent[c] = p
    return RootedTree.from_parents(root, parent, g.n)


def format_tree(t: RootedTree, g: Graph) -> str:
    lines = [f"root {g.names[t.root]}"]
    lines += [f"{g.names[p]} {g.names[c]}" for p, c in t.edges()]
    return "\n".join(lines) + "\n"
