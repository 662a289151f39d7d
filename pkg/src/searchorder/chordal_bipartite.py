"""Rooted partial search order problem of LBFS on chordal bipartite graphs.

Constraints are pushed from the deepest BFS layer towards the root as
One-Before-All pairs; each layer's instance is solved independently and the
concatenated orderings drive a tie-broken LBFS.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import BfsLayering, ClassCheck, Graph, GraphError, bfs_layering, check_chordal_bipartite, require_valid
from .oba import ObaInstance, solve_oba
from .order import PartialOrder
from .search import Search, SearchResult, run_plus_search


class NotChordalBipartiteError(GraphError):
    pass


class LayerConflict(ValueError):
    """A pair asks a deeper vertex to precede a shallower one."""

    def __init__(self, pair: tuple[int, int]):
        self.pair = pair
        super().__init__(f"pair {pair} runs against the BFS layers")


def normalize_layer_constraints(pi: PartialOrder, lay: BfsLayering) -> PartialOrder:
    """Keep same-layer pairs, drop pairs that point to a deeper layer.

    Raises :class:`LayerConflict` for a pair pointing to a shallower layer.
    """
    layer = lay.layer_of
    keep = []
    for x, y in pi.pairs():
        if layer[x] > layer[y]:
            raise LayerConflict((x, y))
        if layer[x] == layer[y]:
            keep.append((x, y))
    return PartialOrder.from_pairs(pi.n, keep)


@dataclass
class LayerRelations:
    """``instances[i]`` is the One-Before-All instance on layer ``i`` (index 0 unused)."""

    layering: BfsLayering
    instances: list[ObaInstance]

    def pairs(self, i: int) -> list[tuple[frozenset, frozenset]]:
        return self.instances[i].set_pairs()


def build_layer_relations(g: Graph, lay: BfsLayering, pi: PartialOrder) -> LayerRelations:
    """Seed each layer with the singleton pairs of ``pi`` and push pairs upwards.

    For a pair ``(A, B)`` on layer ``i`` the pair ``(A'', B')`` goes to layer
    ``i - 1``: ``A'`` are the neighbours of ``A`` there that miss ``B``,
    ``A''`` those of ``A'`` with the largest neighbourhood in layer ``i - 2``,
    and ``B'`` the neighbours of ``B`` there that miss ``A``.
    """
    layer = lay.layer_of
    k = lay.k
    # neighbours one layer up, and how many
    up = [frozenset(w for w in g.adj[v] if layer[w] == layer[v] - 1) for v in range(g.n)]
    up_degree = [len(u) for u in up]

    instances = [ObaInstance(tuple(sorted(lay.layer(i)))) for i in range(k + 1)]
    for x, y in pi.pairs():
        if layer[x] != layer[y]:
            raise LayerConflict((x, y))
        if layer[x] > 0:
            instances[layer[x]].add_pair({x}, {y})

    for i in range(k, 1, -1):
        for a, b in instances[i].set_pairs():
            nb_a = set().union(*(up[v] for v in a)) if a else set()
            nb_b = set().union(*(up[v] for v in b)) if b else set()
            a1 = nb_a - nb_b
            if a1:
                best = max(up_degree[v] for v in a1)
                a2 = {v for v in a1 if up_degree[v] == best}
            else:
                a2 = set()
            b1 = nb_b - nb_a
            instances[i - 1].add_pair(a2, b1)
    return LayerRelations(lay, instances)


def solve_psop_lbfs_cb_rooted(
    g: Graph, r: int, pi: PartialOrder, assume_class: bool = False, size_cap: int | None = None
) -> SearchResult:
    """An LBFS ordering starting at ``r`` that extends ``pi``, if one exists.

    The graph must be connected and chordal bipartite. Recognition is
    exhaustive, so graphs above ``size_cap`` vertices need ``assume_class``.
    """
    require_valid(g)
    if not assume_class:
        check = check_chordal_bipartite(g, **({"size_cap": size_cap} if size_cap else {}))
        if check is ClassCheck.NO:
            raise NotChordalBipartiteError("graph is not chordal bipartite")
        if check is ClassCheck.TOO_LARGE:
            raise NotChordalBipartiteError("graph too large for exhaustive recognition; assert the class instead")
    if pi.pred[r]:
        return SearchResult.infeasible("root is not minimal in the partial order", (r, min(pi.pred[r])))

    lay = bfs_layering(g, r)
    try:
        same_layer = normalize_layer_constraints(pi, lay)
    except LayerConflict as exc:
        return SearchResult.infeasible("pair contradicts the BFS layers of the root", exc.pair)

    rel = build_layer_relations(g, lay, same_layer)
    rho = [r]
    for i in range(1, lay.k + 1):
        tau = solve_oba(rel.instances[i])
        if tau is None:
            return SearchResult.infeasible("partial order cannot be linearized", tuple(sorted(lay.layer(i))), layer=i)
        rho.extend(tau)
    sigma = run_plus_search(g, Search.LBFS, rho)
    return SearchResult(sigma, stats={"layers": lay.k, "pairs": sum(len(x.relation) for x in rel.instances)})
