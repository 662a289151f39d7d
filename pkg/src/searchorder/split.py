"""Partial search orders of MCS and LBFS on split graphs.

Independent vertices that a partial order forces early ("premature") must
have neighbourhoods nested by inclusion. When they do, a tie-broken search fed
with any linear extension of the derived nested order meets every constraint
touching the clique or the premature set; the remaining constraints are
handled per search.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, SplitPartition, find_split_partition, require_valid
from .oba import ObaInstance, solve_oba
from .order import CycleError, PartialOrder
from .search import Search, SearchResult, run_plus_search


class NotSplitError(GraphError):
    pass


class NestedPropertyError(ValueError):
    """Names the violated condition (``"N1"`` .. ``"N4"``) and witness vertices."""

    def __init__(self, condition: str, witnesses: tuple[int, ...], detail: str = ""):
        self.condition = condition
        self.witnesses = witnesses
        super().__init__(f"{condition} violated by {list(witnesses)}{': ' + detail if detail else ''}")


@dataclass(frozen=True)
class PrematureSet:
    members: frozenset[int]
    mode: Search


@dataclass(frozen=True)
class NestedDecomposition:
    """Blocks ``(C_i, I_i)``; each ``x`` in ``I_i`` sees exactly ``C_1 | ... | C_i``.

    ``leaders[i]`` is the unique vertex of ``I_i`` forced before some vertex of
    ``C_i``, or ``None``.
    """

    blocks: tuple[tuple[frozenset[int], frozenset[int]], ...]
    leaders: tuple[int | None, ...]

    def block_of(self) -> dict[int, int]:
        out = {}
        for i, (c, s) in enumerate(self.blocks):
            for v in c | s:
                out[v] = i
        return out


def split_partition_or_raise(g: Graph) -> SplitPartition:
    sp = find_split_partition(g)
    if sp is None:
        raise NotSplitError("graph is not a split graph")
    return sp


def compute_premature_set(g: Graph, sp: SplitPartition, pi: PartialOrder, mode: Search | str) -> PrematureSet:
    """Independent ``u`` with some ``u < v`` in ``pi`` where ``v`` is a clique vertex
    or has more neighbours (MCS) / a strictly larger neighbourhood (LBFS)."""
    mode = Search.parse(mode)
    if mode not in (Search.MCS, Search.LBFS):
        raise ValueError(f"no premature-set rule for {mode.value}")
    adj, clique = g.adj, sp.clique
    members = set()
    for u in sp.independent:
        for v in pi.succ[u]:
            if v in clique:
                members.add(u)
                break
            if mode is Search.MCS and len(adj[u]) < len(adj[v]):
                members.add(u)
                break
            if mode is Search.LBFS and adj[u] < adj[v]:
                members.add(u)
                break
    return PrematureSet(frozenset(members), mode)


def check_nested_property(g: Graph, sp: SplitPartition, pi: PartialOrder, a: PrematureSet | frozenset) -> NestedDecomposition:
    """Decompose ``a`` into nested blocks or raise :class:`NestedPropertyError`."""
    members = a.members if isinstance(a, PrematureSet) else frozenset(a)
    clique = sp.clique
    if not members <= sp.independent:
        raise ValueError("premature set must lie on the independent side")

    # (N1) predecessors of clique vertices are clique or premature
    for y in sorted(clique):
        for x in sorted(pi.pred[y]):
            if x not in clique and x not in members:
                raise NestedPropertyError("N1", (x, y), "a predecessor of a clique vertex is neither clique nor premature")

    # (N2) neighbourhoods form a chain
    groups: dict[frozenset[int], set[int]] = {}
    for x in members:
        groups.setdefault(g.adj[x], set()).add(x)
    chain = sorted(groups, key=len)
    blocks = []
    prev: frozenset[int] = frozenset()
    for nb in chain:
        if not prev < nb:
            x = min(groups[nb])
            y = min(groups[prev]) if prev in groups else x
            raise NestedPropertyError("N2", (y, x), "neighbourhoods not ordered by inclusion")
        blocks.append((frozenset(nb - prev), frozenset(groups[nb])))
        prev = nb

    block = {}
    for i, (c, s) in enumerate(blocks):
        for v in c | s:
            block[v] = i

    # (N3) predecessors of block members sit in the same or an earlier block
    for y in sorted(block):
        for x in sorted(pi.pred[y]):
            if block.get(x, len(blocks)) > block[y]:
                raise NestedPropertyError("N3", (x, y), "predecessor outside the earlier blocks")

    # (N4) at most one vertex per I_i forced before C_i
    leaders = []
    for c, s in blocks:
        forced = sorted(x for x in s if pi.succ[x] & c)
        if len(forced) > 1:
            raise NestedPropertyError("N4", tuple(forced[:2]), "two block vertices forced before the block's clique part")
        leaders.append(forced[0] if forced else None)
    return NestedDecomposition(tuple(blocks), tuple(leaders))


def nested_partial_order(pi: PartialOrder, a: PrematureSet | frozenset, dec: NestedDecomposition, sp: SplitPartition) -> PartialOrder:
    """Closure of ``pi``, block-before-rest, clique-before-non-premature and
    leader-before-siblings pairs. A :class:`CycleError` here means the
    decomposition was not checked."""
    members = a.members if isinstance(a, PrematureSet) else frozenset(a)
    n = pi.n
    pairs = pi.pairs()
    covered: set[int] = set()
    for c, s in dec.blocks:
        covered |= c | s
        rest = [y for y in range(n) if y not in covered]
        pairs.extend((x, y) for x in c | s for y in rest)
    rest_independent = sorted(sp.independent - members)
    pairs.extend((x, y) for x in sp.clique for y in rest_independent)
    for (c, s), leader in zip(dec.blocks, dec.leaders):
        if leader is not None:
            pairs.extend((leader, y) for y in s if y != leader)
    return PartialOrder.from_pairs(n, pairs)


def solve_psop_mcs_split(g: Graph, pi: PartialOrder) -> SearchResult:
    """An MCS ordering extending ``pi`` on a connected split graph, if one exists."""
    require_valid(g)
    sp = split_partition_or_raise(g)
    a = compute_premature_set(g, sp, pi, Search.MCS)
    try:
        dec = check_nested_property(g, sp, pi, a)
    except NestedPropertyError as exc:
        return SearchResult.infeasible(f"nested property fails ({exc.condition})", exc.witnesses)
    pin = nested_partial_order(pi, a, dec, sp)
    rho = pin.linear_extension()
    sigma = run_plus_search(g, Search.MCS, rho)
    return SearchResult(sigma, stats={"premature": len(a.members), "blocks": len(dec.blocks)})


def build_lbfs_clique_relation(
    g: Graph, sp: SplitPartition, pi: PartialOrder, a: PrematureSet | frozenset, pin: PartialOrder
) -> ObaInstance:
    """One-Before-All instance on the clique.

    Each ``x < y`` of ``pi`` between non-premature independent vertices asks
    some private neighbour of ``x`` to come before all private neighbours of
    ``y``; clique pairs of the nested order are copied as singletons.
    Identical pairs are listed once.
    """
    members = a.members if isinstance(a, PrematureSet) else frozenset(a)
    plain = sp.independent - members
    inst = ObaInstance(tuple(sorted(sp.clique)))
    seen = set()
    for x, y in pi.pairs():
        if x in plain and y in plain:
            pair = (g.adj[x] - g.adj[y], g.adj[y] - g.adj[x])
            if pair not in seen:
                seen.add(pair)
                inst.add_pair(*pair)
    for x, y in pin.pairs():
        if x in sp.clique and y in sp.clique:
            pair = (frozenset({x}), frozenset({y}))
            if pair not in seen:
                seen.add(pair)
                inst.add_pair(*pair)
    return inst


def solve_psop_lbfs_split(g: Graph, pi: PartialOrder) -> SearchResult:
    """An LBFS ordering extending ``pi`` on a connected split graph, if one exists."""
    require_valid(g)
    sp = split_partition_or_raise(g)
    a = compute_premature_set(g, sp, pi, Search.LBFS)
    try:
        dec = check_nested_property(g, sp, pi, a)
    except NestedPropertyError as exc:
        return SearchResult.infeasible(f"nested property fails ({exc.condition})", exc.witnesses)
    pin = nested_partial_order(pi, a, dec, sp)
    inst = build_lbfs_clique_relation(g, sp, pi, a, pin)
    tau = solve_oba(inst)
    if tau is None:
        return SearchResult.infeasible("no One-Before-All ordering of the clique", tuple(sorted(sp.clique)))
    rho = interleave(pin, tau, sp)
    sigma = run_plus_search(g, Search.LBFS, rho)
    return SearchResult(sigma, stats={"premature": len(a.members), "blocks": len(dec.blocks)})


def interleave(pin: PartialOrder, tau: tuple[int, ...], sp: SplitPartition) -> list[int]:
    """Linear extension of ``pin`` whose clique part follows ``tau``.

    Independent vertices are placed as early as the order allows.
    """
    chain = list(zip(tau, tau[1:]))
    try:
        full = pin.union(chain)
    except CycleError as exc:  # tau must extend pin on the clique
        raise ValueError("clique ordering contradicts the nested order") from exc
    clique = sp.clique
    return full.linear_extension(priority=lambda v: (v in clique, v))


def rooted(solver):
    """Turn an unrooted solver into ``solver(g, r, pi)`` by making ``r`` the minimum."""

    def solve(g: Graph, r: int, pi: PartialOrder) -> SearchResult:
        if pi.pred[r]:
            return SearchResult.infeasible("root is not minimal in the partial order", (r, min(pi.pred[r])))
        return solver(g, pi.with_minimum(r))

    solve.__name__ = f"{solver.__name__}_rooted"
    solve.__doc__ = f"Rooted form of :func:`{solver.__name__}`."
    return solve


solve_psop_mcs_split_rooted = rooted(solve_psop_mcs_split)
solve_psop_lbfs_split_rooted = rooted(solve_psop_lbfs_split)
