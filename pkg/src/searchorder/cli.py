"""Command-line front end.

Exit codes: 0 found / pass, 1 infeasible / fail, 2 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path

from . import generators
from .chordal_bipartite import NotChordalBipartiteError, solve_psop_lbfs_cb_rooted
from .fileio import FormatError, format_graph, format_order, parse_graph, parse_order, parse_ordering, parse_tree
from .generic import solve_psop_gs_rooted, solve_psop_unrooted
from .graph import DEFAULT_SIZE_CAP, ClassCheck, GraphError, bipartition, check_chordal_bipartite, validate_graph
from .oracle import ENV_SIZE_CAP, OracleSizeError, brute_force_psop
from .order import CycleError, PartialOrder, is_linear_extension
from .reductions import end_vertex_order, f_tree_to_psop, l_tree_to_psop_bipartite
from .search import Search, SearchResult, check_lbfs_4point, is_search_ordering
from .split import NotSplitError, solve_psop_lbfs_split, solve_psop_lbfs_split_rooted, solve_psop_mcs_split, solve_psop_mcs_split_rooted

FOUND, INFEASIBLE, ERROR = 0, 1, 2
CLASSES = ("any", "split", "chordal-bipartite")

AVAILABILITY = """\
supported combinations (search x graph class):
  gs    any
  lbfs  chordal-bipartite, split
  mcs   split
  any search, any class with --oracle (small graphs only)"""


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _env_cap(default: int) -> int:
    value = os.environ.get(ENV_SIZE_CAP)
    return int(value) if value else default


def _pick_solver(search: Search, klass: str, oracle: bool, assume: bool):
    """Return ``solve(g, pi, root)`` for the combination, or raise :class:`UsageError`."""
    if oracle:
        return lambda g, pi, r: brute_force_psop(g, search, pi, root=r)
    if search is Search.GS:
        pair = (solve_psop_gs_rooted, None)
    elif search is Search.LBFS and klass == "chordal-bipartite":
        cap = _env_cap(DEFAULT_SIZE_CAP)

        def cb(g, r, pi):
            return solve_psop_lbfs_cb_rooted(g, r, pi, assume_class=assume, size_cap=cap)

        pair = (cb, None)
    elif search is Search.LBFS and klass == "split":
        pair = (solve_psop_lbfs_split_rooted, solve_psop_lbfs_split)
    elif search is Search.MCS and klass == "split":
        pair = (solve_psop_mcs_split_rooted, solve_psop_mcs_split)
    else:
        raise UsageError(f"no solver for {search.value} on class {klass}\n{AVAILABILITY}")
    rooted_solver, unrooted_solver = pair

    def solve(g, pi, r):
        if r is not None:
            return rooted_solver(g, r, pi)
        if unrooted_solver is not None:
            return unrooted_solver(g, pi)
        return solve_psop_unrooted(g, pi, rooted_solver)

    return solve


def _check_class(g, klass: str, assume: bool) -> None:
    if klass == "chordal-bipartite" and not assume:
        verdict = check_chordal_bipartite(g, size_cap=_env_cap(DEFAULT_SIZE_CAP))
        if verdict is ClassCheck.NO:
            raise UsageError("graph is not chordal bipartite")
        if verdict is ClassCheck.TOO_LARGE:
            raise UsageError("graph too large to recognise; pass --assume-class")


def _emit(args, g, result: SearchResult) -> int:
    if getattr(args, "json", False):
        envelope = {
            "status": "found" if result else "infeasible",
            "ordering": list(g.name_of(result.ordering)) if result else None,
            "witness": [g.names[v] if isinstance(v, int) and 0 <= v < g.n else v for v in result.witness],
            "reason": result.reason,
            "stats": result.stats,
        }
        print(json.dumps(envelope))
    elif result:
        print(" ".join(g.name_of(result.ordering)))
    else:
        print("INFEASIBLE")
        if result.reason:
            print(result.reason, file=sys.stderr)
    return FOUND if result else INFEASIBLE


def _load_graph(path: str):
    g = parse_graph(_read(path))
    report = validate_graph(g)
    if not report:
        raise UsageError("invalid graph: " + "; ".join(report.problems))
    return g


def _dispatch(args, g, pi: PartialOrder, root: int | None) -> int:
    search = Search.parse(args.search)
    solve = _pick_solver(search, args.klass, args.oracle, args.assume_class)
    _check_class(g, args.klass, args.assume_class or args.oracle)
    return _emit(args, g, solve(g, pi, root))


def cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    pi = parse_order(_read(args.order), g) if args.order else PartialOrder.empty(g.n)
    root = g.vid(args.root) if args.root else None
    return _dispatch(args, g, pi, root)


def cmd_endvertex(args) -> int:
    g = _load_graph(args.graph)
    pi = end_vertex_order(g, g.vid(args.vertex))
    root = g.vid(args.root) if args.root else None
    return _dispatch(args, g, pi, root)


def cmd_ftree(args) -> int:
    g = _load_graph(args.graph)
    tree = parse_tree(_read(args.tree), g)
    try:
        pi = f_tree_to_psop(g, tree)
    except CycleError as exc:
        return _emit(args, g, SearchResult.infeasible("tree constraints are cyclic", exc.cycle))
    return _dispatch(args, g, pi, tree.root)


def cmd_ltree(args) -> int:
    g = _load_graph(args.graph)
    search = Search.parse(args.search)
    if search not in (Search.BFS, Search.LBFS):
        raise UsageError("rightmost-neighbour trees are supported for bfs and lbfs only")
    if bipartition(g) is None:
        raise UsageError("graph is not bipartite")
    tree = parse_tree(_read(args.tree), g)
    try:
        pi = l_tree_to_psop_bipartite(g, tree)
    except CycleError as exc:
        return _emit(args, g, SearchResult.infeasible("tree constraints are cyclic", exc.cycle))
    return _dispatch(args, g, pi, tree.root)


def cmd_verify(args) -> int:
    g = parse_graph(_read(args.graph))
    sigma = parse_ordering(_read(args.ordering), g)
    pi = parse_order(_read(args.order), g) if args.order else PartialOrder.empty(g.n)
    search = Search.parse(args.search)
    failures = []
    if not is_search_ordering(g, search, sigma):
        failures.append(f"not a {search.value} ordering")
    if not is_linear_extension(sigma, pi):
        failures.append("does not extend the partial order")
    if args.four_point and not check_lbfs_4point(g, sigma):
        failures.append("violates the LBFS four-point condition")
    if args.json:
        print(json.dumps({"status": "fail" if failures else "pass", "failures": failures}))
    else:
        print("FAIL: " + "; ".join(failures) if failures else "PASS")
    return INFEASIBLE if failures else FOUND


def cmd_generate(args) -> int:
    rng = random.Random(args.seed)
    if args.kind == "order":
        if bool(args.graph) == bool(args.from_ordering):
            raise UsageError("generate order needs exactly one of --graph or --from-ordering")
        if args.from_ordering and args.search:
            raise UsageError("--search samples its own ordering; drop --from-ordering")
        if args.from_ordering:
            names = _read(args.from_ordering).split()
            if len(set(names)) != len(names):
                raise UsageError("ordering repeats a vertex")
            g = parse_graph("\n".join(names))
            sigma = tuple(range(len(names)))
        else:
            g = parse_graph(_read(args.graph))
            sigma = generators.random_search_ordering(g, args.search, rng) if args.search else None
        if sigma is None:
            pi = generators.random_partial_order(g.n, args.pairs, rng)
        else:
            pi = generators.order_from_ordering(sigma, args.pairs, rng)
        text = format_order(pi, g)
    else:
        if args.graph or args.from_ordering or args.search:
            raise UsageError(f"generate {args.kind} takes only --n and --seed")
        if args.n < 1:
            raise UsageError("--n must be positive")
        make = {
            "split": generators.random_split_graph,
            "cb": generators.random_chordal_bipartite_graph,
            "connected": generators.random_connected_graph,
        }[args.kind]
        text = format_graph(make(args.n, rng))
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return FOUND


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="searchorder", description="Search orderings extending partial orders.")
    sub = parser.add_subparsers(dest="command", required=True)

    def solving(p, order=True):
        p.add_argument("--search", required=True, choices=[s.value for s in Search])
        p.add_argument("--class", dest="klass", default="any", choices=CLASSES)
        p.add_argument("--graph", required=True)
        if order:
            p.add_argument("--order")
        p.add_argument("--oracle", action="store_true", help="exhaustive search instead of a dedicated solver")
        p.add_argument("--assume-class", action="store_true", help="skip graph class recognition")
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("solve", help="find a search ordering extending a partial order")
    solving(p)
    p.add_argument("--root")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("endvertex", help="can a vertex come last?")
    solving(p, order=False)
    p.add_argument("--vertex", required=True)
    p.add_argument("--root")
    p.set_defaults(func=cmd_endvertex)

    for name, func, text in (
        ("ftree", cmd_ftree, "is a rooted tree the leftmost-neighbour tree of some ordering?"),
        ("ltree", cmd_ltree, "is a rooted tree the rightmost-neighbour tree of some ordering? (bipartite)"),
    ):
        p = sub.add_parser(name, help=text)
        solving(p, order=False)
        p.add_argument("--tree", required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="check an ordering")
    p.add_argument("--graph", required=True)
    p.add_argument("--ordering", required=True)
    p.add_argument("--order")
    p.add_argument("--search", required=True, choices=[s.value for s in Search])
    p.add_argument("--four-point", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="random instances")
    p.add_argument("kind", choices=["split", "cb", "connected", "order"])
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pairs", type=int, default=3)
    p.add_argument("--graph")
    p.add_argument("--from-ordering")
    p.add_argument("--search", choices=[s.value for s in Search])
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
    except (FormatError, GraphError, CycleError, OracleSizeError, NotSplitError, NotChordalBipartiteError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return ERROR


if __name__ == "__main__":
    sys.exit(main())
