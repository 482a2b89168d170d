"""Command line front end: ``vpowers <command> [options] INPUT``.

INPUT is an ideal file (``ring ...; ideal ...;``), a graph document (JSON)
or ``-`` for standard input.  Ideal commands given a graph use its edge
ideal, or I(D) for a weighted oriented graph.

Exit codes: 0 success, 2 parse error, 3 resource limit, 4 precondition.
"""

from __future__ import annotations

import argparse
import contextlib
import random
import sys
from typing import Any, Callable

from . import __version__
from .corpus import (
    connected_bipartite_graphs,
    connected_graphs,
    random_connected_graph,
    random_monomial_ideal,
    random_squarefree_ideal,
)
from .decomposition import (
    PrimeIdeal,
    associated_primes,
    c_invariant,
    irreducible_decomposition,
    symbolic_power_squarefree,
)
from .errors import ParseError, PreconditionError, ResourceLimitError
from .graphs import (
    Graph,
    WeightedOrientedGraph,
    cover_ideal,
    edge_ideal,
    edge_power_colon,
    edge_product,
    even_connected_pairs,
    graph_profile,
    path_ideal,
    v_stab_upper_bound,
    weighted_oriented_edge_ideal,
)
from .monomial import MonomialIdeal, colon_by_monomial, generator_limit, ideal_profile, power
from .parsing import emit_graph, emit_ideal, parse_graph, parse_ideal
from .report import RENDERERS, Report
from .structure import (
    SplitLeaf,
    has_linear_quotients,
    has_strong_persistence_upto,
    is_ntf_upto,
    is_vertex_splittable,
    polarize,
    replay_split_tree,
)
from .vnumber import (
    VReport,
    check_conjecture,
    local_v_number,
    stability_estimate,
    v_function,
    v_number,
    v_oracle,
)

EXIT_OK, EXIT_PARSE, EXIT_RESOURCE, EXIT_PRECONDITION = 0, 2, 3, 4

ENGINE = {"name": "vpowers", "version": __version__}


class _PartialResult(Exception):
    """Carries a partial report out of a command that hit the generator limit."""

    def __init__(self, report: Report, cause: ResourceLimitError):
        super().__init__(str(cause))
        self.report = report
        self.cause = cause


# ---------------------------------------------------------------------------
# input


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _is_graph_document(text: str) -> bool:
    return text.lstrip().startswith("{")


def load_graph(path: str) -> Graph | WeightedOrientedGraph:
    text = _read(path)
    if not _is_graph_document(text):
        raise ParseError("expected a graph document (JSON object)", 1, 1)
    return parse_graph(text)


def load_ideal(path: str) -> tuple[MonomialIdeal, Graph | None]:
    """The ideal named by INPUT, plus the undirected graph it came from (if any)."""
    text = _read(path)
    if _is_graph_document(text):
        g = parse_graph(text)
        if isinstance(g, WeightedOrientedGraph):
            return weighted_oriented_edge_ideal(g), None
        return edge_ideal(g), g
    _, ideal = parse_ideal(text)
    return ideal, None


# ---------------------------------------------------------------------------
# row helpers


def _witness_cells(w) -> dict[str, Any]:
    if w is None:
        return {"witness": None, "prime": None}
    return {"witness": str(w.f), "prime": str(w.prime)}


def _power_rows(report: VReport, with_locals: bool) -> list[dict[str, Any]]:
    rows = []
    for r in report.rows:
        row: dict[str, Any] = {"k": r.k, "alpha_k": r.alpha_k, "v": r.v, "b": r.b}
        row.update(_witness_cells(r.witness))
        row["generators"] = r.num_generators
        if with_locals:
            row["locals"] = ";".join(f"{p}:{w.degree}" for p, w in r.locals.items())
            row["lower_bound_ok"] = check_lower_bound_row(report.alpha * r.k, r.locals)
        rows.append(row)
    return rows


def check_lower_bound_row(alpha_k: int, locals_) -> bool:
    return all(w.degree >= alpha_k - p.alpha for p, w in locals_.items())


def _ideal_summary(I: MonomialIdeal) -> dict[str, Any]:
    return {"ring": " ".join(I.ring.variables), "ideal": str(I)}


def _vfun(I: MonomialIdeal, kmax: int, with_locals: bool, rep: Report) -> VReport:
    try:
        return v_function(I, kmax, with_locals=with_locals)
    except ResourceLimitError as exc:
        partial = exc.partial
        rep.rows = _power_rows(partial, with_locals)
        rep.summary.update({"alpha": I.alpha, "complete": False, "note": partial.note})
        raise _PartialResult(rep, exc) from exc


# ---------------------------------------------------------------------------
# ideal commands


def cmd_profile(args, rep: Report) -> None:
    I, g = load_ideal(args.input)
    prof = ideal_profile(I)
    rep.summary.update(_ideal_summary(I))
    rep.summary.update(
        {
            "alpha": prof.alpha,
            "equigenerated": prof.equigenerated,
            "squarefree": prof.squarefree,
            "lcm": str(prof.lcm_of_generators),
            "generators": prof.num_generators,
        }
    )
    if I.is_proper and not I.is_zero:
        rep.summary["c"] = c_invariant(I)
    rep.rows = [{"index": i, "generator": str(u), "degree": u.degree} for i, u in enumerate(I.generators, 1)]


def cmd_ass(args, rep: Report) -> None:
    I, _ = load_ideal(args.input)
    ass = associated_primes(I)
    rep.summary.update(_ideal_summary(I))
    rep.summary.update({"count": len(ass), "embedded": len(ass.embedded)})
    rep.rows = [{"prime": str(p), "height": len(p.variables), "minimal": p in ass.minimal} for p in ass]


def cmd_vnum(args, rep: Report) -> None:
    I, _ = load_ideal(args.input)
    w = v_number(I)
    rep.summary.update(_ideal_summary(I))
    rep.summary.update({"alpha": I.alpha, "v": w.degree, "witness": str(w.f), "prime": str(w.prime)})
    rep.summary["v_equals_alpha_minus_1"] = w.degree == I.alpha - 1


def cmd_vlocal(args, rep: Report) -> None:
    I, _ = load_ideal(args.input)
    names = [s.strip() for s in args.prime.strip("<>").split(",") if s.strip()]
    try:
        p = PrimeIdeal.from_names(I.ring, names)
    except KeyError as exc:
        raise ParseError(f"unknown variable {exc.args[0]} in --prime") from None
    w = local_v_number(I, p)
    rep.summary.update(_ideal_summary(I))
    rep.summary.update({"associated": w is not None, "v_p": None if w is None else w.degree})
    rep.summary.update(_witness_cells(w))
    rep.summary["prime"] = str(p)


def cmd_vfun(args, rep: Report) -> None:
    I, _ = load_ideal(args.input)
    rep.summary.update(_ideal_summary(I))
    report = _vfun(I, args.max_k, args.locals, rep)
    rep.summary.update({"alpha": I.alpha, "complete": True})
    rep.rows = _power_rows(report, args.locals)


def cmd_stab(args, rep: Report) -> None:
    I, g = load_ideal(args.input)
    bound = None
    if g is not None and graph_profile(g).connected:
        bound = v_stab_upper_bound(g)
    rep.summary.update(_ideal_summary(I))
    report = _vfun(I, args.max_k, False, rep)
    rep.rows = _power_rows(report, False)
    rep.summary["alpha"] = I.alpha
    est = stability_estimate(report, I.alpha, bound)
    if est is None:
        rep.summary.update({"stable_in_window": False, "slope": None, "intercept": None, "index": None})
        rep.summary.update({"certified": False, "certificate_source": "window-only"})
    else:
        rep.summary.update(
            {
                "stable_in_window": True,
                "slope": est.slope,
                "intercept": est.intercept,
                "index": est.index,
                "certified": est.certified,
                "certificate_source": est.certificate_source,
            }
        )
    rep.summary["bound"] = None if bound is None else bound.bound
    rep.summary["bound_source"] = None if bound is None else bound.source


def cmd_conjecture(args, rep: Report) -> None:
    I, _ = load_ideal(args.input)
    verdict = check_conjecture(I, args.max_k)
    rep.summary.update(_ideal_summary(I))
    rep.summary.update({"alpha": I.alpha, "c": verdict.c, "verdict": verdict.verdict})
    rep.summary["linear_powers_proxy"] = "linear quotients of each computed power (sufficient, not necessary)"
    rep.rows = [
        {"k": r.k, "linear_quotients": r.linear_quotients, "v": r.v, "predicted": r.predicted, "matches": r.matches}
        for r in verdict.rows
    ]


def cmd_oracle_vnum(args, rep: Report) -> None:
    I, _ = load_ideal(args.input)
    w = v_oracle(I)
    fast = v_number(I)
    rep.summary.update(_ideal_summary(I))
    rep.summary.update({"v": w.degree, "witness": str(w.f), "prime": str(w.prime)})
    rep.summary.update({"engine_v": fast.degree, "agree": fast.degree == w.degree})


def cmd_decompose(args, rep: Report) -> None:
    I, _ = load_ideal(args.input)
    comps = irreducible_decomposition(I, method=args.method)
    rep.summary.update(_ideal_summary(I))
    rep.summary.update({"method": args.method, "components": len(comps)})
    rep.rows = [{"component": str(c), "radical": str(c.radical)} for c in comps]


def cmd_symbolic(args, rep: Report) -> None:
    I, _ = load_ideal(args.input)
    sym = symbolic_power_squarefree(I, args.k)
    rep.summary.update(_ideal_summary(I))
    rep.summary.update({"k": args.k, "generators": len(sym), "equals_ordinary_power": sym == power(I, args.k)})
    rep.rows = [{"generator": str(u), "degree": u.degree} for u in sym.generators]


def cmd_ntf(args, rep: Report) -> None:
    I, _ = load_ideal(args.input)
    rows = is_ntf_upto(I, args.max_k)
    rep.summary.update(_ideal_summary(I))
    rep.summary["ntf_in_window"] = all(r.ass_contained for r in rows)
    rep.rows = [{"k": r.k, "ass_contained": r.ass_contained, "equals_symbolic": r.equals_symbolic} for r in rows]


def cmd_persistence(args, rep: Report) -> None:
    I, _ = load_ideal(args.input)
    flags = has_strong_persistence_upto(I, args.max_k)
    rep.summary.update(_ideal_summary(I))
    rep.summary["holds_in_window"] = all(flags)
    rep.rows = [{"k": k, "holds": ok} for k, ok in enumerate(flags, 1)]


def cmd_polarize(args, rep: Report) -> None:
    I, _ = load_ideal(args.input)
    pol, pmap = polarize(I)
    rep.summary.update(_ideal_summary(I))
    rep.summary.update({"polarized_ring": " ".join(pol.ring.variables), "polarized": str(pol)})
    rep.summary.update({"v": v_number(I).degree, "v_polarized": v_number(pol).degree})
    rep.rows = [{"generator": str(a), "polarized": str(b)} for a, b in pmap.generators]


def cmd_linear_quotients(args, rep: Report) -> None:
    I, _ = load_ideal(args.input)
    lq = has_linear_quotients(I, budget=args.budget)
    rep.summary.update(_ideal_summary(I))
    rep.summary["status"] = lq.status
    if lq.ordering:
        for i, u in enumerate(lq.ordering):
            colon = MonomialIdeal(I.ring, lq.ordering[:i]).colon(u) if i else None
            rep.rows.append({"position": i + 1, "generator": str(u), "colon": "" if colon is None else str(colon)})


def _flatten_tree(tree, path: str, out: list[dict[str, Any]]) -> None:
    if isinstance(tree, SplitLeaf):
        out.append({"node": path or "root", "kind": tree.kind, "variable": None, "ideal": str(tree.ideal)})
        return
    name = tree.ideal.ring.variables[tree.variable]
    out.append({"node": path or "root", "kind": "split", "variable": name, "ideal": str(tree.ideal)})
    _flatten_tree(tree.left, path + "L", out)
    _flatten_tree(tree.right, path + "R", out)


def cmd_vertex_splittable(args, rep: Report) -> None:
    I, _ = load_ideal(args.input)
    tree = is_vertex_splittable(I)
    rep.summary.update(_ideal_summary(I))
    rep.summary["splittable"] = tree is not None
    if tree is not None:
        rep.summary["replay_ok"] = replay_split_tree(tree) == I
        _flatten_tree(tree, "", rep.rows)


# ---------------------------------------------------------------------------
# graph commands


def _ideal_output(I: MonomialIdeal, rep: Report) -> None:
    rep.summary.update(_ideal_summary(I))
    rep.summary["generators"] = len(I)
    rep.summary["document"] = emit_ideal(I) if not I.is_zero else None
    rep.rows = [{"generator": str(u), "degree": u.degree} for u in I.generators]


def _undirected(g) -> Graph:
    if isinstance(g, WeightedOrientedGraph):
        raise PreconditionError("command needs an undirected graph")
    return g


def cmd_graph_edge_ideal(args, rep: Report) -> None:
    _ideal_output(edge_ideal(_undirected(load_graph(args.input))), rep)


def cmd_graph_cover_ideal(args, rep: Report) -> None:
    _ideal_output(cover_ideal(_undirected(load_graph(args.input))), rep)


def cmd_graph_path_ideal(args, rep: Report) -> None:
    _ideal_output(path_ideal(_undirected(load_graph(args.input)), args.t), rep)


def cmd_graph_wog_ideal(args, rep: Report) -> None:
    g = load_graph(args.input)
    if not isinstance(g, WeightedOrientedGraph):
        raise PreconditionError('wog-ideal needs a document with "directed": true')
    _ideal_output(weighted_oriented_edge_ideal(g), rep)


def _parse_edges(text: str) -> list[tuple[str, str]]:
    edges = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        parts = item.split("-")
        if len(parts) != 2 or not all(parts):
            raise ParseError(f"bad edge {item!r}; expected a-b")
        edges.append((parts[0], parts[1]))
    if not edges:
        raise ParseError("--edges lists no edges")
    return edges


def cmd_graph_colon_power(args, rep: Report) -> None:
    g = _undirected(load_graph(args.input))
    es = _parse_edges(args.edges)
    I = edge_ideal(g)
    colon = edge_power_colon(g, es)
    direct = colon_by_monomial(power(I, len(es) + 1), edge_product(g, es))
    rep.summary.update({"edges": args.edges, "s": len(es), "colon": str(colon), "direct_colon_equal": colon == direct})
    rep.rows = [{"u": u, "v": v} for u, v in sorted(even_connected_pairs(g, es), key=lambda p: (g.vertices.index(p[0]), g.vertices.index(p[1])))]


def cmd_graph_stab_bound(args, rep: Report) -> None:
    g = _undirected(load_graph(args.input))
    b = v_stab_upper_bound(g)
    rep.summary.update({"bound": b.bound, "source": b.source, "slope": b.slope, "intercept": b.intercept})
    rep.rows = [{"source": s, "bound": v, "clamped": max(1, v)} for s, v in b.candidates]


# ---------------------------------------------------------------------------
# corpus


def cmd_corpus(args, rep: Report) -> None:
    rng = random.Random(args.seed)
    rep.summary.update({"kind": args.kind, "seed": args.seed})
    if args.kind == "random-ideals":
        items = [emit_ideal(random_monomial_ideal(rng)) for _ in range(args.count)]
    elif args.kind == "squarefree-ideals":
        items = [emit_ideal(random_squarefree_ideal(rng)) for _ in range(args.count)]
    elif args.kind == "random-graphs":
        items = [emit_graph(random_connected_graph(rng)) for _ in range(args.count)]
    elif args.kind == "connected-graphs":
        items = [emit_graph(g) for g in connected_graphs(args.max_n)]
    else:
        items = [emit_graph(g) for g in connected_bipartite_graphs(args.max_n)]
    rep.summary["count"] = len(items)
    rep.rows = [{"index": i, "document": " ".join(doc.split())} for i, doc in enumerate(items, 1)]


# ---------------------------------------------------------------------------
# parser


def _global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default: Callable[[Any], Any] = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=sorted(RENDERERS), default=default("json"), help="report format")
    parser.add_argument("--seed", type=int, default=default(0), help="seed for corpus commands")
    parser.add_argument(
        "--limit-generators", type=int, default=default(None), metavar="N", help="cap on generators of any ideal"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vpowers", description="v-numbers of powers of monomial ideals")
    parser.add_argument("--version", action="version", version=f"vpowers {__version__}")
    _global_options(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help: str, takes_input: bool = True, parent=sub):
        p = parent.add_parser(name, help=help)
        _global_options(p, suppress=True)
        if takes_input:
            p.add_argument("input", help="ideal file, graph document, or - for stdin")
        p.set_defaults(func=func)
        return p

    add("profile", cmd_profile, "alpha, lcm, generator statistics")
    add("ass", cmd_ass, "associated primes in canonical order")
    add("vnum", cmd_vnum, "v-number with its witness")
    add("vlocal", cmd_vlocal, "local v-number at a prime").add_argument(
        "--prime", required=True, help="comma separated variables, e.g. x,z"
    )
    p = add("vfun", cmd_vfun, "v(I^k) for k = 1..K")
    p.add_argument("--max-k", type=int, required=True)
    p.add_argument("--locals", action="store_true", help="also report every local v-number")
    add("stab", cmd_stab, "stability estimate over k = 1..K").add_argument("--max-k", type=int, required=True)
    add("conjecture", cmd_conjecture, "compare v(I^k) with alpha k - c").add_argument(
        "--max-k", type=int, required=True
    )
    add("oracle-vnum", cmd_oracle_vnum, "brute-force v-number over divisors of the lcm")
    add("decompose", cmd_decompose, "irredundant irreducible decomposition").add_argument(
        "--method", choices=("incremental", "split"), default="incremental"
    )
    add("symbolic", cmd_symbolic, "symbolic power of a square-free ideal").add_argument(
        "--k", type=int, required=True
    )
    add("ntf", cmd_ntf, "normal torsion-freeness checks for k <= K").add_argument(
        "--max-k", type=int, required=True
    )
    add("persistence", cmd_persistence, "strong persistence checks for k <= K").add_argument(
        "--max-k", type=int, required=True
    )
    add("polarize", cmd_polarize, "polarization and its v-number")
    add("linear-quotients", cmd_linear_quotients, "search a linear quotient order").add_argument(
        "--budget", type=int, default=200_000, help="maximum search expansions"
    )
    add("vertex-splittable", cmd_vertex_splittable, "vertex splitting tree")

    g = sub.add_parser("graph", help="graph constructions and bounds")
    gsub = g.add_subparsers(dest="graph_command", required=True)
    add("edge-ideal", cmd_graph_edge_ideal, "edge ideal I(G)", parent=gsub)
    add("cover-ideal", cmd_graph_cover_ideal, "cover ideal J(G)", parent=gsub)
    add("path-ideal", cmd_graph_path_ideal, "t-path ideal", parent=gsub).add_argument("--t", type=int, required=True)
    add("wog-ideal", cmd_graph_wog_ideal, "edge ideal of a weighted oriented graph", parent=gsub)
    add("colon-power", cmd_graph_colon_power, "(I^{s+1} : e_1...e_s)", parent=gsub).add_argument(
        "--edges", required=True, help="edge list such as x1-x2,x2-x3"
    )
    add("stab-bound", cmd_graph_stab_bound, "upper bound on the v-stability index", parent=gsub)

    p = add("corpus", cmd_corpus, "emit a seeded or exhaustive test corpus", takes_input=False)
    p.add_argument(
        "--kind",
        choices=("random-ideals", "squarefree-ideals", "random-graphs", "connected-graphs", "bipartite-graphs"),
        required=True,
    )
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--max-n", type=int, default=5)
    return parser


def _flags(args: argparse.Namespace) -> dict[str, Any]:
    skip = {"func", "command", "graph_command"}
    return {k.replace("_", "-"): v for k, v in sorted(vars(args).items()) if k not in skip}


def _command_name(args: argparse.Namespace) -> str:
    if args.command == "graph":
        return f"graph {args.graph_command}"
    return args.command


def run(argv: list[str] | None = None) -> tuple[str, int, str]:
    """Execute one command; returns (stdout text, exit code, stderr text)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    rep = Report(_command_name(args), dict(ENGINE), _flags(args))
    render = RENDERERS[args.format]
    try:
        with generator_limit(args.limit_generators) if args.limit_generators else contextlib.nullcontext():
            args.func(args, rep)
    except _PartialResult as exc:
        return render(exc.report), EXIT_RESOURCE, f"resource limit: {exc.cause}\n"
    except ParseError as exc:
        return "", EXIT_PARSE, f"parse error: {exc}\n"
    except ResourceLimitError as exc:
        return "", EXIT_RESOURCE, f"resource limit: {exc}\n"
    except PreconditionError as exc:
        return "", EXIT_PRECONDITION, f"precondition violated: {exc}\n"
    except OSError as exc:
        return "", EXIT_PARSE, f"cannot read input: {exc}\n"
    return render(rep), EXIT_OK, ""


def main(argv: list[str] | None = None) -> int:
    out, code, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
