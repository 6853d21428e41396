"""Command-line surface: single-graph predicates, product inspection,
census and verification campaigns, conjecture search, witness constructions,
and matching-structure decomposition.

Graphs are given as graph6 strings or as "named:<id>" catalog shorthand
(named:C4, named:bull, named:K2,3, ...).  Campaign output is JSONL with a
summary record last.  Exit codes: 0 all checks passed, 1 violations found,
2 usage or parse error, 3 inconclusive results present.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import census as census_mod
from .domination import clique_partition_certificate, domination_number, \
    independence_number, is_well_covered, is_well_dominated, \
    min_dominating_set
from .gallai_edmonds import check_lemma_independent, decompose, \
    verify_structure
from .graph import Graph6Error, from_graph6, is_connected, named, to_graph6
from .matching import is_equimatchable, is_well_edge_dominated, \
    matching_number, maximum_matching
from .products import CapacityError, strong_product
from .verdict import PropertyVerdict
from .witnesses import default_independent_set, default_sub_matching, \
    find_independent_triple, k3_witness, mup_star_star, mup_star_triangle, \
    p3_witness, perfect_matching_avoiding, product_matching


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def parse_graph(spec: str):
    """graph6 string or named:<id>[:params] catalog shorthand."""
    if spec.startswith("named:"):
        parts = spec.split(":")[1:]
        if len(parts) == 1:
            return named(parts[0])
        return named(parts[0], *(int(p) for p in parts[1:]))
    return from_graph6(spec)


def _verdict_json(v: PropertyVerdict) -> dict:
    return census_mod._verdict_json(v)


def _props_record(G) -> dict:
    centers = clique_partition_certificate(G)
    rec = {
        "g6": to_graph6(G) if G.n <= 62 else None,
        "n": G.n,
        "edges": G.edge_count(),
        "connected": is_connected(G),
        "gamma": domination_number(G),
        "alpha": independence_number(G),
        "matching_number": matching_number(G),
        "min_dominating_set": list(min_dominating_set(G)),
        "maximum_matching": census_mod._edges_json(maximum_matching(G)),
        "well_dominated": _verdict_json(is_well_dominated(G)),
        "well_covered": _verdict_json(is_well_covered(G)),
        "equimatchable": _verdict_json(is_equimatchable(G)),
        "trivially_well_dominated": centers is not None,
        "clique_partition_centers": list(centers) if centers else None,
    }
    if G.edge_count():
        rec["well_edge_dominated"] = _verdict_json(is_well_edge_dominated(G))
    else:
        rec["well_edge_dominated"] = None
    return rec


def _emit(text: str, output):
    if output:
        with open(output, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report_exit(report, output) -> int:
    _emit(report.to_jsonl(), output)
    return report.exit_code()


def cmd_props(args) -> int:
    G = parse_graph(args.graph)
    _emit(_dumps(_props_record(G)) + "\n", args.output)
    return 0


def cmd_product(args) -> int:
    G, H = parse_graph(args.g), parse_graph(args.h)
    P = strong_product(G, H)
    rec = _props_record(P.graph)
    rec["factors_g6"] = [to_graph6(G), to_graph6(H)]
    _emit(_dumps(rec) + "\n", args.output)
    return 0


def cmd_census(args) -> int:
    return _report_exit(census_mod.census_well_dominated(args.n), args.output)


def cmd_verify(args) -> int:
    jobs = args.jobs
    if args.target == "theorem1":
        report = census_mod.verify_theorem1(
            args.max_g or 5, args.max_h or 5, jobs=jobs,
            time_budget_ms=args.time_budget_ms)
    elif args.target == "theorem2":
        report = census_mod.verify_theorem2(
            args.max_g or 4, args.max_h or 4,
            jobs=jobs, time_budget_ms=args.time_budget_ms)
    elif args.target == "theorem3":
        report = census_mod.verify_theorem3(
            args.max_product, jobs=jobs,
            time_budget_ms=args.time_budget_ms)
    else:
        report = census_mod.verify_side_properties(
            args.max_n, args.max_product_side, jobs=jobs)
    return _report_exit(report, args.output)


def cmd_conjecture(args) -> int:
    G = parse_graph(args.graph)
    candidates = None
    if args.candidates:
        candidates = list(census_mod.Corpus.from_graph6_file(args.candidates))
    result = census_mod.conjecture_explore(G, candidates)
    rec = {
        "campaign": "conjecture",
        "g6_inputs": [to_graph6(G)],
        "verdicts": {"witness_found": result is not None},
        "certificates": result or {},
        "status": "pass" if result is not None else "inconclusive",
        "millis": None,
    }
    _emit(_dumps(rec) + "\n", args.output)
    return 0 if result is not None else 3


def cmd_witness(args) -> int:
    cid = args.construction
    params = args.params
    if cid in ("mup-star-star", "mup_star_star"):
        rep = mup_star_star(int(params[0]), int(params[1]))
    elif cid in ("mup-star-triangle", "mup_star_triangle"):
        rep = mup_star_triangle(int(params[0]))
    elif cid == "p3":
        G = parse_graph(params[0])
        independent = default_independent_set(G)
        rep = p3_witness(G, independent,
                         default_sub_matching(G, independent))
    elif cid == "k3":
        G = parse_graph(params[0])
        triple = find_independent_triple(G)
        matchings = [perfect_matching_avoiding(G, u) for u in triple]
        rep = k3_witness(G, triple, matchings)
    elif cid in ("product-matching", "product_matching"):
        G, H = parse_graph(params[0]), parse_graph(params[1])
        rep = product_matching(G, H, maximum_matching(G),
                               maximum_matching(H))
    else:
        raise SystemExit2(f"unknown witness construction {cid!r}")
    _emit(_dumps(rep.to_record()) + "\n", args.output)
    return 0 if rep.verified else 1


def cmd_decompose(args) -> int:
    G = parse_graph(args.graph)
    dec = decompose(G)
    struct = verify_structure(G, dec)
    rec = {
        "g6": to_graph6(G) if G.n <= 62 else None,
        "decomposition": dec.as_dict(),
        "component_count": dec.c,
        "structure_ok": struct.ok,
        "structure_violations": struct.violations,
    }
    if G.n % 2 == 1 and is_connected(G) and is_equimatchable(G).holds:
        lem = check_lemma_independent(G)
        rec["independent_attachment_ok"] = lem.ok
    _emit(_dumps(rec) + "\n", args.output)
    return 0 if struct.ok else 1


class SystemExit2(Exception):
    """Usage-level error, mapped to exit code 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise SystemExit2(message)


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("STRONGPROD_JOBS", "1")))
    except ValueError:
        return 1


def build_parser() -> _Parser:
    p = _Parser(prog="strongprod",
                description="Exact domination and matching laboratory for "
                            "strong product graphs.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", help="write JSONL here instead of stdout")
    common.add_argument("--jobs", type=int, default=_default_jobs(),
                        help="worker processes for campaigns "
                             "(default: STRONGPROD_JOBS or 1)")
    sub = p.add_subparsers(dest="command", required=True,
                           parser_class=_Parser)

    def add(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    sp = add("props", help="all predicate verdicts for one graph")
    sp.add_argument("graph")
    sp.set_defaults(func=cmd_props)

    sp = add("product", help="build and analyze a strong product")
    sp.add_argument("g")
    sp.add_argument("h")
    sp.set_defaults(func=cmd_product)

    sp = add("census",
                        help="connected well-dominated graphs on n vertices")
    sp.add_argument("n", type=int)
    sp.set_defaults(func=cmd_census)

    sp = add("verify", help="run a verification campaign")
    sp.add_argument("target",
                    choices=["theorem1", "theorem2", "theorem3", "side"])
    sp.add_argument("--max-g", type=int, default=None,
                    help="factor bound (default 5 for theorem1, 4 for "
                         "theorem2)")
    sp.add_argument("--max-h", type=int, default=None)
    sp.add_argument("--max-product", type=int, default=16)
    sp.add_argument("--max-n", type=int, default=6,
                    help="corpus bound for the side-property campaign")
    sp.add_argument("--max-product-side", type=int, default=30,
                    help="product size cap for 2-connectivity checks")
    sp.add_argument("--time-budget-ms", type=int, default=None)
    sp.set_defaults(func=cmd_verify)

    sp = add("conjecture",
                        help="search for a well-dominated partner whose "
                             "product breaks well-domination")
    sp.add_argument("graph")
    sp.add_argument("--candidates",
                    help="graph6 file of candidate partners "
                         "(default: internal corpus, n <= 5)")
    sp.set_defaults(func=cmd_conjecture)

    sp = add("witness", help="run a proof-witness construction")
    sp.add_argument("construction",
                    help="mup-star-star n t | mup-star-triangle n | "
                         "p3 <graph> | k3 <graph> | "
                         "product-matching <graph> <graph>")
    sp.add_argument("params", nargs="*")
    sp.set_defaults(func=cmd_witness)

    sp = add("decompose",
                        help="matching-structure partition of one graph")
    sp.add_argument("graph")
    sp.set_defaults(func=cmd_decompose)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (Graph6Error, ValueError, CapacityError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
