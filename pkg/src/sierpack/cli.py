"""Command-line interface.

Commands: product, chirho, schirho, family, recognize, verify-paper.
Results are JSON on stdout; graphs are written in the canonical edge-list
format.  Exit codes: 0 success (a not_a_product answer is still success),
1 domain rejection, 2 malformed input, 3 budget exhaustion (with partial
JSON on stdout).  SIERPACK_NODE_BUDGET sets the default solver budget.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Optional

from . import checks
from .coloring import (chi_rho_decision, chi_rho_exact,
                       verify_packing_coloring)
from .errors import (EnumerationBudgetExceeded, InputFormatError,
                     SearchBudgetExceeded, SierpackError)
from .families import (complete_by_K2_value, complete_pair_value,
                       corona_table_value, k2_special_value,
                       path_path_min_map, path_star_coloring,
                       star_path_coloring, star_star_values_and_colorings)
from .formats import emit_dot, emit_graph_text, sniff_parse
from .graphs import Graph, complete, path, star
from .product import VertexMap, sierpinski_chi, sierpinski_product

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3

_FAMILY_SPEC = re.compile(r"^([KPS])(\d+)$|^K1,(\d+)$")


def _graph_from_spec(spec: str) -> Graph:
    """K5 / P4 / S3 / K1,3 shorthand, or a path to a graph file."""
    m = _FAMILY_SPEC.match(spec)
    if m:
        if m.group(3) is not None:
            return star(int(m.group(3)))
        kind, num = m.group(1), int(m.group(2))
        return {"K": complete, "P": path, "S": star}[kind](num)
    try:
        with open(spec, "r", encoding="utf-8") as fh:
            return sniff_parse(fh.read())
    except OSError as exc:
        raise InputFormatError(f"cannot read graph {spec!r}: {exc}") from None


def _emit(payload: dict, out: Optional[str]) -> None:
    text = json.dumps(payload, indent=2)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)


def _witness_dict(g: Graph, coloring) -> dict:
    ver = verify_packing_coloring(g, coloring)
    return {"order": g.order, "k": coloring.k,
            "colors": list(coloring.colors), "verified": bool(ver.ok)}


def _default_budget() -> Optional[int]:
    raw = os.environ.get("SIERPACK_NODE_BUDGET")
    return int(raw) if raw else None


def _checked_budget(budget: Optional[int]) -> Optional[int]:
    if budget is None:
        budget = _default_budget()
    if budget is not None and budget < 1:
        raise InputFormatError("budgets must be positive")
    return budget


# ---------------------------------------------------------------------------
# subcommands

def _cmd_product(args) -> int:
    base = _graph_from_spec(args.base)
    fiber = _graph_from_spec(args.fiber)
    if args.map:
        vmap = VertexMap.parse(args.map)
    elif args.map_constant is not None:
        vmap = VertexMap.constant(base.order, fiber.order, args.map_constant)
    else:
        raise InputFormatError("product needs --map or --map-constant")
    prod = sierpinski_product(base, fiber, vmap)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(emit_graph_text(prod.graph))
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(emit_dot(prod.graph, "product"))
    _emit({"order": prod.graph.order, "size": prod.graph.size,
           "connecting_edges": len(prod.connecting),
           "map": vmap.to_text(),
           "graph": None if args.out else emit_graph_text(prod.graph)},
          None)
    return EXIT_OK


def _cmd_chirho(args) -> int:
    with open(args.graph, "r", encoding="utf-8") as fh:
        g = sniff_parse(fh.read())
    budget = _checked_budget(args.budget)
    if args.decision is not None:
        witness = chi_rho_decision(g, args.decision, node_budget=budget,
                                   max_order=args.max_order)
        if witness is None:
            _emit({"order": g.order, "decision": args.decision,
                   "status": "UNSAT"}, args.json)
        else:
            payload = {"decision": args.decision, "status": "SAT"}
            payload.update(_witness_dict(g, witness))
            _emit(payload, args.json)
        return EXIT_OK
    value, witness = chi_rho_exact(g, node_budget=budget,
                                   max_order=args.max_order)
    payload = {"value": value}
    payload.update(_witness_dict(g, witness))
    _emit(payload, args.json)
    return EXIT_OK


def _cmd_schirho(args) -> int:
    base = _graph_from_spec(args.base)
    fiber = _graph_from_spec(args.fiber)
    budget = _checked_budget(args.budget)
    result = sierpinski_chi(base, fiber, args.mode,
                            reduce_symmetry=args.reduce,
                            enum_bound=args.enum_bound,
                            node_budget=budget,
                            max_order=args.max_order)
    payload = {"mode": result.mode, "value": result.value,
               "explored_maps": result.explored, "complete": result.complete}
    if result.witness_map is not None:
        payload["witness_map"] = result.witness_map.to_text()
        prod = sierpinski_product(base, fiber, result.witness_map)
        payload["witness_coloring"] = _witness_dict(prod.graph,
                                                    result.witness_coloring)
    _emit(payload, args.json)
    return EXIT_OK if result.complete else EXIT_BUDGET


def _cmd_family(args) -> int:
    params = {}
    for item in (args.params.split(",") if args.params else []):
        key, _, val = item.partition("=")
        params[key.strip()] = int(val)
    name = args.name
    coloring = None
    graph = None
    if name == "complete-complete":
        value = complete_pair_value(params["m"], params["n"], args.mode)
    elif name == "complete-k2":
        if "m1" in params:
            value = complete_by_K2_value(params["m"], params["m1"],
                                         params["m2"])
        else:
            value = k2_special_value(params["m"], "fiber_K2", args.mode)
    elif name == "k2-complete":
        value = k2_special_value(params["n"], "base_K2", args.mode)
    elif name == "corona":
        value = corona_table_value(params["n"], params["p"])
    elif name == "path-path":
        vmap, coloring = path_path_min_map(params["m"], params["n"])
        graph = sierpinski_product(path(params["m"]), path(params["n"]),
                                   vmap).graph
        value = {"family": "path-path", "params": params, "kind": "exact",
                 "value": 3, "source": "path-path-min", "map": vmap.to_text()}
    elif name == "star-path":
        mode = "min" if args.mode == "min" else "max_construction"
        vmap = VertexMap.parse(args.map) if args.map else None
        coloring = star_path_coloring(params["m"], params["n"], vmap, mode)
        graph = sierpinski_product(
            star(params["m"]), path(params["n"]),
            vmap if vmap is not None else
            VertexMap.constant(params["m"] + 1, params["n"], 0)).graph
        value = {"family": "star-path", "params": params, "kind":
                 "exact" if mode == "min" else "upper_bound",
                 "value": 3 if mode == "min" else 7,
                 "source": "star-path-min" if mode == "min"
                 else "star-path-max-bound"}
    elif name == "path-star":
        mode = "min" if args.mode == "min" else "max_construction"
        vmap = VertexMap.parse(args.map) if args.map else None
        coloring = path_star_coloring(params["m"], params["n"], vmap, mode,
                                      cyclic_extension=args.cyclic)
        from .families import path_star_min_map
        used = vmap if vmap is not None else path_star_min_map(params["m"],
                                                               params["n"])
        graph = sierpinski_product(path(params["m"]), star(params["n"]),
                                   used).graph
        value = {"family": "path-star", "params": params, "kind":
                 "exact" if mode == "min" else "upper_bound",
                 "value": 3 if mode == "min" else 9,
                 "source": "path-star-min" if mode == "min"
                 else "path-star-max-bound"}
    elif name == "star-star":
        vmap = VertexMap.parse(args.map) if args.map else None
        fam, coloring = star_star_values_and_colorings(params["m"],
                                                       params["n"], vmap)
        from .families import star_star_min_map
        used = vmap if vmap is not None else star_star_min_map(params["m"],
                                                               params["n"])
        graph = sierpinski_product(star(params["m"]), star(params["n"]),
                                   used).graph
        value = fam
    else:
        raise InputFormatError(f"unknown family {name!r}")
    payload = value.to_json_dict() if hasattr(value, "to_json_dict") else value
    if coloring is not None and graph is not None:
        witness = _witness_dict(graph, coloring)
        payload["coloring_k"] = witness["k"]
        payload["coloring_verified"] = witness["verified"]
        if args.emit_coloring:
            with open(args.emit_coloring, "w", encoding="utf-8") as fh:
                fh.write(json.dumps(witness, indent=2) + "\n")
    _emit(payload, args.json)
    return EXIT_OK


def _cmd_recognize(args) -> int:
    with open(args.graph, "r", encoding="utf-8") as fh:
        g = sniff_parse(fh.read())
    out = recognize_tree_product_cli(g, args.exhaustive)
    _emit(out, args.json)
    return EXIT_OK


def recognize_tree_product_cli(g: Graph, exhaustive: bool) -> dict:
    from .recognition import recognize_tree_product
    outcome = recognize_tree_product(g, exhaustive)
    factorizations = []
    for fact in outcome.factorizations:
        factorizations.append({
            "n1": fact.base.order, "n2": fact.fiber.order,
            "base_edges": emit_graph_text(fact.base),
            "fiber_edges": emit_graph_text(fact.fiber),
            "map": fact.vmap.to_text()})
    return {"status": outcome.status, "order": g.order,
            "factorizations": factorizations,
            "diagnostics": outcome.diagnostics}


def _cmd_verify_paper(args) -> int:
    results = checks.run_all(args.scale, jobs=args.jobs)
    payload = checks.report_json(results, args.scale)
    _emit(payload, args.json)
    return EXIT_OK if payload["summary"]["fail"] == 0 else EXIT_DOMAIN


# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sierpack",
        description="Sierpinski products of graphs: construction, exact "
                    "packing chromatic numbers, constructive colorings, and "
                    "tree-product recognition.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("product", help="build a product graph")
    p.add_argument("--base", required=True,
                   help="graph file or K5 / P4 / S3 / K1,3 shorthand")
    p.add_argument("--fiber", required=True)
    p.add_argument("--map", help="vertex map, e.g. '5 4: 1 3 3 0 2'")
    p.add_argument("--map-constant", type=int, default=None,
                   help="constant map with this fiber vertex")
    p.add_argument("--out", help="write the product graph here")
    p.add_argument("--dot", help="write a DOT rendering here")
    p.set_defaults(fn=_cmd_product)

    p = sub.add_parser("chirho", help="exact packing chromatic number")
    p.add_argument("graph", help="graph file (edge list or graph6)")
    p.add_argument("--decision", type=int, default=None,
                   help="ask SAT/UNSAT for this many colors instead")
    p.add_argument("--budget", type=int, default=None,
                   help="solver node budget (default unlimited)")
    p.add_argument("--max-order", type=int, default=40)
    p.add_argument("--json", help="also write the result JSON here")
    p.set_defaults(fn=_cmd_chirho)

    p = sub.add_parser("schirho",
                       help="optimize chi_rho over all connecting maps")
    p.add_argument("--base", required=True)
    p.add_argument("--fiber", required=True)
    p.add_argument("--mode", choices=("min", "max"), default="min")
    p.add_argument("--reduce", action="store_true",
                   help="enumerate one map per symmetry orbit")
    p.add_argument("--enum-bound", type=int, default=2_000_000)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--max-order", type=int, default=40)
    p.add_argument("--json", help="also write the result JSON here")
    p.set_defaults(fn=_cmd_schirho)

    p = sub.add_parser("family", help="closed-form family values and "
                                      "constructive colorings")
    p.add_argument("name", choices=("complete-complete", "complete-k2",
                                    "k2-complete", "corona", "path-path",
                                    "star-path", "path-star", "star-star"))
    p.add_argument("--params", required=True, help="e.g. m=3,n=4")
    p.add_argument("--mode", choices=("min", "max"), default="min")
    p.add_argument("--map", help="vertex map for the construction modes")
    p.add_argument("--cyclic", action="store_true",
                   help="allow cyclic extension of the 64-entry pattern")
    p.add_argument("--emit-coloring", help="write the witness coloring here")
    p.add_argument("--json", help="also write the result JSON here")
    p.set_defaults(fn=_cmd_family)

    p = sub.add_parser("recognize",
                       help="factor a graph as a product of two trees")
    p.add_argument("graph")
    p.add_argument("--exhaustive", action="store_true",
                   help="backtrack over peel edges instead of greedy choice")
    p.add_argument("--json", help="also write the result JSON here")
    p.set_defaults(fn=_cmd_recognize)

    p = sub.add_parser("verify-paper",
                       help="recompute every published value and report "
                            "pass/fail/discrepancy per criterion")
    p.add_argument("--scale", choices=checks.SCALES, default="desk")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", help="also write the report here")
    p.set_defaults(fn=_cmd_verify_paper)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except InputFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (SearchBudgetExceeded, EnumerationBudgetExceeded) as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (SierpackError, ValueError, KeyError) as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    raise SystemExit(main())
