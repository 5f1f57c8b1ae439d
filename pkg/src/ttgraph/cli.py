"""Command-line interface.

Exit codes: 0 = decided/constructed, 2 = ran out of budget (unknown),
1 = usage or parse error.  `--json` switches to the machine format
{"verb", "params", "result", "witness", "proof_status", "elapsed_ms"}.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Optional

from . import deltas as delta_mod
from . import homs, randlab, ttmaps
from .graphs import Digraph, GraphError, ParseError, circuit_union, parse_graph, product, subdivide_balanced
from .groups import parse_group, reduce_group
from .named import is_named, named_graph
from .tensions import parse_edge_function


@dataclass
class CommandResult:
    verb: str
    params: dict[str, Any]
    result: Any
    witness: Optional[str] = None
    proof_status: str = "n/a"  # "exhaustive" | "budget" | "n/a"
    elapsed_ms: float = 0.0
    exit_code: int = 0
    lines: list[str] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(
            {
                "verb": self.verb,
                "params": self.params,
                "result": self.result,
                "witness": self.witness,
                "proof_status": self.proof_status,
                "elapsed_ms": round(self.elapsed_ms, 3),
            },
            default=str,
        )


def load_graph(spec: str, role: str = "graph") -> Digraph:
    if is_named(spec):
        return named_graph(spec)
    try:
        with open(spec) as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {role} {spec!r}: {exc}") from None
    return parse_graph(text, spec)


def _read(path: str) -> str:
    with open(path) as fh:
        return fh.read()


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="ttgraph", description=__doc__)
    top.add_argument("--json", action="store_true", help="machine-readable output")
    top.add_argument("--budget-nodes", type=int, default=None, help="search node budget")
    top.add_argument("--seed", type=int, default=0, help="seed for randomized verbs")
    top.add_argument("--threads", type=int, default=1,
                     help="worker count (runs are deterministic; serial execution)")
    top.add_argument("-o", "--output", default=None, help="write construction/witness here")
    sub = top.add_subparsers(dest="verb", required=True)

    def p(name: str, **kw):
        return sub.add_parser(name, **kw)

    for name in ("check-tt", "divisor-set"):
        sp = p(name)
        sp.add_argument("--g", required=True)
        sp.add_argument("--h", required=True)
        sp.add_argument("--map", required=True)
        if name == "check-tt":
            sp.add_argument("--group", required=True)
    sp = p("check-cut-tt")
    sp.add_argument("--g", required=True)
    sp.add_argument("--h", required=True)
    sp.add_argument("--map", required=True)
    for name in ("find-tt", "compare", "homotens-pair"):
        sp = p(name)
        sp.add_argument("--g", required=True)
        sp.add_argument("--h", required=True)
        if name != "homotens-pair":
            sp.add_argument("--group", required=True)
    sp = p("rigid")
    sp.add_argument("--g", required=True)
    sp.add_argument("--group", required=True)
    sp = p("gm")
    sp.add_argument("--g", required=True)
    sp.add_argument("--group", required=True)
    sp = p("find-hom")
    sp.add_argument("--g", required=True)
    sp.add_argument("--h", required=True)
    sp = p("chi")
    sp.add_argument("--g", required=True)
    sp = p("chi-tt")
    sp.add_argument("--g", required=True)
    sp.add_argument("--nmax", type=int, default=12)
    sp = p("nice")
    sp.add_argument("--g", required=True)
    sp = p("k5-check")
    sp.add_argument("--h", required=True)
    sp = p("delta")
    sp.add_argument("--h", required=True)
    sp = p("functor-f")
    sp.add_argument("--g", required=True)
    sp.add_argument("--base", required=True, help="rigid base file (edge list + marks line)")
    sp = p("rigid-search")
    sp.add_argument("--max-vertices", type=int, required=True)
    sp.add_argument("--samples", type=int, default=2000)
    sp = p("cone")
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--base", required=True, help="comma-separated generators")
    sp.add_argument("--n", type=int, default=None)
    sp = p("tt-set-circuits")
    sp.add_argument("--a", required=True, help="comma-separated source circuit lengths")
    sp.add_argument("--b", required=True, help="comma-separated target circuit lengths")
    sp.add_argument("--nmax", type=int, default=30)
    sp = p("experiment")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--trials", type=int, required=True)
    sp.add_argument("--predicate", choices=randlab.PREDICATES, default="nice")
    sp = p("construct")
    sp.add_argument("kind", choices=("subdivide", "product", "circuits"))
    sp.add_argument("--h", default=None)
    sp.add_argument("--r", default=None)
    sp.add_argument("--p", type=int, default=None)
    sp.add_argument("--lengths", default=None, help="comma-separated circuit lengths")
    sp = p("paper-suite")
    sp.add_argument("--criteria", default=None, help="comma-separated criterion numbers")
    return top


def _ints(csv: str) -> list[int]:
    return [int(x) for x in csv.split(",") if x.strip()]


def dispatch(args: argparse.Namespace) -> CommandResult:
    verb = args.verb
    budget = args.budget_nodes
    params = {k: v for k, v in vars(args).items() if k not in ("json", "verb") and v is not None}
    res = CommandResult(verb, params, None)

    if verb == "check-tt":
        g, h = load_graph(args.g, "--g"), load_graph(args.h, "--h")
        f = ttmaps.parse_edge_map(g, h, _read(args.map))
        res.result = ttmaps.is_tt(f, parse_group(args.group))
        res.proof_status = "exhaustive"
        res.lines = [f"is_tt = {res.result}"]
    elif verb == "check-cut-tt":
        g, h = load_graph(args.g, "--g"), load_graph(args.h, "--h")
        f = ttmaps.parse_edge_map(g, h, _read(args.map))
        res.result = ttmaps.is_cut_tt_Z(f)
        res.proof_status = "exhaustive"
        res.lines = [f"is_cut_tt_Z = {res.result}"]
    elif verb == "divisor-set":
        g, h = load_graph(args.g, "--g"), load_graph(args.h, "--h")
        f = ttmaps.parse_edge_map(g, h, _read(args.map))
        ds = ttmaps.tt_divisor_set(f)
        res.result = {"kind": ds.kind, "members": None if ds.kind == "all" else ds.members()}
        res.proof_status = "exhaustive"
        res.lines = [f"TT(f) = {ds}"]
    elif verb == "find-tt":
        g, h = load_graph(args.g, "--g"), load_graph(args.h, "--h")
        out = ttmaps.find_tt(g, h, parse_group(args.group), budget=budget)
        res.result = out.status
        res.proof_status = "exhaustive" if out.exhaustive else "budget"
        if out.witness is not None:
            res.witness = out.witness.to_text()
        if out.status == "budget":
            res.exit_code = 2
        res.lines = [f"status = {out.status} (nodes {out.nodes})"]
        if res.witness:
            res.lines.append(res.witness.rstrip())
    elif verb == "compare":
        g, h = load_graph(args.g, "--g"), load_graph(args.h, "--h")
        cmpres = ttmaps.compare(g, h, parse_group(args.group), budget=budget)
        res.result = cmpres.relation
        res.proof_status = cmpres.proof_status
        if cmpres.relation == "unknown":
            res.exit_code = 2
        res.lines = [f"relation = {cmpres.relation} [{cmpres.proof_status}]"]
    elif verb == "rigid":
        g = load_graph(args.g, "--g")
        try:
            res.result = ttmaps.is_tt_rigid(g, parse_group(args.group), budget=budget)
            res.proof_status = "exhaustive"
            res.lines = [f"tt_rigid = {res.result}"]
        except homs.SearchBudgetExceeded:
            res.result = "unknown"
            res.proof_status = "budget"
            res.exit_code = 2
            res.lines = ["tt_rigid = unknown (budget)"]
    elif verb == "gm":
        g = load_graph(args.g, "--g")
        val = ttmaps.g_invariant(g, parse_group(args.group))
        res.result = "infinity" if val == math.inf else val
        res.proof_status = "exhaustive"
        res.lines = [f"g = {res.result}"]
    elif verb == "find-hom":
        g, h = load_graph(args.g, "--g"), load_graph(args.h, "--h")
        try:
            hom = homs.find_hom(g, h, budget=budget)
            res.result = "found" if hom else "none"
            res.proof_status = "exhaustive"
            if hom:
                res.witness = hom.to_text()
        except homs.SearchBudgetExceeded:
            res.result = "budget"
            res.proof_status = "budget"
            res.exit_code = 2
        res.lines = [f"status = {res.result}"]
        if res.witness:
            res.lines.append(res.witness.rstrip())
    elif verb == "chi":
        res.result = homs.chromatic_number(load_graph(args.g, "--g"))
        res.proof_status = "exhaustive"
        res.lines = [f"chi = {res.result}"]
    elif verb == "chi-tt":
        val = delta_mod.chi_tt(load_graph(args.g, "--g"), nmax=args.nmax, budget=budget)
        res.result = val if val is not None else "unknown"
        res.proof_status = "exhaustive" if val is not None else "budget"
        if val is None:
            res.exit_code = 2
        res.lines = [f"chi_tt = {res.result}"]
    elif verb == "nice":
        rep = homs.is_nice(load_graph(args.g, "--g"))
        res.result = {"nice": rep.ok, "failed_condition": rep.failed_condition,
                      "witness": rep.witness}
        res.proof_status = "exhaustive"
        res.lines = [f"nice = {rep.ok}" + (
            "" if rep.ok else f" (condition {rep.failed_condition} fails at {rep.witness})")]
    elif verb == "homotens-pair":
        g, h = load_graph(args.g, "--g"), load_graph(args.h, "--h")
        try:
            res.result = homs.homotens_pair(g, h, budget=budget)
            res.proof_status = "exhaustive"
        except homs.SearchBudgetExceeded:
            res.result = "unknown"
            res.proof_status = "budget"
            res.exit_code = 2
        res.lines = [f"homotens_pair = {res.result}"]
    elif verb == "k5-check":
        try:
            res.result = homs.k5_target_check(load_graph(args.h, "--h"), budget=budget)
            res.proof_status = "exhaustive"
        except homs.SearchBudgetExceeded:
            res.result = "unknown"
            res.proof_status = "budget"
            res.exit_code = 2
        res.lines = [f"k5_target_check = {res.result}"]
    elif verb == "delta":
        d = delta_mod.delta(load_graph(args.h, "--h"))
        res.result = {"vertices": d.n, "edges": d.m}
        res.witness = d.to_edge_list_text()
        res.proof_status = "n/a"
        res.lines = [f"delta: {d.n} vertices, {d.m} edges"]
    elif verb == "functor-f":
        base = delta_mod.parse_rigid_base(_read(args.base))
        img = delta_mod.functor_image(load_graph(args.g, "--g"), base)
        res.result = {"vertices": img.graph.n, "edges": img.graph.m}
        res.witness = img.graph.to_edge_list_text()
        res.lines = [f"F(g): {img.graph.n} vertices, {img.graph.m} edges"]
    elif verb == "rigid-search":
        out = delta_mod.rigid_search(args.max_vertices, seed=args.seed, samples=args.samples)
        res.result = out.status
        res.proof_status = "exhaustive" if out.status in ("found", "exhausted") else "budget"
        if out.base is not None:
            res.witness = out.base.to_text()
        if out.status == "not-found":
            res.exit_code = 2
        res.lines = [f"status = {out.status} (examined {out.examined})"]
        if res.witness:
            res.lines.append(res.witness.rstrip())
    elif verb == "cone":
        res.result = delta_mod.integer_cone_member(args.a, _ints(args.base), args.n)
        res.proof_status = "exhaustive"
        res.lines = [f"cone_member = {res.result}"]
    elif verb == "tt-set-circuits":
        members = delta_mod.tt_set_circuit_union(_ints(args.a), _ints(args.b), args.nmax)
        res.result = members
        res.proof_status = "exhaustive"
        res.lines = [f"TT set up to {args.nmax}: {members}"]
    elif verb == "experiment":
        exp = randlab.Experiment(args.n, args.p, args.trials, args.seed, args.predicate)
        est = randlab.estimate_fraction(exp)
        res.result = {
            "hits": est.hits, "misses": est.misses, "unknown": est.unknown,
            "fraction": est.fraction, "ci": [est.ci_low, est.ci_high],
        }
        res.proof_status = "n/a"
        res.lines = [
            f"{args.predicate}: {est.hits}/{est.decided} hits "
            f"(fraction {est.fraction:.3f}, 95% CI [{est.ci_low:.3f}, {est.ci_high:.3f}], "
            f"{est.unknown} unknown)"
        ]
    elif verb == "construct":
        if args.kind == "subdivide":
            if args.h is None or args.p is None:
                raise ParseError("construct subdivide needs --h and --p")
            g = subdivide_balanced(load_graph(args.h, "--h"), args.p)
        elif args.kind == "product":
            if args.h is None or args.r is None:
                raise ParseError("construct product needs --h and --r")
            g = product(load_graph(args.h, "--h"), load_graph(args.r, "--r"))
        else:
            if args.lengths is None:
                raise ParseError("construct circuits needs --lengths")
            g = circuit_union(_ints(args.lengths))
        res.result = {"vertices": g.n, "edges": g.m}
        res.witness = g.to_edge_list_text()
        res.lines = [f"{g.name}: {g.n} vertices, {g.m} edges"]
    elif verb == "paper-suite":
        from .acceptance import run_suite

        wanted = _ints(args.criteria) if args.criteria else None
        results = run_suite(wanted, verbose=True)
        failed = [r for r in results if not r.passed]
        res.result = {"passed": len(results) - len(failed), "failed": len(failed)}
        res.proof_status = "n/a"
        if failed:
            res.exit_code = 1
        res.lines = []
    else:  # pragma: no cover
        raise ParseError(f"unknown verb {verb!r}")
    return res


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    t0 = time.perf_counter()
    try:
        res = dispatch(args)
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    res.elapsed_ms = (time.perf_counter() - t0) * 1000
    if args.output and res.witness is not None:
        with open(args.output, "w") as fh:
            fh.write(res.witness)
    if args.json:
        print(res.to_json())
    else:
        for line in res.lines:
            print(line)
    return res.exit_code


if __name__ == "__main__":
    sys.exit(main())
