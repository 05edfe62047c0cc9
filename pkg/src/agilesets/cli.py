"""Command-line interface: gen, check, minor, decompose, verify-claims, convert."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Any, Sequence

from . import generators as gens
from .agility import (
    UNKNOWN,
    is_agile,
    is_dexterous,
    is_independent,
    is_m_agile,
    is_m_connected,
)
from .budget import ENV_VAR, Budget, BudgetExceeded
from .claims import REFUTED, claim_ids, run_all, run_claim
from .decomposition import CrossingReport, decompose_along_order2, torso_3connectivity_report
from .formats import graph_to_dict, graph_to_json, parse_graph6, read_graph, serialize_graph6
from .graph import Graph, GraphError
from .minors import has_k2k_minor, has_minor, has_regular_strip_minor


class CLIError(Exception):
    pass


def _ints(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.replace(" ", ",").split(",") if x]
    except ValueError as exc:
        raise CLIError(f"expected comma-separated integers, got {text!r}") from exc


def _load(path: str) -> Graph:
    data = sys.stdin.read() if path == "-" else Path(path).read_text()
    return read_graph(data)


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        Path(path).write_text(text if text.endswith("\n") else text + "\n")


def _dump(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True)


def _budget(args: argparse.Namespace) -> Budget:
    seconds = args.budget
    if seconds is None and os.environ.get(ENV_VAR):
        seconds = float(os.environ[ENV_VAR])
    return Budget(seconds=seconds, nodes=getattr(args, "nodes", None))


# -- gen --------------------------------------------------------------------------


def _edge_pairs(text: str) -> list[tuple[int, int]]:
    out = []
    for tok in text.replace(" ", ",").split(","):
        if tok:
            u, _, v = tok.partition("-")
            out.append((int(u), int(v)))
    return out


def _generate(args: argparse.Namespace) -> gens.LabeledGraph:
    p = args.params
    fam = args.family

    def need(k: int) -> list[int]:
        if len(p) < k:
            raise CLIError(f"{fam} needs {k} integer parameter(s)")
        return p

    if fam == "complete-bipartite":
        m, k = need(2)[:2]
        return gens.complete_bipartite(m, k)
    if fam == "counterexample":
        return gens.counterexample_graph(need(1)[0])
    if fam == "regular-strip":
        return gens.regular_strip(need(1)[0])
    if fam == "fan":
        return gens.fan(need(1)[0], p[1:])
    if fam == "ladder":
        return gens.ladder(need(1)[0], clique_ends=args.clique_ends)
    if fam == "grid":
        r, c = need(2)[:2]
        return gens.grid(r, c)
    if fam == "grid-magile":
        m, N = need(2)[:2]
        return gens.grid_magile_instance(m, N)
    if fam == "diagonal-dexterous":
        return gens.diagonal_dexterous_instance(need(1)[0])
    if fam == "wheel":
        n = need(1)[0]
        tree = _edge_pairs(args.tree or "")
        t = 1 + max((max(e) for e in tree), default=0)
        pi = _ints(args.pi) if args.pi else list(range(t))
        psi = _ints(args.psi or "")
        return gens.wheel(tree, len(psi), pi, psi, n)
    raise CLIError(f"unknown family {fam!r}")


def cmd_gen(args: argparse.Namespace) -> int:
    lg = _generate(args)
    if args.format == "graph6":
        text = serialize_graph6(lg.graph).decode()
        if args.roles:
            text += "\n" + _dump({k: sorted(v) for k, v in sorted(lg.roles.items())})
    else:
        obj: dict[str, Any] = graph_to_dict(lg.graph)
        if args.roles:
            obj["roles"] = {k: sorted(v) for k, v in sorted(lg.roles.items())}
        text = _dump(obj)
    _write(args.out, text)
    return 0


# -- check ---------------------------------------------------------------------------


def cmd_check(args: argparse.Namespace) -> int:
    g = _load(args.graph)
    X = _ints(args.set)
    budget = _budget(args)
    prop = args.property
    report: dict[str, Any] = {"property": prop, "set": X}
    if prop == "m-connected":
        if args.m is None:
            raise CLIError("m-connected needs --m")
        ok, pair = is_m_connected(g, X, args.m)
        report.update(result="m-connected" if ok else "not m-connected", m=args.m)
        if pair is not None:
            report["failing_pair"] = [sorted(pair[0]), sorted(pair[1])]
    elif prop == "independent":
        X2 = _ints(args.set2 or "")
        report["set2"] = X2
        try:
            covers = is_independent(g, X, X2, budget)
        except BudgetExceeded:
            report["result"] = UNKNOWN
        else:
            report["result"] = "independent" if covers is not None else "not independent"
            if covers is not None:
                report["covers"] = [sorted(c) for c in covers]
    else:
        if prop == "agile":
            verdict = is_agile(g, X, budget)
        elif prop == "dexterous":
            verdict = is_dexterous(g, X, budget)
        else:
            if args.m is None:
                raise CLIError("m-agile needs --m")
            verdict = is_m_agile(g, X, args.m, budget)
        report.update(verdict.to_dict())
    print(report["result"])
    if args.witness:
        _write(args.witness, _dump(report))
    return 0


# -- minor ---------------------------------------------------------------------------


def cmd_minor(args: argparse.Namespace) -> int:
    g = _load(args.graph)
    budget = _budget(args)
    kind, _, value = args.pattern.partition(":")
    try:
        if kind == "k2k":
            model = has_k2k_minor(g, int(value), budget)
        elif kind == "strip":
            model = has_regular_strip_minor(g, int(value), budget)
        elif kind == "file":
            model = has_minor(g, _load(value), budget)
        else:
            raise CLIError("pattern must be k2k:<k>, strip:<k> or file:<path>")
    except BudgetExceeded:
        result, model = UNKNOWN, None
    else:
        result = "minor" if model is not None else "no minor"
    print(result)
    if args.witness:
        obj: dict[str, Any] = {"pattern": args.pattern, "result": result}
        if model is not None:
            obj["pattern_graph"] = graph_to_dict(model.pattern)
            obj.update(model.to_dict())
        _write(args.witness, _dump(obj))
    return 0


# -- decompose --------------------------------------------------------------------------


def cmd_decompose(args: argparse.Namespace) -> int:
    g = _load(args.graph)
    res = decompose_along_order2(g)
    if isinstance(res, CrossingReport):
        obj: dict[str, Any] = {"result": "crossing", **res.to_dict()}
    else:
        obj = {
            "result": "tree-decomposition",
            **res.to_dict(),
            "induced_separations": sorted([sorted(s.A), sorted(s.B)] for s in res.induced_separations()),
            "torsos": torso_3connectivity_report(g, res),
        }
    print(obj["result"])
    _write(args.report, _dump(obj))
    return 0


# -- verify-claims ---------------------------------------------------------------------


def _params(items: Sequence[str]) -> dict[str, Any]:
    out: dict[str, Any] = {}
    for item in items:
        key, sep, raw = item.partition("=")
        if not sep:
            raise CLIError(f"--param expects key=value, got {item!r}")
        try:
            out[key] = json.loads(raw)
        except json.JSONDecodeError:
            out[key] = raw
    return out


def cmd_verify(args: argparse.Namespace) -> int:
    budget = args.budget
    if budget is None and os.environ.get(ENV_VAR):
        budget = float(os.environ[ENV_VAR])
    params = _params(args.param)
    if params and len(args.claim or []) != 1:
        raise CLIError("--param needs exactly one --claim")
    if args.claim:
        reports = [run_claim(cid, params, args.seed, budget, args.witness_dir) for cid in sorted(set(args.claim))]
    else:
        reports = run_all(args.seed, budget, args.witness_dir)
    for r in reports:
        print(f"{r.claim:<18} {r.verdict:<16} {r.wall_time:8.2f}s")
    if args.report:
        _write(args.report, _dump([r.to_dict() for r in reports]))
    return 1 if any(r.verdict == REFUTED for r in reports) else 0


# -- convert -----------------------------------------------------------------------------


def cmd_convert(args: argparse.Namespace) -> int:
    data = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
    if args.source == "graph6":
        g = parse_graph6(data.strip())
    elif args.source == "json":
        g = read_graph(data) if data.strip().startswith("{") else _bad_json()
    else:
        g = read_graph(data)
    text = serialize_graph6(g).decode() if args.to == "graph6" else graph_to_json(g)
    _write(args.out, text)
    return 0


def _bad_json() -> Graph:
    raise CLIError("input is not a JSON graph object")


# -- parser ------------------------------------------------------------------------------


FAMILIES = [
    "complete-bipartite", "counterexample", "regular-strip", "fan", "ladder",
    "grid", "grid-magile", "diagonal-dexterous", "wheel",
]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="agilesets", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a named graph family")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--format", choices=["graph6", "json"], default="json")
    p.add_argument("--roles", action="store_true", help="also emit the distinguished vertex sets")
    p.add_argument("--clique-ends", action="store_true", help="ladder: complete the four end vertices")
    p.add_argument("--tree", help="wheel: tree edges as 0-1,1-2,...")
    p.add_argument("--pi", help="wheel: wrap permutation (default identity)")
    p.add_argument("--psi", help="wheel: tree vertex of each hub, comma-separated")
    p.add_argument("--out", "-o")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="decide agility-type properties of a vertex set")
    p.add_argument("property", choices=["agile", "m-agile", "dexterous", "independent", "m-connected"])
    p.add_argument("--graph", required=True, help="graph6 or JSON file, '-' for stdin")
    p.add_argument("--set", required=True, help="vertex ids, comma-separated")
    p.add_argument("--set2", help="second set for 'independent'")
    p.add_argument("--m", type=int)
    p.add_argument("--witness", help="write the verdict and its witness as JSON")
    p.add_argument("--budget", type=float, help=f"seconds (default: ${ENV_VAR} or unlimited)")
    p.add_argument("--nodes", type=int, help="search-node budget")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("minor", help="minor containment with a branch-set witness")
    p.add_argument("--graph", required=True)
    p.add_argument("--pattern", required=True, help="k2k:<k>, strip:<k> or file:<graph file>")
    p.add_argument("--witness")
    p.add_argument("--budget", type=float, help="seconds")
    p.add_argument("--nodes", type=int, help="search-node budget")
    p.set_defaults(func=cmd_minor)

    p = sub.add_parser("decompose", help="tree-decomposition along order-2 separations")
    p.add_argument("--graph", required=True)
    p.add_argument("--report", help="JSON report path (default stdout)")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify-claims", help="run the registered claim checks")
    p.add_argument("--claim", action="append", choices=claim_ids())
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=float, help=f"seconds per claim (default: ${ENV_VAR} or unlimited)")
    p.add_argument("--param", action="append", default=[], help="key=value (JSON value) for a single claim")
    p.add_argument("--report", help="JSON report path")
    p.add_argument("--witness-dir", help="directory for witness files")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("convert", help="convert between graph6 and JSON")
    p.add_argument("input", help="input file, '-' for stdin")
    p.add_argument("--from", dest="source", choices=["graph6", "json", "auto"], default="auto")
    p.add_argument("--to", choices=["graph6", "json"], required=True)
    p.add_argument("--out", "-o")
    p.set_defaults(func=cmd_convert)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CLIError, GraphError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
