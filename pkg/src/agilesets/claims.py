"""Registered desk-scale claims, each an exact check that returns a ClaimReport.

A claim function takes ``(params, rng, budget)`` and returns
``(holds, details, witnesses)``; ``witnesses`` maps a file stem to a
JSON-ready object and is written out only when a witness directory is given.
Randomised claims draw from ``rng`` only, which is seeded from the run seed
and the claim id, so verdicts are reproducible.
"""

from __future__ import annotations

import itertools
import json
import random
import time
import zlib
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable

from .agility import (
    find_agile_subset,
    find_disjoint_connected_covers,
    is_agile,
    is_m_agile,
    is_m_connected,
    lift_through_minor,
    minor_minimal_reduction,
)
from .budget import Budget, BudgetExceeded
from .covers import covers_violation
from .decomposition import nested_family_check
from .enumeration import connected_graphs_upto
from .formats import serialize_graph6
from .generators import (
    counterexample_graph,
    fan,
    gnp,
    grid_magile_instance,
    ladder,
    regular_strip,
)
from .graph import Graph, cut_vertices, is_connected
from .minors import has_k2k_minor, regular_strip_from_crossings
from .models import minor_from_operations, validate_minor_model
from .separations import separations_of_order, torso
from .strips import counterexample_strip_spec

CONFIRMED = "confirmed"
REFUTED = "refuted"
UNKNOWN = "unknown(budget)"


@dataclass
class ClaimReport:
    claim: str
    params: dict[str, Any]
    verdict: str
    details: dict[str, Any] = field(default_factory=dict)
    witnesses: list[str] = field(default_factory=list)
    wall_time: float = 0.0

    def to_dict(self) -> dict[str, Any]:
        return {
            "claim": self.claim,
            "params": self.params,
            "verdict": self.verdict,
            "details": self.details,
            "witnesses": self.witnesses,
            "wall_time": round(self.wall_time, 3),
        }


Outcome = tuple[bool, dict[str, Any], dict[str, Any]]
ClaimFn = Callable[[dict[str, Any], random.Random, Budget], Outcome]

REGISTRY: dict[str, tuple[ClaimFn, dict[str, Any]]] = {}


def claim(cid: str, **defaults: Any) -> Callable[[ClaimFn], ClaimFn]:
    def register(fn: ClaimFn) -> ClaimFn:
        REGISTRY[cid] = (fn, defaults)
        return fn

    return register


def _g6(g: Graph) -> str:
    return serialize_graph6(g).decode()


# -- small-graph sweeps ------------------------------------------------------------


def _k2k_sweep(k: int, size: int, max_n: int, budget: Budget) -> Outcome:
    free = 0
    checked = 0
    for g in connected_graphs_upto(max_n):
        checked += 1
        if has_k2k_minor(g, k, budget) is not None:
            continue
        free += 1
        X = find_agile_subset(g, size, budget=budget)
        if X is not None:
            bad = {"graph6": _g6(g), "agile": sorted(X)}
            return False, {"graphs": checked, "k2k_free": free, "counterexample": bad}, {"counterexample": bad}
    return True, {"graphs": checked, "k2k_free": free}, {}


@claim("C-K22", max_n=7)
def _c_k22(params, rng, budget):
    return _k2k_sweep(2, 4, params["max_n"], budget)


@claim("C-K23", max_n=7)
def _c_k23(params, rng, budget):
    return _k2k_sweep(3, 5, params["max_n"], budget)


# -- named instances ---------------------------------------------------------------


@claim("C-CEX", n=9)
def _c_cex(params, rng, budget):
    n = params["n"]
    lg = counterexample_graph(n)
    g = lg.graph
    verdict = is_agile(g, lg["red"], budget)
    if verdict.result == "unknown(budget)":
        raise BudgetExceeded("agility check ran out of budget")
    witnesses_ok = all(covers_violation(g, part, covers) is None for part, covers in verdict.witnesses)
    no_k25 = has_k2k_minor(g, 5, budget) is None
    k24 = has_k2k_minor(g, 4, budget)
    k24_ok = k24 is not None and validate_minor_model(g, k24)[0]
    details = {
        "red_agile": bool(verdict),
        "bipartitions": verdict.checked,
        "witnesses_valid": witnesses_ok,
        "no_K25": no_k25,
        "has_K24": k24_ok,
    }
    wit = {"red_agility": verdict.to_dict()}
    if k24 is not None:
        wit["k24_model"] = k24.to_dict()
    return bool(verdict) and witnesses_ok and no_k25 and k24_ok, details, wit


@claim("C-FAN", cycle_lengths=[8, 9, 10], chords=[3, 4, 5], size=7)
def _c_fan(params, rng, budget):
    fans = 0
    for L in params["cycle_lengths"]:
        for c in params["chords"]:
            for targets in itertools.combinations(range(2, L - 1), c):
                lg = fan(L, targets)
                a, b, cc = L - 1, 0, 1
                t, _ = torso(lg.graph, range(L), (a, b, cc))
                fans += 1
                X = find_agile_subset(t, params["size"], budget=budget)
                if X is not None:
                    bad = {"cycle": L, "targets": list(targets), "agile": sorted(X)}
                    return False, {"fans": fans, "counterexample": bad}, {"counterexample": bad}
    return True, {"fans": fans}, {}


@claim("C-LADDER", n=6)
def _c_ladder(params, rng, budget):
    lg = ladder(params["n"], clique_ends=True)
    rail = sorted(lg["rail0"])
    X1, X2 = rail[0::2], rail[1::2]
    covers = find_disjoint_connected_covers(lg.graph, [X1, X2], budget)
    details = {"X1": X1, "X2": X2, "covers_exist": covers is not None}
    return covers is None, details, {}


@claim("C-STRIP-EXTRACT", n=9, k=5)
def _c_strip_extract(params, rng, budget):
    budget.check()
    spec = counterexample_strip_spec(params["n"])
    model = regular_strip_from_crossings(spec, params["k"])
    ok, clause = validate_minor_model(spec.graph, model)
    same_host = spec.graph == counterexample_graph(params["n"]).graph
    details = {"crossing_pairs": len(spec.crossing_pairs()), "valid": ok, "clause": clause, "host_matches": same_host}
    return ok and same_host, details, {"strip_model": model.to_dict()}


@claim("C-RSTRIP-AGILE", k=6)
def _c_rstrip(params, rng, budget):
    lg = regular_strip(params["k"])
    v = is_agile(lg.graph, lg["bottom"], budget)
    if v.result == "unknown(budget)":
        raise BudgetExceeded("agility check ran out of budget")
    return bool(v), {"rail": sorted(lg["bottom"]), "bipartitions": v.checked}, {"rail_agility": v.to_dict()}


@claim("C-GRID", cases=[[2, 2], [2, 3], [2, 4], [3, 2]])
def _c_grid(params, rng, budget):
    cases = [[params["m"], params["N"]]] if "m" in params else params["cases"]
    results = []
    ok = True
    for m, N in cases:
        lg = grid_magile_instance(m, N)
        v = is_m_agile(lg.graph, lg["agile"], m, budget, keep_witnesses=False)
        if v.result == "unknown(budget)":
            raise BudgetExceeded("m-agility check ran out of budget")
        results.append({"m": m, "N": N, "marked": sorted(lg["agile"]), "result": v.result})
        ok = ok and bool(v)
    return ok, {"cases": results}, {}


# -- random property claims ----------------------------------------------------------


def _random_subset(rng: random.Random, n: int, size: int) -> list[int]:
    return sorted(rng.sample(range(n), size))


@claim("C-MAGILE-MCONN", instances=200, max_attempts=20000)
def _c_magile_mconn(params, rng, budget):
    hits = attempts = 0
    while hits < params["instances"] and attempts < params["max_attempts"]:
        attempts += 1
        budget.check()
        n = rng.randint(5, 9)
        m = rng.choice([2, 3])
        g = gnp(n, rng.uniform(0.35, 0.8), rng, connected=True)
        X = _random_subset(rng, n, rng.randint(m, min(n, m + 2)))
        if not is_m_agile(g, X, m, budget, keep_witnesses=False):
            continue
        hits += 1
        ok, pair = is_m_connected(g, X, m)
        if not ok:
            bad = {"graph6": _g6(g), "X": X, "m": m, "pair": [sorted(p) for p in pair]}
            return False, {"instances": hits, "counterexample": bad}, {"counterexample": bad}
    return hits >= params["instances"], {"instances": hits, "attempts": attempts}, {}


@claim("C-TORSO", instances=200, max_attempts=20000)
def _c_torso(params, rng, budget):
    hits = attempts = 0
    while hits < params["instances"] and attempts < params["max_attempts"]:
        attempts += 1
        budget.check()
        n = rng.randint(5, 9)
        g = gnp(n, rng.uniform(0.3, 0.7), rng, connected=True)
        if cut_vertices(g):
            continue
        seps = separations_of_order(g, rng.choice([2, 3]))
        if not seps:
            continue
        s = rng.choice(seps)
        X = _random_subset(rng, n, rng.randint(3, min(n, 5)))
        if not is_agile(g, X, budget, keep_witnesses=False):
            continue
        hits += 1
        t, keep = torso(g, s.A, s.separator)
        index = {v: i for i, v in enumerate(keep)}
        part = [index[x] for x in X if x in s.A]
        if not is_agile(t, part, budget, keep_witnesses=False):
            bad = {"graph6": _g6(g), "X": X, "A": sorted(s.A), "B": sorted(s.B)}
            return False, {"instances": hits, "counterexample": bad}, {"counterexample": bad}
    return hits >= params["instances"], {"instances": hits, "attempts": attempts}, {}


def _random_ops(g: Graph, rng: random.Random, moves: int) -> list[tuple[str, Any]]:
    ops: list[tuple[str, Any]] = []
    h = g
    for _ in range(moves):
        kinds = ["contract", "contract", "delete-edge"] if h.num_edges else []
        if h.n > 3:
            kinds.append("delete-vertex")
        if not kinds:
            break
        kind = rng.choice(kinds)
        if kind == "delete-vertex":
            v = rng.randrange(h.n)
            ops.append((kind, v))
            h, _ = h.delete_vertices([v])
        else:
            e = rng.choice(h.edge_list())
            ops.append((kind, e))
            h = h.delete_edge(*e) if kind == "delete-edge" else h.contract_edge(*e)[0]
    return ops


@claim("C-LIFT", instances=200, max_attempts=20000)
def _c_lift(params, rng, budget):
    hits = attempts = 0
    while hits < params["instances"] and attempts < params["max_attempts"]:
        attempts += 1
        budget.check()
        n = rng.randint(6, 10)
        g = gnp(n, rng.uniform(0.3, 0.7), rng, connected=True)
        h, model = minor_from_operations(g, _random_ops(g, rng, rng.randint(1, 4)))
        if h.n < 3:
            continue
        Xh = _random_subset(rng, h.n, rng.randint(2, min(h.n, 5)))
        if not is_agile(h, Xh, budget, keep_witnesses=False):
            continue
        hits += 1
        lifted = lift_through_minor(model, Xh)
        if not is_agile(g, lifted, budget, keep_witnesses=False):
            bad = {"graph6": _g6(g), "minor": model.to_dict(), "X_pattern": Xh}
            return False, {"instances": hits, "counterexample": bad}, {"counterexample": bad}
    return hits >= params["instances"], {"instances": hits, "attempts": attempts}, {}


@claim("C-NESTED", instances=20, size=4, max_n=9, max_attempts=5000)
def _c_nested(params, rng, budget):
    hits = attempts = 0
    minimal: dict[str, int] = {}
    while hits < params["instances"] and attempts < params["max_attempts"]:
        attempts += 1
        budget.check()
        n = rng.randint(params["size"], params["max_n"])
        g = gnp(n, rng.uniform(0.3, 0.8), rng, connected=True)
        if find_agile_subset(g, params["size"], budget=budget) is None:
            continue
        hits += 1
        h = minor_minimal_reduction(g, params["size"], budget).graph
        key = _g6(h)
        minimal[key] = minimal.get(key, 0) + 1
        report = nested_family_check(separations_of_order(h, 2))
        if report is not None:
            bad = {"graph6": _g6(g), "minimal": key, "crossing": report.to_dict()}
            return False, {"instances": hits, "counterexample": bad}, {"counterexample": bad}
    details = {"instances": hits, "attempts": attempts, "minimal_graphs": dict(sorted(minimal.items()))}
    return hits >= params["instances"], details, {}


# -- running -----------------------------------------------------------------------


def claim_ids() -> list[str]:
    return sorted(REGISTRY)


def _rng_for(cid: str, seed: int) -> random.Random:
    return random.Random(seed * 1_000_003 + zlib.crc32(cid.encode()))


def run_claim(
    cid: str,
    params: dict[str, Any] | None = None,
    seed: int = 0,
    budget: float | None = None,
    witness_dir: str | Path | None = None,
) -> ClaimReport:
    """Run one registered claim; ``budget`` is in seconds (``None`` = unlimited)."""
    if cid not in REGISTRY:
        raise KeyError(f"unknown claim {cid!r}; known: {', '.join(claim_ids())}")
    fn, defaults = REGISTRY[cid]
    unknown = set(params or {}) - set(defaults) - ({"m", "N"} if cid == "C-GRID" else set())
    if unknown:
        raise ValueError(f"invalid parameters for {cid}: {sorted(unknown)}")
    merged = {**defaults, **(params or {})}
    if cid == "C-GRID" and "m" in merged:
        merged.pop("cases")
    b = Budget(seconds=budget)
    start = time.monotonic()
    report = ClaimReport(cid, merged, UNKNOWN)
    try:
        b.check()
        holds, details, witnesses = fn(merged, _rng_for(cid, seed), b)
    except BudgetExceeded as exc:
        report.details = {"reason": str(exc)}
    else:
        report.verdict = CONFIRMED if holds else REFUTED
        report.details = details
        if witness_dir is not None and witnesses:
            out = Path(witness_dir)
            out.mkdir(parents=True, exist_ok=True)
            for stem, obj in sorted(witnesses.items()):
                path = out / f"{cid}.{stem}.json"
                path.write_text(json.dumps(obj, indent=1, sort_keys=True))
                report.witnesses.append(str(path))
    report.wall_time = time.monotonic() - start
    return report


def run_all(
    seed: int = 0, budget: float | None = None, witness_dir: str | Path | None = None
) -> list[ClaimReport]:
    """Every registered claim at default parameters, ordered by claim id."""
    return [run_claim(cid, None, seed, budget, witness_dir) for cid in claim_ids()]


def verdict_fields(reports: list[ClaimReport]) -> str:
    """Canonical JSON of (claim, verdict) pairs, for byte-level determinism checks."""
    return json.dumps([[r.claim, r.verdict] for r in reports], sort_keys=True)
