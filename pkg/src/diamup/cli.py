"""Command-line surface: metrics, solve, reduce, verify, table.

Exit codes are part of the interface: 0 for yes/valid, 1 for
no/infeasible/invalid, 2 for usage, parse, or budget errors.  JSON output
is canonical (sorted keys, deterministic witnesses, infinity spelled
"inf") and therefore byte-identical across runs on identical input; wall
time is only ever printed on the human-readable channel.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from .graphs import (
    INF,
    Graph,
    GraphFormatError,
    cycle_weights,
    diameter,
    girth,
    is_connected,
    parse_edge_list,
)
from .oracle import (
    BudgetExceededError,
    OracleBudget,
    oracle_da,
    oracle_eda,
    oracle_mda,
    oracle_meda,
    oracle_mdi,
)
from .reductions import (
    VCInstance,
    compose_general,
    reduce_vc_meda5_diam3,
    reduce_vc_meda5_diam4,
    write_artifact,
)
from .solvers import INFEASIBLE, NO, YES, ProblemSpec, Solution, check_witness, solve

EXIT_YES = 0
EXIT_NO = 1
EXIT_ERROR = 2

BUDGET_ENV = "DIAM_ORACLE_MAX_EDGES"


class CliError(Exception):
    """Usage-level failure; maps to exit code 2."""


def _json_value(v):
    if v == INF:
        return "inf"
    if isinstance(v, (tuple, list)):
        return [_json_value(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _json_value(val) for k, val in v.items()}
    return v


def _dump_json(payload) -> str:
    return json.dumps(_json_value(payload), sort_keys=True, indent=2) + "\n"


def _load_graph(path) -> Graph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    try:
        return parse_edge_list(text)
    except GraphFormatError as exc:
        raise CliError(f"{path}: {exc}") from exc


def _budget_from_env() -> OracleBudget:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return OracleBudget()
    try:
        cap = int(raw)
    except ValueError:
        raise CliError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise CliError(f"{BUDGET_ENV} must be positive")
    return OracleBudget(max_edges=cap)


def _edge_token(tok: str):
    parts = tok.split("-")
    if len(parts) != 2:
        raise CliError(f"bad edge token {tok!r}: expected 'u-v'")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise CliError(f"bad edge token {tok!r}: endpoints must be integers") from None


def _parse_deleted(spec: str):
    spec = spec.strip()
    if not spec:
        return ()
    return tuple(_edge_token(tok) for tok in spec.split(",") if tok.strip())


def _format_value(v):
    return "inf" if v == INF else str(v)


def _format_edges(edges) -> str:
    if not edges:
        return "(none)"
    return " ".join(f"{u}-{v}" for u, v in edges)


# ---------------------------------------------------------------------------
# metrics
# ---------------------------------------------------------------------------

def _cmd_metrics(args) -> int:
    g = _load_graph(args.path)
    weights = cycle_weights(g)
    report = {
        "n": g.n,
        "m": g.num_edges,
        "connected": is_connected(g),
        "diameter": diameter(g),
        "girth": girth(g),
        "cycle_weights": {f"{u}-{v}": w for (u, v), w in weights.items()},
    }
    if args.json:
        sys.stdout.write(_dump_json(report))
    else:
        print(f"n={g.n} m={g.num_edges} connected={report['connected']}")
        print(f"diameter={_format_value(report['diameter'])} girth={_format_value(report['girth'])}")
        for (u, v), w in weights.items():
            print(f"w({u}-{v}) = {_format_value(w)}")
    return EXIT_YES


# ---------------------------------------------------------------------------
# solve
# ---------------------------------------------------------------------------

def _build_spec(args) -> ProblemSpec:
    kind = args.problem
    k = args.k
    pair = None
    if kind == "mdi":
        if args.x is None or args.y is None:
            raise CliError("mdi needs --x and --y")
        pair = (args.x, args.y)
    elif args.x is not None or args.y is not None:
        raise CliError(f"{kind} takes no --x/--y")
    if kind in ("mda", "meda", "mdi"):
        if k is None:
            raise CliError(f"{kind} needs --k")
    elif k is not None:
        raise CliError(f"{kind} takes no --k")
    try:
        return ProblemSpec(kind=kind, d=args.d, k=k, pair=pair)
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def _solve_via_oracle(spec: ProblemSpec, g: Graph, budget: OracleBudget) -> Solution:
    from .solvers import _apply_budget, _refused, _witnessed  # same formatting path

    if spec.kind == "da":
        found = oracle_da(g, spec.d, budget=budget)
        return Solution(YES, None, None, None, None, "oracle") if found else _refused(NO, "oracle")
    if spec.kind == "eda":
        f = oracle_eda(g, spec.d, budget=budget)
        return _refused(NO, "oracle") if f is None else _witnessed(g, f, YES, "oracle")
    if spec.kind == "mdi":
        hit = oracle_mdi(g, spec.pair[0], spec.pair[1], spec.d, budget=budget)
    elif spec.kind == "mda":
        hit = oracle_mda(g, spec.d, budget=budget)
    else:
        hit = oracle_meda(g, spec.d, budget=budget)
    if hit is None:
        return _refused(INFEASIBLE, "oracle")
    sized = _witnessed(g, hit[1], YES, "oracle", min_size=hit[0])
    return _apply_budget(sized, spec.k) if spec.k is not None else sized


def _solution_report(spec: ProblemSpec, g: Graph, sol: Solution) -> dict:
    problem = {"kind": spec.kind, "d": spec.d}
    if spec.k is not None:
        problem["k"] = spec.k
    if spec.pair is not None:
        problem["x"], problem["y"] = spec.pair
    return {
        "input": {
            "n": g.n,
            "m": g.num_edges,
            "diameter": diameter(g),
            "girth": girth(g),
        },
        "problem": problem,
        "solution": {
            "verdict": sol.verdict,
            "min_size": sol.min_size,
            "deleted": None if sol.deleted is None else [f"{u}-{v}" for u, v in sol.deleted],
            "achieved_diameter": sol.achieved_diameter,
            "certificate": sol.certificate,
            "method": sol.method,
        },
    }


def _cmd_solve(args) -> int:
    g = _load_graph(args.path)
    spec = _build_spec(args)
    budget = _budget_from_env()
    started = time.perf_counter()
    try:
        if args.oracle:
            sol = _solve_via_oracle(spec, g, budget)
        else:
            sol = solve(spec, g, oracle_budget=budget)
    except BudgetExceededError as exc:
        raise CliError(str(exc)) from exc
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    elapsed = time.perf_counter() - started
    if args.json:
        sys.stdout.write(_dump_json(_solution_report(spec, g, sol)))
    else:
        print(f"verdict: {sol.verdict}   [{sol.method}]")
        if sol.min_size is not None:
            print(f"min deletions: {sol.min_size}")
        if sol.deleted is not None:
            print(f"deleted: {_format_edges(sol.deleted)}")
        if sol.achieved_diameter is not None:
            print(f"achieved diameter: {_format_value(sol.achieved_diameter)}")
        if sol.certificate is not None:
            print(f"diametral pair: {sol.certificate[0]},{sol.certificate[1]}")
        print(f"wall time: {elapsed:.3f}s", file=sys.stderr)
    return EXIT_YES if sol.verdict == YES else EXIT_NO


# ---------------------------------------------------------------------------
# reduce
# ---------------------------------------------------------------------------

def _cmd_reduce(args) -> int:
    gamma = _load_graph(args.gamma)
    vc = VCInstance(gamma=gamma, c=args.c)
    extend = (args.extend_d is not None, args.extend_k is not None)
    if any(extend) and not all(extend):
        raise CliError("--extend-d and --extend-k go together")
    try:
        if all(extend):
            art = compose_general(args.extend_d, args.extend_k, vc)
        elif args.target == "diam3":
            art = reduce_vc_meda5_diam3(vc)
        elif args.target == "diam4":
            art = reduce_vc_meda5_diam4(vc)
        else:
            raise CliError("pick --target diam3|diam4 or --extend-d/--extend-k")
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    edge_path, json_path = write_artifact(art, args.out)
    print(f"wrote {edge_path} and {json_path}")
    print(
        f"n={art.graph.n} m={art.graph.num_edges} k={art.k} "
        f"diameter={art.diameter} asks={art.asks}"
    )
    return EXIT_YES


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _cmd_verify(args) -> int:
    g = _load_graph(args.path)
    spec = _build_spec(args)
    deleted = _parse_deleted(args.deleted)
    try:
        ok, reason = check_witness(spec, g, deleted)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    report = {
        "valid": ok,
        "reason": reason,
        "deleted": [f"{u}-{v}" for u, v in deleted],
        "problem": {"kind": spec.kind, "d": spec.d, "k": spec.k},
    }
    if args.json:
        sys.stdout.write(_dump_json(report))
    else:
        print(f"{'valid' if ok else 'invalid'}: {reason}")
    return EXIT_YES if ok else EXIT_NO


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------

def complexity_cell(d: int, k: int) -> str:
    """Status of raising diameter d by exactly k with budgeted deletions.

    P on the first row (complete graphs are the only diameter-1 graphs) and
    at (2,1); NP-complete at (3,2), (4,1), and whenever d >= 5 with
    k <= d-1; open everywhere else.
    """
    if d < 1 or k < 1:
        raise ValueError("the grid starts at d=1, k=1")
    if d == 1:
        return "P"
    if d == 2:
        return "P" if k == 1 else "?"
    if d == 3:
        return "NP-c" if k == 2 else "?"
    if d == 4:
        return "NP-c" if k == 1 else "?"
    return "NP-c" if k <= d - 1 else "?"


def _cmd_table(args) -> int:
    ks = range(1, 9)
    print("Budgeted edge deletion raising the diameter of a diameter-d graph by exactly k:")
    print("rows d=1..8, columns k=1..8 (P = polynomial, NP-c = NP-complete, ? = open)")
    header = "d\\k " + "".join(f"{k:>6}" for k in ks)
    print(header)
    for d in range(1, 9):
        row = f"{d:<4}" + "".join(f"{complexity_cell(d, k):>6}" for k in ks)
        print(row)
    return EXIT_YES


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diamup",
        description="Raise graph diameter by edge deletion: solvers, oracle, instance generators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("metrics", help="n, m, diameter, girth, per-edge cycle weights")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_metrics)

    p = sub.add_parser("solve", help="solve one problem instance")
    p.add_argument("path")
    p.add_argument("--problem", required=True, choices=["da", "mda", "eda", "meda", "mdi"])
    p.add_argument("--d", required=True, type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--x", type=int)
    p.add_argument("--y", type=int)
    p.add_argument("--oracle", action="store_true", help="force the brute-force oracle")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("reduce", help="generate a hard instance from a vertex cover question")
    p.add_argument("--gamma", required=True, help="vertex cover graph, edge-list format")
    p.add_argument("--c", required=True, type=int, help="cover budget")
    p.add_argument("--target", choices=["diam3", "diam4"])
    p.add_argument("--extend-d", dest="extend_d", type=int,
                   help="compose the instance of this diameter (needs --extend-k)")
    p.add_argument("--extend-k", dest="extend_k", type=int,
                   help="asked diameter increase for the composed instance")
    p.add_argument("--out", required=True, help="output prefix")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("verify", help="check a deletion set against a problem")
    p.add_argument("path")
    p.add_argument("--problem", required=True, choices=["da", "mda", "eda", "meda", "mdi"])
    p.add_argument("--d", required=True, type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--x", type=int)
    p.add_argument("--y", type=int)
    p.add_argument("--deleted", required=True, help="edges as 'u-v,u-v,...' (empty for none)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("table", help="print the known complexity grid")
    p.set_defaults(func=_cmd_table)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
