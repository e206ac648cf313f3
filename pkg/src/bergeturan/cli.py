"""Command-line entry point.

Exit codes::

    0  success / found / proved / all cells matched
    1  detect: not found; verify: some proved cell mismatched
    2  invalid parameters, wrong regime, unreadable input
    3  oracle or verify: budget exhausted (and no mismatch)
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .berge import find_berge_cycle, find_berge_path, longest_berge_path
from .budget import DEFAULT_MAX_MS, DEFAULT_MAX_NODES
from .errors import BergeError
from .extremal import TuranParams, construct, turan_formula
from .hypercore import format_hypergraph, hypergraph_to_json, read_hypergraph, write_hypergraph
from .search import graph_kr_oracle, redblue_g_oracle, turan_oracle, verify_range
from .structure import check_good_set_disjunction, find_good_sets

SCHEMA_VERSION = 1
SCHEMA_PATH = Path(__file__).with_name("report.schema.json")

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

_REGIME_ALIASES = {"hypergraph": "hypergraph", "formula": "hypergraph", "cliques": "cliques", "redblue": "redblue"}


@dataclass
class RunReport:
    command: str
    params: dict
    result: dict
    elapsed_ms: int = 0
    threads: int = 1
    schema_version: int = SCHEMA_VERSION
    exit_code: int = 0
    text: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "params": self.params,
            "result": self.result,
            "schema_version": self.schema_version,
            "elapsed_ms": self.elapsed_ms,
            "threads": self.threads,
            "exit_code": self.exit_code,
        }


class UsageError(Exception):
    pass


def _params(args) -> TuranParams:
    return TuranParams(args.n, args.r, args.k)


def _range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    try:
        values = list(range(int(lo), int(hi) + 1)) if sep else [int(lo)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return values


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_formula(args) -> RunReport:
    P = _params(args)
    value = turan_formula(P)
    result = {"value": value, "regime": P.regime, "p": P.p, "q": P.q, "proven_range": P.proven_range}
    text = [f"ex_{P.r}({P.n}, Berge-P_{P.k}) = {value}", f"regime {P.regime}, p={P.p}, q={P.q}"]
    if not P.proven_range:
        text.append("note: r = 2 is outside the proven range (graph cross-check only)")
    return RunReport("formula", {"n": P.n, "r": P.r, "k": P.k}, result, text=text)


def cmd_construct(args) -> RunReport:
    P = _params(args)
    H = construct(P)
    free = find_berge_path(H, P.k) is None
    if args.output:
        write_hypergraph(H, args.output)
    result = {
        "edges": len(H.edges),
        "formula_value": turan_formula(P),
        "self_check": "pass" if free else "fail",
        "output": str(args.output) if args.output else None,
        "hypergraph": hypergraph_to_json(H),
    }
    text = [f"{len(H.edges)} hyperedges, Berge-P_{P.k}-free self-check: {result['self_check']}"]
    if args.output:
        text.append(f"written to {args.output}")
    else:
        text.append(format_hypergraph(H).rstrip("\n"))
    return RunReport("construct", {"n": P.n, "r": P.r, "k": P.k}, result, exit_code=0 if free else 1, text=text)


def cmd_detect(args) -> RunReport:
    H = read_hypergraph(args.input)
    if args.kind == "path":
        w = find_berge_path(H, args.k)
    else:
        w = find_berge_cycle(H, args.k)
    found = w is not None
    result = {"found": found, "witness": w.to_json() if w else None}
    if found:
        pairs = ", ".join(f"{a}-{b} via {list(e)}" for a, b, e in zip(w.vertices, [*w.vertices[1:], w.vertices[0]], w.assigned_edges))
        text = [f"Berge {args.kind} of length {args.k}: found", pairs]
    else:
        text = [f"Berge {args.kind} of length {args.k}: not found"]
    return RunReport(
        "detect",
        {"input": str(args.input), "k": args.k, "kind": args.kind},
        result,
        exit_code=EXIT_OK if found else EXIT_NEGATIVE,
        text=text,
    )


def cmd_goodsets(args) -> RunReport:
    H = read_hypergraph(args.input)
    ell, _ = longest_berge_path(H)
    params = {"input": str(args.input), "max_size": args.max_size}
    if ell <= H.r:
        raise UsageError(f"longest Berge path has length {ell} <= r = {H.r}; good sets need ell > r")
    sets = find_good_sets(H, args.max_size, ell)
    lemma = check_good_set_disjunction(H, ell)
    result = {"ell": ell, "good_sets": [g.to_json() for g in sets], "disjunction": lemma.to_json()}
    text = [f"longest Berge path: {ell}"]
    text += [f"good {list(g.subset)}: |N|={g.incident_count} <= {g.threshold_numerator}/{g.threshold_denominator}" for g in sets]
    if not sets:
        text.append(f"no good sets of size <= {args.max_size}")
    bullets = [key for key in ("sizes_1_and_2", "sizes_2_and_3", "component") if key in lemma.witness]
    text.append(f"disjunction holds: {lemma.holds} ({', '.join(bullets) or 'none'})")
    return RunReport("goodsets", params, result, text=text)


def cmd_oracle(args) -> RunReport:
    regime = _REGIME_ALIASES[args.regime]
    common = dict(max_nodes=args.max_nodes, max_ms=args.max_ms, workers=args.threads, seed_incumbent=not args.no_seed)
    if regime == "hypergraph":
        res = turan_oracle(_params(args), **common)
    elif regime == "cliques":
        res = graph_kr_oracle(args.n, args.k, args.r, **common)
    else:
        res = redblue_g_oracle(args.n, args.k, args.r, **common)
    params = {"regime": regime, "n": args.n, "r": args.r, "k": args.k, "threads": args.threads}
    text = [
        f"{regime} oracle (n={args.n}, r={args.r}, k={args.k}): {res.best_value} [{res.status}]",
        f"{res.nodes_explored} nodes, {res.elapsed_ms:.0f} ms, {args.threads} worker(s)",
    ]
    return RunReport("oracle", params, res.to_json(), exit_code=EXIT_OK if res.proved else EXIT_BUDGET, text=text)


def cmd_verify(args) -> RunReport:
    regime = _REGIME_ALIASES[args.regime]
    grid = [TuranParams(n, r, k) for r in args.r for k in args.k for n in args.n]
    report = verify_range(regime, grid, args.max_nodes, args.max_ms, args.threads)
    if report.mismatches:
        code = EXIT_NEGATIVE
    elif report.inconclusive:
        code = EXIT_BUDGET
    else:
        code = EXIT_OK
    params = {"regime": regime, "n": args.n, "r": args.r, "k": args.k, "threads": args.threads}
    text = [f"{'n':>3} {'r':>3} {'k':>3} {'formula':>8} {'oracle':>8}  outcome"]
    for c in report.cells:
        P = c.params
        text.append(f"{P.n:>3} {P.r:>3} {P.k:>3} {c.formula_value:>8} {c.oracle_value:>8}  {c.outcome}")
    text.append("PASS" if code == EXIT_OK else ("FAIL" if code == EXIT_NEGATIVE else "INCONCLUSIVE"))
    return RunReport("verify", params, report.to_json(), exit_code=code, text=text)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _add_nrk(p: argparse.ArgumentParser) -> None:
    p.add_argument("-n", "--n", type=int, required=True, help="vertex count")
    p.add_argument("-r", "--r", type=int, required=True, help="uniformity")
    p.add_argument("-k", "--k", type=int, required=True, help="forbidden Berge path length")


def _add_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES)
    p.add_argument("--max-ms", type=float, default=DEFAULT_MAX_MS)
    p.add_argument("--threads", type=int, default=1, help="worker processes (1 = deterministic)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bergeturan", description="Turán numbers of Berge paths: formulas, constructions, oracles.")
    parser.add_argument("--json", action="store_true", help="print the JSON run report instead of text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("formula", help="closed-form ex_r(n, Berge-P_k)")
    _add_nrk(p)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("construct", help="write an extremal construction")
    _add_nrk(p)
    p.add_argument("-o", "--output", type=Path)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("detect", help="search a Berge path or cycle")
    p.add_argument("input", type=Path)
    p.add_argument("-k", "--k", type=int, required=True)
    p.add_argument("--kind", choices=("path", "cycle"), default="path")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("goodsets", help="list good sets and the good-set disjunction")
    p.add_argument("input", type=Path)
    p.add_argument("--max-size", type=int, default=2)
    p.set_defaults(func=cmd_goodsets)

    p = sub.add_parser("oracle", help="exact extremal value by branch and bound")
    p.add_argument("--regime", choices=sorted(_REGIME_ALIASES), default="hypergraph")
    _add_nrk(p)
    _add_budget(p)
    p.add_argument("--no-seed", action="store_true", help="start from an empty incumbent instead of the construction")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="compare oracle and formula over a grid")
    p.add_argument("--regime", choices=sorted(_REGIME_ALIASES), default="formula")
    p.add_argument("-n", "--n", type=_range, required=True, help="N or A..B")
    p.add_argument("-r", "--r", type=_range, required=True, help="N or A..B")
    p.add_argument("-k", "--k", type=_range, required=True, help="N or A..B")
    _add_budget(p)
    p.set_defaults(func=cmd_verify)
    return parser


def _argv_with_global_flags(argv: list[str]) -> list[str]:
    # allow --json anywhere on the line, not only before the subcommand
    if "--json" in argv:
        return ["--json", *[a for a in argv if a != "--json"]]
    return argv


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(_argv_with_global_flags(argv))
    t0 = time.perf_counter()
    try:
        report = args.func(args)
    except (BergeError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report.elapsed_ms = int((time.perf_counter() - t0) * 1000)
    report.threads = getattr(args, "threads", 1)
    if args.json:
        print(json.dumps(report.to_json(), indent=2, sort_keys=True))
    else:
        print("\n".join(report.text))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
