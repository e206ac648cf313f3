"""Exact extremal values by branch and bound, plus isomorphism-free enumeration.

The three oracles share one engine.  A configuration is grown from a list of
*options* (a hyperedge, a graph edge, or a coloured vertex pair) kept in a
fixed lexicographic order.  Every node carries the options still compatible
with what has been chosen; since the forbidden structures are monotone, an
option that is incompatible now stays incompatible deeper down and is
dropped for good.  A node is cut when its optimistic bound cannot beat the
incumbent.  The closed-form values are never consulted.
"""

from __future__ import annotations

import multiprocessing as mp
import time
from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb
from typing import Literal

import numpy as np

from .berge import BergeSearch
from .budget import DEFAULT_MAX_MS, DEFAULT_MAX_NODES, Budget
from .errors import BudgetExhausted, InvalidParameterError, InvariantViolation
from .extremal import (
    TuranParams,
    construct_clique_extremal,
    construct_extremal,
    construct_redblue_extremal,
    construct_small_k,
    g_upper_bound,
    kr_count_bound,
    turan_formula,
)
from .hypercore import (
    Graph,
    Hypergraph,
    RedBlueGraph,
    count_cliques_masks,
    graph_to_json,
    hypergraph_to_json,
    is_pk_free,
    longest_path_masks,
)

Regime = Literal["hypergraph", "cliques", "redblue"]
Status = Literal["proved", "budget_exhausted"]

BITSET_LIMIT = 64


@dataclass
class OracleResult:
    params: TuranParams
    regime: Regime
    best_value: int
    witness: Hypergraph | Graph | RedBlueGraph
    status: Status
    nodes_explored: int
    elapsed_ms: float
    workers: int = 1
    seeded: bool = True

    @property
    def proved(self) -> bool:
        return self.status == "proved"

    def to_json(self) -> dict:
        w = self.witness
        return {
            "regime": self.regime,
            "params": self.params.as_dict(),
            "best_value": self.best_value,
            "status": self.status,
            "nodes_explored": self.nodes_explored,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "workers": self.workers,
            "seeded": self.seeded,
            "witness": hypergraph_to_json(w) if isinstance(w, Hypergraph) else graph_to_json(w),
        }


# ---------------------------------------------------------------------------
# problems
# ---------------------------------------------------------------------------


class _Problem:
    """Options are ints; ``item_of`` groups alternative options for one slot."""

    n_options: int

    def item_of(self, opt: int) -> int:
        return opt

    def compatible(self, chosen: Sequence[int], opt: int) -> bool:
        raise NotImplementedError

    def value(self, chosen: Sequence[int]) -> int:
        raise NotImplementedError

    def bound(self, chosen: Sequence[int], cands: Sequence[int]) -> int:
        raise NotImplementedError

    def build(self, chosen: Sequence[int]):
        raise NotImplementedError

    def is_free(self, structure) -> bool:
        raise NotImplementedError


class _HypergraphProblem(_Problem):
    """Berge-P_k-free r-graphs on n vertices, maximising the edge count."""

    def __init__(self, n: int, r: int, k: int):
        self.n, self.r, self.k = n, r, k
        self.edges = list(combinations(range(n), r))
        self.n_options = len(self.edges)

    def compatible(self, chosen, opt):
        edges = [self.edges[i] for i in chosen] + [self.edges[opt]]
        H = Hypergraph(self.n, self.r, edges)
        # chosen is free, so a new Berge-P_k must run through the new edge
        idx = H.edges.index(self.edges[opt])
        return BergeSearch(H).find_through_edge(self.k, idx) is None

    def value(self, chosen):
        return len(chosen)

    def bound(self, chosen, cands):
        return len(chosen) + len(cands)

    def build(self, chosen):
        return Hypergraph(self.n, self.r, [self.edges[i] for i in chosen])

    def is_free(self, H):
        return BergeSearch(H).find(self.k, "path") is None


class _CliqueProblem(_Problem):
    """P_k-free graphs on n vertices, maximising the number of r-cliques."""

    def __init__(self, n: int, r: int, k: int):
        self.n, self.r, self.k = n, r, k
        self.pairs = list(combinations(range(n), 2))
        self.n_options = len(self.pairs)

    def _adj(self, opts):
        adj = [0] * self.n
        for i in opts:
            u, v = self.pairs[i]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    def compatible(self, chosen, opt):
        return longest_path_masks(self._adj([*chosen, opt]), stop_at=self.k) < self.k

    def value(self, chosen):
        return count_cliques_masks(self._adj(chosen), self.r)

    def bound(self, chosen, cands):
        # the final graph is a subgraph of chosen + candidates
        return count_cliques_masks(self._adj([*chosen, *cands]), self.r)

    def build(self, chosen):
        return Graph(self.n, [self.pairs[i] for i in chosen])

    def is_free(self, G):
        return is_pk_free(G, self.k)


class _RedBlueProblem(_Problem):
    """Red-blue graphs with P_k-free underlying graph, maximising g.

    Option ``2*i`` colours pair ``i`` blue and ``2*i + 1`` colours it red.
    """

    def __init__(self, n: int, r: int, k: int):
        self.n, self.r, self.k = n, r, k
        self.pairs = list(combinations(range(n), 2))
        self.n_options = 2 * len(self.pairs)
        self.per_pair = max(1, comb(n - 2, r - 2)) if n >= 2 else 1

    def item_of(self, opt):
        return opt >> 1

    def _adj(self, opts, color: int | None = None):
        adj = [0] * self.n
        for o in opts:
            if color is not None and o & 1 != color:
                continue
            u, v = self.pairs[o >> 1]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    def compatible(self, chosen, opt):
        item = opt >> 1
        if any(o >> 1 == item for o in chosen):
            return False
        return longest_path_masks(self._adj([*chosen, opt]), stop_at=self.k) < self.k

    def value(self, chosen):
        red = sum(1 for o in chosen if o & 1)
        return red + count_cliques_masks(self._adj(chosen, color=0), self.r)

    def bound(self, chosen, cands):
        slots = {o >> 1 for o in cands}
        coarse = self.value(chosen) + len(slots) * self.per_pair
        # red edges can only come from red options; blue cliques live in the blue superset
        red_now = sum(1 for o in chosen if o & 1)
        red_more = len({o >> 1 for o in cands if o & 1})
        blue_cliques = count_cliques_masks(self._adj([*chosen, *cands], color=0), self.r)
        return min(coarse, red_now + red_more + blue_cliques)

    def build(self, chosen):
        red = [self.pairs[o >> 1] for o in chosen if o & 1]
        blue = [self.pairs[o >> 1] for o in chosen if not o & 1]
        return RedBlueGraph(self.n, red, blue)

    def is_free(self, G):
        return is_pk_free(G.underlying(), self.k)


def _options_for(problem: _Problem, structure) -> list[int]:
    """Encode a known structure (the seed construction) as a chosen-option list."""
    if isinstance(problem, _HypergraphProblem):
        index = {e: i for i, e in enumerate(problem.edges)}
        return sorted(index[e] for e in structure.edges)
    index = {p: i for i, p in enumerate(problem.pairs)}
    if isinstance(problem, _RedBlueProblem):
        return sorted([2 * index[p] for p in structure.blue_edges] + [2 * index[p] + 1 for p in structure.red_edges])
    return sorted(index[p] for p in structure.edges)


# ---------------------------------------------------------------------------
# engine
# ---------------------------------------------------------------------------


class _Incumbent:
    """Best value found; optionally mirrored into a shared integer across processes."""

    def __init__(self, value: int, chosen: Sequence[int], shared=None):
        self.value = value
        self.chosen = list(chosen)
        self.shared = shared

    def current(self) -> int:
        if self.shared is not None:
            self.value = max(self.value, self.shared.value)
        return self.value

    def offer(self, value: int, chosen: Sequence[int]) -> None:
        if value > self.value:
            self.value = value
            self.chosen = list(chosen)
            if self.shared is not None:
                with self.shared.get_lock():
                    if value > self.shared.value:
                        self.shared.value = value


def _branch(problem: _Problem, chosen: list[int], cands: list[int], inc: _Incumbent, budget: Budget) -> None:
    while True:
        budget.tick()
        inc.offer(problem.value(chosen), chosen)
        if not cands or problem.bound(chosen, cands) <= inc.current():
            return
        opt = cands[0]
        item = problem.item_of(opt)
        grown = [*chosen, opt]
        kept = [d for d in cands[1:] if problem.item_of(d) != item and problem.compatible(grown, d)]
        _branch(problem, grown, kept, inc, budget)
        rest = cands[1:]
        # every nonempty configuration is isomorphic to one using the first
        # item, so with nothing chosen we never skip past it
        if not chosen and (not rest or problem.item_of(rest[0]) != item):
            return
        cands = rest


def _frontier(problem: _Problem, depth: int) -> list[tuple[list[int], list[int]]]:
    """Split the tree into independent subtrees by expanding ``depth`` decisions."""
    nodes = [([], list(range(problem.n_options)))]
    tasks: list[tuple[list[int], list[int]]] = []
    for _ in range(depth):
        nxt = []
        for chosen, cands in nodes:
            if not cands:
                tasks.append((chosen, cands))
                continue
            opt = cands[0]
            item = problem.item_of(opt)
            grown = [*chosen, opt]
            nxt.append((grown, [d for d in cands[1:] if problem.item_of(d) != item and problem.compatible(grown, d)]))
            rest = cands[1:]
            if chosen or (rest and problem.item_of(rest[0]) == item):
                nxt.append((chosen, rest))
            else:
                tasks.append((chosen, []))
        nodes = nxt
    return tasks + nodes


_shared_best = None
_shared_cancel = None


def _worker_init(shared, cancel):
    global _shared_best, _shared_cancel
    _shared_best = shared
    _shared_cancel = cancel


def _run_task(problem, chosen, cands, seed_value, max_nodes, deadline):
    budget = Budget(max_nodes, max(0.0, (deadline - time.time()) * 1000.0) if deadline else None, _shared_cancel)
    inc = _Incumbent(seed_value, [], _shared_best)
    inc.value = max(seed_value, _shared_best.value)
    floor = inc.value
    exhausted = False
    try:
        _branch(problem, list(chosen), list(cands), inc, budget)
    except BudgetExhausted:
        exhausted = True
        _shared_cancel.set()
    improved = inc.chosen if inc.value > floor and inc.chosen else None
    return inc.value if improved is not None else None, improved, budget.nodes, exhausted


def _solve(problem: _Problem, seed, budget: Budget, workers: int) -> tuple[int, list[int], str, int]:
    seed_chosen = _options_for(problem, seed) if seed is not None else []
    seed_value = problem.value(seed_chosen)
    if workers <= 1:
        inc = _Incumbent(seed_value, seed_chosen)
        status = "proved"
        try:
            _branch(problem, [], list(range(problem.n_options)), inc, budget)
        except BudgetExhausted:
            status = "budget_exhausted"
        return inc.value, inc.chosen, status, budget.nodes

    tasks = _frontier(problem, depth=6)
    ctx = mp.get_context("fork") if "fork" in mp.get_all_start_methods() else mp.get_context()
    shared = ctx.Value("q", seed_value)
    cancel = ctx.Event()
    deadline = time.time() + budget.max_ms / 1000.0 if budget.max_ms is not None else None
    best_value, best_chosen = seed_value, seed_chosen
    nodes, status = 0, "proved"
    with ProcessPoolExecutor(workers, mp_context=ctx, initializer=_worker_init, initargs=(shared, cancel)) as pool:
        futures = [pool.submit(_run_task, problem, c, d, seed_value, budget.max_nodes, deadline) for c, d in tasks]
        for fut in futures:
            value, chosen, used, exhausted = fut.result()
            nodes += used
            if exhausted:
                status = "budget_exhausted"
            if chosen is not None and value > best_value:
                best_value, best_chosen = value, chosen
    return best_value, best_chosen, status, nodes


def _finish(problem, params, regime, budget, workers, seed, value, chosen, status, nodes) -> OracleResult:
    witness = problem.build(chosen)
    if problem.value(chosen) != value:
        raise InvariantViolation(f"witness value {problem.value(chosen)} != reported {value}")
    if not problem.is_free(witness):
        raise InvariantViolation("oracle witness contains the forbidden structure")
    return OracleResult(params, regime, value, witness, status, nodes, budget.elapsed_ms(), workers, seed is not None)


def _make_budget(max_nodes, max_ms) -> Budget:
    return Budget(max_nodes, max_ms)


def turan_oracle(
    P: TuranParams,
    max_nodes: int | None = DEFAULT_MAX_NODES,
    max_ms: float | None = DEFAULT_MAX_MS,
    workers: int = 1,
    seed_incumbent: bool = True,
) -> OracleResult:
    """Maximum edge count of a Berge-P_k-free r-graph on n vertices."""
    if P.n > BITSET_LIMIT:
        raise InvalidParameterError(f"oracle works for n <= {BITSET_LIMIT}, got {P.n}")
    budget = _make_budget(max_nodes, max_ms)
    problem = _HypergraphProblem(P.n, P.r, P.k)
    seed = None
    if seed_incumbent:
        if P.k > P.r:
            seed = construct_extremal(P)
        elif P.n % (P.r + 1) == 0:
            seed = construct_small_k(P)
    value, chosen, status, nodes = _solve(problem, seed, budget, workers)
    return _finish(problem, P, "hypergraph", budget, workers, seed, value, chosen, status, nodes)


def graph_kr_oracle(
    n: int,
    k: int,
    r: int,
    max_nodes: int | None = DEFAULT_MAX_NODES,
    max_ms: float | None = DEFAULT_MAX_MS,
    workers: int = 1,
    seed_incumbent: bool = True,
) -> OracleResult:
    """Maximum number of r-cliques in a P_k-free graph on n vertices."""
    P = TuranParams(n, r, k)
    if not 2 <= r <= k:
        raise InvalidParameterError(f"needs r <= k, got r={r}, k={k}")
    budget = _make_budget(max_nodes, max_ms)
    problem = _CliqueProblem(n, r, k)
    seed = construct_clique_extremal(P) if seed_incumbent else None
    value, chosen, status, nodes = _solve(problem, seed, budget, workers)
    return _finish(problem, P, "cliques", budget, workers, seed, value, chosen, status, nodes)


def redblue_g_oracle(
    n: int,
    k: int,
    r: int,
    max_nodes: int | None = DEFAULT_MAX_NODES,
    max_ms: float | None = DEFAULT_MAX_MS,
    workers: int = 1,
    seed_incumbent: bool = True,
) -> OracleResult:
    """Maximum of g over red-blue graphs on n vertices whose underlying graph is P_k-free."""
    P = TuranParams(n, r, k)
    budget = _make_budget(max_nodes, max_ms)
    problem = _RedBlueProblem(n, r, k)
    seed = construct_redblue_extremal(P) if seed_incumbent and k >= r + 1 else None
    value, chosen, status, nodes = _solve(problem, seed, budget, workers)
    return _finish(problem, P, "redblue", budget, workers, seed, value, chosen, status, nodes)


# ---------------------------------------------------------------------------
# batch verification
# ---------------------------------------------------------------------------


@dataclass
class VerifyCell:
    params: TuranParams
    formula_value: int
    oracle_value: int
    status: Status
    nodes_explored: int
    elapsed_ms: float

    @property
    def match(self) -> bool:
        return self.formula_value == self.oracle_value

    @property
    def outcome(self) -> Literal["match", "mismatch", "inconclusive"]:
        if self.status != "proved":
            # an incumbent above the formula is a disproof even without a full search
            return "mismatch" if self.oracle_value > self.formula_value else "inconclusive"
        return "match" if self.match else "mismatch"

    def to_json(self) -> dict:
        return {
            "params": self.params.as_dict(),
            "formula_value": self.formula_value,
            "oracle_value": self.oracle_value,
            "match": self.match,
            "status": self.status,
            "outcome": self.outcome,
            "nodes_explored": self.nodes_explored,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


@dataclass
class VerifyReport:
    regime: Regime
    cells: list[VerifyCell] = field(default_factory=list)

    @property
    def mismatches(self) -> int:
        return sum(c.outcome == "mismatch" for c in self.cells)

    @property
    def inconclusive(self) -> int:
        return sum(c.outcome == "inconclusive" for c in self.cells)

    @property
    def passed(self) -> bool:
        return self.mismatches == 0

    def to_json(self) -> dict:
        return {
            "regime": self.regime,
            "passed": self.passed,
            "mismatches": self.mismatches,
            "inconclusive": self.inconclusive,
            "cells": [c.to_json() for c in self.cells],
        }


def verify_range(
    regime: Regime,
    grid: Sequence[TuranParams],
    max_nodes: int | None = DEFAULT_MAX_NODES,
    max_ms: float | None = DEFAULT_MAX_MS,
    workers: int = 1,
) -> VerifyReport:
    """Run the oracle for each grid cell and compare with the closed form."""
    report = VerifyReport(regime)
    for P in grid:
        if regime == "hypergraph":
            expected = turan_formula(P)
            res = turan_oracle(P, max_nodes, max_ms, workers)
        elif regime == "cliques":
            expected = kr_count_bound(P)
            res = graph_kr_oracle(P.n, P.k, P.r, max_nodes, max_ms, workers)
        elif regime == "redblue":
            expected = g_upper_bound(P)
            res = redblue_g_oracle(P.n, P.k, P.r, max_nodes, max_ms, workers)
        else:
            raise InvalidParameterError(f"unknown regime {regime!r}")
        report.cells.append(VerifyCell(P, expected, res.best_value, res.status, res.nodes_explored, res.elapsed_ms))
    return report


# ---------------------------------------------------------------------------
# isomorphism-free enumeration
# ---------------------------------------------------------------------------


class _EdgePermutations:
    """How each vertex permutation acts on the lexicographic list of r-subsets."""

    def __init__(self, n: int, r: int):
        self.n, self.r = n, r
        self.edges = list(combinations(range(n), r))
        index = {e: i for i, e in enumerate(self.edges)}
        table = np.empty((0, len(self.edges)), dtype=np.int64)
        rows = []
        for perm in permutations(range(n)):
            rows.append([index[tuple(sorted(perm[v] for v in e))] for e in self.edges])
        table = np.array(rows, dtype=np.int64) if rows else table
        self.table = table
        self.pow2 = np.left_shift(np.int64(1), table) if len(self.edges) < 63 else None

    def canonical(self, code: int) -> int:
        if code == 0:
            return 0
        bits = [i for i in range(len(self.edges)) if code >> i & 1]
        if self.pow2 is not None:
            return int(self.pow2[:, bits].sum(axis=1).min())
        return min(sum(1 << int(j) for j in row[bits]) for row in self.table)


def canonical_code(H: Hypergraph) -> int:
    """Smallest edge-bitmask over all relabellings (n! work; keep n small)."""
    perms = _EdgePermutations(H.n, H.r)
    index = {e: i for i, e in enumerate(perms.edges)}
    return perms.canonical(sum(1 << index[e] for e in H.edges))


def iter_nonisomorphic_hypergraphs(n: int, r: int) -> Iterator[Hypergraph]:
    """One representative per isomorphism class of r-graphs on n vertices.

    Classes are generated level by level in edge count: each canonical form
    is extended by every absent edge and the result re-canonicalised.
    Practical for n <= 6 with r = 3.
    """
    perms = _EdgePermutations(n, r)
    m = len(perms.edges)
    level = {0}
    for size in range(m + 1):
        for code in sorted(level):
            yield Hypergraph(n, r, [perms.edges[i] for i in range(m) if code >> i & 1])
        if size == m:
            break
        nxt = set()
        for code in level:
            for i in range(m):
                if not code >> i & 1:
                    nxt.add(perms.canonical(code | (1 << i)))
        level = nxt


def random_hypergraph(n: int, r: int, density: float, rng) -> Hypergraph:
    edges = [e for e in combinations(range(n), r) if rng.random() < density]
    return Hypergraph(n, r, edges)

