"""Good sets and the structural lemma checkers.

Each checker verifies its own preconditions with the Berge detector and
returns a :class:`LemmaReport`; ``holds`` only means something when
``precondition_ok`` is true.  Subsets are searched exhaustively, so these
are desk-scale tools (n up to about 8).
"""

from __future__ import annotations

import warnings
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Literal

from .berge import BergeSearch, BergeWitness
from .errors import InvalidInputError, PreconditionError
from .hypercore import Hypergraph, components, incident_count

Verdict = Literal["good", "very_good", "neither"]
LemmaId = Literal["endpoint_confinement", "low_degree_cluster", "small_neighborhood", "good_set_disjunction"]


@dataclass(frozen=True)
class GoodSetReport:
    """``verdict`` is reproducible as ``incident_count * den <= num``."""

    subset: tuple[int, ...]
    incident_count: int
    threshold_numerator: int
    threshold_denominator: int
    verdict: Verdict
    ell: int
    test: Literal["good", "very_good"] = "good"

    def passes(self) -> bool:
        return self.incident_count * self.threshold_denominator <= self.threshold_numerator

    def to_json(self) -> dict:
        return {
            "subset": list(self.subset),
            "incident_count": self.incident_count,
            "threshold_numerator": self.threshold_numerator,
            "threshold_denominator": self.threshold_denominator,
            "verdict": self.verdict,
            "ell": self.ell,
            "test": self.test,
        }


@dataclass
class LemmaReport:
    lemma_id: LemmaId
    holds: bool
    precondition_ok: bool
    witness: dict = field(default_factory=dict)
    note: str = ""

    def to_json(self) -> dict:
        return {
            "lemma_id": self.lemma_id,
            "holds": self.holds,
            "precondition_ok": self.precondition_ok,
            "witness": _jsonable(self.witness),
            "note": self.note,
        }


def _jsonable(obj):
    if isinstance(obj, BergeWitness):
        return obj.to_json()
    if isinstance(obj, GoodSetReport):
        return obj.to_json()
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [_jsonable(v) for v in items]
    return obj


def _subset(S: Iterable[int], H: Hypergraph) -> tuple[int, ...]:
    S = tuple(sorted(set(S)))
    for v in S:
        if not 0 <= v < H.n:
            raise InvalidInputError(f"vertex {v} out of range for n={H.n}")
    return S


def _resolve_ell(H: Hypergraph, ell: int | None) -> int:
    if ell is None:
        ell, _ = BergeSearch(H).longest()
    if ell <= H.r:
        raise PreconditionError(f"good sets need longest Berge path > r; got ell={ell}, r={H.r}")
    return ell


def is_good_set(H: Hypergraph, S: Iterable[int], ell: int) -> GoodSetReport:
    """|N(S)| <= |S| * C(ell, r-1) / r, compared as r*|N(S)| <= |S|*C(ell, r-1)."""
    r = H.r
    if ell <= r:
        raise PreconditionError(f"good sets are defined only for ell > r; got ell={ell}, r={r}")
    S = _subset(S, H)
    count = incident_count(H, S)
    num = len(S) * comb(ell, r - 1)
    verdict: Verdict = "good" if count * r <= num else "neither"
    return GoodSetReport(S, count, num, r, verdict, ell, "good")


def is_very_good_pair(H: Hypergraph, S: Iterable[int], ell: int) -> GoodSetReport:
    """r*|N(S)| <= C(ell, r-1) + C(ell-1, r-1) for a 2-set.

    The thresholds stored are the very-good ones.  A pair failing them may
    still be good, in which case the verdict says so.
    """
    r = H.r
    S = _subset(S, H)
    if len(S) != 2:
        raise InvalidInputError(f"very-good test needs a 2-set, got {list(S)}")
    if ell <= r:
        raise PreconditionError(f"good sets are defined only for ell > r; got ell={ell}, r={r}")
    count = incident_count(H, S)
    num = comb(ell, r - 1) + comb(ell - 1, r - 1)
    if count * r <= num:
        verdict: Verdict = "very_good"
    elif count * r <= 2 * comb(ell, r - 1):
        verdict = "good"
    else:
        verdict = "neither"
    return GoodSetReport(S, count, num, r, verdict, ell, "very_good")


def find_good_sets(H: Hypergraph, max_size: int, ell: int | None = None) -> list[GoodSetReport]:
    """All good subsets of sizes 1..max_size, in size then lexicographic order."""
    ell = _resolve_ell(H, ell)
    if max_size > 3:
        warnings.warn(
            f"enumerating all subsets up to size {max_size} costs C(n, {max_size}) incidence counts",
            stacklevel=2,
        )
    found = []
    for size in range(1, max_size + 1):
        for S in combinations(range(H.n), size):
            rep = is_good_set(H, S, ell)
            if rep.verdict == "good":
                found.append(rep)
    return found


def _first_good(H: Hypergraph, size: int, ell: int) -> GoodSetReport | None:
    for S in combinations(range(H.n), size):
        rep = is_good_set(H, S, ell)
        if rep.verdict == "good":
            return rep
    return None


# ---------------------------------------------------------------------------
# assignments of defining hyperedges
# ---------------------------------------------------------------------------


def iter_assignments(search: BergeSearch, seq: tuple[int, ...], kind: str = "path") -> Iterator[tuple[int, ...]]:
    """Every injective choice of hyperedge indices for the consecutive pairs of ``seq``."""
    pairs = list(zip(seq, seq[1:]))
    if kind == "cycle":
        pairs.append((seq[-1], seq[0]))
    options = [search.pair_edges[a][b] for a, b in pairs]
    if any(not o for o in options):
        return
    chosen: list[int] = []

    def rec(i: int, used: int):
        if i == len(options):
            yield tuple(chosen)
            return
        for e in options[i]:
            if not used >> e & 1:
                chosen.append(e)
                yield from rec(i + 1, used | (1 << e))
                chosen.pop()

    yield from rec(0, 0)


def _path_sequences(search: BergeSearch, k: int) -> Iterator[tuple[int, ...]]:
    """Vertex sequences of k+1 distinct vertices whose consecutive pairs share an edge."""
    adj = search.adj

    def rec(seq: list[int], used: int):
        if len(seq) == k + 1:
            yield tuple(seq)
            return
        nxt = adj[seq[-1]] & ~used
        while nxt:
            low = nxt & -nxt
            nxt ^= low
            seq.append(low.bit_length() - 1)
            yield from rec(seq, used | low)
            seq.pop()

    for s in range(search.n):
        yield from rec([s], 1 << s)


# ---------------------------------------------------------------------------
# lemma checkers
# ---------------------------------------------------------------------------


def check_endpoint_confinement(H: Hypergraph) -> LemmaReport:
    """In a Berge-P_{r+1}-free, Berge-C_{r+1}-free r-graph, endpoints of a
    Berge-P_r lie only in its defining hyperedges.

    For each vertex sequence carrying a Berge-P_r we accept it if some choice
    of defining hyperedges covers every hyperedge at either endpoint.
    """
    r = H.r
    s = BergeSearch(H)
    blocker = s.find(r + 1, "path") or s.find(r + 1, "cycle")
    if blocker is not None:
        return LemmaReport("endpoint_confinement", False, False, {"blocking_structure": blocker})
    checked = 0
    for seq in _path_sequences(s, r):
        if seq[0] > seq[-1]:
            continue  # the reversed sequence has the same assignments
        end_mask = (1 << seq[0]) | (1 << seq[-1])
        at_ends = {i for i, m in enumerate(H.masks) if m & end_mask}
        any_assignment = False
        covered = False
        for assignment in iter_assignments(s, seq):
            any_assignment = True
            if at_ends <= set(assignment):
                covered = True
                break
        if not any_assignment:
            continue
        checked += 1
        if not covered:
            return LemmaReport(
                "endpoint_confinement",
                False,
                True,
                {"vertices": list(seq), "endpoint_edges": sorted(H.edges[i] for i in at_ends)},
                "no choice of defining hyperedges covers the endpoints",
            )
    return LemmaReport("endpoint_confinement", True, True, {"paths_checked": checked})


def find_low_degree_cluster(H: Hypergraph) -> LemmaReport:
    """r+1 vertices meeting at most r hyperedges, given a Berge-C_r and no P_{r+1}, C_{r+1}."""
    r = H.r
    s = BergeSearch(H)
    if s.find(r + 1, "path") is not None or s.find(r + 1, "cycle") is not None:
        return LemmaReport("low_degree_cluster", False, False, note="contains Berge-P_{r+1} or Berge-C_{r+1}")
    cycle = s.find(r, "cycle")
    if cycle is None:
        return LemmaReport("low_degree_cluster", False, False, note="no Berge-C_r")
    for T in combinations(range(H.n), r + 1):
        cnt = incident_count(H, T)
        if cnt <= r:
            return LemmaReport("low_degree_cluster", True, True, {"set": list(T), "incident_count": cnt, "cycle": cycle})
    return LemmaReport("low_degree_cluster", False, True, {"cycle": cycle})


def find_small_neighborhood_set(H: Hypergraph) -> LemmaReport:
    """(r-1)-set meeting <= 1 hyperedge, or (r+1)-set meeting <= r+1 hyperedges."""
    r = H.r
    s = BergeSearch(H)
    for length in range(r, min(H.n, len(H.edges)) + 1):
        cyc = s.find(length, "cycle")
        if cyc is not None:
            return LemmaReport("small_neighborhood", False, False, {"cycle": cyc}, "has a Berge cycle of length >= r")
    ell, _ = s.longest()
    if ell != r:
        return LemmaReport("small_neighborhood", False, False, {"ell": ell}, "longest Berge path is not r")
    for S in combinations(range(H.n), r - 1):
        cnt = incident_count(H, S)
        if cnt <= 1:
            return LemmaReport("small_neighborhood", True, True, {"alternative": "i", "set": list(S), "incident_count": cnt})
    for S in combinations(range(H.n), r + 1):
        cnt = incident_count(H, S)
        if cnt <= r + 1:
            return LemmaReport("small_neighborhood", True, True, {"alternative": "ii", "set": list(S), "incident_count": cnt})
    return LemmaReport("small_neighborhood", False, True)


def _component_bullet(H: Hypergraph, search: BergeSearch, ell: int) -> dict | None:
    """Third alternative: a component on exactly ell+1 vertices spanned by a Berge-P_ell
    that carries a Berge-C_{ell+1}, or a Berge-C_ell missing a degree-1 vertex."""
    degrees = H.degrees()
    for comp in components(H):
        if len(comp) != ell + 1:
            continue
        mask = 0
        for v in comp:
            mask |= 1 << v
        path = search.find(ell, "path", allowed=mask)
        if path is None:
            continue
        cyc = search.find(ell + 1, "cycle", allowed=mask)
        if cyc is not None:
            return {"component": sorted(comp), "path": path, "cycle": cyc}
        for x in sorted(comp):
            if degrees[x] != 1:
                continue
            cyc = search.find(ell, "cycle", allowed=mask & ~(1 << x))
            if cyc is not None:
                return {"component": sorted(comp), "path": path, "cycle": cyc, "degree_one_vertex": x}
    return None


def check_good_set_disjunction(H: Hypergraph, ell: int | None = None) -> LemmaReport:
    """With longest Berge path ell > r, report which of the three alternatives hold:
    good 1-set and 2-set; good 2-set and 3-set; the component/cycle configuration.
    """
    s = BergeSearch(H)
    if ell is None:
        ell, _ = s.longest()
    if ell <= H.r:
        return LemmaReport("good_set_disjunction", False, False, {"ell": ell}, "longest Berge path is not > r")
    g1 = _first_good(H, 1, ell)
    g2 = _first_good(H, 2, ell)
    g3 = _first_good(H, 3, ell) if g2 is not None else None
    bullets: dict = {"ell": ell}
    if g1 and g2:
        bullets["sizes_1_and_2"] = [g1, g2]
    if g2 and g3:
        bullets["sizes_2_and_3"] = [g2, g3]
    comp = _component_bullet(H, s, ell)
    if comp is not None:
        bullets["component"] = comp
    holds = any(key in bullets for key in ("sizes_1_and_2", "sizes_2_and_3", "component"))
    return LemmaReport("good_set_disjunction", holds, True, bullets)


@dataclass(frozen=True)
class MoreoverCheck:
    """Standalone edge-count bound on hypergraphs with at most ell+1 vertices.

    ``qualifies`` requires ell > r+1, n <= ell+1 and some good 2-set; the
    bound is r*e(H) <= r*C(ell-1, r) + C(ell-1, r-1) + C(ell, r-1).
    """

    qualifies: bool
    within_bound: bool | None
    edges: int
    bound_numerator: int
    bound_denominator: int


def check_moreover_bound(H: Hypergraph, ell: int | None = None) -> MoreoverCheck:
    r = H.r
    if ell is None:
        ell, _ = BergeSearch(H).longest()
    num = r * comb(ell - 1, r) + comb(ell - 1, r - 1) + comb(ell, r - 1) if ell >= 1 else 0
    qualifies = ell > r + 1 and H.n <= ell + 1 and _first_good(H, 2, ell) is not None
    within = len(H.edges) * r <= num if qualifies else None
    return MoreoverCheck(qualifies, within, len(H.edges), num, r)

