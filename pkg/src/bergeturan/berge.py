"""Berge paths and cycles: detection, longest paths, hamiltonian-connectedness.

The search extends a sequence of distinct vertices one at a time.  Each new
consecutive pair must be given its own hyperedge; whether the pairs seen so
far admit a system of distinct hyperedges is kept as a bipartite matching
(pairs on the left, hyperedges on the right) and repaired with a single
augmenting-path search per appended vertex.  A failed augmentation is a Hall
violation and kills the branch.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Literal

from .budget import Budget
from .errors import InvalidParameterError, OutOfTheoremRangeError
from .hypercore import Edge, Hypergraph

Kind = Literal["path", "cycle"]


@dataclass(frozen=True)
class BergeWitness:
    kind: Kind
    vertices: tuple[int, ...]
    assigned_edges: tuple[Edge, ...]

    @property
    def length(self) -> int:
        return len(self.assigned_edges)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "length": self.length,
            "vertices": list(self.vertices),
            "assigned_edges": [list(e) for e in self.assigned_edges],
        }

    @classmethod
    def from_json(cls, data: dict) -> "BergeWitness":
        return cls(data["kind"], tuple(data["vertices"]), tuple(tuple(sorted(e)) for e in data["assigned_edges"]))


@dataclass(frozen=True)
class WitnessCheck:
    """Outcome of :func:`verify_witness`; truthy iff the witness is valid."""

    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_witness(H: Hypergraph, w: BergeWitness) -> WitnessCheck:
    if w.kind not in ("path", "cycle"):
        return WitnessCheck(False, "unknown_kind")
    k = len(w.assigned_edges)
    if k == 0:
        return WitnessCheck(False, "empty")
    expected = k + 1 if w.kind == "path" else k
    if len(w.vertices) != expected:
        return WitnessCheck(False, "vertex_count")
    if len(set(w.vertices)) != len(w.vertices):
        return WitnessCheck(False, "repeated_vertex")
    edges = [tuple(sorted(e)) for e in w.assigned_edges]
    if len(set(edges)) != k:
        return WitnessCheck(False, "repeated_edge")
    for e in edges:
        if e not in H:
            return WitnessCheck(False, "edge_not_in_hypergraph")
    for i, e in enumerate(edges):
        a = w.vertices[i]
        b = w.vertices[(i + 1) % len(w.vertices)]
        if a not in e or b not in e:
            return WitnessCheck(False, "pair_not_covered")
    return WitnessCheck(True)


class BergeSearch:
    """Reusable search state for one hypergraph.

    Precomputes, for every vertex pair, the hyperedges containing it.  All
    public entry points accept an optional :class:`Budget`; exhausting it
    raises :class:`~bergeturan.errors.BudgetExhausted`, which callers must
    keep distinct from a negative answer.
    """

    def __init__(self, H: Hypergraph, budget: Budget | None = None):
        self.H = H
        self.n = H.n
        self.m = len(H.edges)
        self.budget = budget
        n = H.n
        pair_edges: list[list[tuple[int, ...]]] = [[() for _ in range(n)] for _ in range(n)]
        adj = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                both = (1 << u) | (1 << v)
                ids = tuple(i for i, m in enumerate(H.masks) if m & both == both)
                if ids:
                    pair_edges[u][v] = pair_edges[v][u] = ids
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
        self.pair_edges = pair_edges
        self.adj = adj

    # -- matching ---------------------------------------------------------

    def _augment(self, j: int, cands: list[tuple[int, ...]], left: list[int], right: list[int], seen: list[bool]) -> bool:
        for e in cands[j]:
            if seen[e]:
                continue
            seen[e] = True
            if right[e] < 0 or self._augment(right[e], cands, left, right, seen):
                left[j] = e
                right[e] = j
                return True
        return False

    def _push_pair(self, cands, left, right, a: int, b: int):
        """Append pair (a, b); return the extended matching or None on Hall failure."""
        ids = self.pair_edges[a][b]
        if not ids:
            return None
        cands.append(ids)
        left2 = left + [-1]
        right2 = right[:]
        j = len(left)
        # cheap path: a free hyperedge for the new pair
        for e in ids:
            if right2[e] < 0:
                left2[j] = e
                right2[e] = j
                return left2, right2
        if self._augment(j, cands, left2, right2, [False] * self.m):
            return left2, right2
        cands.pop()
        return None

    def _tick(self) -> None:
        if self.budget is not None:
            self.budget.tick()

    def _witness(self, kind: Kind, seq: list[int], left: list[int]) -> BergeWitness:
        return BergeWitness(kind, tuple(seq), tuple(self.H.edges[e] for e in left))

    # -- searches ---------------------------------------------------------

    def find(
        self,
        k: int,
        kind: Kind = "path",
        start: int | None = None,
        end: int | None = None,
        allowed: int | None = None,
    ) -> BergeWitness | None:
        """Witness of length ``k`` or None.

        ``allowed`` is a vertex bitmask the defining vertices must lie in
        (hyperedges are unrestricted).  ``start``/``end`` pin the endpoints of
        a path.
        """
        n, m = self.n, self.m
        allowed = (1 << n) - 1 if allowed is None else allowed
        n_allowed = allowed.bit_count()
        if kind == "path":
            if k < 1 or k + 1 > n_allowed or k > m:
                return None
            target_vertices = k + 1
        else:
            if k < 2 or k > n_allowed or k > m:
                return None
            target_vertices = k
        adj = [a & allowed for a in self.adj]

        if kind == "path":
            starts = [start] if start is not None else [v for v in range(n) if allowed >> v & 1]
        else:
            starts = [v for v in range(n) if allowed >> v & 1]

        for s in starts:
            if not (allowed >> s & 1) or not adj[s]:
                continue
            found = self._extend(kind, k, target_vertices, adj, [s], 1 << s, [], [-1] * m, [], end)
            if found is not None:
                return found
        return None

    def _extend(self, kind, k, target, adj, seq, used, left, right, cands, end) -> BergeWitness | None:
        self._tick()
        if len(seq) == target:
            if kind == "path":
                if end is not None and seq[-1] != end:
                    return None
                return self._witness("path", seq, left)
            # cycle: close the loop; a reflected copy was (or will be) tried
            if seq[1] > seq[-1]:
                return None
            closed = self._push_pair(cands, left, right, seq[-1], seq[0])
            if closed is None:
                return None
            cands.pop()
            return self._witness("cycle", seq, closed[0])
        last = seq[-1]
        nxt = adj[last] & ~used
        if kind == "cycle":
            # canonical rotation: the smallest vertex comes first
            nxt &= ~((1 << (seq[0] + 1)) - 1)
            if len(seq) == target - 1:
                nxt &= adj[seq[0]]
        elif end is not None:
            if len(seq) == target - 1:
                nxt &= 1 << end
            else:
                nxt &= ~(1 << end)
        while nxt:
            low = nxt & -nxt
            nxt ^= low
            w = low.bit_length() - 1
            state = self._push_pair(cands, left, right, last, w)
            if state is None:
                continue
            seq.append(w)
            found = self._extend(kind, k, target, adj, seq, used | low, state[0], state[1], cands, end)
            seq.pop()
            cands.pop()
            if found is not None:
                return found
        return None

    def longest(self) -> tuple[int, BergeWitness | None]:
        """Maximum Berge path length with a witness (0, None when edgeless)."""
        ceiling = min(self.n - 1, self.m)
        best_len, best_w = 0, None
        if ceiling <= 0:
            return 0, None
        for length in range(1, ceiling + 1):
            w = self.find(length)
            if w is None:
                break
            best_len, best_w = length, w
        return best_len, best_w

    def find_through_edge(self, k: int, edge_index: int) -> BergeWitness | None:
        """Berge path of length ``k`` having some consecutive pair inside the given edge.

        Used when the hypergraph minus that edge is already known to be free:
        any new Berge-P_k must pass through it, so the search starts from each
        pair of its vertices and grows to the right, then to the left.
        """
        if k < 1 or k + 1 > self.n or k > self.m:
            return None
        e = self.H.edges[edge_index]
        adj = self.adj
        for ai in range(len(e)):
            for bi in range(ai + 1, len(e)):
                a, b = e[ai], e[bi]
                cands: list[tuple[int, ...]] = []
                state = self._push_pair(cands, [], [-1] * self.m, a, b)
                if state is None:
                    continue
                for right_len in range(k):
                    left_len = k - 1 - right_len
                    found = self._grow(adj, [a, b], (1 << a) | (1 << b), state[0], state[1], cands, right_len, left_len)
                    if found is not None:
                        return found
        return None

    def _grow(self, adj, seq, used, left, right, cands, right_len, left_len) -> BergeWitness | None:
        self._tick()
        if right_len == 0 and left_len == 0:
            # pair indices follow insertion order, not sequence order
            return assign_edges(self.H, seq, "path")
        grow_right = right_len > 0
        tip = seq[-1] if grow_right else seq[0]
        nxt = adj[tip] & ~used
        while nxt:
            low = nxt & -nxt
            nxt ^= low
            w = low.bit_length() - 1
            state = self._push_pair(cands, left, right, tip, w)
            if state is None:
                continue
            if grow_right:
                seq.append(w)
                found = self._grow(adj, seq, used | low, state[0], state[1], cands, right_len - 1, left_len)
                seq.pop()
            else:
                seq.insert(0, w)
                found = self._grow(adj, seq, used | low, state[0], state[1], cands, right_len, left_len - 1)
                seq.pop(0)
            cands.pop()
            if found is not None:
                return found
        return None


def assign_edges(H: Hypergraph, vertices, kind: Kind = "path") -> BergeWitness | None:
    """Distinct hyperedges for the consecutive pairs of ``vertices``, or None."""
    s = BergeSearch(H)
    seq = list(vertices)
    pairs = list(zip(seq, seq[1:]))
    if kind == "cycle":
        pairs.append((seq[-1], seq[0]))
    cands: list[tuple[int, ...]] = []
    left: list[int] = []
    right = [-1] * s.m
    for a, b in pairs:
        if a == b:
            return None
        state = s._push_pair(cands, left, right, a, b)
        if state is None:
            return None
        left, right = state
    return BergeWitness(kind, tuple(seq), tuple(H.edges[e] for e in left))


# ---------------------------------------------------------------------------
# module-level API
# ---------------------------------------------------------------------------


def find_berge_path(H: Hypergraph, k: int, budget: Budget | None = None) -> BergeWitness | None:
    if k < 1:
        raise InvalidParameterError(f"path length must be >= 1, got {k}")
    return BergeSearch(H, budget).find(k, "path")


def find_berge_cycle(H: Hypergraph, k: int, budget: Budget | None = None) -> BergeWitness | None:
    """Berge cycle of length ``k``; length 2 is searched like any other length."""
    if k < 2:
        raise InvalidParameterError(f"cycle length must be >= 2, got {k}")
    return BergeSearch(H, budget).find(k, "cycle")


def longest_berge_path(H: Hypergraph, budget: Budget | None = None) -> tuple[int, BergeWitness | None]:
    return BergeSearch(H, budget).longest()


def has_berge_cycle_at_least(H: Hypergraph, k: int, budget: Budget | None = None) -> BergeWitness | None:
    s = BergeSearch(H, budget)
    for length in range(max(k, 2), min(H.n, len(H.edges)) + 1):
        w = s.find(length, "cycle")
        if w is not None:
            return w
    return None


def hamiltonian_path(H: Hypergraph, u: int, v: int, budget: Budget | None = None) -> BergeWitness | None:
    """Spanning Berge path from ``u`` to ``v``."""
    return BergeSearch(H, budget).find(H.n - 1, "path", start=u, end=v)


def is_hamiltonian_connected(H: Hypergraph, budget: Budget | None = None) -> bool:
    if H.n < 2:
        raise InvalidParameterError(f"hamiltonian-connectedness needs n >= 2, got {H.n}")
    if len(H.edges) < H.n - 1:
        return False
    s = BergeSearch(H, budget)
    for u in range(H.n):
        for v in range(u + 1, H.n):
            if s.find(H.n - 1, "path", start=u, end=v) is None:
                return False
    return True


def klm_hypothesis(H: Hypergraph) -> bool:
    """Degree condition guaranteeing hamiltonian-connectedness (three cases)."""
    n, r = H.n, H.r
    if r < 3:
        raise OutOfTheoremRangeError(f"needs r >= 3, got r={r}")
    if n < r:
        raise OutOfTheoremRangeError(f"needs n >= r, got n={n}, r={r}")
    delta = H.min_degree()
    # case (i): r <= n/2 and delta >= C(floor(n/2), r-1) + 1
    if 2 * r <= n and delta >= comb(n // 2, r - 1) + 1:
        return True
    # case (ii): n-1 >= r > n/2 >= 3 and delta >= r-1
    if n - 1 >= r and 2 * r > n and n >= 6 and delta >= r - 1:
        return True
    # case (iii)
    return r == 3 and n == 5 and delta >= 3
