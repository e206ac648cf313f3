"""Closed-form Turán values, extremal constructions and the inequality helpers.

Every comparison against a rational threshold is done by cross-multiplying,
so verdicts never touch floating point.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, islice
from math import comb

from .errors import (
    ConvexityError,
    DivisibilityError,
    InvalidInputError,
    InvalidParameterError,
    InvariantViolation,
    OutOfTheoremRangeError,
    WrongRegimeError,
)
from .hypercore import Graph, Hypergraph, RedBlueGraph, count_cliques

REGIME_LARGE_K = "k>=r+1"
REGIME_GLSZ = "GLSZ"
REGIME_MATCHING = "k=2"


@dataclass(frozen=True)
class TuranParams:
    """Forbidden Berge-P_k in r-graphs on n vertices; ``n = p*k + q``."""

    n: int
    r: int
    k: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParameterError(f"n must be >= 1, got {self.n}")
        if self.r < 2:
            raise InvalidParameterError(f"r must be >= 2, got {self.r}")
        if self.k < 2:
            raise InvalidParameterError(f"k must be >= 2, got {self.k}")

    @property
    def p(self) -> int:
        return self.n // self.k

    @property
    def q(self) -> int:
        return self.n % self.k

    @property
    def regime(self) -> str:
        if self.k >= self.r + 1:
            return REGIME_LARGE_K
        if self.k >= 3:
            return REGIME_GLSZ
        return REGIME_MATCHING

    @property
    def proven_range(self) -> bool:
        """False for r = 2, which is served by the k >= r+1 formula as a graph cross-check."""
        return self.r >= 3

    def as_dict(self) -> dict:
        return {"n": self.n, "r": self.r, "k": self.k, "p": self.p, "q": self.q}


def turan_formula(P: TuranParams) -> int:
    n, r, k = P.n, P.r, P.k
    if P.regime == REGIME_LARGE_K:
        return P.p * comb(k, r) + comb(P.q, r)
    if P.regime == REGIME_GLSZ:
        return (n // (r + 1)) * (k - 1) + (1 if (n + 1) % (r + 1) == 0 else 0)
    return n // r


def construct_extremal(P: TuranParams) -> Hypergraph:
    """``p`` disjoint complete r-graphs on k vertices plus one on the last q vertices."""
    n, r, k = P.n, P.r, P.k
    if k <= r:
        raise WrongRegimeError(f"construct_extremal needs k >= r+1 (got k={k}, r={r}); use construct_small_k")
    edges = []
    for block in range(P.p):
        edges.extend(combinations(range(block * k, block * k + k), r))
    edges.extend(combinations(range(P.p * k, n), r))
    return Hypergraph(n, r, edges)


def construct_small_k(P: TuranParams) -> Hypergraph:
    """Blocks of r+1 vertices, each carrying its lexicographically first k-1 r-subsets."""
    n, r, k = P.n, P.r, P.k
    if k > r:
        raise WrongRegimeError(f"construct_small_k needs 2 <= k <= r (got k={k}, r={r}); use construct_extremal")
    if n % (r + 1):
        raise DivisibilityError(f"construct_small_k needs (r+1) | n, but {r + 1} does not divide {n}")
    edges = []
    for block in range(n // (r + 1)):
        base = block * (r + 1)
        edges.extend(islice(combinations(range(base, base + r + 1), r), k - 1))
    return Hypergraph(n, r, edges)


def construct(P: TuranParams) -> Hypergraph:
    """Whichever construction applies to the regime of ``P``."""
    return construct_extremal(P) if P.k > P.r else construct_small_k(P)


# ---------------------------------------------------------------------------
# red-blue graphs
# ---------------------------------------------------------------------------


def g_value(G: RedBlueGraph, r: int) -> int:
    """Blue r-cliques plus red edges."""
    if r < 2:
        raise InvalidParameterError(f"r must be >= 2, got {r}")
    return count_cliques(G.blue(), r) + len(G.red_edges)


def g_upper_bound(P: TuranParams) -> int:
    r, q = P.r, P.q
    if P.k < r + 1:
        raise WrongRegimeError(f"g_upper_bound needs k >= r+1 (got k={P.k}, r={r})")
    tail = comb(q, r) if q >= r + 2 else comb(q, 2)
    return P.p * comb(P.k, r) + tail


def construct_redblue_extremal(P: TuranParams) -> RedBlueGraph:
    n, r, k = P.n, P.r, P.k
    if k < r + 1:
        raise WrongRegimeError(f"needs k >= r+1 (got k={k}, r={r})")
    blue = []
    for block in range(P.p):
        blue.extend(combinations(range(block * k, block * k + k), 2))
    tail = list(combinations(range(P.p * k, n), 2))
    if P.q >= r + 2:
        return RedBlueGraph(n, [], blue + tail)
    return RedBlueGraph(n, tail, blue)


def kr_count_bound(P: TuranParams) -> int:
    if not 3 <= P.r <= P.k:
        raise OutOfTheoremRangeError(f"clique-count bound needs 3 <= r <= k, got r={P.r}, k={P.k}")
    return P.p * comb(P.k, P.r) + comb(P.q, P.r)


def construct_clique_extremal(P: TuranParams) -> Graph:
    """``p`` disjoint copies of K_k plus a K_q."""
    k = P.k
    edges = []
    for block in range(P.p):
        edges.extend(combinations(range(block * k, block * k + k), 2))
    edges.extend(combinations(range(P.p * k, P.n), 2))
    return Graph(P.n, edges)


# ---------------------------------------------------------------------------
# inequalities
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KaramataResult:
    majorizes: bool
    inequality_holds: bool
    lhs: Fraction
    rhs: Fraction


def is_convex_table(values: Sequence) -> bool:
    return all(values[i - 1] - 2 * values[i] + values[i + 1] >= 0 for i in range(1, len(values) - 1))


def karamata_check(f: Sequence | Callable[[int], object], x: Sequence[int], y: Sequence[int]) -> KaramataResult:
    """Majorization test plus the convex-sum comparison it implies.

    ``f`` is a value table indexed by nonnegative integers (a callable is
    tabulated over ``0..max(x, y)``).  Both sequences are sorted internally.
    Raises :class:`InvariantViolation` if x majorizes y and the sums still
    go the wrong way, which would contradict Karamata's inequality.
    """
    if len(x) != len(y):
        raise InvalidInputError(f"sequences differ in length: {len(x)} vs {len(y)}")
    xs = sorted(x, reverse=True)
    ys = sorted(y, reverse=True)
    if any(v < 0 for v in xs + ys):
        raise InvalidInputError("sequence entries must be nonnegative integers")
    top = max(xs + ys, default=0)
    table = [f(t) for t in range(top + 1)] if callable(f) else list(f)
    if len(table) <= top:
        raise InvalidInputError(f"value table covers 0..{len(table) - 1}, need 0..{top}")
    if not is_convex_table(table):
        raise ConvexityError("value table has a negative second difference")
    table = [Fraction(v) for v in table]

    majorizes = sum(xs) == sum(ys)
    px = py = 0
    for a, b in zip(xs, ys):
        px += a
        py += b
        if px < py:
            majorizes = False
            break
    lhs = sum((table[v] for v in xs), Fraction(0))
    rhs = sum((table[v] for v in ys), Fraction(0))
    holds = lhs >= rhs
    if majorizes and not holds:
        raise InvariantViolation(f"majorizing pair with convex f but {lhs} < {rhs}: x={xs}, y={ys}")
    return KaramataResult(majorizes, holds, lhs, rhs)


@dataclass(frozen=True)
class LemiResult:
    """Each part is None when its parameters are outside the stated range."""

    part_i: bool | None
    part_ii: bool | None
    part_i_equality: bool | None = None
    part_ii_equality: bool | None = None


def lemi_check(r: int, k: int, ell: int | None = None) -> LemiResult:
    """Check (k-1)/2 <= C(k-1,r-1)/r and (k-l-1)/2 <= (C(k-1,r-1) - C(l,r-1))/r."""
    part_i = part_i_eq = None
    if r >= 2 and k >= r + 2:
        lhs, rhs = r * (k - 1), 2 * comb(k - 1, r - 1)
        part_i, part_i_eq = lhs <= rhs, lhs == rhs
    part_ii = part_ii_eq = None
    if ell is not None and 3 <= r <= ell <= k - 2:
        lhs, rhs = r * (k - ell - 1), 2 * (comb(k - 1, r - 1) - comb(ell, r - 1))
        part_ii, part_ii_eq = lhs <= rhs, lhs == rhs
    return LemiResult(part_i, part_ii, part_i_eq, part_ii_eq)


def berge_cycle_free_bound(n: int, r: int) -> int:
    """Edge bound for r-graphs without Berge cycles of length >= r."""
    if not n >= r >= 3:
        raise InvalidParameterError(f"needs n >= r >= 3, got n={n}, r={r}")
    return max((n - 1) // r * (r - 1), n - r + 1)


def gykl_bound(P: TuranParams) -> Fraction:
    """The divisibility-sharp bound n/k * C(k, r) for k >= r+1 (or n(k-1)/(r+1) for k <= r)."""
    if P.k >= P.r + 1:
        return Fraction(P.n * comb(P.k, P.r), P.k)
    return Fraction(P.n * (P.k - 1), P.r + 1)
