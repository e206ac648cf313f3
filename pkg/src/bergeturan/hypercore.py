"""Uniform hypergraphs, simple graphs and red-blue graphs.

Vertices are dense integers ``0..n-1``.  Every structure is immutable after
construction; hyperedges are stored as sorted tuples together with an
integer bitmask mirror used by the search kernels.
"""

from __future__ import annotations

from collections.abc import Iterable
from itertools import combinations
from math import comb
from pathlib import Path

from .errors import (
    DuplicateEdgeError,
    InvalidInputError,
    InvalidParameterError,
    InvalidVertexError,
    ParseError,
)

Edge = tuple[int, ...]
Pair = tuple[int, int]

HYPERGRAPH_HEADER = "berge-hgraph v1"
GRAPH_HEADER = "berge-graph v1"
COLORS = ("red", "blue")


def binom(n: int, k: int) -> int:
    """Exact binomial coefficient, 0 when ``k > n``.

    Python integers are unbounded, so there is no overflow path.
    """
    if n < 0 or k < 0:
        raise InvalidParameterError(f"binom needs nonnegative arguments, got ({n}, {k})")
    return comb(n, k)


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _check_vertices(n: int, vertices: Iterable[int]) -> None:
    for v in vertices:
        if not (isinstance(v, int) and 0 <= v < n):
            raise InvalidVertexError(f"vertex {v!r} out of range for n={n}")


class Hypergraph:
    """Simple r-uniform hypergraph on vertices ``0..n-1``.

    Edges are kept sorted lexicographically, so two hypergraphs with the same
    edge set compare and hash equal regardless of insertion order.
    """

    __slots__ = ("n", "r", "edges", "masks", "_edge_set")

    def __init__(self, n: int, r: int, edges: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise InvalidParameterError(f"n must be nonnegative, got {n}")
        if r < 2:
            raise InvalidParameterError(f"uniformity r must be >= 2, got {r}")
        normalized: set[Edge] = set()
        for raw in edges:
            e = tuple(sorted(raw))
            _check_vertices(n, e)
            if len(e) != r or len(set(e)) != r:
                raise InvalidInputError(f"hyperedge {list(raw)} is not an {r}-set")
            if e in normalized:
                raise DuplicateEdgeError(f"duplicate hyperedge {list(e)}")
            normalized.add(e)
        self.n = n
        self.r = r
        self.edges: tuple[Edge, ...] = tuple(sorted(normalized))
        self.masks: tuple[int, ...] = tuple(_mask(e) for e in self.edges)
        self._edge_set = frozenset(self.edges)

    @classmethod
    def complete(cls, n: int, r: int, offset: int = 0, total: int | None = None) -> "Hypergraph":
        """Complete r-graph on ``offset..offset+n-1`` inside ``total`` vertices."""
        total = n + offset if total is None else total
        return cls(total, r, combinations(range(offset, offset + n), r))

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, edge: Iterable[int]) -> bool:
        return tuple(sorted(edge)) in self._edge_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.n, self.r, self.edges) == (other.n, other.r, other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.r, self.edges))

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, r={self.r}, edges={[list(e) for e in self.edges]})"

    def degree(self, v: int) -> int:
        _check_vertices(self.n, (v,))
        bit = 1 << v
        return sum(1 for m in self.masks if m & bit)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return deg

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def add_edges(self, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        return Hypergraph(self.n, self.r, [*self.edges, *edges])

    def restrict_edges(self, keep: Iterable[Edge]) -> "Hypergraph":
        return Hypergraph(self.n, self.r, keep)


class Graph:
    """Simple graph; edges stored as ``(u, v)`` with ``u < v``."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise InvalidParameterError(f"n must be nonnegative, got {n}")
        self.n = n
        self.edges: frozenset[Pair] = frozenset(_normalize_pairs(n, edges, allow_dupes=True))
        adj = [0] * n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.adj: tuple[int, ...] = tuple(adj)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, combinations(range(n), 2))

    def __len__(self) -> int:
        return len(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"

    def sorted_edges(self) -> list[Pair]:
        return sorted(self.edges)


class RedBlueGraph:
    """Simple graph whose edges are coloured red or blue."""

    __slots__ = ("n", "red_edges", "blue_edges")

    def __init__(self, n: int, red_edges: Iterable[Iterable[int]] = (), blue_edges: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise InvalidParameterError(f"n must be nonnegative, got {n}")
        self.n = n
        self.red_edges: frozenset[Pair] = frozenset(_normalize_pairs(n, red_edges, allow_dupes=True))
        self.blue_edges: frozenset[Pair] = frozenset(_normalize_pairs(n, blue_edges, allow_dupes=True))
        both = self.red_edges & self.blue_edges
        if both:
            raise InvalidInputError(f"pairs coloured both red and blue: {sorted(both)}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RedBlueGraph):
            return NotImplemented
        return (self.n, self.red_edges, self.blue_edges) == (other.n, other.red_edges, other.blue_edges)

    def __hash__(self) -> int:
        return hash((self.n, self.red_edges, self.blue_edges))

    def __repr__(self) -> str:
        return f"RedBlueGraph(n={self.n}, red={sorted(self.red_edges)}, blue={sorted(self.blue_edges)})"

    def underlying(self) -> Graph:
        return Graph(self.n, self.red_edges | self.blue_edges)

    def red(self) -> Graph:
        return Graph(self.n, self.red_edges)

    def blue(self) -> Graph:
        return Graph(self.n, self.blue_edges)


def _normalize_pairs(n: int, pairs: Iterable[Iterable[int]], allow_dupes: bool) -> list[Pair]:
    out: list[Pair] = []
    seen: set[Pair] = set()
    for raw in pairs:
        p = tuple(sorted(raw))
        if len(p) != 2:
            raise InvalidInputError(f"graph edge {list(raw)} does not have two endpoints")
        _check_vertices(n, p)
        if p[0] == p[1]:
            raise InvalidInputError(f"loop at vertex {p[0]}")
        if p in seen:
            if not allow_dupes:
                raise DuplicateEdgeError(f"duplicate edge {list(p)}")
            continue
        seen.add(p)
        out.append(p)  # type: ignore[arg-type]
    return out


# ---------------------------------------------------------------------------
# queries
# ---------------------------------------------------------------------------


def incident_edges(H: Hypergraph, S: Iterable[int]) -> frozenset[Edge]:
    """Hyperedges of ``H`` meeting at least one vertex of ``S``."""
    S = list(S)
    _check_vertices(H.n, S)
    sm = _mask(S)
    return frozenset(e for e, m in zip(H.edges, H.masks) if m & sm)


def incident_count(H: Hypergraph, S: Iterable[int]) -> int:
    sm = _mask(S)
    return sum(1 for m in H.masks if m & sm)


def delete_vertices(H: Hypergraph, U: Iterable[int]) -> Hypergraph:
    """Remove ``U`` and every hyperedge touching it; survivors are renumbered in order."""
    U = set(U)
    _check_vertices(H.n, U)
    if not U:
        return H
    new_index = {}
    for v in range(H.n):
        if v not in U:
            new_index[v] = len(new_index)
    um = _mask(U)
    kept = [tuple(new_index[v] for v in e) for e, m in zip(H.edges, H.masks) if not m & um]
    return Hypergraph(H.n - len(U), H.r, kept)


def induced(H: Hypergraph, S: Iterable[int]) -> Hypergraph:
    """Sub-hypergraph induced on ``S`` (edges inside ``S``), renumbered in order."""
    S = set(S)
    return delete_vertices(H, set(range(H.n)) - S)


def components(H: Hypergraph) -> list[frozenset[int]]:
    """Vertex classes connected through chains of intersecting hyperedges."""
    parent = list(range(H.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in H.edges:
        root = find(e[0])
        for v in e[1:]:
            other = find(v)
            if other != root:
                parent[other] = root
    classes: dict[int, set[int]] = {}
    for v in range(H.n):
        classes.setdefault(find(v), set()).add(v)
    return sorted((frozenset(c) for c in classes.values()), key=min)


def graph_components(G: Graph) -> list[frozenset[int]]:
    return components(Hypergraph(G.n, 2, G.edges)) if G.n else []


def count_cliques(G: Graph, r: int) -> int:
    """Number of r-vertex cliques, by increasing-vertex extension over bitmasks."""
    if r < 2:
        raise InvalidParameterError(f"clique size must be >= 2, got {r}")
    return count_cliques_masks(G.adj, r)


def count_cliques_masks(adj: tuple[int, ...] | list[int], r: int) -> int:
    n = len(adj)
    # forward neighbourhoods: only larger-indexed neighbours, so each clique counts once
    fwd = [adj[v] >> (v + 1) << (v + 1) for v in range(n)]

    def extend(cand: int, need: int) -> int:
        if need == 0:
            return 1
        if need == 1:
            return cand.bit_count()
        total = 0
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            nxt = cand & fwd[v]
            if nxt.bit_count() >= need - 1:
                total += extend(nxt, need - 1)
        return total

    return sum(extend(fwd[v], r - 1) for v in range(n))


def longest_path(G: Graph) -> int:
    """Edge count of a longest path, by DFS per component with early exit."""
    return longest_path_masks(G.adj)


def longest_path_masks(adj: tuple[int, ...] | list[int], stop_at: int | None = None) -> int:
    """Longest path length; returns as soon as ``stop_at`` edges are reached."""
    n = len(adj)
    seen = 0
    best = 0
    for s in range(n):
        if seen >> s & 1:
            continue
        # component of s
        comp = 1 << s
        frontier = comp
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = adj[low.bit_length() - 1] & ~comp
            comp |= new
            frontier |= new
        seen |= comp
        ceiling = comp.bit_count() - 1
        if ceiling <= best:
            continue
        limit = ceiling if stop_at is None else min(ceiling, stop_at)
        found = _longest_in_component(adj, comp, limit, best)
        best = max(best, found)
        if stop_at is not None and best >= stop_at:
            return best
    return best


def _longest_in_component(adj, comp: int, limit: int, best: int) -> int:
    # vertices of degree one are the only useful start points when they exist,
    # but any vertex is correct; try low degree first for earlier long paths
    starts = []
    c = comp
    while c:
        low = c & -c
        c ^= low
        v = low.bit_length() - 1
        starts.append(v)
    starts.sort(key=lambda v: (adj[v] & comp).bit_count())

    class _Done(Exception):
        pass

    def dfs(v: int, used: int, length: int) -> None:
        nonlocal best
        if length > best:
            best = length
            if best >= limit:
                raise _Done
        nxt = adj[v] & ~used
        while nxt:
            low = nxt & -nxt
            nxt ^= low
            dfs(low.bit_length() - 1, used | low, length + 1)

    try:
        for s in starts:
            dfs(s, 1 << s, 0)
    except _Done:
        pass
    return best


def is_pk_free(G: Graph, k: int) -> bool:
    """True when ``G`` has no path with ``k`` edges."""
    return longest_path_masks(G.adj, stop_at=k) < k


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------


def _content_lines(text: str):
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _parse_kv(line: str, lineno: int, keys: tuple[str, ...]) -> dict[str, int]:
    out = {}
    for token in line.split():
        key, sep, value = token.partition("=")
        if not sep or key not in keys or key in out:
            raise ParseError(f"expected {' '.join(k + '=<int>' for k in keys)}, got {line!r}", lineno)
        try:
            out[key] = int(value)
        except ValueError:
            raise ParseError(f"{key} is not an integer: {value!r}", lineno) from None
    if set(out) != set(keys):
        raise ParseError(f"expected {' '.join(k + '=<int>' for k in keys)}, got {line!r}", lineno)
    return out


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"non-integer vertex in {' '.join(tokens)!r}", lineno) from None


def format_hypergraph(H: Hypergraph) -> str:
    lines = [HYPERGRAPH_HEADER, f"r={H.r} n={H.n}"]
    lines += [" ".join(map(str, e)) for e in H.edges]
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> Hypergraph:
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("empty input") from None
    if header != HYPERGRAPH_HEADER:
        raise ParseError(f"expected header {HYPERGRAPH_HEADER!r}, got {header!r}", lineno)
    try:
        lineno, dims = next(lines)
    except StopIteration:
        raise ParseError("missing 'r=<r> n=<n>' line") from None
    kv = _parse_kv(dims, lineno, ("r", "n"))
    r, n = kv["r"], kv["n"]
    if r < 2 or n < 0:
        raise ParseError(f"need r >= 2 and n >= 0, got r={r} n={n}", lineno)
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, line in lines:
        e = tuple(_ints(line.split(), lineno))
        if len(e) != r:
            raise ParseError(f"hyperedge has {len(e)} vertices, expected {r}", lineno)
        if any(a >= b for a, b in zip(e, e[1:])):
            raise ParseError("hyperedge vertices must be strictly increasing", lineno)
        if e[0] < 0 or e[-1] >= n:
            raise ParseError(f"vertex out of range 0..{n - 1}", lineno)
        if e in seen:
            raise ParseError(f"duplicate hyperedge {' '.join(map(str, e))}", lineno)
        seen.add(e)
        edges.append(e)
    return Hypergraph(n, r, edges)


def format_graph(G: Graph | RedBlueGraph) -> str:
    lines = [GRAPH_HEADER, f"n={G.n}"]
    if isinstance(G, RedBlueGraph):
        colored = [(u, v, "red") for u, v in G.red_edges] + [(u, v, "blue") for u, v in G.blue_edges]
        lines += [f"{u} {v} {c}" for u, v, c in sorted(colored)]
    else:
        lines += [f"{u} {v}" for u, v in sorted(G.edges)]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph | RedBlueGraph:
    """Parse the graph format; any colour column makes it a red-blue graph."""
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("empty input") from None
    if header != GRAPH_HEADER:
        raise ParseError(f"expected header {GRAPH_HEADER!r}, got {header!r}", lineno)
    try:
        lineno, dims = next(lines)
    except StopIteration:
        raise ParseError("missing 'n=<n>' line") from None
    n = _parse_kv(dims, lineno, ("n",))["n"]
    if n < 0:
        raise ParseError("n must be nonnegative", lineno)
    plain: list[Pair] = []
    colored: dict[str, list[Pair]] = {"red": [], "blue": []}
    seen: set[Pair] = set()
    for lineno, line in lines:
        tokens = line.split()
        if len(tokens) == 3:
            color = tokens[2]
            if color not in COLORS:
                raise ParseError(f"unknown colour {color!r}", lineno)
            tokens = tokens[:2]
        elif len(tokens) == 2:
            color = None
        else:
            raise ParseError(f"expected 'u v [red|blue]', got {line!r}", lineno)
        u, v = _ints(tokens, lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1}", lineno)
        p = (min(u, v), max(u, v))
        if p in seen:
            raise ParseError(f"duplicate edge {p[0]} {p[1]}", lineno)
        seen.add(p)
        if color is None:
            plain.append(p)
        else:
            colored[color].append(p)
    if plain and (colored["red"] or colored["blue"]):
        raise ParseError("mixes coloured and uncoloured edges")
    if colored["red"] or colored["blue"]:
        return RedBlueGraph(n, colored["red"], colored["blue"])
    return Graph(n, plain)


def read_hypergraph(path: str | Path) -> Hypergraph:
    return parse_hypergraph(Path(path).read_text(encoding="utf-8"))


def write_hypergraph(H: Hypergraph, path: str | Path) -> None:
    Path(path).write_text(format_hypergraph(H), encoding="utf-8", newline="\n")


def read_graph(path: str | Path) -> Graph | RedBlueGraph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def write_graph(G: Graph | RedBlueGraph, path: str | Path) -> None:
    Path(path).write_text(format_graph(G), encoding="utf-8", newline="\n")


def hypergraph_to_json(H: Hypergraph) -> dict:
    return {"type": "hypergraph", "n": H.n, "r": H.r, "edges": [list(e) for e in H.edges]}


def graph_to_json(G: Graph | RedBlueGraph) -> dict:
    if isinstance(G, RedBlueGraph):
        return {
            "type": "redblue",
            "n": G.n,
            "red_edges": [list(p) for p in sorted(G.red_edges)],
            "blue_edges": [list(p) for p in sorted(G.blue_edges)],
        }
    return {"type": "graph", "n": G.n, "edges": [list(p) for p in sorted(G.edges)]}


def structure_from_json(data: dict) -> Hypergraph | Graph | RedBlueGraph:
    kind = data.get("type")
    if kind == "hypergraph":
        return Hypergraph(data["n"], data["r"], data["edges"])
    if kind == "graph":
        return Graph(data["n"], data["edges"])
    if kind == "redblue":
        return RedBlueGraph(data["n"], data["red_edges"], data["blue_edges"])
    raise InvalidInputError(f"unknown structure type {kind!r}")
