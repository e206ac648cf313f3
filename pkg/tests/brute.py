"""Slow, obviously-correct reference implementations used as test oracles."""

from __future__ import annotations

from itertools import combinations, permutations, product
from math import factorial

from bergeturan.hypercore import Hypergraph


def _assignable(edges, pairs) -> bool:
    """Backtracking: give each consecutive pair its own hyperedge containing it."""
    used = [False] * len(edges)

    def go(i):
        if i == len(pairs):
            return True
        a, b = pairs[i]
        for j, e in enumerate(edges):
            if not used[j] and a in e and b in e:
                used[j] = True
                if go(i + 1):
                    return True
                used[j] = False
        return False

    return go(0)


def brute_has_path(H: Hypergraph, k: int) -> bool:
    if k + 1 > H.n or k > len(H.edges):
        return False
    edges = [set(e) for e in H.edges]
    for seq in permutations(range(H.n), k + 1):
        if seq[0] > seq[-1]:
            continue
        if _assignable(edges, list(zip(seq, seq[1:]))):
            return True
    return False


def brute_has_cycle(H: Hypergraph, k: int) -> bool:
    if k > H.n or k > len(H.edges):
        return False
    edges = [set(e) for e in H.edges]
    for seq in permutations(range(H.n), k):
        if seq[0] != min(seq):
            continue
        if _assignable(edges, list(zip(seq, seq[1:] + seq[:1]))):
            return True
    return False


def brute_longest_path(H: Hypergraph) -> int:
    best = 0
    for k in range(1, H.n):
        if brute_has_path(H, k):
            best = k
        else:
            break
    return best


def burnside_count(n: int, r: int) -> int:
    """Number of r-graphs on n unlabelled vertices, by averaging fixed points."""
    subsets = list(combinations(range(n), r))
    index = {s: i for i, s in enumerate(subsets)}
    total = 0
    for perm in permutations(range(n)):
        seen = [False] * len(subsets)
        cycles = 0
        for i in range(len(subsets)):
            if seen[i]:
                continue
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = index[tuple(sorted(perm[v] for v in subsets[j]))]
        total += 2**cycles
    assert total % factorial(n) == 0
    return total // factorial(n)


def brute_turan(n: int, r: int, k: int) -> int:
    """Largest Berge-P_k-free r-graph on n labelled vertices, all 2^C(n,r) subsets."""
    subsets = list(combinations(range(n), r))
    best = 0
    for bits in range(1 << len(subsets)):
        size = bin(bits).count("1")
        if size <= best:
            continue
        H = Hypergraph(n, r, [s for i, s in enumerate(subsets) if bits >> i & 1])
        if not brute_has_path(H, k):
            best = size
    return best


def _longest_graph_path(n, adj) -> int:
    best = 0

    def dfs(v, visited, length):
        nonlocal best
        best = max(best, length)
        for w in adj[v]:
            if w not in visited:
                visited.add(w)
                dfs(w, visited, length + 1)
                visited.discard(w)

    for v in range(n):
        dfs(v, {v}, 0)
    return best


def _blue_cliques(n, edge_set, r):
    return sum(all(p in edge_set for p in combinations(c, 2)) for c in combinations(range(n), r))


def brute_redblue(n: int, r: int, k: int) -> int:
    """max g over all 3^C(n,2) colourings (absent / red / blue) with no path of k edges."""
    pairs = list(combinations(range(n), 2))
    best = 0
    for colours in product(range(3), repeat=len(pairs)):
        adj = [[] for _ in range(n)]
        blue = set()
        red = 0
        for (u, v), c in zip(pairs, colours):
            if c:
                adj[u].append(v)
                adj[v].append(u)
            if c == 1:
                red += 1
            elif c == 2:
                blue.add((u, v))
        if _longest_graph_path(n, adj) >= k:
            continue
        best = max(best, red + _blue_cliques(n, blue, r))
    return best
