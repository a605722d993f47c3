"""Independent brute-force oracles used to cross-check the library.

Everything here is deliberately slow and simple: cycle enumeration by DFS,
automorphisms by filtering all permutations, classical edge coloring by raw
backtracking over edges.  None of it shares code with the package paths it
verifies.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

from sgcolor.graphs import SignedGraph, cycle_sign


def all_simple_cycles(g: SignedGraph) -> list[tuple[int, ...]]:
    """Every simple cycle once, rooted at its smallest vertex."""
    adj = {
        v: sorted(g.other_end(i, v) for i in g.incident[v])
        for v in range(1, g.vertex_count + 1)
    }
    cycles: list[tuple[int, ...]] = []

    def dfs(start: int, path: list[int], visited: set[int]) -> None:
        v = path[-1]
        for w in adj[v]:
            if w == start and len(path) >= 3 and path[1] < path[-1]:
                cycles.append(tuple(path))
            elif w > start and w not in visited:
                visited.add(w)
                path.append(w)
                dfs(start, path, visited)
                path.pop()
                visited.remove(w)

    for s in range(1, g.vertex_count + 1):
        dfs(s, [s], {s})
    return cycles


def balanced_by_cycle_enumeration(g: SignedGraph) -> bool:
    return all(cycle_sign(g, c) == 1 for c in all_simple_cycles(g))


def brute_force_automorphisms(g: SignedGraph) -> list[tuple[int, ...]]:
    """All automorphisms by filtering every vertex permutation."""
    pairs = g.unordered_pairs()
    edge_list = [(u, v) for u, v, _ in g.edges]
    out = []
    for p in permutations(range(1, g.vertex_count + 1)):
        ok = True
        for u, v in edge_list:
            a, b = p[u - 1], p[v - 1]
            if ((a, b) if a < b else (b, a)) not in pairs:
                ok = False
                break
        if ok:
            out.append(p)
    return out


def classical_exists_coloring(
    vertex_count: int, pairs: list[tuple[int, int]], q: int
) -> list[int] | None:
    """Classical proper edge coloring with colors 1..q, or None."""
    conflicts: list[list[int]] = [[] for _ in pairs]
    for i, (u1, v1) in enumerate(pairs):
        for j in range(i):
            u2, v2 = pairs[j]
            if {u1, v1} & {u2, v2}:
                conflicts[i].append(j)
    colors = [0] * len(pairs)

    def extend(i: int) -> bool:
        if i == len(pairs):
            return True
        for c in range(1, q + 1):
            if any(colors[j] == c for j in conflicts[i]):
                continue
            colors[i] = c
            if extend(i + 1):
                return True
        colors[i] = 0
        return False

    return colors if extend(0) else None


def classical_chromatic_index(vertex_count: int, pairs: list[tuple[int, int]]) -> int:
    """Exact classical chromatic index (input must have at least one edge)."""
    degree = [0] * (vertex_count + 1)
    for u, v in pairs:
        degree[u] += 1
        degree[v] += 1
    delta = max(degree)
    if classical_exists_coloring(vertex_count, pairs, delta) is not None:
        return delta
    assert classical_exists_coloring(vertex_count, pairs, delta + 1) is not None
    return delta + 1


def random_connected_graph(
    rng: random.Random, n: int, p: float = 0.5
) -> list[tuple[int, int]]:
    """Edge pairs of a random connected graph on vertices 1..n."""
    while True:
        pairs = [e for e in combinations(range(1, n + 1), 2) if rng.random() < p]
        seen = {1}
        stack = [1]
        adj: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
        for u, v in pairs:
            adj[u].append(v)
            adj[v].append(u)
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) == n and pairs:
            return pairs


def random_signed_graph(rng: random.Random, n: int, p: float = 0.5) -> SignedGraph:
    pairs = [e for e in combinations(range(1, n + 1), 2) if rng.random() < p]
    return SignedGraph(
        n, tuple((u, v, rng.choice((1, -1))) for u, v in pairs)
    )
