"""Signed graphs: data model, switching, balance, and small-graph symmetry search.

A signed graph is a simple undirected graph together with a +1/-1 sign on
every edge.  Switching a vertex set negates the sign of every edge with
exactly one endpoint inside the set; two signatures on the same graph are
switching equivalent exactly when they induce the same set of negative
cycles.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

AUTOMORPHISM_VERTEX_LIMIT = 16


class GraphError(ValueError):
    """Malformed graph data, or an operation applied outside its domain."""


@dataclass(frozen=True)
class SignedGraph:
    """A simple undirected graph with a sign on every edge.

    Vertices are the integers ``1..vertex_count``.  Edge identity is the
    position in ``edges``, and the endpoint order of each edge is preserved:
    incidence colorings store one color per endpoint, in this order.  File
    formats rely on both conventions, so instances never reorder edges.
    Values are immutable after construction and safe to share.
    """

    vertex_count: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise GraphError(f"vertex_count must be positive, got {self.vertex_count}")
        seen: set[tuple[int, int]] = set()
        for u, v, s in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (1 <= u <= self.vertex_count and 1 <= v <= self.vertex_count):
                raise GraphError(f"edge ({u},{v}) has an endpoint outside 1..{self.vertex_count}")
            if s not in (1, -1):
                raise GraphError(f"edge ({u},{v}) has sign {s}, expected +1 or -1")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"duplicate edge ({u},{v})")
            seen.add(key)

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex tuple of incident edge indices (slot 0 unused)."""
        inc: list[list[int]] = [[] for _ in range(self.vertex_count + 1)]
        for i, (u, v, _) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(xs) for xs in inc)

    @cached_property
    def _pair_index(self) -> dict[tuple[int, int], int]:
        return {
            ((u, v) if u < v else (v, u)): i for i, (u, v, _) in enumerate(self.edges)
        }

    def degree(self, v: int) -> int:
        return len(self.incident[v])

    def max_degree(self) -> int:
        return max((len(self.incident[v]) for v in range(1, self.vertex_count + 1)), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._pair_index

    def edge_index(self, u: int, v: int) -> int:
        try:
            return self._pair_index[(u, v) if u < v else (v, u)]
        except KeyError:
            raise GraphError(f"no edge between {u} and {v}") from None

    def sign(self, u: int, v: int) -> int:
        return self.edges[self.edge_index(u, v)][2]

    def endpoints(self, edge_idx: int) -> tuple[int, int]:
        u, v, _ = self.edges[edge_idx]
        return u, v

    def other_end(self, edge_idx: int, v: int) -> int:
        u, w, _ = self.edges[edge_idx]
        return w if v == u else u

    def unordered_pairs(self) -> frozenset[tuple[int, int]]:
        """The underlying edge set, as sorted vertex pairs."""
        return frozenset(self._pair_index)

    @property
    def is_all_positive(self) -> bool:
        return all(s == 1 for _, _, s in self.edges)

    @property
    def is_all_negative(self) -> bool:
        return all(s == -1 for _, _, s in self.edges)

    def negative_edge_count(self) -> int:
        return sum(1 for _, _, s in self.edges if s == -1)

    def with_signs(self, signs: Sequence[int]) -> SignedGraph:
        """Same topology and edge order, new per-edge signs."""
        if len(signs) != len(self.edges):
            raise GraphError("sign list length does not match edge count")
        return SignedGraph(
            self.vertex_count,
            tuple((u, v, s) for (u, v, _), s in zip(self.edges, signs)),
        )

    def relabeled(self, perm: Sequence[int]) -> SignedGraph:
        """Apply a vertex permutation; ``perm[v-1]`` is the image of ``v``.

        Edge order and per-edge endpoint order follow the original list, so
        the result generally differs from a canonically ordered rebuild.
        """
        if sorted(perm) != list(range(1, self.vertex_count + 1)):
            raise GraphError("not a permutation of the vertex set")
        return SignedGraph(
            self.vertex_count,
            tuple((perm[u - 1], perm[v - 1], s) for u, v, s in self.edges),
        )


@dataclass(frozen=True)
class CycleWitness:
    """A cycle given as a closed walk over distinct vertices, plus its sign."""

    vertices: tuple[int, ...]
    sign: int


def build_graph(
    vertex_count: int, signed_edges: Iterable[tuple[int, int, int]]
) -> SignedGraph:
    """Validate and build a :class:`SignedGraph` from an edge list."""
    return SignedGraph(vertex_count, tuple((u, v, s) for u, v, s in signed_edges))


def switch(g: SignedGraph, x: Iterable[int]) -> SignedGraph:
    """Negate the sign of every edge with exactly one endpoint in ``x``."""
    xs = frozenset(x)
    for v in xs:
        if not (1 <= v <= g.vertex_count):
            raise GraphError(f"switch set contains invalid vertex {v}")
    return g.with_signs(
        [s * (-1 if (u in xs) != (v in xs) else 1) for u, v, s in g.edges]
    )


def cycle_sign(g: SignedGraph, vertices: Sequence[int]) -> int:
    """Sign product along a closed walk ``vertices`` (last edge closes the walk)."""
    sign = 1
    for a, b in zip(vertices, list(vertices[1:]) + [vertices[0]]):
        sign *= g.sign(a, b)
    return sign


def _potentials(g: SignedGraph) -> tuple[list[int] | None, tuple[int, ...] | None]:
    """Sign propagation over a spanning forest.

    Returns ``(potentials, None)`` when every non-tree edge is consistent
    (the graph is balanced), else ``(None, cycle)`` where ``cycle`` is the
    vertex sequence of a negative cycle.  Each component's lowest-indexed
    vertex is pinned to potential +1, which makes the output deterministic.
    """
    n = g.vertex_count
    pot = [0] * (n + 1)
    parent: list[tuple[int, int] | None] = [None] * (n + 1)  # (parent vertex, depth)
    for root in range(1, n + 1):
        if pot[root]:
            continue
        pot[root] = 1
        parent[root] = (0, 0)
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for ei in g.incident[v]:
                w = g.other_end(ei, v)
                s = g.edges[ei][2]
                if not pot[w]:
                    pot[w] = pot[v] * s
                    parent[w] = (v, parent[v][1] + 1)
                    queue.append(w)
                elif pot[w] != pot[v] * s:
                    return None, _tree_cycle(parent, v, w)
    return pot, None


def _tree_cycle(
    parent: list[tuple[int, int] | None], u: int, v: int
) -> tuple[int, ...]:
    """Cycle through tree paths from ``u`` and ``v`` up to their meeting point."""
    path_u = [u]
    path_v = [v]
    du, dv = parent[u][1], parent[v][1]
    while du > dv:
        u = parent[u][0]
        path_u.append(u)
        du -= 1
    while dv > du:
        v = parent[v][0]
        path_v.append(v)
        dv -= 1
    while u != v:
        u = parent[u][0]
        v = parent[v][0]
        path_u.append(u)
        path_v.append(v)
    # path_u ends at the meeting point; walk down the v side in reverse.
    return tuple(path_u + path_v[-2::-1])


def is_balanced(g: SignedGraph) -> bool:
    """True iff every cycle has positive sign product."""
    pot, _ = _potentials(g)
    return pot is not None


def negative_cycle(g: SignedGraph) -> CycleWitness | None:
    """A witness negative cycle, or None when the graph is balanced."""
    _, cyc = _potentials(g)
    if cyc is None:
        return None
    return CycleWitness(cyc, cycle_sign(g, cyc))


def _require_same_underlying(a: SignedGraph, b: SignedGraph) -> None:
    if a.vertex_count != b.vertex_count or a.unordered_pairs() != b.unordered_pairs():
        raise GraphError("graphs have different underlying topology")


def switching_equivalent(a: SignedGraph, b: SignedGraph) -> frozenset[int] | None:
    """A switch set taking ``a`` to ``b`` edge-for-edge, or None.

    Both arguments must share the same underlying graph.  The witness is the
    set of vertices assigned potential -1 when balance-checking the product
    signature; per-component ties break by pinning the lowest vertex to +1.
    """
    _require_same_underlying(a, b)
    product = a.with_signs([s * b.sign(u, v) for u, v, s in a.edges])
    pot, _ = _potentials(product)
    if pot is None:
        return None
    return frozenset(v for v in range(1, a.vertex_count + 1) if pot[v] == -1)


def automorphisms(
    g: SignedGraph, *, limit: int = AUTOMORPHISM_VERTEX_LIMIT
) -> list[tuple[int, ...]]:
    """All adjacency-preserving vertex permutations of the underlying graph.

    Signs are ignored.  Permutations are returned as tuples with
    ``perm[v-1]`` the image of ``v``, in lexicographic order.  Backtracking
    refines candidates by degree; inputs above ``limit`` vertices are
    rejected because full enumeration would be infeasible.
    """
    n = g.vertex_count
    if n > limit:
        raise GraphError(
            f"automorphism search supports at most {limit} vertices, got {n}"
        )
    adj = [0] * (n + 1)
    for u, v, _ in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    deg = [bin(adj[v]).count("1") for v in range(n + 1)]
    candidates = [
        [w for w in range(1, n + 1) if deg[w] == deg[v]] for v in range(n + 1)
    ]
    found: list[tuple[int, ...]] = []
    image = [0] * (n + 1)
    used = [False] * (n + 1)

    def extend(v: int) -> None:
        if v > n:
            found.append(tuple(image[1:]))
            return
        for w in candidates[v]:
            if used[w]:
                continue
            ok = True
            for u in range(1, v):
                if bool(adj[v] & (1 << u)) != bool(adj[w] & (1 << image[u])):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                extend(v + 1)
                used[w] = False
        image[v] = 0

    extend(1)
    return found


def switching_isomorphic(a: SignedGraph, b: SignedGraph) -> bool:
    """True iff some automorphism image of ``b`` is switching equivalent to ``a``.

    Graphs with different underlying topology are never switching isomorphic
    here (no isomorphism search across distinct labelings is attempted).
    """
    if a.vertex_count != b.vertex_count or a.unordered_pairs() != b.unordered_pairs():
        return False
    for perm in automorphisms(a):
        if switching_equivalent(a, b.relabeled(perm)) is not None:
            return True
    return False
