"""Incidence-based edge coloring of signed graphs.

Every edge has two incidences, one per endpoint.  A coloring assigns a
palette color to each incidence so that the two colors of an edge ``e = vw``
satisfy ``color(v,e) = -sign(e) * color(w,e)``: a negative edge carries the
same color at both ends, a positive edge carries opposite colors (and 0,
when present in the palette, is self-opposite).  The coloring is proper when
the incidence colors at each vertex are pairwise distinct.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .graphs import SignedGraph, switch


class ColoringError(ValueError):
    """Invalid palette, coloring data, or coloring operation."""


@dataclass(frozen=True)
class ColorSet:
    """The symmetric palette of a given size.

    For ``q = 2r`` the palette is ``{-r..-1, 1..r}``; for ``q = 2r+1`` it
    additionally contains 0.  ``q = 0`` is the empty palette.
    """

    q: int

    def __post_init__(self) -> None:
        if self.q < 0:
            raise ColoringError(f"palette size must be nonnegative, got {self.q}")

    @property
    def r(self) -> int:
        return self.q // 2

    @property
    def includes_zero(self) -> bool:
        return self.q % 2 == 1

    @cached_property
    def members(self) -> tuple[int, ...]:
        """Palette in deterministic search order: 0 (if odd q), 1, -1, 2, -2, ..."""
        out: list[int] = [0] if self.includes_zero else []
        for a in range(1, self.r + 1):
            out.extend((a, -a))
        return tuple(out)

    def __contains__(self, c: int) -> bool:
        return (c == 0 and self.includes_zero) or 1 <= abs(c) <= self.r


def color_set(q: int) -> ColorSet:
    return ColorSet(q)


def edge_assignment(colors: ColorSet, sign: int, c: int) -> tuple[int, int]:
    """Incidence color pair forced by choosing color ``c`` on an edge.

    A negative edge receives ``c`` at both incidences; a positive edge
    receives ``c`` at the first endpoint and ``-c`` at the second.
    """
    if c not in colors:
        raise ColoringError(f"color {c} is outside the palette of size {colors.q}")
    if sign not in (1, -1):
        raise ColoringError(f"sign must be +1 or -1, got {sign}")
    return (c, c) if sign == -1 else (c, -c)


@dataclass(frozen=True)
class IncidenceColoring:
    """Colors for every incidence of a signed graph.

    ``pairs[i]`` holds the colors at the first and second endpoint of edge
    ``i``, in the graph's stored endpoint order.  Construction does not
    enforce properness or even the edge rule; use :func:`violations` to
    check, so that externally supplied colorings can be diagnosed.
    """

    graph: SignedGraph
    colors: ColorSet
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if len(self.pairs) != len(self.graph.edges):
            raise ColoringError(
                f"expected {len(self.graph.edges)} color pairs, got {len(self.pairs)}"
            )

    def color_at(self, v: int, edge_idx: int) -> int:
        u, w, _ = self.graph.edges[edge_idx]
        if v == u:
            return self.pairs[edge_idx][0]
        if v == w:
            return self.pairs[edge_idx][1]
        raise ColoringError(f"vertex {v} is not an endpoint of edge {edge_idx}")


@dataclass(frozen=True)
class Violation:
    """One reason a coloring fails to be proper."""

    kind: str  # "edge-sign" | "palette" | "vertex"
    vertex: int | None
    edges: tuple[int, ...]

    def describe(self) -> str:
        if self.kind == "edge-sign":
            return f"edge {self.edges[0] + 1}: colors break the edge sign rule"
        if self.kind == "palette":
            return f"edge {self.edges[0] + 1}: color outside the palette"
        return (
            f"vertex {self.vertex}: edges {self.edges[0] + 1} and "
            f"{self.edges[1] + 1} repeat a color"
        )


def violations(coloring: IncidenceColoring) -> list[Violation]:
    """All palette, edge-rule, and per-vertex conflicts, in deterministic order."""
    g = coloring.graph
    out: list[Violation] = []
    for i, ((u, v, s), (cu, cv)) in enumerate(zip(g.edges, coloring.pairs)):
        if cu not in coloring.colors or cv not in coloring.colors:
            out.append(Violation("palette", None, (i,)))
        if cv != (cu if s == -1 else -cu):
            out.append(Violation("edge-sign", None, (i,)))
    for v in range(1, g.vertex_count + 1):
        inc = g.incident[v]
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                if coloring.color_at(v, inc[a]) == coloring.color_at(v, inc[b]):
                    out.append(Violation("vertex", v, (inc[a], inc[b])))
    return out


def is_proper(coloring: IncidenceColoring) -> bool:
    return not violations(coloring)


@dataclass(frozen=True)
class CGraphComponent:
    """One connected piece of a color level: an open path or a cycle."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    closed: bool
    sign: int | None  # sign product around the cycle; None for paths


@dataclass(frozen=True)
class CGraph:
    """The subgraph of edges colored with +-a under a coloring."""

    coloring: IncidenceColoring
    level: int
    edges: tuple[int, ...]
    components: tuple[CGraphComponent, ...]


def c_graph(coloring: IncidenceColoring, a: int) -> CGraph:
    """Extract and classify the level-``a`` subgraph of a coloring.

    For a proper coloring every vertex meets at most two edges of one level
    (at most one when ``a = 0``), so components are paths or cycles; inputs
    breaking that bound are rejected.
    """
    if a < 0 or a > coloring.colors.r:
        raise ColoringError(f"level {a} outside 0..{coloring.colors.r}")
    g = coloring.graph
    for i, (cu, cv) in enumerate(coloring.pairs):
        if abs(cu) != abs(cv):
            raise ColoringError(f"edge {i + 1} breaks the edge sign rule")
    level_edges = [i for i, (cu, _) in enumerate(coloring.pairs) if abs(cu) == a]
    inc: dict[int, list[int]] = {}
    for i in level_edges:
        u, v, _ = g.edges[i]
        inc.setdefault(u, []).append(i)
        inc.setdefault(v, []).append(i)
    cap = 1 if a == 0 else 2
    for v, es in inc.items():
        if len(es) > cap:
            raise ColoringError(
                f"vertex {v} has {len(es)} edges at level {a}; coloring is not proper"
            )
    components: list[CGraphComponent] = []
    seen_edges: set[int] = set()
    endpoints = sorted(v for v, es in inc.items() if len(es) == 1)
    starts = endpoints + sorted(inc)  # path ends first, then cycle starts
    for start in starts:
        first_free = next((i for i in inc[start] if i not in seen_edges), None)
        if first_free is None:
            continue
        verts = [start]
        edges = []
        v = start
        ei: int | None = first_free
        while ei is not None:
            seen_edges.add(ei)
            edges.append(ei)
            v = g.other_end(ei, v)
            if v == start:
                break
            verts.append(v)
            ei = next((j for j in inc[v] if j not in seen_edges), None)
        closed = v == start
        sign = None
        if closed:
            sign = 1
            for j in edges:
                sign *= g.edges[j][2]
        components.append(CGraphComponent(tuple(verts), tuple(edges), closed, sign))
    return CGraph(coloring, a, tuple(sorted(level_edges)), tuple(components))


def transport(coloring: IncidenceColoring, x: Iterable[int]) -> IncidenceColoring:
    """Carry a coloring across a switch by negating colors at switched vertices.

    The result lives on the switched graph and is proper there whenever the
    input was proper.
    """
    xs = frozenset(x)
    g = coloring.graph
    new_pairs = []
    for (u, v, _), (cu, cv) in zip(g.edges, coloring.pairs):
        new_pairs.append((-cu if u in xs else cu, -cv if v in xs else cv))
    return IncidenceColoring(switch(g, xs), coloring.colors, tuple(new_pairs))


def unsigned_palette_map(q: int) -> dict[int, int]:
    """The fixed bijection from classical colors 1..q onto the symmetric palette.

    Classical colors map in the interleaved order 1 -> 1, 2 -> -1, 3 -> 2,
    4 -> -2, ...; when q is odd the final classical color maps to 0.
    """
    table: dict[int, int] = {}
    for j in range(1, q // 2 + 1):
        table[2 * j - 1] = j
        table[2 * j] = -j
    if q % 2 == 1:
        table[q] = 0
    return table


def from_unsigned(
    g: SignedGraph, classical: Sequence[int], q: int | None = None
) -> IncidenceColoring:
    """Lift a classical proper edge coloring onto an all-negative signed graph.

    ``classical[i]`` is the classical color (in ``1..q``) of edge ``i``.  Both
    incidences of each edge receive the palette image of its classical color,
    which is proper exactly because the classical coloring was.
    """
    if not g.is_all_negative:
        raise ColoringError("graph must be all-negative")
    if len(classical) != len(g.edges):
        raise ColoringError("classical coloring length does not match edge count")
    if q is None:
        q = max(classical, default=0)
    if any(not 1 <= c <= q for c in classical):
        raise ColoringError(f"classical colors must lie in 1..{q}")
    for v in range(1, g.vertex_count + 1):
        seen: set[int] = set()
        for i in g.incident[v]:
            if classical[i] in seen:
                raise ColoringError(
                    f"classical coloring is not proper at vertex {v}"
                )
            seen.add(classical[i])
    table = unsigned_palette_map(q)
    pairs = tuple((table[c], table[c]) for c in classical)
    return IncidenceColoring(g, ColorSet(q), pairs)


def _segment_edge_order(segment: SignedGraph) -> list[int]:
    """Edge indices of a path or cycle in walk order."""
    g = segment
    if not g.edges:
        raise ColoringError("segment has no edges")
    degs = [g.degree(v) for v in range(1, g.vertex_count + 1)]
    if any(d > 2 for d in degs):
        raise ColoringError("segment is not a path or cycle (degree above 2)")
    ends = [v for v in range(1, g.vertex_count + 1) if degs[v - 1] == 1]
    isolated = [v for v in range(1, g.vertex_count + 1) if degs[v - 1] == 0]
    if isolated:
        raise ColoringError("segment has isolated vertices")
    if len(ends) not in (0, 2):
        raise ColoringError("segment is not a single path or cycle")
    start = ends[0] if ends else 1
    order: list[int] = []
    seen: set[int] = set()
    v = start
    while True:
        nxt = next((i for i in g.incident[v] if i not in seen), None)
        if nxt is None:
            break
        seen.add(nxt)
        order.append(nxt)
        v = g.other_end(nxt, v)
    if len(order) != len(g.edges):
        raise ColoringError("segment is not connected")
    return order


def count_pm_a_colorings(segment: SignedGraph, a: int) -> int:
    """Number of proper colorings of a path or cycle using only colors +-a.

    Enumerates the two color choices per edge in walk order, pruning
    assignments as soon as a vertex repeats a color.
    """
    if a < 1:
        raise ColoringError(f"level must be at least 1, got {a}")
    order = _segment_edge_order(segment)
    g = segment
    used: dict[int, set[int]] = {v: set() for v in range(1, g.vertex_count + 1)}

    def extend(pos: int) -> int:
        if pos == len(order):
            return 1
        i = order[pos]
        u, v, s = g.edges[i]
        total = 0
        for c in (a, -a):
            d = c if s == -1 else -c
            if c in used[u] or d in used[v]:
                continue
            used[u].add(c)
            used[v].add(d)
            total += extend(pos + 1)
            used[u].remove(c)
            used[v].remove(d)
        return total

    return extend(0)
