"""Exact decision and optimization for signed edge coloring.

Backtracking over edges decides whether a proper coloring with a given
palette exists; the chromatic index then only needs probes at the maximum
degree and one above it, since every signed graph's index lies in that
two-value window.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator

from .coloring import ColorSet, IncidenceColoring, is_proper
from .graphs import SignedGraph, is_balanced


class SolverError(RuntimeError):
    """Internal inconsistency or invalid solver input."""


class BudgetExceeded(RuntimeError):
    """Raised when a time-budgeted search runs out of time."""


@dataclass(frozen=True)
class SolveResult:
    chromatic_index: int
    witness: IncidenceColoring
    vizing_class: str  # "class1" when the index equals the maximum degree


def _solutions(
    g: SignedGraph, q: int, deadline: float | None
) -> Iterator[IncidenceColoring]:
    """Yield every proper coloring with palette size ``q``, deterministically.

    Edges are processed in descending order of endpoint degree sum (ties by
    edge index) and colors in the fixed palette order, so the first solution
    is reproducible.  With a deadline set, every search node checks the
    clock before expanding.
    """
    colors = ColorSet(q)
    edges = g.edges
    order = sorted(
        range(len(edges)),
        key=lambda i: (-(g.degree(edges[i][0]) + g.degree(edges[i][1])), i),
    )
    used: list[set[int]] = [set() for _ in range(g.vertex_count + 1)]
    chosen: list[tuple[int, int]] = [(0, 0)] * len(edges)

    def extend(pos: int) -> Iterator[IncidenceColoring]:
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExceeded(f"no decision within budget at q={q}")
        if pos == len(order):
            yield IncidenceColoring(g, colors, tuple(chosen))
            return
        i = order[pos]
        u, v, s = edges[i]
        for c in colors.members:
            d = c if s == -1 else -c
            if c in used[u] or d in used[v]:
                continue
            used[u].add(c)
            used[v].add(d)
            chosen[i] = (c, d)
            yield from extend(pos + 1)
            used[u].remove(c)
            used[v].remove(d)

    yield from extend(0)


def exists_coloring(
    g: SignedGraph, q: int, *, budget: float | None = None
) -> IncidenceColoring | None:
    """First proper coloring with palette size ``q``, or None if none exists.

    ``budget`` is a soft wall-clock limit in seconds; exceeding it raises
    :class:`BudgetExceeded` instead of returning an answer.
    """
    deadline = None if budget is None else time.monotonic() + budget
    return next(_solutions(g, q, deadline), None)


def enumerate_colorings(
    g: SignedGraph, q: int, limit: int | None = None
) -> Iterator[IncidenceColoring]:
    """Proper colorings with palette size ``q``, at most ``limit`` of them."""
    count = 0
    for coloring in _solutions(g, q, None):
        yield coloring
        count += 1
        if limit is not None and count >= limit:
            return


def chromatic_index(g: SignedGraph) -> SolveResult:
    """Least palette size admitting a proper coloring, with a witness.

    Only the maximum degree and the next value are probed; failing both
    would contradict the two-value window and is reported as a bug.
    """
    if not g.edges:
        raise SolverError("chromatic index requires at least one edge")
    delta = g.max_degree()
    witness = exists_coloring(g, delta)
    if witness is not None:
        return SolveResult(delta, witness, "class1")
    witness = exists_coloring(g, delta + 1)
    if witness is None:
        raise SolverError(
            f"no coloring with {delta + 1} colors; this contradicts the "
            "two-value bound and indicates an implementation bug"
        )
    return SolveResult(delta + 1, witness, "class2")


def signed_cycle_index(cycle: SignedGraph) -> int:
    """Chromatic index of a signed cycle: 2 when balanced, 3 otherwise."""
    n = cycle.vertex_count
    if len(cycle.edges) != n or n < 3:
        raise SolverError("input is not a single cycle")
    if any(cycle.degree(v) != 2 for v in range(1, n + 1)):
        raise SolverError("input is not a single cycle")
    # Connectivity: a 2-regular graph with as many edges as vertices is a
    # disjoint union of cycles; a single one iff one component.
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for ei in cycle.incident[v]:
            w = cycle.other_end(ei, v)
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != n:
        raise SolverError("input is not a single cycle")
    return 2 if is_balanced(cycle) else 3


def verify_result(result: SolveResult) -> bool:
    """Sanity check that a solve result's witness is proper for its palette."""
    return (
        result.witness.colors.q == result.chromatic_index
        and is_proper(result.witness)
    )
