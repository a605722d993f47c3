"""Signed complete graphs: class enumeration, index tables, and probes.

Signatures of K_n are C(n,2)-bit masks over the canonical edge order
(1,2), (1,3), ..., (n-1,n).  Orbits under vertex switchings and vertex
permutations are the switching isomorphism classes; each class is solved
exactly for its chromatic index.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations, permutations

from . import solver
from .coloring import IncidenceColoring, c_graph, is_proper
from .graphs import SignedGraph
from .orbits import edge_permutation, signature_orbits, switch_masks

COMPLETE_ENUM_LIMIT = 7


class CompleteError(ValueError):
    """Unsupported order or invalid input for the complete-graph routines."""


def complete_edge_pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(1, n + 1), 2))


def build_complete(n: int, mask: int = 0) -> SignedGraph:
    """K_n with signature given as a bitmask over the canonical edge order."""
    if n < 1:
        raise CompleteError(f"order must be positive, got {n}")
    return SignedGraph(
        n,
        tuple(
            (u, v, -1 if mask >> i & 1 else 1)
            for i, (u, v) in enumerate(complete_edge_pairs(n))
        ),
    )


def signature_mask(g: SignedGraph) -> int:
    """Inverse of :func:`build_complete` for canonically ordered graphs."""
    mask = 0
    for i, (_, _, s) in enumerate(g.edges):
        if s == -1:
            mask |= 1 << i
    return mask


def negative_triangle_count(g: SignedGraph) -> int:
    return sum(
        1
        for a, b, c in combinations(range(1, g.vertex_count + 1), 3)
        if g.sign(a, b) * g.sign(b, c) * g.sign(a, c) == -1
    )


def negative_five_cycle_count(g: SignedGraph) -> int:
    """Negative 5-cycles, each counted once (0 when the order is below 5)."""
    total = 0
    for subset in combinations(range(1, g.vertex_count + 1), 5):
        first, rest = subset[0], subset[1:]
        for order in permutations(rest):
            if order[0] > order[-1]:
                continue  # each cycle arises once per traversal direction
            cycle = (first,) + order
            sign = 1
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                sign *= g.sign(a, b)
            if sign == -1:
                total += 1
    return total


@dataclass(frozen=True)
class SwitchClass:
    """One switching isomorphism class of signatures on K_n."""

    n: int
    mask: int  # numerically smallest signature in the orbit
    representative: SignedGraph
    orbit_size: int
    min_negative_edges: int
    negative_triangles: int
    negative_five_cycles: int
    chromatic_index: int


def enumerate_switch_classes(n: int) -> list[SwitchClass]:
    """All signature classes of K_n with invariants and exact indices.

    Orbits are generated by single-vertex switch masks and adjacent vertex
    transpositions (which generate the full symmetric group).
    """
    if not 3 <= n <= COMPLETE_ENUM_LIMIT:
        raise CompleteError(
            f"class enumeration supports 3 <= n <= {COMPLETE_ENUM_LIMIT}, got {n}"
        )
    g0 = build_complete(n)
    tables = []
    for i in range(1, n):
        perm = list(range(1, n + 1))
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
        tables.append(edge_permutation(g0, perm))
    orbits = signature_orbits(len(g0.edges), switch_masks(g0), tables)
    classes = []
    for orb in orbits:
        rep = build_complete(n, orb.representative)
        classes.append(
            SwitchClass(
                n=n,
                mask=orb.representative,
                representative=rep,
                orbit_size=orb.size,
                min_negative_edges=orb.min_negative_edges,
                negative_triangles=negative_triangle_count(rep),
                negative_five_cycles=negative_five_cycle_count(rep),
                chromatic_index=solver.chromatic_index(rep).chromatic_index,
            )
        )
    return classes


def class_index_table(n: int) -> list[int]:
    """Sorted multiset of chromatic indices over the classes of K_n."""
    return sorted(c.chromatic_index for c in enumerate_switch_classes(n))


def k5_decomposition_check(g: SignedGraph, coloring: IncidenceColoring) -> bool:
    """Whether both nonzero levels of a 4-coloring of a signed K_5 are
    positive cycles through all five vertices."""
    if g.vertex_count != 5 or len(g.edges) != 10:
        raise CompleteError("decomposition check requires a signed K_5")
    if coloring.graph != g or coloring.colors.q != 4:
        raise CompleteError("coloring must use the 4-color palette on this graph")
    if not is_proper(coloring):
        raise CompleteError("coloring must be proper")
    for a in (1, 2):
        level = c_graph(coloring, a)
        if len(level.components) != 1:
            return False
        comp = level.components[0]
        if not comp.closed or len(comp.vertices) != 5 or comp.sign != 1:
            return False
    return True


@dataclass(frozen=True)
class ProbeSample:
    mask: int
    negative_edges: int
    outcome: str  # "solved" | "unknown" | "candidate"
    elapsed: float


@dataclass(frozen=True)
class ProbeReport:
    """Outcome of sampling signatures of K_n at palette size n-1.

    A sample is "solved" when a coloring with n-1 colors was found,
    "unknown" when the search ran out of budget, and "candidate" only when
    the n-1 search was exhausted without a coloring and n colors succeeded.
    """

    n: int
    q: int
    budget: float
    seed: int
    samples: tuple[ProbeSample, ...] = field(default_factory=tuple)

    def count(self, outcome: str) -> int:
        return sum(1 for s in self.samples if s.outcome == outcome)


def probe_conjecture(
    n: int, sample_count: int, budget: float, seed: int = 0
) -> ProbeReport:
    """Budget-limited sampling probe for large even orders.

    Each sampled signature gets ``budget`` seconds at palette size n-1; an
    exhausted search (proved impossible) is re-checked at n colors before
    being reported as a candidate.  Timeouts are honest "unknown"s.
    """
    if n < 8 or n % 2:
        raise CompleteError(f"probe expects an even order of at least 8, got {n}")
    rng = random.Random(seed)
    edge_bits = n * (n - 1) // 2
    samples = []
    for _ in range(sample_count):
        mask = rng.getrandbits(edge_bits)
        g = build_complete(n, mask)
        start = time.monotonic()
        try:
            witness = solver.exists_coloring(g, n - 1, budget=budget)
            if witness is not None:
                outcome = "solved"
            else:
                above = solver.exists_coloring(g, n, budget=budget)
                outcome = "candidate" if above is not None else "unknown"
        except solver.BudgetExceeded:
            outcome = "unknown"
        samples.append(
            ProbeSample(
                mask,
                bin(mask).count("1"),
                outcome,
                time.monotonic() - start,
            )
        )
    return ProbeReport(n, n - 1, budget, seed, tuple(samples))
