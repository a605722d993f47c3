"""Generalized book graphs and their constructive minimum edge colorings.

A book B(m, n, k) is n cycles of length m glued along a common path with k
vertices (the spine).  Canonical labeling: spine vertices 1..k, then the
m-k interior vertices of each page in page order.  Up to switching and
relabeling, a signature is determined by how many page cycles are negative;
the canonical representative with l negative pages puts the negative edges
on the first l spokes at vertex 1.

Every signed book admits a proper coloring whose palette size equals the
maximum degree n+1.  The colorings are produced by explicit per-page
incidence schedules, checked by the properness verifier; a schedule that
fails verification is reported as a discrepancy and backed up by the exact
solver.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from . import solver
from .coloring import (
    ColorSet,
    ColoringError,
    IncidenceColoring,
    from_unsigned,
    is_proper,
    transport,
    violations,
)
from .graphs import SignedGraph, automorphisms, switch, switching_equivalent
from .orbits import edge_permutation, signature_orbits, switch_masks

log = logging.getLogger(__name__)

BOOK_EXHAUSTIVE_EDGE_LIMIT = 14


class BookError(ValueError):
    """Invalid book parameters or input outside the book family."""


class _ScheduleError(RuntimeError):
    """A coloring schedule produced inconsistent or improper output."""


@dataclass(frozen=True)
class BookInstance:
    """Parameters (m, n, k) with the canonical vertex and edge layout."""

    m: int
    n: int
    k: int

    def __post_init__(self) -> None:
        if self.m < 3 or self.n < 2 or self.k < 2 or self.m - self.k < 1:
            raise BookError(
                f"need m >= 3, n >= 2, k >= 2 and m-k >= 1, got "
                f"m={self.m} n={self.n} k={self.k}"
            )

    @property
    def page_length(self) -> int:
        """Interior vertices per page."""
        return self.m - self.k

    @property
    def vertex_count(self) -> int:
        return self.k + self.n * self.page_length

    @property
    def edge_count(self) -> int:
        return (self.k - 1) + self.n * (self.page_length + 1)

    def page_vertex(self, page: int, j: int) -> int:
        return self.k + (page - 1) * self.page_length + j

    def page_vertices(self, page: int) -> list[int]:
        return [self.page_vertex(page, j) for j in range(1, self.page_length + 1)]

    def page_path(self, page: int) -> list[int]:
        """The page walk from vertex 1 to vertex k."""
        return [1] + self.page_vertices(page) + [self.k]

    def spine_path(self) -> list[int]:
        return list(range(1, self.k + 1))

    def edge_pairs(self) -> list[tuple[int, int]]:
        """Canonical edge order: spine first, then each page walk in turn."""
        pairs = [(j, j + 1) for j in range(1, self.k)]
        for i in range(1, self.n + 1):
            path = self.page_path(i)
            pairs.extend(zip(path, path[1:]))
        return pairs

    @cached_property
    def underlying(self) -> SignedGraph:
        return SignedGraph(
            self.vertex_count, tuple((u, v, 1) for u, v in self.edge_pairs())
        )


def build_book(m: int, n: int, k: int) -> BookInstance:
    return BookInstance(m, n, k)


def canonical_signature(book: BookInstance, l: int) -> SignedGraph:
    """The representative signature with the first ``l`` spokes negative."""
    if not 0 <= l <= book.n:
        raise BookError(f"l must lie in 0..{book.n}, got {l}")
    negatives = {(1, book.page_vertex(i, 1)) for i in range(1, l + 1)}
    return SignedGraph(
        book.vertex_count,
        tuple(
            (u, v, -1 if (u, v) in negatives else 1) for u, v in book.edge_pairs()
        ),
    )


def signature_from_mask(book: BookInstance, mask: int) -> SignedGraph:
    """Signature from an edge bitmask in canonical edge order (bit set = negative)."""
    return SignedGraph(
        book.vertex_count,
        tuple(
            (u, v, -1 if mask >> i & 1 else 1)
            for i, (u, v) in enumerate(book.edge_pairs())
        ),
    )


def infer_book(g: SignedGraph) -> BookInstance:
    """Recognize a canonically labeled book from its topology."""
    delta = g.max_degree()
    n = delta - 1
    if n < 2:
        raise BookError("not a book graph: maximum degree below 3")
    hubs = [v for v in range(1, g.vertex_count + 1) if g.degree(v) == delta]
    if len(hubs) != 2 or hubs[0] != 1:
        raise BookError("not a canonically labeled book graph")
    k = hubs[1]
    rest = g.vertex_count - k
    if k < 2 or rest <= 0 or rest % n:
        raise BookError("not a canonically labeled book graph")
    book = BookInstance(k + rest // n, n, k)
    if g.unordered_pairs() != book.underlying.unordered_pairs():
        raise BookError("not a canonically labeled book graph")
    return book


@dataclass(frozen=True)
class NormalizeResult:
    """A switch set and page relabeling taking a signature to its representative."""

    switch_set: frozenset[int]
    page_order: tuple[int, ...]  # entry i-1 is the new index of page i
    l: int


def _require_book_topology(book: BookInstance, g: SignedGraph) -> None:
    if (
        g.vertex_count != book.vertex_count
        or g.unordered_pairs() != book.underlying.unordered_pairs()
    ):
        raise BookError("signature does not live on this book's topology")


def normalize(book: BookInstance, g: SignedGraph) -> NormalizeResult:
    """Reduce an arbitrary signature to the canonical ``l``-spoke form.

    Signs are propagated along the spine and along each page so that, after
    switching the vertices assigned potential -1, every edge is positive
    except the spoke of each negative page cycle.  Pages are then renumbered
    so the negative spokes come first.
    """
    _require_book_topology(book, g)
    pot = {1: 1}
    for j in range(1, book.k):
        pot[j + 1] = pot[j] * g.sign(j, j + 1)
    negative_pages = []
    for i in range(1, book.n + 1):
        path = book.page_path(i)
        for a, b in zip(reversed(path[1:-1]), reversed(path[2:])):
            pot[a] = pot[b] * g.sign(a, b)
        spoke = g.sign(1, path[1]) * pot[1] * pot[path[1]]
        if spoke == -1:
            negative_pages.append(i)
    switch_set = frozenset(v for v, p in pot.items() if p == -1)
    order = [0] * book.n
    next_neg, next_pos = 1, len(negative_pages) + 1
    for i in range(1, book.n + 1):
        if i in negative_pages:
            order[i - 1] = next_neg
            next_neg += 1
        else:
            order[i - 1] = next_pos
            next_pos += 1
    return NormalizeResult(switch_set, tuple(order), len(negative_pages))


def page_permutation(book: BookInstance, page_order: Sequence[int]) -> tuple[int, ...]:
    """Vertex permutation realizing a page renumbering (spine fixed)."""
    perm = list(range(1, book.vertex_count + 1))
    for i in range(1, book.n + 1):
        for j in range(1, book.page_length + 1):
            perm[book.page_vertex(i, j) - 1] = book.page_vertex(page_order[i - 1], j)
    return tuple(perm)


def apply_normalization(
    book: BookInstance, g: SignedGraph, result: NormalizeResult
) -> SignedGraph:
    """Switch then relabel; the output signature is in canonical edge order."""
    switched = switch(g, result.switch_set)
    relabeled = switched.relabeled(page_permutation(book, result.page_order))
    return SignedGraph(
        book.vertex_count,
        tuple((u, v, relabeled.sign(u, v)) for u, v in book.edge_pairs()),
    )


def spine_page_symmetric(book: BookInstance) -> bool:
    """Whether the spine walk has the same length as the page walks.

    That happens exactly when ``m == 2k - 2``.  The underlying graph is then
    n+1 internally disjoint equal-length paths between the two hubs, its
    automorphisms may exchange the spine with a page, and distinct canonical
    signatures collapse: the true class count drops from n+1 to
    ``(n + 3) // 2`` (the number of negative paths, counted up to the global
    flip from switching a hub).
    """
    return book.m == 2 * book.k - 2


@dataclass(frozen=True)
class ClassCount:
    count: int  # distinct classes among the n+1 canonical representatives
    representatives: tuple[SignedGraph, ...]
    orbit_count: int | None  # filled by the exhaustive check


def class_count(book: BookInstance, exhaustive: bool = False) -> ClassCount:
    """Signature classes up to switching and relabeling, with representatives.

    The canonical representatives are the n+1 signatures with 0..n negative
    spokes.  They are pairwise non-isomorphic except on the spine/page
    symmetric family (see :func:`spine_page_symmetric`), where the count
    collapses to ``(n + 3) // 2``.  With ``exhaustive=True`` all signatures
    are decomposed into orbits under vertex switchings and graph
    automorphisms and the enumerated count is reported as well; this is
    limited to small instances.
    """
    reps = tuple(canonical_signature(book, l) for l in range(book.n + 1))
    count = (book.n + 3) // 2 if spine_page_symmetric(book) else book.n + 1
    if not exhaustive:
        return ClassCount(count, reps, None)
    if book.edge_count > BOOK_EXHAUSTIVE_EDGE_LIMIT:
        raise BookError(
            f"exhaustive orbit check supports at most "
            f"{BOOK_EXHAUSTIVE_EDGE_LIMIT} edges, got {book.edge_count}"
        )
    g0 = book.underlying
    tables = [edge_permutation(g0, p) for p in automorphisms(g0)]
    orbits = signature_orbits(book.edge_count, switch_masks(g0), tables)
    return ClassCount(count, reps, len(orbits))


def book_index(m: int, n: int, k: int, l: int) -> int:
    """Chromatic index of any signed book: always n + 1 (closed form)."""
    book = BookInstance(m, n, k)
    if not 0 <= l <= book.n:
        raise BookError(f"l must lie in 0..{book.n}, got {l}")
    return n + 1


# --------------------------------------------------------------------------
# Constructive coloring schedules
# --------------------------------------------------------------------------
#
# A schedule assigns each edge an ordered (near, far) color pair while
# walking the spine and page paths.  "seq" repeats one pair along every edge
# of a walk; single edges get explicit pairs.  Compilation checks that each
# pair is consistent with the actual edge sign (equal colors on negative
# edges, opposite on positive ones) and that every edge was covered once.

_Assignment = dict[tuple[int, int], tuple[int, int]]


def _seq(assign: _Assignment, walk: Sequence[int], near: int, far: int) -> None:
    for u, v in zip(walk, walk[1:]):
        assign[(u, v)] = (near, far)


def _compile(
    assign: _Assignment, g: SignedGraph, q: int, subcase: str
) -> IncidenceColoring:
    pairs = []
    for u, v, s in g.edges:
        if (u, v) in assign:
            cu, cv = assign.pop((u, v))
        elif (v, u) in assign:
            cv, cu = assign.pop((v, u))
        else:
            raise _ScheduleError(f"{subcase}: edge ({u},{v}) never colored")
        if cv != (cu if s == -1 else -cu):
            raise _ScheduleError(
                f"{subcase}: colors ({cu},{cv}) conflict with sign {s:+d} "
                f"on edge ({u},{v})"
            )
        pairs.append((cu, cv))
    if assign:
        raise _ScheduleError(f"{subcase}: assignment touches non-edges {sorted(assign)}")
    return IncidenceColoring(g, ColorSet(q), tuple(pairs))


def _odd_even(i: int, odd: tuple[int, int], even: tuple[int, int]) -> tuple[int, int]:
    return odd if i % 2 else even


def _schedule_l0(book: BookInstance, g: SignedGraph) -> IncidenceColoring:
    n, q = book.n, book.n + 1
    assign: _Assignment = {}
    if n % 2 == 0:
        subcase = "l=0, even page count"
        _seq(assign, book.spine_path(), -1, 1)
        page1 = book.page_vertices(1)
        _seq(assign, [1] + page1, 1, -1)
        assign[(page1[-1], book.k)] = (0, 0)
        page2 = book.page_vertices(2)
        assign[(1, page2[0])] = (0, 0)
        _seq(assign, page2 + [book.k], 1, -1)
        for i in range(3, n + 1):
            a, b = _odd_even(i, ((i + 1) // 2, -((i + 1) // 2)), (-(i // 2), i // 2))
            _seq(assign, book.page_path(i), a, b)
    else:
        subcase = "l=0, odd page count"
        r = (n + 1) // 2
        _seq(assign, book.spine_path(), -r, r)
        for i in range(1, n + 1):
            a, b = _odd_even(i, ((i + 1) // 2, -((i + 1) // 2)), (-(i // 2), i // 2))
            _seq(assign, book.page_path(i), a, b)
    return _compile(assign, g, q, subcase)


def _schedule_spine_negative(book: BookInstance, g: SignedGraph) -> IncidenceColoring:
    """Coloring for the signature whose only negative edge joins vertices 1, 2."""
    n, k, q = book.n, book.k, book.n + 1
    assign: _Assignment = {}
    if n % 2 == 0:
        if k == 2:
            subcase = "l=n, even page count, k=2"
            assign[(1, 2)] = (0, 0)
            for i in range(1, n + 1):
                a, b = _odd_even(
                    i, ((i + 1) // 2, -((i + 1) // 2)), (-(i // 2), i // 2)
                )
                _seq(assign, book.page_path(i), a, b)
        else:
            subcase = "l=n, even page count, k>=3"
            assign[(1, 2)] = (0, 0)
            for j in range(2, k):
                assign[(j, j + 1)] = (1, -1)
            page1 = book.page_vertices(1)
            _seq(assign, [1] + page1, 1, -1)
            assign[(page1[-1], k)] = (0, 0)
            for i in range(2, n + 1):
                a, b = _odd_even(
                    i, ((i + 1) // 2, -((i + 1) // 2)), (-(i // 2), i // 2)
                )
                _seq(assign, book.page_path(i), a, b)
    else:
        subcase = "l=n, odd page count"
        r = (n + 1) // 2
        assign[(1, 2)] = (-r, -r)
        if k >= 3:
            _seq(assign, book.spine_path()[1:], r, -r)
        page1 = book.page_vertices(1)
        _seq(assign, [1] + page1, 1, -1)
        assign[(page1[-1], k)] = (-r, r)
        for i in range(2, n):
            a, b = _odd_even(i, ((i + 1) // 2, -((i + 1) // 2)), (-(i // 2), i // 2))
            _seq(assign, book.page_path(i), a, b)
        last = book.page_vertices(n)
        _seq(assign, [1] + last, r, -r)
        assign[(last[-1], k)] = (1, -1)
    return _compile(assign, g, q, subcase)


def _schedule_l1(book: BookInstance, g: SignedGraph) -> IncidenceColoring:
    n, k, q = book.n, book.k, book.n + 1
    assign: _Assignment = {}
    if n % 2 == 0:
        subcase = "l=1, even page count"
        r = n // 2
        _seq(assign, book.spine_path(), -r, r)
        page1 = book.page_vertices(1)
        assign[(1, page1[0])] = (0, 0)
        _seq(assign, page1 + [k], r, -r)
        for i in range(2, n):
            a, b = _odd_even(i, (-((i - 1) // 2), (i - 1) // 2), (i // 2, -(i // 2)))
            _seq(assign, book.page_path(i), a, b)
        last = book.page_vertices(n)
        _seq(assign, [1] + last, r, -r)
        assign[(last[-1], k)] = (0, 0)
    else:
        subcase = "l=1, odd page count"
        r = (n + 1) // 2
        _seq(assign, book.spine_path(), -r, r)
        page1 = book.page_vertices(1)
        assign[(1, page1[0])] = (1, 1)
        _seq(assign, page1 + [k], r, -r)
        for i in range(2, n):
            a, b = _odd_even(i, ((i + 1) // 2, -((i + 1) // 2)), (-(i // 2), i // 2))
            _seq(assign, book.page_path(i), a, b)
        last = book.page_vertices(n)
        _seq(assign, [1] + last, r, -r)
        assign[(last[-1], k)] = (1, -1)
    return _compile(assign, g, q, subcase)


def _schedule_mid_l(book: BookInstance, g: SignedGraph, l: int) -> IncidenceColoring:
    """Schedules for 1 < l < n, split by the parities of n and l."""
    n, k, q = book.n, book.k, book.n + 1
    assign: _Assignment = {}
    if n % 2 == 0:
        r = n // 2
        _seq(assign, book.spine_path(), -r, r)
        if l % 2 == 0:
            subcase = f"l={l} even, even page count"
            if not 2 <= l <= n - 2:
                raise BookError(f"even l must lie in 2..{n - 2} for n={n}")
            for i in range(1, l + 1):
                c = 0 if i == 1 else (i // 2 if i % 2 == 0 else -((i - 1) // 2))
                assign[(1, book.page_vertex(i, 1))] = (c, c)
            _seq(assign, book.page_vertices(1) + [k], l // 2, -(l // 2))
            for i in range(2, l + 1):
                a, b = _odd_even(
                    i, ((i - 1) // 2, -((i - 1) // 2)), (-(i // 2), i // 2)
                )
                _seq(assign, book.page_vertices(i) + [k], a, b)
            mid = book.page_vertices(l + 1)
            _seq(assign, [1] + mid, -(l // 2), l // 2)
            assign[(mid[-1], k)] = (0, 0)
            for i in range(l + 2, n + 1):
                a, b = _odd_even(
                    i, (-((i - 1) // 2), (i - 1) // 2), (i // 2, -(i // 2))
                )
                _seq(assign, book.page_path(i), a, b)
        else:
            subcase = f"l={l} odd, even page count"
            if not 3 <= l <= n - 1:
                raise BookError(f"odd l must lie in 3..{n - 1} for n={n}")
            for i in range(1, l + 1):
                c = 0 if i == 1 else (i // 2 if i % 2 == 0 else -((i - 1) // 2))
                assign[(1, book.page_vertex(i, 1))] = (c, c)
            _seq(assign, book.page_vertices(1) + [k], r, -r)
            for i in range(2, l + 1):
                a, b = _odd_even(
                    i, ((i - 1) // 2, -((i - 1) // 2)), (-(i // 2), i // 2)
                )
                _seq(assign, book.page_vertices(i) + [k], a, b)
            for i in range(l + 1, n):
                a, b = _odd_even(
                    i, (-((i - 1) // 2), (i - 1) // 2), (i // 2, -(i // 2))
                )
                _seq(assign, book.page_path(i), a, b)
            last = book.page_vertices(n)
            _seq(assign, [1] + last, r, -r)
            assign[(last[-1], k)] = (0, 0)
    else:
        r = (n + 1) // 2
        _seq(assign, book.spine_path(), -r, r)
        if l % 2 == 0:
            subcase = f"l={l} even, odd page count"
            if not 2 <= l <= n - 1:
                raise BookError(f"even l must lie in 2..{n - 1} for n={n}")
            for i in range(1, l + 1):
                c = (i + 1) // 2 if i % 2 else -(i // 2)
                assign[(1, book.page_vertex(i, 1))] = (c, c)
            for i in range(1, l + 1):
                a, b = _odd_even(
                    i, (-((i + 1) // 2), (i + 1) // 2), (i // 2, -(i // 2))
                )
                _seq(assign, book.page_vertices(i) + [k], a, b)
            for i in range(l + 1, n + 1):
                a, b = _odd_even(
                    i, ((i + 1) // 2, -((i + 1) // 2)), (-(i // 2), i // 2)
                )
                _seq(assign, book.page_path(i), a, b)
        else:
            subcase = f"l={l} odd, odd page count"
            if not 3 <= l <= n - 2:
                raise BookError(f"odd l must lie in 3..{n - 2} for n={n}")
            for i in range(1, l + 1):
                c = (i + 1) // 2 if i % 2 else -(i // 2)
                assign[(1, book.page_vertex(i, 1))] = (c, c)
            _seq(assign, book.page_vertices(1) + [k], (l + 1) // 2, -((l + 1) // 2))
            for i in range(2, l):
                a, b = _odd_even(
                    i, (-((i + 1) // 2), (i + 1) // 2), (i // 2, -(i // 2))
                )
                _seq(assign, book.page_vertices(i) + [k], a, b)
            _seq(assign, book.page_vertices(l) + [k], -1, 1)
            for i in range(l + 1, n + 1):
                a, b = _odd_even(
                    i, ((i + 1) // 2, -((i + 1) // 2)), (-(i // 2), i // 2)
                )
                _seq(assign, book.page_path(i), a, b)
    return _compile(assign, g, q, subcase)


def classical_book_coloring(book: BookInstance) -> list[int]:
    """A proper classical edge coloring of the underlying book with n+1 colors.

    Page i starts with color i at vertex 1 and ends with a page-specific
    color at vertex k, alternating along the page with one spare-color
    adjustment on odd-length pages; the spine alternates with color n+1 at
    both hub ends (except k=3, where the hub end away from vertex 1 takes
    color 1 and the page end colors shift up by one).
    """
    n, k = book.n, book.k
    top = n + 1
    spine: list[int]
    if k == 2:
        spine = [top]
    elif k == 3:
        spine = [top, 1]
    else:
        spine = [top if j % 2 else 1 for j in range(1, k)]
        if (k - 1) % 2 == 0:
            spine[k - 3] = 2
            spine[k - 2] = top
    if k == 3:
        lasts = list(range(2, n + 2))
    else:
        lasts = list(range(2, n + 1)) + [1]
    colors: list[int] = list(spine)
    length = book.page_length + 1  # edges per page walk
    for i in range(1, n + 1):
        first, last = i, lasts[i - 1]
        page = [first if j % 2 else last for j in range(1, length + 1)]
        if length % 2 == 1:
            spare = min(c for c in range(1, top + 1) if c not in (first, last))
            page[-2] = spare
            page[-1] = last
        colors.extend(page)
    g = book.underlying
    for v in range(1, g.vertex_count + 1):
        at_v = [colors[i] for i in g.incident[v]]
        if len(set(at_v)) != len(at_v):
            raise _ScheduleError(
                f"classical book coloring repeats a color at vertex {v}"
            )
    return colors


@dataclass(frozen=True)
class BookColoring:
    """A verified coloring plus the schedule that produced it.

    ``discrepancy`` is set when the schedule's output failed verification
    and the exact solver supplied the witness instead.
    """

    coloring: IncidenceColoring
    subcase: str
    discrepancy: str | None


def color_book(book: BookInstance, l: int) -> BookColoring:
    """A proper coloring of the canonical ``l``-signature with n+1 colors.

    Dispatches on l and the parities of n, l, and m.  The all-negative-page
    case routes through a switching: for even m via the signature whose only
    negative edge lies on the spine, for odd m via the all-negative graph
    and a lifted classical coloring.  Every schedule output is verified; on
    failure a discrepancy naming the subcase is recorded and the exact
    solver provides the coloring.
    """
    if not 0 <= l <= book.n:
        raise BookError(f"l must lie in 0..{book.n}, got {l}")
    if 2 <= l <= book.n - 1 and book.n < 3:
        raise BookError("signatures with 2 <= l <= n-1 require n >= 3")
    target = canonical_signature(book, l)
    q = book.n + 1
    subcase = f"l={l}"
    try:
        if l == 0:
            result = _schedule_l0(book, target)
            subcase = "l=0"
        elif l == 1:
            result = _schedule_l1(book, target)
            subcase = "l=1"
        elif l == book.n:
            if book.m % 2 == 0:
                spine_neg = switch(target, [1])
                staged = _schedule_spine_negative(book, spine_neg)
                result = transport(staged, [1])
                subcase = "l=n, even m"
            else:
                all_neg = target.with_signs([-1] * book.edge_count)
                classical = classical_book_coloring(book)
                lifted = from_unsigned(all_neg, classical, q)
                x = switching_equivalent(all_neg, target)
                if x is None:
                    raise _ScheduleError(
                        "l=n, odd m: all-negative signature not equivalent to target"
                    )
                result = transport(lifted, x)
                subcase = "l=n, odd m"
        else:
            result = _schedule_mid_l(book, target, l)
            subcase = f"mid l={l}"
        if result.graph != target:
            raise _ScheduleError(f"{subcase}: coloring lives on the wrong signature")
        problems = violations(result)
        if problems:
            raise _ScheduleError(
                f"{subcase}: schedule output not proper: "
                + "; ".join(p.describe() for p in problems[:3])
            )
        return BookColoring(result, subcase, None)
    except (_ScheduleError, ColoringError) as exc:
        report = f"{subcase}: {exc}" if isinstance(exc, ColoringError) else str(exc)
        log.warning("constructive coloring failed, falling back to solver: %s", report)
        witness = solver.exists_coloring(target, q)
        if witness is None or not is_proper(witness):
            raise BookError(
                f"solver failed to certify palette size {q} after schedule "
                f"discrepancy: {report}"
            )
        return BookColoring(witness, subcase, report)
