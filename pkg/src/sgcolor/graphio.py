"""Line-oriented text formats for signed graphs and incidence colorings.

Graph files:

    p sgraph <vertex_count> <edge_count>
    c <free-text comment>
    e <u> <v> <+1|-1>

Coloring files:

    s chi <q>
    i <edge_index> <color_first> <color_second>

Vertices and edge indices are 1-based; edge order in a graph file is the
edge identity used by coloring files.  Writers emit canonical form (single
spaces, newline-terminated, no trailing whitespace), so write/parse/write
round-trips are byte-identical.
"""

from __future__ import annotations

from typing import Sequence

from .coloring import ColorSet, IncidenceColoring
from .graphs import GraphError, SignedGraph


class FormatError(ValueError):
    """Malformed graph or coloring text; carries the offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _tokens(line: str, lineno: int) -> list[str]:
    parts = line.split(" ")
    if any(p == "" for p in parts) or line != " ".join(parts):
        raise FormatError(lineno, "fields must be separated by single spaces")
    return parts


def parse_graph(text: str) -> SignedGraph:
    lines = text.splitlines()
    if not lines:
        raise FormatError(1, "empty input")
    header = _tokens(lines[0], 1)
    if len(header) != 4 or header[0] != "p" or header[1] != "sgraph":
        raise FormatError(1, "expected header 'p sgraph <vertices> <edges>'")
    try:
        vertex_count, edge_count = int(header[2]), int(header[3])
    except ValueError:
        raise FormatError(1, "vertex and edge counts must be integers") from None
    edges: list[tuple[int, int, int]] = []
    for lineno, line in enumerate(lines[1:], start=2):
        if line.startswith("c ") or line == "c":
            continue
        parts = _tokens(line, lineno)
        if parts[0] != "e" or len(parts) != 4:
            raise FormatError(lineno, "expected edge line 'e <u> <v> <+1|-1>'")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise FormatError(lineno, "endpoints must be integers") from None
        if parts[3] == "+1":
            s = 1
        elif parts[3] == "-1":
            s = -1
        else:
            raise FormatError(lineno, f"sign must be +1 or -1, got {parts[3]!r}")
        edges.append((u, v, s))
    if len(edges) != edge_count:
        raise FormatError(
            len(lines), f"header announces {edge_count} edges, found {len(edges)}"
        )
    try:
        return SignedGraph(vertex_count, tuple(edges))
    except GraphError as exc:
        raise FormatError(1, str(exc)) from None


def write_graph(g: SignedGraph, comments: Sequence[str] = ()) -> str:
    lines = [f"p sgraph {g.vertex_count} {len(g.edges)}"]
    lines.extend(f"c {c}" for c in comments)
    for u, v, s in g.edges:
        lines.append(f"e {u} {v} {'+1' if s == 1 else '-1'}")
    return "\n".join(lines) + "\n"


def parse_coloring(text: str, g: SignedGraph) -> IncidenceColoring:
    lines = text.splitlines()
    if not lines:
        raise FormatError(1, "empty input")
    header = _tokens(lines[0], 1)
    if len(header) != 3 or header[0] != "s" or header[1] != "chi":
        raise FormatError(1, "expected header 's chi <q>'")
    try:
        q = int(header[2])
    except ValueError:
        raise FormatError(1, "palette size must be an integer") from None
    if q < 0:
        raise FormatError(1, "palette size must be nonnegative")
    pairs: list[tuple[int, int] | None] = [None] * len(g.edges)
    for lineno, line in enumerate(lines[1:], start=2):
        if line.startswith("c ") or line == "c":
            continue
        parts = _tokens(line, lineno)
        if parts[0] != "i" or len(parts) != 4:
            raise FormatError(
                lineno, "expected incidence line 'i <edge> <first> <second>'"
            )
        try:
            idx, cf, cs = int(parts[1]), int(parts[2]), int(parts[3])
        except ValueError:
            raise FormatError(lineno, "fields must be integers") from None
        if not 1 <= idx <= len(g.edges):
            raise FormatError(lineno, f"edge index {idx} outside 1..{len(g.edges)}")
        if pairs[idx - 1] is not None:
            raise FormatError(lineno, f"edge {idx} colored twice")
        pairs[idx - 1] = (cf, cs)
    missing = [i + 1 for i, p in enumerate(pairs) if p is None]
    if missing:
        raise FormatError(len(lines), f"edges without colors: {missing}")
    return IncidenceColoring(g, ColorSet(q), tuple(pairs))  # type: ignore[arg-type]


def write_coloring(coloring: IncidenceColoring) -> str:
    lines = [f"s chi {coloring.colors.q}"]
    for idx, (cf, cs) in enumerate(coloring.pairs, start=1):
        lines.append(f"i {idx} {cf} {cs}")
    return "\n".join(lines) + "\n"
