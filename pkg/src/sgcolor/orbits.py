"""Orbit enumeration of edge signatures under switchings and symmetries.

A signature on a graph with E edges is a E-bit integer, bit i set when edge
i is negative.  Switching a vertex is XOR with its incident-edge mask; a
graph automorphism acts by permuting bit positions.  Orbits of the group
generated by both kinds of moves are the switching isomorphism classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphs import SignedGraph


def switch_masks(g: SignedGraph) -> list[int]:
    """Per-vertex XOR masks over edge bits (entry 0 unused)."""
    masks = [0] * (g.vertex_count + 1)
    for i, (u, v, _) in enumerate(g.edges):
        masks[u] |= 1 << i
        masks[v] |= 1 << i
    return masks


def edge_permutation(g: SignedGraph, perm: Sequence[int]) -> tuple[int, ...]:
    """Edge-index table of a vertex permutation: entry i is the image of edge i."""
    table = []
    for u, v, _ in g.edges:
        table.append(g.edge_index(perm[u - 1], perm[v - 1]))
    return tuple(table)


def apply_edge_permutation(mask: int, table: Sequence[int]) -> int:
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out |= 1 << table[i]
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class Orbit:
    representative: int  # numerically smallest mask in the orbit
    size: int
    min_negative_edges: int


def signature_orbits(
    edge_count: int, masks: Sequence[int], perm_tables: Sequence[Sequence[int]]
) -> list[Orbit]:
    """Decompose all 2^edge_count signatures into orbits by breadth-first search.

    Orbits are returned in increasing order of representative.
    """
    total = 1 << edge_count
    seen = bytearray(total)
    xor_masks = [m for m in masks if m]
    orbits: list[Orbit] = []
    for start in range(total):
        if seen[start]:
            continue
        seen[start] = 1
        frontier = [start]
        members = 1
        min_neg = bin(start).count("1")
        while frontier:
            nxt: list[int] = []
            for sig in frontier:
                images = [sig ^ m for m in xor_masks]
                images.extend(
                    apply_edge_permutation(sig, t) for t in perm_tables
                )
                for img in images:
                    if not seen[img]:
                        seen[img] = 1
                        members += 1
                        neg = bin(img).count("1")
                        if neg < min_neg:
                            min_neg = neg
                        nxt.append(img)
            frontier = nxt
        orbits.append(Orbit(start, members, min_neg))
    return orbits
