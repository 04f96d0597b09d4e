"""Simulating a Wang tile system with an SA-hypergraph automaton.

The tile system is first expanded nine-fold; every expanded tile becomes one
node.  Assembly starts from a top-left corner tile, grows the top row and the
left column two nodes at a time and fills the rest with four-node squares
that add their bottom-right node.  Height-one and width-one pictures are
handled by a separate row or column component that reads the picture like a
finite automaton.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..automaton import Hyperedge, SAHypergraphAutomaton, intersecting_nodes
from ..grid import PseudoPictureGraph
from ..wang import UNCOLOURED, WangTileSystem
from .expansion import nine_copy_expand


@dataclass(frozen=True)
class BorderClasses:
    """Nodes whose tiles have an uncoloured north, east, south or west edge."""

    top: frozenset
    right: frozenset
    bottom: frozenset
    left: frozenset

    @classmethod
    def of(cls, tiles: dict) -> "BorderClasses":
        def side(attr):
            return frozenset(x for x, t in tiles.items() if getattr(t, attr) == UNCOLOURED)

        return cls(side("north"), side("east"), side("south"), side("west"))


def _underlying_graph(tiles: dict, border: BorderClasses) -> PseudoPictureGraph:
    nodes = sorted(tiles)
    interior_rows = frozenset(nodes) - border.top - border.bottom
    interior_cols = frozenset(nodes) - border.left - border.right

    def same_class(x, y, middle, first, second):
        return (x in middle and y in middle) or (x in first and y in first) or (x in second and y in second)

    h_edges, v_edges = set(), set()
    for x in nodes:
        tx = tiles[x]
        for y in nodes:
            ty = tiles[y]
            if tx.east != UNCOLOURED and tx.east == ty.west and same_class(x, y, interior_rows, border.top, border.bottom):
                h_edges.add((x, y))
            if tx.south != UNCOLOURED and tx.south == ty.north and same_class(x, y, interior_cols, border.left, border.right):
                v_edges.add((x, y))
    return PseudoPictureGraph({x: tiles[x].label for x in nodes}, frozenset(v_edges), frozenset(h_edges))


def _square_outputs(x, y1, y3, border: BorderClasses) -> frozenset:
    at_bottom, at_right = x in border.bottom, x in border.right
    if at_bottom and at_right:
        return frozenset()
    if at_bottom:
        return frozenset({x, y3})
    if at_right:
        return frozenset({x, y1})
    return frozenset({x, y1, y3})


def _planar_hyperedges(G: PseudoPictureGraph, border: BorderClasses):
    top_left = border.top & border.left
    for x in sorted(top_left):
        yield Hyperedge(f"init:{x}", {x}, set(), {x}, True)
    for y, x in sorted(G.h_edges):
        if x in border.top and y in border.top:
            yield Hyperedge(f"row:{y}>{x}", {x, y}, {y}, {x, y})
    for y, x in sorted(G.v_edges):
        if x in border.left and y in border.left:
            yield Hyperedge(f"col:{y}>{x}", {x, y}, {y}, {x, y})
    below = {}
    for a, b in G.v_edges:
        below.setdefault(a, []).append(b)
    right_of = {}
    for a, b in G.h_edges:
        right_of.setdefault(a, []).append(b)
    v_edges = G.v_edges
    for y2 in sorted(G.labels):
        for y1 in sorted(below.get(y2, ())):
            for y3 in sorted(right_of.get(y2, ())):
                for x in sorted(right_of.get(y1, ())):
                    if (y3, x) not in v_edges or x in border.top or x in border.left:
                        continue
                    yield Hyperedge(
                        f"fill:{x}<{y1},{y2},{y3}",
                        {x, y1, y2, y3},
                        {y1, y2, y3},
                        _square_outputs(x, y1, y3, border),
                    )


def _line_hyperedges(G: PseudoPictureGraph, border: BorderClasses):
    """Row component for height-one pictures and column component for width-one pictures."""
    for kind, line, start, end, edges in (
        ("hline", border.top & border.bottom, border.left, border.right, G.h_edges),
        ("vline", border.left & border.right, border.top, border.bottom, G.v_edges),
    ):
        for x in sorted(line & start):
            out = set() if x in end else {x}
            yield Hyperedge(f"{kind}-init:{x}", {x}, set(), out, True)
        for y, x in sorted(edges):
            if x in line and y in line:
                out = set() if x in end else {x}
                yield Hyperedge(f"{kind}:{y}>{x}", {x, y}, {y}, out)


def _dedupe(hyperedges) -> list:
    seen, out = set(), []
    for e in hyperedges:
        key = (e.members, e.incoming, e.outgoing, e.initial)
        if key not in seen:
            seen.add(key)
            out.append(e)
    return out


def _drop_unsupported(G: PseudoPictureGraph, hyperedges: list) -> list:
    """Remove, until nothing changes, hyperedges whose active nodes are shared with no other hyperedge.

    Such a hyperedge can never take part in a derivation that ends without
    active nodes: its outgoing nodes would stay active forever, and its
    incoming nodes could never have been produced by another hyperedge.
    """
    while True:
        A = SAHypergraphAutomaton(G, hyperedges)
        keep = [e for e in hyperedges if (e.incoming | e.outgoing) <= intersecting_nodes(A, e)]
        if len(keep) == len(hyperedges):
            return keep
        hyperedges = keep


def _used_nodes(G: PseudoPictureGraph, hyperedges: list) -> PseudoPictureGraph:
    used = set().union(*(e.members for e in hyperedges)) if hyperedges else set()
    return PseudoPictureGraph(
        {x: G.labels[x] for x in used},
        frozenset(e for e in G.v_edges if e[0] in used and e[1] in used),
        frozenset(e for e in G.h_edges if e[0] in used and e[1] in used),
    )


def tile_nodes(W: WangTileSystem) -> dict:
    """Node id -> tile for an (already expanded) tile system."""
    return {t.name: t for t in W.tiles}


def wts_to_saha(V: WangTileSystem, prune: bool = False) -> SAHypergraphAutomaton:
    """An SA-hypergraph automaton whose picture language equals that of ``V``.

    With ``prune`` the nodes that belong to no hyperedge are dropped from the
    underlying graph; the language does not change.
    """
    W = nine_copy_expand(V)
    tiles = tile_nodes(W)
    border = BorderClasses.of(tiles)
    G = _underlying_graph(tiles, border)
    hyperedges = _dedupe([*_planar_hyperedges(G, border), *_line_hyperedges(G, border)])
    hyperedges = _drop_unsupported(G, hyperedges)
    if prune:
        G = _used_nodes(G, hyperedges)
    return SAHypergraphAutomaton(G, hyperedges)
