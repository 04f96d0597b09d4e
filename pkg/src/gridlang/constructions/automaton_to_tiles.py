"""Wang tile systems for strong-loop-free SA-hypergraph automata.

A tile candidate ``(x, edges)`` describes the life of one copy of node ``x``:
exactly one hyperedge creates it (the generator), exactly one deactivates it
(the consumer) and the remaining ones use it as an active node in between.
Each candidate contributes tiles labelled like ``x``; edge colours are
unordered pairs of neighbouring candidates that can coexist in a derivation.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from ..automaton import Hyperedge, SAHypergraphAutomaton, validate
from ..errors import InvalidAutomaton, StrongLoopError
from ..wang import UNCOLOURED, WangTile, WangTileSystem
from .loops import find_strong_loops


def normalize_initials(A: SAHypergraphAutomaton) -> SAHypergraphAutomaton:
    """Make initial hyperedges unusable as transitions.

    An initial hyperedge with incoming nodes is split into an initial seed
    copy (``{} -> outgoing``, id suffixed ``.seed``) and a non-initial copy
    that keeps the original id.  Non-initial hyperedges without incoming
    nodes can never fire and are dropped.
    """
    out = []
    for e in A.hyperedges:
        if e.initial and e.incoming:
            out.append(Hyperedge(f"{e.id}.seed", e.members, frozenset(), e.outgoing, True))
            out.append(Hyperedge(e.id, e.members, e.incoming, e.outgoing, False))
        elif e.initial or e.incoming:
            out.append(e)
    return SAHypergraphAutomaton(A.graph, out)


@dataclass(frozen=True)
class TileCandidate:
    node: object
    edges: frozenset
    generator: str
    consumer: str
    layout: dict = field(compare=False, repr=False, hash=False)

    @property
    def encoding(self) -> str:
        return f"{self.node}{{{','.join(sorted(self.edges))}}}"

    def has_neighbour(self, dr: int, dc: int) -> bool:
        return (dr, dc) in self.layout

    def __str__(self):
        return self.encoding


def overlay(A: SAHypergraphAutomaton, x, edges) -> dict | None:
    """Cells (relative to ``x``) of all the hyperedges in ``edges`` glued around one copy of ``x``.

    Returns ``None`` if some hyperedge is not a subgrid or two hyperedges
    would put different nodes on the same cell.
    """
    cells = {}
    for ident in sorted(edges):
        emb = A.edge_embedding(ident)
        if emb is None or x not in emb:
            return None
        r0, c0 = emb[x]
        for z, (r, c) in emb.items():
            if cells.setdefault((r - r0, c - c0), z) != z:
                return None
    return cells


def tile_candidates(A: SAHypergraphAutomaton) -> list:
    """All tile candidates of a normalized automaton, sorted by encoding.

    For ``edges`` to have a single generator ``g`` and a single consumer
    ``c`` with ``g != c``, every other member must have the node both
    incoming and outgoing, ``g`` must keep it outgoing and ``c`` must take
    it as incoming.  The search below enumerates exactly those sets.
    """
    found = []
    for x in A.graph.sorted_nodes():
        related = A.related_hyperedges(x)
        makes = [e for e in related if x not in e.incoming]
        takes = [e for e in related if x not in e.outgoing]
        passes = [e.id for e in related if x in e.incoming and x in e.outgoing]
        choices = [(e.id, e.id, ()) for e in makes if e in takes]
        for g, c in itertools.product(makes, takes):
            if g.id != c.id and x in g.outgoing and x in c.incoming:
                for k in range(len(passes) + 1):
                    for middle in itertools.combinations(passes, k):
                        choices.append((g.id, c.id, middle))
        for g, c, middle in choices:
            edges = frozenset((g, c, *middle))
            layout = overlay(A, x, edges)
            if layout is not None:
                found.append(TileCandidate(x, edges, g, c, layout))
    return sorted(found, key=lambda t: t.encoding)


def _compatible(A: SAHypergraphAutomaton, a: TileCandidate, b: TileCandidate) -> bool:
    """Conditions 2 to 4 for candidate ``a`` sitting west of or above ``b``."""
    x, y = a.node, b.node
    related_x = {e.id for e in A.related_hyperedges(x)}
    related_y = {e.id for e in A.related_hyperedges(y)}
    if not (related_x & b.edges) <= a.edges:
        return False
    if not (a.edges & related_y) <= b.edges:
        return False
    return (
        a.generator == b.generator
        or y in A.hyperedge(a.generator).incoming
        or x in A.hyperedge(b.generator).incoming
    )


def colour(a: TileCandidate, b: TileCandidate) -> str:
    return "|".join(sorted((a.encoding, b.encoding)))


@dataclass
class TileConstruction:
    """The generated tile system together with the data needed to read tilings back."""

    automaton: SAHypergraphAutomaton
    candidates: list
    system: WangTileSystem

    def __post_init__(self):
        self._by_name = {t.encoding: t for t in self.candidates}

    def candidate_of(self, tile: WangTile) -> TileCandidate:
        return self._by_name[tile.name]


def build_tile_system(A: SAHypergraphAutomaton) -> TileConstruction:
    problems = validate(A)
    if problems:
        raise InvalidAutomaton(problems)
    A = normalize_initials(A)
    loops = find_strong_loops(A)
    if loops:
        raise StrongLoopError(loops)
    candidates = tile_candidates(A)
    by_node = {}
    for t in candidates:
        by_node.setdefault(t.node, []).append(t)
    sides = {t: {"N": set(), "E": set(), "S": set(), "W": set()} for t in candidates}
    for edges, first, second in ((A.graph.h_edges, "E", "W"), (A.graph.v_edges, "S", "N")):
        for x, y in sorted(edges, key=str):
            for a in by_node.get(x, ()):
                for b in by_node.get(y, ()):
                    if _compatible(A, a, b):
                        c = colour(a, b)
                        sides[a][first].add(c)
                        sides[b][second].add(c)
    offsets = {"N": (-1, 0), "E": (0, 1), "S": (1, 0), "W": (0, -1)}
    tiles = set()
    for t in candidates:
        options = {
            side: sorted(sides[t][side]) if t.has_neighbour(*offsets[side]) else [UNCOLOURED]
            for side in "NESW"
        }
        for n, e, s, w in itertools.product(options["N"], options["E"], options["S"], options["W"]):
            tiles.add(WangTile(n, e, s, w, A.labels[t.node], t.encoding))
    colours = {c for t in tiles for c in t.edges()} - {UNCOLOURED}
    system = WangTileSystem(frozenset(A.labels.values()), frozenset(colours), frozenset(tiles))
    return TileConstruction(A, candidates, system)


def saha_to_wts(A: SAHypergraphAutomaton) -> WangTileSystem:
    """A Wang tile system recognizing the picture language of ``A``.

    Raises ``StrongLoopError`` if ``A`` has a strong loop and
    ``InvalidAutomaton`` if it fails validation.
    """
    return build_tile_system(A).system
