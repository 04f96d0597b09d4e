"""Self-assembly hypergraph automata.

An automaton is an underlying pseudo-picture graph plus named hyperedges.
Each hyperedge selects a node set and a transition ``incoming -> outgoing``
over those nodes.  A configuration is a subgrid built from copies of
automaton nodes; gluing a hyperedge identifies its incoming nodes with
active nodes of the configuration and adds fresh copies of the rest.

Configurations carry explicit edges (built by the gluing rule) and grid
positions (used for placement checks and for canonical state keys).
"""
from __future__ import annotations

import os
import random
from collections import deque, namedtuple
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Optional

from .errors import (
    DisconnectedGraphError,
    EmbeddingConflict,
    GluingConflict,
    SearchBoundExceeded,
)
from .grid import (
    PseudoPictureGraph,
    _node_order,
    canonical_embedding,
    induced_subgraph,
    is_picture_graph,
    picture_of,
)
from .picture import Picture

DEFAULT_MAX_STATES = 10**7

Copy = namedtuple("Copy", "original serial")
Copy.__doc__ = "A configuration node added by gluing: a fresh copy of ``original``."


def max_states_from_env() -> int:
    raw = os.environ.get("GRIDLANG_MAX_STATES")
    return int(raw) if raw else DEFAULT_MAX_STATES


@dataclass(frozen=True)
class Hyperedge:
    id: str
    members: frozenset
    incoming: frozenset = frozenset()
    outgoing: frozenset = frozenset()
    initial: bool = False

    def __post_init__(self):
        for name in ("members", "incoming", "outgoing"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))

    def __str__(self):
        def fmt(s):
            return "{" + ",".join(sorted(map(str, s))) + "}"

        star = "*" if self.initial else ""
        return f"{self.id}{star}[{fmt(self.members)}: {fmt(self.incoming)}->{fmt(self.outgoing)}]"


class SAHypergraphAutomaton:
    """Hypergraph over the nodes of ``graph`` with per-hyperedge transitions.

    Construction does not enforce well-formedness; call ``validate`` for a
    list of problems.
    """

    def __init__(self, graph: PseudoPictureGraph, hyperedges):
        self.graph = graph
        self.hyperedges = tuple(hyperedges)
        self._by_id = {}
        for e in self.hyperedges:
            if e.id in self._by_id:
                raise ValueError(f"duplicate hyperedge id {e.id!r}")
            self._by_id[e.id] = e
        self._graphs = {}
        self._embeddings = {}

    def __repr__(self):
        return f"SAHypergraphAutomaton({len(self.graph.labels)} nodes, {len(self.hyperedges)} hyperedges)"

    def hyperedge(self, ident) -> Hyperedge:
        if isinstance(ident, Hyperedge):
            ident = ident.id
        try:
            return self._by_id[ident]
        except KeyError:
            raise KeyError(f"unknown hyperedge {ident!r}") from None

    @property
    def initial_hyperedges(self) -> list:
        return [e for e in self.hyperedges if e.initial]

    @property
    def labels(self) -> Mapping:
        return self.graph.labels

    def edge_graph(self, e) -> PseudoPictureGraph:
        """The subgraph of the underlying graph induced by the hyperedge's nodes."""
        e = self.hyperedge(e)
        if e.id not in self._graphs:
            self._graphs[e.id] = induced_subgraph(self.graph, e.members & self.graph.nodes)
        return self._graphs[e.id]

    def edge_embedding(self, e) -> Optional[dict]:
        """Canonical grid positions of the hyperedge's graph, or ``None`` if it is not a subgrid."""
        e = self.hyperedge(e)
        if e.id not in self._embeddings:
            try:
                self._embeddings[e.id] = canonical_embedding(self.edge_graph(e))
            except (DisconnectedGraphError, EmbeddingConflict):
                self._embeddings[e.id] = None
        return self._embeddings[e.id]

    def related_hyperedges(self, x) -> list:
        return [e for e in self.hyperedges if x in e.members]


def intersecting_nodes(A: SAHypergraphAutomaton, e) -> frozenset:
    """Nodes of ``e`` that also belong to some other hyperedge."""
    e = A.hyperedge(e)
    others = set()
    for other in A.hyperedges:
        if other.id != e.id:
            others |= other.members
    return e.members & others


@dataclass(frozen=True)
class Diagnostic:
    hyperedge: str
    code: str
    message: str

    def __str__(self):
        return f"{self.hyperedge}: {self.message}"


def validate(A: SAHypergraphAutomaton) -> list:
    """Every well-formedness problem of ``A``; an empty list means valid."""
    out = []
    nodes = A.graph.nodes
    for e in A.hyperedges:
        def report(code, message, e=e):
            out.append(Diagnostic(e.id, code, message))

        dangling = (e.members | e.incoming | e.outgoing) - nodes
        if dangling:
            report("dangling", f"refers to unknown nodes {sorted(map(str, dangling))}")
            continue
        if not e.members:
            report("empty", "hyperedge has no nodes")
            continue
        if not e.incoming <= e.members:
            report("incoming-outside", "incoming nodes are not all members of the hyperedge")
        if not e.outgoing <= e.members:
            report("outgoing-outside", "outgoing nodes are not all members of the hyperedge")
        shared = intersecting_nodes(A, e)
        if not e.incoming <= shared:
            report("incoming-not-intersecting",
                   f"incoming nodes {sorted(map(str, e.incoming - shared))} are not shared with another hyperedge")
        if not e.outgoing <= shared:
            report("outgoing-not-intersecting",
                   f"outgoing nodes {sorted(map(str, e.outgoing - shared))} are not shared with another hyperedge")
        Ge = A.edge_graph(e)
        if not Ge.is_connected():
            report("disconnected", "the hyperedge's graph is not connected")
            continue
        if e.incoming and e.incoming <= e.members:
            if not induced_subgraph(Ge, e.incoming).is_connected():
                report("incoming-disconnected", "incoming nodes do not induce a connected subgraph")
        try:
            canonical_embedding(Ge)
        except EmbeddingConflict as exc:
            report("not-subgrid", f"the hyperedge's graph is not a subgrid ({exc.reason})")
    return out


@dataclass(frozen=True)
class Configuration:
    """A subgrid of node copies with an active subset and origin map."""

    labels: Mapping
    origin: Mapping
    v_edges: frozenset
    h_edges: frozenset
    active: frozenset
    positions: Mapping
    cells: Mapping = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "cells", {p: x for x, p in self.positions.items()})

    __hash__ = None

    @property
    def graph(self) -> PseudoPictureGraph:
        return PseudoPictureGraph(self.labels, self.v_edges, self.h_edges)

    @property
    def is_final(self) -> bool:
        return not self.active

    def __len__(self):
        return len(self.origin)

    def bounds(self) -> tuple:
        rows = [r for r, _ in self.positions.values()]
        cols = [c for _, c in self.positions.values()]
        return min(rows), min(cols), max(rows) - min(rows) + 1, max(cols) - min(cols) + 1

    def key(self) -> tuple:
        """Translation-invariant state key: cells with origin and activity, row-major."""
        r0, c0, _, _ = self.bounds()
        return tuple(sorted(
            (r - r0, c - c0, _node_order(self.origin[x]), x in self.active)
            for x, (r, c) in self.positions.items()
        ))

    def is_rectangle(self) -> bool:
        _, _, h, w = self.bounds()
        return h * w == len(self.positions)

    def picture(self) -> Picture:
        return picture_of(self.graph)


@dataclass(frozen=True)
class Gluing:
    """One applicable transition: ``match`` pairs incoming automaton nodes with
    configuration nodes; ``offset`` shifts the hyperedge's canonical embedding
    onto configuration coordinates."""

    hyperedge: Hyperedge
    match: tuple
    offset: tuple

    @property
    def matched(self) -> frozenset:
        return frozenset(m for _, m in self.match)


def initial_configuration(A: SAHypergraphAutomaton, e) -> Configuration:
    e = A.hyperedge(e)
    Ge = A.edge_graph(e)
    emb = A.edge_embedding(e)
    if emb is None:
        raise EmbeddingConflict(f"initial hyperedge {e.id} does not induce a subgrid")
    return Configuration(
        labels=dict(Ge.labels),
        origin={x: x for x in Ge.labels},
        v_edges=Ge.v_edges,
        h_edges=Ge.h_edges,
        active=frozenset(e.outgoing),
        positions=dict(emb),
    )


def initial_configurations(A: SAHypergraphAutomaton) -> list:
    return [initial_configuration(A, e) for e in A.initial_hyperedges]


def _neighbours(pos):
    r, c = pos
    return (r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)


def glue(A: SAHypergraphAutomaton, c: Configuration, gluing: Gluing) -> Configuration:
    """Apply ``gluing`` to ``c``.

    Matched nodes stay active when their original is an outgoing node of the
    hyperedge; all other matched nodes are deactivated.  Raises
    ``GluingConflict`` if the result would not be a subgrid.
    """
    e = gluing.hyperedge
    emb = A.edge_embedding(e)
    if emb is None:
        raise GluingConflict(f"{e.id} does not induce a subgrid")
    dr, dc = gluing.offset
    match = dict(gluing.match)
    if set(match) != set(e.incoming) or not e.incoming:
        raise GluingConflict(f"match does not cover the incoming nodes of {e.id}")
    for q, m in match.items():
        if m not in c.active:
            raise GluingConflict(f"{m!r} is not active")
        if c.origin[m] != q:
            raise GluingConflict(f"{m!r} is a copy of {c.origin[m]!r}, not {q!r}")
        if c.positions[m] != (emb[q][0] + dr, emb[q][1] + dc):
            raise GluingConflict(f"{m!r} is not where {e.id} places {q!r}")
    ident = dict(match)
    labels = dict(c.labels)
    origin = dict(c.origin)
    positions = dict(c.positions)
    fresh_cells = {}
    serial = len(c.origin)
    for x in sorted(e.members - e.incoming, key=_node_order):
        pos = (emb[x][0] + dr, emb[x][1] + dc)
        if pos in c.cells:
            raise GluingConflict(f"copy of {x!r} would land on occupied cell {pos}")
        node = Copy(x, serial)
        serial += 1
        ident[x] = node
        labels[node] = A.labels[x]
        origin[node] = x
        positions[node] = pos
        fresh_cells[pos] = node
    matched = set(match.values())
    for pos in fresh_cells:
        for nb in _neighbours(pos):
            other = c.cells.get(nb)
            if other is not None and other not in matched:
                raise GluingConflict(f"copy at {pos} would touch {other!r} without an edge")
    Ge = A.edge_graph(e)
    v_edges = c.v_edges | {(ident[a], ident[b]) for a, b in Ge.v_edges}
    h_edges = c.h_edges | {(ident[a], ident[b]) for a, b in Ge.h_edges}
    spent = {m for q, m in match.items() if q not in e.outgoing}
    active = (c.active - spent) | {ident[x] for x in e.outgoing - e.incoming}
    return Configuration(labels, origin, frozenset(v_edges), frozenset(h_edges), frozenset(active), positions)


def successors(A: SAHypergraphAutomaton, c: Configuration) -> Iterator[tuple]:
    """Yield ``(gluing, next_configuration)`` for every legal transition from ``c``."""
    active = sorted(c.active, key=_node_order)
    for e in A.hyperedges:
        if not e.incoming:
            continue
        emb = A.edge_embedding(e)
        if emb is None or not e.incoming <= emb.keys():
            continue
        anchor = min(e.incoming, key=_node_order)
        for m in active:
            if c.origin[m] != anchor:
                continue
            r, col = c.positions[m]
            offset = (r - emb[anchor][0], col - emb[anchor][1])
            match = []
            for q in sorted(e.incoming, key=_node_order):
                node = c.cells.get((emb[q][0] + offset[0], emb[q][1] + offset[1]))
                if node is None or node not in c.active or c.origin[node] != q:
                    break
                match.append((q, node))
            else:
                gluing = Gluing(e, tuple(match), offset)
                try:
                    yield gluing, glue(A, c, gluing)
                except GluingConflict:
                    pass


def applicable_gluings(A: SAHypergraphAutomaton, c: Configuration) -> list:
    return [g for g, _ in successors(A, c)]


@dataclass
class Derivation:
    """A seed hyperedge followed by gluing steps; ``configurations[k]`` precedes ``steps[k]``."""

    steps: list
    configurations: list
    seed: str = None

    @property
    def initial(self) -> Configuration:
        return self.configurations[0]

    @property
    def final(self) -> Configuration:
        return self.configurations[-1]

    def hyperedge_ids(self) -> list:
        """Ids of all hyperedges used, the seed included."""
        return [self.seed] + [g.hyperedge.id for g in self.steps]


class _Search:
    """Breadth-first closure over canonical configurations.

    ``admissible`` prunes configurations that cannot lead anywhere useful;
    gluing never removes nodes, so pruning by size or shape is complete.
    """

    def __init__(self, A, admissible, max_states=None, rng=None):
        self.A = A
        self.admissible = admissible
        self.max_states = max_states_from_env() if max_states is None else max_states
        self.rng = rng
        self.parent = {}
        self.config = {}

    def finals(self) -> Iterator[tuple]:
        frontier = deque()
        for e in self.A.initial_hyperedges:
            try:
                c = initial_configuration(self.A, e)
            except EmbeddingConflict:
                continue
            self._visit(c, None, e, frontier)
        while frontier:
            key = frontier.popleft()
            c = self.config[key]
            if c.is_final:
                yield key, c
                continue
            moves = list(successors(self.A, c))
            if self.rng is not None:
                self.rng.shuffle(moves)
            for gluing, nxt in moves:
                self._visit(nxt, key, gluing, frontier)

    def _visit(self, c, parent_key, move, frontier):
        if not self.admissible(c):
            return
        key = c.key()
        if key in self.config:
            return
        if len(self.config) >= self.max_states:
            raise SearchBoundExceeded(
                f"derivation search exceeded {self.max_states} states", explored=len(self.config))
        self.config[key] = c
        self.parent[key] = (parent_key, move)
        frontier.append(key)

    def derivation(self, key) -> Derivation:
        steps, configs = [], []
        while True:
            parent_key, move = self.parent[key]
            configs.append(self.config[key])
            if parent_key is None:
                return Derivation(steps[::-1], configs[::-1], move.id)
            steps.append(move)
            key = parent_key


def _fits_box(max_h, max_w):
    def admissible(c):
        _, _, h, w = c.bounds()
        return h <= max_h and w <= max_w
    return admissible


def _fits_picture(p: Picture):
    """Configurations that can sit inside ``p`` with matching labels somewhere."""
    def admissible(c):
        r0, c0, h, w = c.bounds()
        if h > p.height or w > p.width:
            return False
        cells = [(r - r0, col - c0, c.labels[x]) for x, (r, col) in c.positions.items()]
        for di in range(p.height - h + 1):
            for dj in range(p.width - w + 1):
                if all(p[r + di, col + dj] == lab for r, col, lab in cells):
                    return True
        return False
    return admissible


def final_configurations(A, max_h: int, max_w: int, *, max_states=None, seed=None) -> Iterator[Configuration]:
    """Final configurations reachable within a ``max_h`` x ``max_w`` box (all shapes)."""
    rng = random.Random(seed) if seed is not None else None
    for _, c in _Search(A, _fits_box(max_h, max_w), max_states, rng).finals():
        yield c


def enumerate_language(A, max_h: int, max_w: int, *, max_states=None, seed=None) -> set:
    """Pictures of accepted picture graphs with height <= max_h and width <= max_w.

    ``seed`` shuffles the frontier order; the result does not depend on it.
    """
    if max_h < 1 or max_w < 1:
        raise ValueError("bounds must be positive")
    found = set()
    for c in final_configurations(A, max_h, max_w, max_states=max_states, seed=seed):
        if is_picture_graph(c.graph) is not None:
            found.add(c.picture())
    return found


def find_derivation(A, p: Picture, *, max_states=None) -> Optional[Derivation]:
    """An accepting derivation whose final graph represents ``p``, or ``None``.

    Raises ``SearchBoundExceeded`` if the state budget runs out first.
    """
    search = _Search(A, _fits_picture(p), max_states)
    for key, c in search.finals():
        if c.is_rectangle() and is_picture_graph(c.graph) == p.shape and c.picture() == p:
            return search.derivation(key)
    return None


def accepts(A, p: Picture, max_steps=None) -> bool:
    return find_derivation(A, p, max_states=max_steps) is not None
