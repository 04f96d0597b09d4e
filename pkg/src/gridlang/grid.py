"""Pseudo-picture graphs and their grid embeddings.

Positions are ``(row, col)`` with rows growing downwards: a vertical edge
``(x, y)`` puts ``y`` one row below ``x`` and a horizontal edge puts ``y`` one
column to the right of ``x``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping, Optional

from .errors import DisconnectedGraphError, EmbeddingConflict, NotAPictureGraph
from .picture import Picture

DOWN = (1, 0)
RIGHT = (0, 1)


def _node_order(x):
    return (type(x).__name__, str(x))


@dataclass(frozen=True, eq=True)
class PseudoPictureGraph:
    """Node-labelled digraph with disjoint vertical and horizontal edge sets."""

    labels: Mapping
    v_edges: frozenset = frozenset()
    h_edges: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "labels", dict(self.labels))
        object.__setattr__(self, "v_edges", frozenset(tuple(e) for e in self.v_edges))
        object.__setattr__(self, "h_edges", frozenset(tuple(e) for e in self.h_edges))
        both = self.v_edges & self.h_edges
        if both:
            raise ValueError(f"edges {sorted(both, key=str)} are both vertical and horizontal")
        for x, y in self.v_edges | self.h_edges:
            if x not in self.labels or y not in self.labels:
                raise ValueError(f"edge ({x!r}, {y!r}) has an endpoint outside the node set")

    __hash__ = None

    @property
    def nodes(self) -> frozenset:
        return frozenset(self.labels)

    def sorted_nodes(self) -> list:
        return sorted(self.labels, key=_node_order)

    def is_connected(self) -> bool:
        if not self.labels:
            return False
        adj = _adjacency(self)
        start = self.sorted_nodes()[0]
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y, _ in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(self.labels)


def _adjacency(G: PseudoPictureGraph) -> dict:
    adj = {x: [] for x in G.labels}
    for a, b in G.v_edges:
        adj[a].append((b, DOWN))
        adj[b].append((a, (-1, 0)))
    for a, b in G.h_edges:
        adj[a].append((b, RIGHT))
        adj[b].append((a, (0, -1)))
    return adj


def induced_subgraph(G: PseudoPictureGraph, subset) -> PseudoPictureGraph:
    subset = set(subset)
    return PseudoPictureGraph(
        {x: G.labels[x] for x in subset},
        frozenset(e for e in G.v_edges if e[0] in subset and e[1] in subset),
        frozenset(e for e in G.h_edges if e[0] in subset and e[1] in subset),
    )


def canonical_embedding(G: PseudoPictureGraph) -> dict:
    """Lay a connected graph out on the grid, top-left cell at ``(1, 1)``.

    Raises ``DisconnectedGraphError`` for empty or disconnected input and
    ``EmbeddingConflict`` if the graph is not a subgrid: two nodes forced onto
    one cell, an edge of the wrong length or direction, or two nodes at
    distance one without an edge between them.
    """
    if not G.labels:
        raise DisconnectedGraphError("the empty graph has no embedding")
    adj = _adjacency(G)
    root = G.sorted_nodes()[0]
    pos = {root: (0, 0)}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        r, c = pos[x]
        for y, (dr, dc) in adj[x]:
            want = (r + dr, c + dc)
            if y not in pos:
                pos[y] = want
                queue.append(y)
            elif pos[y] != want:
                raise EmbeddingConflict(f"edge between {x!r} and {y!r} cannot be placed consistently", (x, y))
    if len(pos) != len(G.labels):
        raise DisconnectedGraphError("graph is not connected")
    occupied = {}
    for x in G.sorted_nodes():
        other = occupied.setdefault(pos[x], x)
        if other != x:
            raise EmbeddingConflict(f"nodes {other!r} and {x!r} collide on one grid cell", (other, x))
    for x, (r, c) in pos.items():
        for (dr, dc), edges in ((DOWN, G.v_edges), (RIGHT, G.h_edges)):
            y = occupied.get((r + dr, c + dc))
            if y is not None and (x, y) not in edges:
                raise EmbeddingConflict(f"nodes {x!r} and {y!r} are adjacent but not connected", (x, y))
    r0 = min(r for r, _ in pos.values())
    c0 = min(c for _, c in pos.values())
    return {x: (r - r0 + 1, c - c0 + 1) for x, (r, c) in pos.items()}


def is_subgrid(G: PseudoPictureGraph) -> bool:
    try:
        canonical_embedding(G)
    except (DisconnectedGraphError, EmbeddingConflict):
        return False
    return True


def is_picture_graph(G: PseudoPictureGraph) -> Optional[tuple]:
    """``(rows, cols)`` if ``G`` is a full rows x cols grid, else ``None``."""
    try:
        pos = canonical_embedding(G)
    except (DisconnectedGraphError, EmbeddingConflict):
        return None
    n = max(r for r, _ in pos.values())
    m = max(c for _, c in pos.values())
    return (n, m) if n * m == len(pos) else None


def picture_of(G: PseudoPictureGraph) -> Picture:
    shape = is_picture_graph(G)
    if shape is None:
        raise NotAPictureGraph("graph does not fill a rectangle of the grid")
    n, m = shape
    at = {p: x for x, p in canonical_embedding(G).items()}
    return Picture(tuple(tuple(G.labels[at[i, j]] for j in range(1, m + 1)) for i in range(1, n + 1)))


def picture_graph(p: Picture) -> PseudoPictureGraph:
    """The full grid graph of ``p``; node ``(i, j)`` carries ``p[i, j]``."""
    labels = dict(p.cells())
    v = {((i, j), (i + 1, j)) for (i, j) in labels if (i + 1, j) in labels}
    h = {((i, j), (i, j + 1)) for (i, j) in labels if (i, j + 1) in labels}
    return PseudoPictureGraph(labels, frozenset(v), frozenset(h))
