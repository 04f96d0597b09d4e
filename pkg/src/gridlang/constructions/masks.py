"""Reading a derivation back out of a tiling produced by ``build_tile_system``.

Every cell carries a candidate ``(x, edges)``; each hyperedge in ``edges``
covers a connected block of cells (its mask) laid out like its graph with
``x`` on that cell.  A mask must come after the mask of the generator on each
of its cells and before the mask of the consumer.  Sorting the masks by that
precedence and gluing them in order reproduces the picture.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass

from ..automaton import Derivation, Gluing, glue, initial_configuration
from ..errors import GluingConflict, ReconstructionError
from ..wang import TiledPicture
from .automaton_to_tiles import TileConstruction, build_tile_system


@dataclass(frozen=True, order=True)
class Mask:
    """One hyperedge occurrence: ``hyperedge`` laid out with its canonical cell ``(1, 1)`` at ``offset``."""

    hyperedge: str
    offset: tuple
    cells: frozenset

    def covers(self, cell) -> bool:
        return any(p == cell for _, p in self.cells)


def _mask_at(con: TileConstruction, grid, i, j, ident) -> Mask:
    A = con.automaton
    x = con.candidate_of(grid[i][j]).node
    emb = A.edge_embedding(ident)
    offset = (i - emb[x][0], j - emb[x][1])
    cells = []
    for z, (r, c) in emb.items():
        cell = (r + offset[0], c + offset[1])
        if not (0 <= cell[0] < len(grid) and 0 <= cell[1] < len(grid[0])):
            raise ReconstructionError(f"mask of {ident} at {(i, j)} leaves the picture")
        there = con.candidate_of(grid[cell[0]][cell[1]])
        if there.node != z or ident not in there.edges:
            raise ReconstructionError(f"mask of {ident} at {(i, j)} disagrees with the tile at {cell}")
        cells.append((z, cell))
    return Mask(ident, offset, frozenset(cells))


def masks_and_order(con: TileConstruction, tiling: TiledPicture) -> tuple:
    """The mask set and the precedence pairs between masks."""
    grid = tiling.grid
    masks = set()
    before = set()
    for i, row in enumerate(grid):
        for j, tile in enumerate(row):
            cand = con.candidate_of(tile)
            here = {e: _mask_at(con, grid, i, j, e) for e in sorted(cand.edges)}
            masks.update(here.values())
            gen, con_ = here[cand.generator], here[cand.consumer]
            for e, m in here.items():
                if e != cand.generator:
                    before.add((gen, m))
                if e != cand.consumer:
                    before.add((m, con_))
    return masks, before


def _topological(masks, before) -> list:
    preds = {m: 0 for m in masks}
    succ = {m: [] for m in masks}
    for a, b in before:
        succ[a].append(b)
        preds[b] += 1
    ready = [m for m, k in preds.items() if k == 0]
    if len(ready) != 1:
        raise ReconstructionError(f"expected one mask without predecessors, found {len(ready)}")
    heapq.heapify(ready)
    order = []
    while ready:
        m = heapq.heappop(ready)
        order.append(m)
        for n in succ[m]:
            preds[n] -= 1
            if preds[n] == 0:
                heapq.heappush(ready, n)
    if len(order) != len(masks):
        raise ReconstructionError("mask precedence is cyclic")
    return order


def reconstruct_derivation(A, tiling: TiledPicture, construction: TileConstruction = None) -> Derivation:
    """An accepting derivation of the (normalized) automaton for ``tiling``'s picture.

    ``tiling`` must be a tiling of the system built from ``A``.  The returned
    derivation refers to the hyperedges of the normalized automaton.
    """
    con = construction or build_tile_system(A)
    masks, before = masks_and_order(con, tiling)
    order = _topological(masks, before)
    N = con.automaton
    first = N.hyperedge(order[0].hyperedge)
    if not first.initial:
        raise ReconstructionError(f"first mask uses non-initial hyperedge {first.id}")
    config = initial_configuration(N, first)
    base = order[0].offset
    configs, steps = [config], []
    for m in order[1:]:
        e = N.hyperedge(m.hyperedge)
        emb = N.edge_embedding(e)
        shift = (m.offset[0] - base[0], m.offset[1] - base[1])
        match = []
        for q in sorted(e.incoming, key=str):
            node = config.cells.get((emb[q][0] + shift[0], emb[q][1] + shift[1]))
            if node is None:
                raise ReconstructionError(f"{e.id} needs {q!r} before it exists")
            match.append((q, node))
        gluing = Gluing(e, tuple(match), shift)
        try:
            config = glue(N, config, gluing)
        except GluingConflict as exc:
            raise ReconstructionError(f"replaying {e.id} failed: {exc}") from exc
        steps.append(gluing)
        configs.append(config)
    if not config.is_final:
        raise ReconstructionError("replay ended with active nodes")
    if config.picture() != tiling.picture():
        raise ReconstructionError("replay produced a different picture")
    return Derivation(steps, configs, first.id)
