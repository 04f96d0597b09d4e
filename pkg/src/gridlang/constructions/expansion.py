"""Nine-fold tagged expansion of a Wang tile system.

Each tile is copied once per residue pair ``(i, j)`` in ``{0, 1, 2}**2``.
Every coloured edge carries both residues of the cell on its west or north
side, so a copy ``(i, j)`` only matches ``(i, j+1)`` to its east and
``(i+1, j)`` below it.  In a tiling, copy ``(i, j)`` therefore sits only at
positions congruent to ``(i, j)`` mod 3, and two copies of one tile are never
closer than three rows or columns.  Uncoloured edges stay uncoloured.
"""
from __future__ import annotations

import itertools

from ..wang import UNCOLOURED, WangTile, WangTileSystem

RESIDUES = (0, 1, 2)


def tag(colour: str, i: int, j: int) -> str:
    if colour == UNCOLOURED:
        return UNCOLOURED
    return f"{colour}/{i % 3}{j % 3}"


def base_names(V: WangTileSystem) -> dict:
    """A unique, stable name for every tile of ``V``.

    Tile names are used when present and unique; otherwise tiles are numbered
    in sorted order.
    """
    tiles = V.sorted_tiles()
    names = [t.name for t in tiles]
    if all(names) and len(set(names)) == len(names):
        return dict(zip(tiles, names))
    return {t: f"t{k}" for k, t in enumerate(tiles)}


def expanded_tile(t: WangTile, name: str, i: int, j: int) -> WangTile:
    return WangTile(
        north=tag(t.north, i - 1, j),
        east=tag(t.east, i, j),
        south=tag(t.south, i, j),
        west=tag(t.west, i, j - 1),
        label=t.label,
        name=f"{name}@{i}{j}",
    )


def nine_copy_expand(V: WangTileSystem) -> WangTileSystem:
    names = base_names(V)
    tiles = frozenset(
        expanded_tile(t, names[t], i, j)
        for t in V.tiles
        for i, j in itertools.product(RESIDUES, RESIDUES)
    )
    colours = frozenset(tag(c, i, j) for c in V.colors for i in RESIDUES for j in RESIDUES)
    return WangTileSystem(V.labels, colours, tiles)


def self_adjacent_tiles(W: WangTileSystem) -> list:
    """Tiles that can sit directly next to themselves; ``[]`` means locally rigid."""
    bad = []
    for t in W.sorted_tiles():
        horizontal = t.east != UNCOLOURED and t.east == t.west
        vertical = t.south != UNCOLOURED and t.south == t.north
        if horizontal or vertical:
            bad.append(t)
    return bad
