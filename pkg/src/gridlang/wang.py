"""Labelled Wang tiles, Wang tile systems, tilings and their bounded languages."""
from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .errors import AlphabetError
from .picture import FRAME, Picture

UNCOLOURED = FRAME


@dataclass(frozen=True, order=True)
class WangTile:
    """A non-rotatable labelled unit square.

    ``name`` is part of the tile's identity: it lets a system hold several
    tiles with identical edges and label (tagged copies, for instance).
    """

    north: str
    east: str
    south: str
    west: str
    label: str
    name: str = ""

    def edges(self) -> tuple:
        return self.north, self.east, self.south, self.west

    def __str__(self):
        core = f"({self.north},{self.east},{self.south},{self.west};{self.label})"
        return f"{self.name}{core}" if self.name else core


@dataclass(frozen=True)
class WangTileSystem:
    labels: frozenset
    colors: frozenset
    tiles: frozenset

    def __post_init__(self):
        object.__setattr__(self, "labels", frozenset(self.labels))
        object.__setattr__(self, "colors", frozenset(self.colors))
        object.__setattr__(self, "tiles", frozenset(self.tiles))
        if UNCOLOURED in self.colors:
            raise AlphabetError(f"{UNCOLOURED!r} marks uncoloured edges and cannot be a colour")
        palette = self.colors | {UNCOLOURED}
        for t in self.tiles:
            if t.label not in self.labels:
                raise AlphabetError(f"tile {t} has a label outside the label alphabet")
            if any(c not in palette for c in t.edges()):
                raise AlphabetError(f"tile {t} uses a colour outside the colour alphabet")

    @classmethod
    def from_tiles(cls, tiles) -> "WangTileSystem":
        tiles = frozenset(tiles)
        colors = {c for t in tiles for c in t.edges()} - {UNCOLOURED}
        return cls(frozenset(t.label for t in tiles), frozenset(colors), tiles)

    def sorted_tiles(self) -> list:
        return sorted(self.tiles)


@dataclass(frozen=True)
class TiledPicture:
    system: WangTileSystem = field(compare=False)
    grid: tuple

    def __post_init__(self):
        object.__setattr__(self, "grid", tuple(tuple(r) for r in self.grid))

    @property
    def height(self) -> int:
        return len(self.grid)

    @property
    def width(self) -> int:
        return len(self.grid[0])

    def picture(self) -> Picture:
        return Picture(tuple(tuple(t.label for t in r) for r in self.grid), self.system.labels)

    def render(self) -> str:
        return "\n".join(" | ".join(str(t) for t in r) for r in self.grid)


def find_mismatch(grid) -> Optional[tuple]:
    """First violation of the mismatch-free and border rules, or ``None``.

    The result is ``((row, col), reason)`` with 0-based coordinates.
    """
    h, w = len(grid), len(grid[0])
    for i in range(h):
        for j in range(w):
            t = grid[i][j]
            if i == 0 and t.north != UNCOLOURED:
                return (i, j), "north border edge is coloured"
            if j == 0 and t.west != UNCOLOURED:
                return (i, j), "west border edge is coloured"
            if i == h - 1 and t.south != UNCOLOURED:
                return (i, j), "south border edge is coloured"
            if j == w - 1 and t.east != UNCOLOURED:
                return (i, j), "east border edge is coloured"
            if j + 1 < w:
                right = grid[i][j + 1]
                if t.east == UNCOLOURED or t.east != right.west:
                    return (i, j), f"east edge {t.east!r} does not match west edge {right.west!r}"
            if i + 1 < h:
                below = grid[i + 1][j]
                if t.south == UNCOLOURED or t.south != below.north:
                    return (i, j), f"south edge {t.south!r} does not match north edge {below.north!r}"
    return None


def is_mismatch_free(grid) -> bool:
    return find_mismatch(grid) is None


class _TileIndex:
    def __init__(self, W: WangTileSystem):
        self.by_nw = defaultdict(list)
        for t in W.sorted_tiles():
            self.by_nw[t.north, t.west].append(t)

    def candidates(self, north, west, last_row, last_col, label=None):
        for t in self.by_nw.get((north, west), ()):
            if label is not None and t.label != label:
                continue
            if (t.south == UNCOLOURED) != last_row:
                continue
            if (t.east == UNCOLOURED) != last_col:
                continue
            yield t


def tilings(W: WangTileSystem, height: int, width: int, picture: Picture = None) -> Iterator[TiledPicture]:
    """All mismatch-free, well-bordered tilings of the given size.

    Placement is row-major; each tile is filtered by the already fixed north
    and west neighbours.  With ``picture`` the labels are fixed as well.
    """
    index = _TileIndex(W)
    grid = [[None] * width for _ in range(height)]

    def place(k):
        if k == height * width:
            yield TiledPicture(W, grid)
            return
        i, j = divmod(k, width)
        north = grid[i - 1][j].south if i else UNCOLOURED
        west = grid[i][j - 1].east if j else UNCOLOURED
        if (i and north == UNCOLOURED) or (j and west == UNCOLOURED):
            return
        label = picture[i, j] if picture is not None else None
        for t in index.candidates(north, west, i == height - 1, j == width - 1, label):
            grid[i][j] = t
            yield from place(k + 1)
        grid[i][j] = None

    yield from place(0)


def wts_tiling(W: WangTileSystem, p: Picture) -> Optional[TiledPicture]:
    """A tiled version of ``p`` over ``W``, or ``None``."""
    stray = {s for _, s in p.cells()} - W.labels
    if stray:
        raise AlphabetError(f"picture symbols {sorted(stray)} are not tile labels")
    return next(tilings(W, p.height, p.width, p), None)


def wts_accepts(W: WangTileSystem, p: Picture) -> bool:
    return wts_tiling(W, p) is not None


def all_tilings(W: WangTileSystem, max_h: int, max_w: int) -> Iterator[TiledPicture]:
    for h, w in itertools.product(range(1, max_h + 1), range(1, max_w + 1)):
        yield from tilings(W, h, w)


def wts_enumerate(W: WangTileSystem, max_h: int, max_w: int) -> set:
    if max_h < 1 or max_w < 1:
        raise ValueError("bounds must be positive")
    return {t.picture() for t in all_tilings(W, max_h, max_w)}
