"""Pictures, framed pictures, 2x2 picture tiles and picture tiling systems.

Cells are addressed with 0-based ``(row, col)`` pairs; row indices grow
downwards.  The reserved frame symbol is ``FRAME`` (``"#"``).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Optional

from .errors import AlphabetError

FRAME = "#"

PictureTile = tuple  # ((top_left, top_right), (bottom_left, bottom_right))


def _as_rows(rows) -> tuple:
    return tuple(tuple(r) for r in rows)


@dataclass(frozen=True)
class Picture:
    """A non-empty rectangular matrix of symbols.

    ``alphabet`` defaults to the set of symbols that occur.  It does not take
    part in equality, so two pictures with the same cells compare equal.
    """

    rows: tuple
    alphabet: frozenset = field(default=None, compare=False)

    def __post_init__(self):
        rows = _as_rows(self.rows)
        if not rows or not rows[0]:
            raise ValueError("pictures must have at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("picture rows have different lengths")
        symbols = {s for r in rows for s in r}
        alphabet = frozenset(symbols if self.alphabet is None else self.alphabet)
        if FRAME in alphabet:
            raise AlphabetError(f"{FRAME!r} is reserved and cannot be a picture symbol")
        stray = symbols - alphabet
        if stray:
            raise AlphabetError(f"symbols {sorted(stray)} are not in the alphabet")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "alphabet", alphabet)

    @property
    def height(self) -> int:
        return len(self.rows)

    @property
    def width(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> tuple:
        return self.height, self.width

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def cells(self) -> Iterator[tuple]:
        for i, row in enumerate(self.rows):
            for j, s in enumerate(row):
                yield (i, j), s

    def map(self, fn, alphabet=None) -> "Picture":
        return Picture(tuple(tuple(fn(s) for s in r) for r in self.rows), alphabet)

    def render(self, framed: bool = True) -> str:
        rows = frame(self).rows if framed else self.rows
        width = max(len(str(s)) for r in rows for s in r)
        return "\n".join(" ".join(str(s).ljust(width) for s in r).rstrip() for r in rows)

    def sort_key(self):
        return (self.height, self.width, tuple(tuple(map(str, r)) for r in self.rows))

    @classmethod
    def uniform(cls, symbol, height: int, width: int) -> "Picture":
        return cls(tuple((symbol,) * width for _ in range(height)))


@dataclass(frozen=True)
class FramedPicture:
    inner: Picture
    rows: tuple

    @property
    def height(self) -> int:
        return len(self.rows)

    @property
    def width(self) -> int:
        return len(self.rows[0])

    def unframe(self) -> Picture:
        return Picture(tuple(r[1:-1] for r in self.rows[1:-1]), self.inner.alphabet)


def frame(p: Picture) -> FramedPicture:
    border = (FRAME,) * (p.width + 2)
    body = tuple((FRAME,) + r + (FRAME,) for r in p.rows)
    return FramedPicture(p, (border,) + body + (border,))


def tiles_of(p: Picture) -> frozenset:
    """All 2x2 windows of the framed picture, as ``((a, b), (c, d))`` tuples."""
    rows = frame(p).rows
    return frozenset(
        ((rows[a][b], rows[a][b + 1]), (rows[a + 1][b], rows[a + 1][b + 1]))
        for a in range(len(rows) - 1)
        for b in range(len(rows[0]) - 1)
    )


@dataclass(frozen=True)
class Subpicture:
    """A matrix over symbols and ``None`` (empty) whose filled cells are 4-connected."""

    rows: tuple

    def __post_init__(self):
        object.__setattr__(self, "rows", _as_rows(self.rows))
        if not self.is_connected():
            raise ValueError("non-empty cells of a subpicture must be 4-connected")

    def filled(self) -> set:
        return {(i, j) for i, r in enumerate(self.rows) for j, s in enumerate(r) if s is not None}

    def is_connected(self) -> bool:
        return cells_connected(self.filled())


def cells_connected(cells) -> bool:
    cells = set(cells)
    if not cells:
        return True
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        i, j = stack.pop()
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cells)


@dataclass(frozen=True)
class PictureTilingSystem:
    """A picture tiling system: local 2x2 tiles over ``gamma`` projected to ``sigma``."""

    sigma: frozenset
    gamma: frozenset
    tiles: frozenset
    projection: Mapping

    def __post_init__(self):
        object.__setattr__(self, "sigma", frozenset(self.sigma))
        object.__setattr__(self, "gamma", frozenset(self.gamma))
        object.__setattr__(self, "tiles", frozenset(_as_rows(t) for t in self.tiles))
        object.__setattr__(self, "projection", dict(self.projection))
        if FRAME in self.sigma or FRAME in self.gamma:
            raise AlphabetError(f"{FRAME!r} is reserved")
        missing = self.gamma - set(self.projection)
        if missing:
            raise ValueError(f"projection is undefined on {sorted(missing)}")
        bad = {v for k, v in self.projection.items() if k in self.gamma and v not in self.sigma}
        if bad:
            raise AlphabetError(f"projection targets {sorted(bad)} are not in sigma")
        allowed = self.gamma | {FRAME}
        for t in self.tiles:
            if len(t) != 2 or any(len(r) != 2 for r in t):
                raise ValueError(f"picture tile {t} is not 2x2")
            if any(s not in allowed for r in t for s in r):
                raise AlphabetError(f"picture tile {t} uses symbols outside gamma")

    def __hash__(self):
        return hash((self.sigma, self.gamma, self.tiles))


def _completion_schedule(h: int, w: int) -> list:
    """For each cell in row-major order, the framed windows it completes.

    Window ``(a, b)`` has its top-left corner at framed coordinate ``(a, b)``
    and covers picture cells ``(a-1..a, b-1..b)``.  A window is checked at
    the last picture cell it covers in row-major order.
    """
    schedule = [[] for _ in range(h * w)]
    for a in range(h + 1):
        for b in range(w + 1):
            covered = [(i, j) for i in (a - 1, a) for j in (b - 1, b) if 0 <= i < h and 0 <= j < w]
            last = max(covered)
            schedule[last[0] * w + last[1]].append((a, b))
    return schedule


def _window(grid, h, w, a, b):
    def at(i, j):
        return grid[i][j] if 0 <= i < h and 0 <= j < w else FRAME

    return ((at(a - 1, b - 1), at(a - 1, b)), (at(a, b - 1), at(a, b)))


def _local_preimages(T: PictureTilingSystem, h: int, w: int, choices) -> Iterator[Picture]:
    """Backtrack over gamma assignments; ``choices(i, j)`` lists allowed symbols per cell."""
    schedule = _completion_schedule(h, w)
    grid = [[None] * w for _ in range(h)]

    def place(k):
        if k == h * w:
            yield Picture(tuple(tuple(r) for r in grid), T.gamma)
            return
        i, j = divmod(k, w)
        for g in choices(i, j):
            grid[i][j] = g
            if all(_window(grid, h, w, a, b) in T.tiles for a, b in schedule[k]):
                yield from place(k + 1)
        grid[i][j] = None

    yield from place(0)


def pts_preimage(T: PictureTilingSystem, p: Picture) -> Optional[Picture]:
    """Return a gamma-picture whose windows are all tiles of ``T`` and that
    projects onto ``p``, or ``None`` if ``p`` is not recognized."""
    stray = {s for _, s in p.cells()} - T.sigma
    if stray:
        raise AlphabetError(f"picture symbols {sorted(stray)} are not in sigma")
    inverse = {}
    for g in sorted(T.gamma):
        inverse.setdefault(T.projection[g], []).append(g)
    return next(_local_preimages(T, p.height, p.width, lambda i, j: inverse.get(p[i, j], ())), None)


def pts_accepts(T: PictureTilingSystem, p: Picture) -> bool:
    return pts_preimage(T, p) is not None


def pts_enumerate(T: PictureTilingSystem, max_h: int, max_w: int) -> set:
    if max_h < 1 or max_w < 1:
        raise ValueError("bounds must be positive")
    gamma = sorted(T.gamma)
    found = set()
    for h, w in itertools.product(range(1, max_h + 1), range(1, max_w + 1)):
        for q in _local_preimages(T, h, w, lambda i, j: gamma):
            found.add(q.map(T.projection.__getitem__, T.sigma))
    return found


def all_pictures(alphabet: Iterable, max_h: int, max_w: int) -> Iterator[Picture]:
    """Every picture over ``alphabet`` with both dimensions within the bounds."""
    alphabet = sorted(alphabet)
    for h in range(1, max_h + 1):
        for w in range(1, max_w + 1):
            for flat in itertools.product(alphabet, repeat=h * w):
                yield Picture(tuple(flat[r * w:(r + 1) * w] for r in range(h)), frozenset(alphabet))
