"""Small reference models used by the tests, the docs and the CLI examples."""
from __future__ import annotations

from .automaton import Hyperedge, SAHypergraphAutomaton
from .grid import PseudoPictureGraph
from .picture import Picture, PictureTilingSystem, tiles_of
from .wang import WangTile, WangTileSystem

U = "#"


def diagonal_pts(max_side: int = 4) -> PictureTilingSystem:
    """Tiling system for the all-``a`` squares of side >= 2.

    The local language marks the main diagonal with ``1`` and everything else
    with ``0``; the tile set is every window of those marked squares.
    """
    tiles = set()
    for k in range(2, max_side + 1):
        marked = Picture(tuple(tuple("1" if i == j else "0" for j in range(k)) for i in range(k)))
        tiles |= tiles_of(marked)
    return PictureTilingSystem({"a"}, {"0", "1"}, frozenset(tiles), {"0": "a", "1": "a"})


def _variants(base, name, allowed):
    """Copies of ``base`` with the listed border sides uncoloured.

    ``allowed`` is an iterable of side strings drawn from ``"T"``, ``"R"``,
    ``"B"``, ``"L"``; the empty string is the interior tile.
    """
    n, e, s, w = base
    for sides in allowed:
        yield WangTile(
            U if "T" in sides else n,
            U if "R" in sides else e,
            U if "B" in sides else s,
            U if "L" in sides else w,
            "a",
            f"{name}{sides}",
        )


def diagonal_wts() -> WangTileSystem:
    """Wang tile system for the all-``a`` squares of side >= 3.

    Horizontal colours say whether the row's diagonal cell lies to the west
    (``1``), and ``2`` marks the edge leaving a diagonal cell eastwards; vertical
    colours say whether the column's diagonal cell lies to the north.  The
    super-diagonal tile may not sit in the top-right corner, which rules out
    the 2x2 square.
    """
    tiles = []
    tiles += _variants(("0", "1", "0", "1"), "above", ["", "T", "R", "TR"])
    tiles += _variants(("0", "1", "0", "2"), "super", ["", "T", "R"])
    tiles += _variants(("0", "2", "1", "0"), "diag", ["", "TL", "BR"])
    tiles += _variants(("1", "0", "1", "0"), "below", ["", "L", "B", "LB"])
    return WangTileSystem({"a"}, {"0", "1", "2"}, frozenset(tiles))


def singleton_wts() -> WangTileSystem:
    return WangTileSystem({"a"}, set(), {WangTile(U, U, U, U, "a", "solo")})


DOMINO_LEFT = WangTile(U, "c", U, U, "a", "left")
DOMINO_RIGHT = WangTile(U, U, U, "c", "b", "right")


def domino_wts() -> WangTileSystem:
    return WangTileSystem({"a", "b"}, {"c"}, {DOMINO_LEFT, DOMINO_RIGHT})


def _automaton(labels, v_edges, h_edges, hyperedges):
    graph = PseudoPictureGraph(labels, frozenset(v_edges), frozenset(h_edges))
    return SAHypergraphAutomaton(graph, [Hyperedge(*fields) for fields in hyperedges])


def chain_automaton() -> SAHypergraphAutomaton:
    """Three nodes in a horizontal cycle; accepts the rows x1 x2 x3 repeated."""
    return _automaton(
        {"x1": "x1", "x2": "x2", "x3": "x3"},
        [],
        [("x1", "x2"), ("x2", "x3"), ("x3", "x1")],
        [
            ("e1", {"x1", "x2"}, {"x1"}, {"x2"}, True),
            ("e2", {"x2", "x3"}, {"x2"}, {"x3"}),
            ("e3", {"x3", "x1"}, {"x3"}, {"x1"}),
            ("e4", {"x2", "x3"}, {"x2"}, set()),
        ],
    )


def ladder_automaton() -> SAHypergraphAutomaton:
    """Two-column pictures grown downwards in 2x2 blocks.

    Rows cycle through ``a b``, ``c d``, ``e f`` and the last row is ``g h``;
    heights 3, 6, 9, ... are accepted.
    """
    labels = {"x1": "a", "x2": "b", "x3": "c", "x4": "d", "x5": "e", "x6": "f", "x7": "g", "x8": "h"}
    h_edges = [("x1", "x2"), ("x3", "x4"), ("x5", "x6"), ("x7", "x8")]
    v_edges = [("x1", "x3"), ("x2", "x4"), ("x3", "x5"), ("x4", "x6"),
               ("x5", "x1"), ("x6", "x2"), ("x3", "x7"), ("x4", "x8")]
    return _automaton(labels, v_edges, h_edges, [
        ("start", {"x1", "x2"}, set(), {"x1", "x2"}, True),
        ("down1", {"x1", "x2", "x3", "x4"}, {"x1", "x2"}, {"x3", "x4"}),
        ("down2", {"x3", "x4", "x5", "x6"}, {"x3", "x4"}, {"x5", "x6"}),
        ("down3", {"x5", "x6", "x1", "x2"}, {"x5", "x6"}, {"x1", "x2"}),
        ("stop", {"x3", "x4", "x7", "x8"}, {"x3", "x4"}, set()),
    ])


def branching_automaton() -> SAHypergraphAutomaton:
    """A 2x2 seed block extended eastwards by one of two 2x2 blocks."""
    labels = {"x1": "a", "x2": "b", "x3": "c", "x4": "d", "x5": "e", "x6": "f", "x7": "g", "x8": "h"}
    h_edges = [("x1", "x2"), ("x3", "x4"), ("x2", "x5"), ("x4", "x6"), ("x2", "x7"), ("x4", "x8")]
    v_edges = [("x1", "x3"), ("x2", "x4"), ("x5", "x6"), ("x7", "x8")]
    return _automaton(labels, v_edges, h_edges, [
        ("seed", {"x1", "x2", "x3", "x4"}, set(), {"x2", "x4"}, True),
        ("left", {"x2", "x4", "x5", "x6"}, {"x2", "x4"}, set()),
        ("right", {"x2", "x4", "x7", "x8"}, {"x2", "x4"}, set()),
    ])


def two_seed_automaton() -> SAHypergraphAutomaton:
    """Two initial hyperedges meeting at a shared end node ``z``.

    One branch grows a periodic row ``a b (c a b)* z``; the other is the single
    column ``u / v / z``.
    """
    labels = {"x1": "a", "x2": "b", "x3": "c", "y1": "u", "y2": "v", "z": "z"}
    h_edges = [("x1", "x2"), ("x2", "x3"), ("x3", "x1"), ("x2", "z")]
    v_edges = [("y1", "y2"), ("y2", "z")]
    return _automaton(labels, v_edges, h_edges, [
        ("row", {"x1", "x2"}, set(), {"x2"}, True),
        ("col", {"y1", "y2"}, set(), {"y2"}, True),
        ("r2", {"x2", "x3"}, {"x2"}, {"x3"}),
        ("r3", {"x3", "x1"}, {"x3"}, {"x1"}),
        ("r1", {"x1", "x2"}, {"x1"}, {"x2"}),
        ("rz", {"x2", "z"}, {"x2"}, set()),
        ("cz", {"y2", "z"}, {"y2"}, set()),
    ])


def self_loop_automaton() -> SAHypergraphAutomaton:
    """A hyperedge whose incoming and outgoing nodes coincide: a zero-offset loop."""
    return _automaton(
        {"x1": "a", "x2": "b"},
        [],
        [("x1", "x2")],
        [
            ("seed", {"x1", "x2"}, set(), {"x1", "x2"}, True),
            ("spin", {"x1", "x2"}, {"x1", "x2"}, {"x1", "x2"}),
        ],
    )


def row(*symbols) -> Picture:
    return Picture((tuple(symbols),))


def column(*symbols) -> Picture:
    return Picture(tuple((s,) for s in symbols))


def chain_word(width: int) -> Picture:
    return row(*(f"x{j % 3 + 1}" for j in range(width)))
