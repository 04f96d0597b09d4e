"""JSON file formats for pictures, tiling systems, graphs, automata and tilings.

Loaders raise ``FormatError`` with a dotted location such as
``hyperedges[2].in`` so that the CLI can point at the offending field.
"""
from __future__ import annotations

import json
from pathlib import Path

from .automaton import Hyperedge, SAHypergraphAutomaton
from .errors import FormatError, GridlangError
from .grid import PseudoPictureGraph, _node_order
from .picture import Picture, PictureTilingSystem
from .wang import TiledPicture, WangTile, WangTileSystem


class _Reader:
    """Typed access to a decoded JSON document, tracking the current location."""

    def __init__(self, data, where=""):
        self.data = data
        self.where = where

    def fail(self, message):
        raise FormatError(message, self.where or "<root>")

    def at(self, key) -> "_Reader":
        where = f"{self.where}[{key}]" if isinstance(key, int) else (f"{self.where}.{key}" if self.where else key)
        if isinstance(key, int):
            if not isinstance(self.data, list) or key >= len(self.data):
                self.fail(f"missing item {key}")
        elif not isinstance(self.data, dict) or key not in self.data:
            self.fail(f"missing field {key!r}")
        return _Reader(self.data[key], where)

    def get(self, key, default):
        if isinstance(self.data, dict) and key in self.data:
            return self.at(key)
        return _Reader(default, key)

    def items(self) -> list:
        if not isinstance(self.data, list):
            self.fail("expected a list")
        return [self.at(k) for k in range(len(self.data))]

    def string(self) -> str:
        if not isinstance(self.data, str):
            self.fail(f"expected a string, got {type(self.data).__name__}")
        return self.data

    def strings(self) -> list:
        return [r.string() for r in self.items()]

    def boolean(self) -> bool:
        if not isinstance(self.data, bool):
            self.fail("expected true or false")
        return self.data

    def mapping(self) -> dict:
        if not isinstance(self.data, dict):
            self.fail("expected an object")
        return {k: self.at(k) for k in self.data}


def _build(where, factory, *args):
    """Run a constructor and re-raise its validation errors as format errors."""
    try:
        return factory(*args)
    except (GridlangError, ValueError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(str(exc), where or "<root>") from exc


def _matrix(r: _Reader) -> tuple:
    return tuple(tuple(row.strings()) for row in r.items())


# pictures

def picture_from_json(data, where="") -> Picture:
    r = _Reader(data, where)
    rows = _matrix(r.at("rows"))
    alphabet = r.get("alphabet", None)
    sigma = None if alphabet.data is None else frozenset(alphabet.strings())
    return _build(where, Picture, rows, sigma)


def picture_to_json(p: Picture) -> dict:
    return {"alphabet": sorted(p.alphabet), "rows": [list(r) for r in p.rows]}


def pictures_to_json(pictures) -> dict:
    return {"pictures": [picture_to_json(p) for p in sorted(pictures, key=Picture.sort_key)]}


def pictures_from_json(data, where="") -> list:
    r = _Reader(data, where)
    return [picture_from_json(item.data, item.where) for item in r.at("pictures").items()]


# picture tiling systems

def pts_from_json(data, where="") -> PictureTilingSystem:
    r = _Reader(data, where)
    tiles = [_matrix(t) for t in r.at("tiles").items()]
    pi = {k: v.string() for k, v in r.at("pi").mapping().items()}
    return _build(where, PictureTilingSystem, r.at("sigma").strings(), r.at("gamma").strings(), tiles, pi)


def pts_to_json(T: PictureTilingSystem) -> dict:
    return {
        "sigma": sorted(T.sigma),
        "gamma": sorted(T.gamma),
        "pi": {g: T.projection[g] for g in sorted(T.gamma)},
        "tiles": [[list(row) for row in t] for t in sorted(T.tiles)],
    }


# Wang tile systems and tilings

def tile_from_json(data, where="") -> WangTile:
    r = _Reader(data, where)
    name = r.get("name", "").string()
    return WangTile(r.at("n").string(), r.at("e").string(), r.at("s").string(), r.at("w").string(),
                    r.at("label").string(), name)


def tile_to_json(t: WangTile) -> dict:
    out = {"n": t.north, "e": t.east, "s": t.south, "w": t.west, "label": t.label}
    if t.name:
        out["name"] = t.name
    return out


def wts_from_json(data, where="") -> WangTileSystem:
    r = _Reader(data, where)
    tiles = [tile_from_json(t.data, t.where) for t in r.at("tiles").items()]
    return _build(where, WangTileSystem, r.at("labels").strings(), r.at("colors").strings(), tiles)


def wts_to_json(W: WangTileSystem) -> dict:
    return {
        "labels": sorted(W.labels),
        "colors": sorted(W.colors),
        "tiles": [tile_to_json(t) for t in W.sorted_tiles()],
    }


def tiling_from_json(data, system: WangTileSystem, where="") -> TiledPicture:
    r = _Reader(data, where)
    grid = []
    for row in r.at("rows").items():
        cells = []
        for cell in row.items():
            t = tile_from_json(cell.data, cell.where)
            if t not in system.tiles:
                cell.fail(f"tile {t} is not in the tile system")
            cells.append(t)
        grid.append(cells)
    if not grid or not grid[0] or any(len(row) != len(grid[0]) for row in grid):
        r.fail("tiling rows must be non-empty and of equal length")
    return TiledPicture(system, grid)


def tiling_to_json(t: TiledPicture) -> dict:
    return {"rows": [[tile_to_json(x) for x in row] for row in t.grid]}


# graphs and automata

def graph_from_json(data, where="") -> PseudoPictureGraph:
    r = _Reader(data, where)
    labels = {}
    for node in r.at("nodes").items():
        ident = node.at("id").string()
        if ident in labels:
            node.fail(f"duplicate node id {ident!r}")
        labels[ident] = node.at("label").string()

    def edges(key):
        out = []
        for e in r.get(key, []).items():
            pair = e.strings()
            if len(pair) != 2:
                e.fail("an edge is a pair of node ids")
            out.append(tuple(pair))
        return frozenset(out)

    return _build(where, PseudoPictureGraph, labels, edges("v_edges"), edges("h_edges"))


def graph_to_json(G: PseudoPictureGraph) -> dict:
    def pairs(edges):
        return sorted([str(a), str(b)] for a, b in edges)

    return {
        "nodes": [{"id": str(x), "label": G.labels[x]} for x in G.sorted_nodes()],
        "v_edges": pairs(G.v_edges),
        "h_edges": pairs(G.h_edges),
    }


def automaton_from_json(data, where="") -> SAHypergraphAutomaton:
    r = _Reader(data, where)
    graph = graph_from_json(r.at("graph").data, r.at("graph").where)
    hyperedges = []
    for h in r.at("hyperedges").items():
        hyperedges.append(Hyperedge(
            h.at("id").string(),
            frozenset(h.at("nodes").strings()),
            frozenset(h.get("in", []).strings()),
            frozenset(h.get("out", []).strings()),
            h.get("initial", False).boolean(),
        ))
    return _build(where, SAHypergraphAutomaton, graph, hyperedges)


def automaton_to_json(A: SAHypergraphAutomaton) -> dict:
    def ids(nodes):
        return [str(x) for x in sorted(nodes, key=_node_order)]

    return {
        "graph": graph_to_json(A.graph),
        "hyperedges": [
            {"id": e.id, "nodes": ids(e.members), "in": ids(e.incoming), "out": ids(e.outgoing), "initial": e.initial}
            for e in A.hyperedges
        ],
    }


# files

MODEL_KINDS = ("automaton", "wts", "pts", "picture", "pictures", "graph", "tiling")


def detect_kind(data):
    """The model kind of a decoded JSON document, or ``None`` if unrecognized."""
    if not isinstance(data, dict):
        return None
    keys = set(data)
    if {"graph", "hyperedges"} <= keys:
        return "automaton"
    if {"labels", "colors", "tiles"} <= keys:
        return "wts"
    if {"sigma", "gamma", "tiles"} <= keys:
        return "pts"
    if "pictures" in keys:
        return "pictures"
    if "nodes" in keys:
        return "graph"
    if "rows" in keys:
        rows = data["rows"]
        if isinstance(rows, list) and rows and isinstance(rows[0], list) and rows[0] and isinstance(rows[0][0], dict):
            return "tiling"
        return "picture"
    return None


_LOADERS = {
    "automaton": automaton_from_json,
    "wts": wts_from_json,
    "pts": pts_from_json,
    "picture": picture_from_json,
    "pictures": pictures_from_json,
    "graph": graph_from_json,
}


def read_json(path) -> object:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise FormatError(f"cannot read file ({exc.strerror})", str(path)) from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg}", f"{path}:{exc.lineno}:{exc.colno}") from exc


def load(path, kind: str = None):
    """Load a model file; returns ``(kind, model)``.

    With ``kind`` given the file must be of that kind.  Tilings need their
    tile system and are loaded with ``tiling_from_json`` instead.
    """
    data = read_json(path)
    found = detect_kind(data)
    if found is None:
        raise FormatError("cannot tell which model this file describes", str(path))
    if kind is not None and found != kind:
        raise FormatError(f"expected a {kind} file, found a {found} file", str(path))
    if found not in _LOADERS:
        raise FormatError(f"{found} files cannot be loaded on their own", str(path))
    try:
        return found, _LOADERS[found](data)
    except FormatError as exc:
        raise FormatError(str(exc), str(path)) from exc


_DUMPERS = {
    SAHypergraphAutomaton: automaton_to_json,
    WangTileSystem: wts_to_json,
    PictureTilingSystem: pts_to_json,
    Picture: picture_to_json,
    PseudoPictureGraph: graph_to_json,
    TiledPicture: tiling_to_json,
}


def to_json(model) -> dict:
    for cls, dump in _DUMPERS.items():
        if isinstance(model, cls):
            return dump(model)
    raise TypeError(f"no JSON format for {type(model).__name__}")


def dumps(model_or_data) -> str:
    data = model_or_data if isinstance(model_or_data, (dict, list)) else to_json(model_or_data)
    return json.dumps(data, indent=2, sort_keys=False) + "\n"


def save(model, path) -> None:
    Path(path).write_text(dumps(model))
