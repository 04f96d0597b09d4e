"""Two-dimensional picture languages, Wang tile systems and SA-hypergraph automata."""
from .automaton import (
    Configuration,
    Derivation,
    Gluing,
    Hyperedge,
    SAHypergraphAutomaton,
    accepts,
    applicable_gluings,
    enumerate_language,
    find_derivation,
    glue,
    initial_configurations,
    intersecting_nodes,
    validate,
)
from .constructions import (
    find_loops,
    find_strong_loops,
    nine_copy_expand,
    normalize_initials,
    reconstruct_derivation,
    saha_to_wts,
    tile_candidates,
    wts_to_saha,
)
from .errors import (
    AlphabetError,
    FormatError,
    GluingConflict,
    GridlangError,
    ReconstructionError,
    SearchBoundExceeded,
    StrongLoopError,
)
from .grid import PseudoPictureGraph, canonical_embedding, is_picture_graph, is_subgrid, picture_graph, picture_of
from .picture import Picture, PictureTilingSystem, frame, pts_accepts, pts_enumerate, tiles_of
from .wang import TiledPicture, WangTile, WangTileSystem, is_mismatch_free, wts_accepts, wts_enumerate

__version__ = "0.1.0"
