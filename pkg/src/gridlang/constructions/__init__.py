from .expansion import nine_copy_expand, self_adjacent_tiles
from .tiles_to_automaton import BorderClasses, wts_to_saha
from .loops import StrongLoopReport, find_loops, find_strong_loops, loop_footprints
from .automaton_to_tiles import (
    TileCandidate,
    TileConstruction,
    build_tile_system,
    normalize_initials,
    saha_to_wts,
    tile_candidates,
)
from .masks import Mask, masks_and_order, reconstruct_derivation
