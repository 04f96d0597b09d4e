"""Acceptance criteria, one test group per criterion.

Run ``pytest tests/test_acceptance.py`` (or this file as a script) for the
pass/fail summary printed at the end of the session.
"""
import random
import time

import pytest

from gridlang import io
from gridlang.automaton import accepts, enumerate_language, glue, initial_configuration, successors
from gridlang.cli import NO, OK, run
from gridlang.constructions import (
    build_tile_system,
    find_loops,
    nine_copy_expand,
    normalize_initials,
    reconstruct_derivation,
    self_adjacent_tiles,
    wts_to_saha,
)
from gridlang.fixtures import (
    branching_automaton,
    chain_automaton,
    chain_word,
    diagonal_pts,
    diagonal_wts,
    domino_wts,
    ladder_automaton,
    self_loop_automaton,
    singleton_wts,
    two_seed_automaton,
)
from gridlang.grid import canonical_embedding, induced_subgraph
from gridlang.picture import Picture, all_pictures, pts_accepts, pts_enumerate
from gridlang.wang import tilings, wts_accepts, wts_enumerate

WTS_FIXTURES = {"singleton": singleton_wts, "domino": domino_wts, "diagonal": diagonal_wts}


def compare(tmp_path, left, right, max_h, max_w):
    lpath, rpath = tmp_path / "left.json", tmp_path / "right.json"
    io.save(left, lpath)
    io.save(right, rpath)
    start = time.perf_counter()
    code = run(["compare", "--left", str(lpath), "--right", str(rpath), "--max-h", str(max_h), "--max-w", str(max_w)])
    return code, time.perf_counter() - start


# 1

@pytest.mark.parametrize("name, bounds", [
    ("singleton", (4, 4)), ("singleton", (1, 6)),
    ("domino", (4, 4)), ("domino", (1, 6)),
    ("diagonal", (4, 4)),
])
def test_criterion_1_wts_round_trip(criterion, tmp_path, name, bounds):
    criterion(1, "tile system -> automaton round trip")
    V = WTS_FIXTURES[name]()
    code, elapsed = compare(tmp_path, V, wts_to_saha(V), *bounds)
    assert code == OK
    assert elapsed < 60


# 2

@pytest.mark.parametrize("make, bounds", [
    (lambda: normalize_initials(chain_automaton()), (1, 12)),
    (lambda: normalize_initials(chain_automaton()), (4, 4)),
    (ladder_automaton, (1, 12)),
    (ladder_automaton, (4, 4)),
    (two_seed_automaton, (1, 12)),
    (two_seed_automaton, (4, 4)),
])
def test_criterion_2_automaton_round_trip(criterion, tmp_path, make, bounds):
    criterion(2, "automaton -> tile system round trip")
    A = make()
    code, elapsed = compare(tmp_path, A, build_tile_system(A).system, *bounds)
    assert code == OK
    assert elapsed < 120


# 3

def test_criterion_3_chain_language(criterion):
    criterion(3, "chain automaton language shape")
    found = enumerate_language(chain_automaton(), 1, 12)
    assert sorted(p.width for p in found) == [3, 6, 9, 12]
    assert found == {chain_word(w) for w in (3, 6, 9, 12)}


# 4

def test_criterion_4_strong_loops(criterion, tmp_path):
    criterion(4, "strong-loop detector")
    [spin] = find_loops(self_loop_automaton())
    assert spin.strong
    [loop] = find_loops(chain_automaton())
    assert loop.cycle == ("e1", "e2", "e3", "e1") and loop.displacement == (0, 3) and not loop.strong
    path = tmp_path / "spin.json"
    io.save(self_loop_automaton(), path)
    assert run(["convert", "saha-to-wts", str(path)]) == NO


# 5

def test_criterion_5_gluing_invariants(criterion):
    criterion(5, "randomized gluing invariants")
    rng = random.Random(5)
    automata = [chain_automaton(), ladder_automaton(), branching_automaton(), two_seed_automaton(),
                wts_to_saha(domino_wts()), wts_to_saha(diagonal_wts())]
    steps = 0
    while steps < 1000:
        A = rng.choice(automata)
        c = initial_configuration(A, rng.choice(A.initial_hyperedges))
        for _ in range(30):
            moves = list(successors(A, c))
            if not moves:
                break
            gluing, nxt = rng.choice(moves)
            assert nxt.key() == glue(A, c, gluing).key()
            canonical_embedding(nxt.graph)
            assert all(nxt.labels[x] == A.labels[nxt.origin[x]] for x in nxt.labels)
            e = gluing.hyperedge
            assert len(nxt) - len(c) == len(e.members) - len(e.incoming)
            assert induced_subgraph(nxt.graph, c.labels) == c.graph
            c = nxt
            steps += 1


# 6

@pytest.mark.parametrize("name", WTS_FIXTURES)
def test_criterion_6_nine_copy_expansion(criterion, name):
    criterion(6, "nine-copy expansion")
    V = WTS_FIXTURES[name]()
    W = nine_copy_expand(V)
    assert len(W.tiles) == 9 * len(V.tiles)
    assert wts_enumerate(W, 3, 3) == wts_enumerate(V, 3, 3)
    if name == "diagonal":
        assert self_adjacent_tiles(W) == []


# 7

def test_criterion_7_mask_reconstruction(criterion):
    criterion(7, "mask-based derivation reconstruction")
    A = chain_automaton()
    con = build_tile_system(A)
    seen = 0
    for w in range(1, 13):
        for t in tilings(con.system, 1, w):
            d = reconstruct_derivation(A, t, con)
            c = initial_configuration(con.automaton, d.seed)
            for step in d.steps:
                c = glue(con.automaton, c, step)
            assert c.is_final and c.picture() == t.picture()
            seen += 1
    assert seen == 4


# 8

def test_criterion_8_diagonal_pts(criterion):
    criterion(8, "diagonal picture tiling system")
    assert pts_enumerate(diagonal_pts(), 5, 5) == {Picture.uniform("a", k, k) for k in range(2, 6)}


# 9

def perturbations(p, alphabet):
    """``p`` and every picture that differs from it in one cell."""
    yield p
    for i in range(p.height):
        for j in range(p.width):
            for s in sorted(alphabet - {p[i, j]}):
                rows = [list(r) for r in p.rows]
                rows[i][j] = s
                yield Picture(tuple(map(tuple, rows)))


@pytest.mark.parametrize("name, bounds", [
    ("singleton", (3, 3)), ("domino", (3, 3)), ("diagonal", (5, 5)),
])
def test_criterion_9_wts_recognizer_vs_enumerator(criterion, name, bounds):
    criterion(9, "recognizer and enumerator agree")
    W = WTS_FIXTURES[name]()
    language = wts_enumerate(W, *bounds)
    for p in all_pictures(W.labels, *bounds):
        assert wts_accepts(W, p) == (p in language)


def test_criterion_9_pts_recognizer_vs_enumerator(criterion):
    criterion(9, "recognizer and enumerator agree")
    T = diagonal_pts()
    language = pts_enumerate(T, 5, 5)
    for p in all_pictures(T.sigma, 5, 5):
        assert pts_accepts(T, p) == (p in language)


AUTOMATA = {
    "chain": (chain_automaton, (1, 6), (1, 12)),
    "ladder": (ladder_automaton, (2, 2), (9, 2)),
    "branching": (branching_automaton, (2, 2), (2, 3)),
    "two-seed": (two_seed_automaton, (1, 4), (3, 9)),
    "domino-automaton": (lambda: wts_to_saha(domino_wts()), (3, 3), (3, 3)),
}


@pytest.mark.parametrize("name", AUTOMATA)
def test_criterion_9_automaton_recognizer_vs_enumerator(criterion, name):
    criterion(9, "recognizer and enumerator agree")
    make, exhaustive, wide = AUTOMATA[name]
    A = make()
    alphabet = frozenset(A.labels.values())
    # every picture over the alphabet in a small box
    language = enumerate_language(A, *exhaustive)
    for p in all_pictures(alphabet, *exhaustive):
        assert accepts(A, p) == (p in language)
    # members of a larger box and all their one-cell neighbours
    language = enumerate_language(A, *wide)
    assert language
    for member in language:
        for p in perturbations(member, alphabet):
            assert accepts(A, p) == (p in language)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
