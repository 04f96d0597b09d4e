import random

import pytest
from hypothesis import given, settings, strategies as st

from gridlang.automaton import (
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
    successors,
    validate,
)
from gridlang.constructions import wts_to_saha
from gridlang.errors import GluingConflict, SearchBoundExceeded
from gridlang.fixtures import (
    branching_automaton,
    chain_automaton,
    chain_word,
    column,
    diagonal_wts,
    domino_wts,
    ladder_automaton,
    row,
    self_loop_automaton,
    two_seed_automaton,
)
from gridlang.grid import PseudoPictureGraph, canonical_embedding, induced_subgraph, is_picture_graph
from gridlang.picture import Picture

from oracles import naive_language


def automaton(labels, v, h, hyperedges):
    return SAHypergraphAutomaton(PseudoPictureGraph(labels, v, h), [Hyperedge(*fields) for fields in hyperedges])


def test_single_hyperedge_has_no_intersecting_nodes():
    A = automaton({"x": "a"}, set(), set(), [("e", {"x"}, set(), set(), True)])
    assert intersecting_nodes(A, "e") == frozenset()


def test_chain_intersecting_nodes():
    A = chain_automaton()
    assert {"x1", "x2"} <= intersecting_nodes(A, "e1")
    assert intersecting_nodes(A, "e4") == {"x2", "x3"}


def test_identical_members_intersect_fully():
    A = automaton({"x": "a", "y": "b"}, set(), {("x", "y")},
                  [("e", {"x", "y"}, set(), set(), True), ("f", {"x", "y"}, set(), set())])
    assert intersecting_nodes(A, "e") == intersecting_nodes(A, "f") == {"x", "y"}


def test_unknown_hyperedge():
    with pytest.raises(KeyError):
        intersecting_nodes(chain_automaton(), "nope")


@pytest.mark.parametrize("make", [chain_automaton, ladder_automaton, branching_automaton,
                                  two_seed_automaton, self_loop_automaton])
def test_fixtures_are_valid(make):
    assert validate(make()) == []


def test_broken_square_hyperedge_is_reported():
    labels = {"x": "a", "y": "b", "u": "c", "w": "d"}
    A = automaton(labels, {("x", "u"), ("y", "w")}, {("x", "y")},
                  [("e", set(labels), set(), set(), True)])
    assert [d.code for d in validate(A)] == ["not-subgrid"]


def test_incoming_outside_members_is_reported():
    A = automaton({"x": "a", "y": "b"}, set(), {("x", "y")},
                  [("e", {"x"}, {"y"}, set(), True), ("f", {"x", "y"}, set(), set())])
    assert "incoming-outside" in [d.code for d in validate(A)]


def test_more_diagnostics():
    A = automaton({"x": "a", "y": "b", "z": "c"}, set(), {("x", "y")}, [
        ("lonely", {"x", "z"}, set(), set(), True),
        ("private", {"x", "y"}, {"y"}, set()),
        ("ghost", {"q"}, set(), set()),
    ])
    codes = {(d.hyperedge, d.code) for d in validate(A)}
    assert ("lonely", "disconnected") in codes
    assert ("private", "incoming-not-intersecting") in codes
    assert ("ghost", "dangling") in codes


def test_chain_initial_configuration():
    [c] = initial_configurations(chain_automaton())
    assert c.labels == {"x1": "x1", "x2": "x2"}
    assert c.h_edges == {("x1", "x2")} and not c.v_edges
    assert c.active == {"x2"}
    assert c.origin == {"x1": "x1", "x2": "x2"}


def test_no_initial_hyperedges():
    A = automaton({"x": "a"}, set(), set(), [("e", {"x"}, set(), set())])
    assert initial_configurations(A) == []
    assert enumerate_language(A, 3, 3) == set()


def test_two_initial_configurations():
    configs = initial_configurations(two_seed_automaton())
    assert sorted(sorted(c.origin.values()) for c in configs) == [["x1", "x2"], ["y1", "y2"]]


def test_chain_applicable_gluings():
    A = chain_automaton()
    [c] = initial_configurations(A)
    gluings = applicable_gluings(A, c)
    assert sorted((g.hyperedge.id, g.match) for g in gluings) == [("e2", (("x2", "x2"),)), ("e4", (("x2", "x2"),))]


def test_no_gluings_without_active_nodes():
    A = chain_automaton()
    [c] = initial_configurations(A)
    e4 = next(g for g in applicable_gluings(A, c) if g.hyperedge.id == "e4")
    assert applicable_gluings(A, glue(A, c, e4)) == []


def collision_automaton():
    # the copy of d lands left of b, where the seed's a already sits
    return automaton({"a": "a", "b": "b", "d": "d"}, set(), {("a", "b"), ("d", "b")}, [
        ("seed", {"a", "b"}, set(), {"b"}, True),
        ("clash", {"d", "b"}, {"b"}, set()),
    ])


def test_colliding_gluing_is_excluded():
    A = collision_automaton()
    assert validate(A) == []
    [c] = initial_configurations(A)
    assert applicable_gluings(A, c) == []
    with pytest.raises(GluingConflict):
        glue(A, c, Gluing(A.hyperedge("clash"), (("b", "b"),), (0, 0)))
    assert enumerate_language(A, 3, 3) == set()


def test_gluing_next_to_an_unconnected_node_is_excluded():
    # the copy of z lands below a, which it has no edge to
    A = automaton({"a": "a", "b": "b", "y": "y", "z": "z"}, {("b", "y")}, {("a", "b"), ("z", "y")}, [
        ("seed", {"a", "b"}, set(), {"b"}, True),
        ("hook", {"b", "y", "z"}, {"b"}, set()),
    ])
    [c] = initial_configurations(A)
    assert applicable_gluings(A, c) == []


def test_chain_glue_examples():
    A = chain_automaton()
    [c] = initial_configurations(A)
    by_id = {g.hyperedge.id: g for g in applicable_gluings(A, c)}
    grown = glue(A, c, by_id["e2"])
    assert [grown.origin[x] for x in sorted(grown.positions, key=lambda x: grown.positions[x])] == ["x1", "x2", "x3"]
    assert {grown.origin[x] for x in grown.active} == {"x3"}
    final = glue(A, c, by_id["e4"])
    assert len(final) == 3 and final.is_final
    assert final.picture() == chain_word(3)


def test_hyperedge_without_fresh_nodes_only_changes_activity():
    A = self_loop_automaton()
    [c] = initial_configurations(A)
    [g] = applicable_gluings(A, c)
    nxt = glue(A, c, g)
    assert len(nxt) == len(c) and nxt.active == c.active


def test_chain_acceptance():
    A = chain_automaton()
    d = find_derivation(A, chain_word(3))
    assert d.hyperedge_ids() == ["e1", "e4"]
    d = find_derivation(A, chain_word(6))
    assert d.hyperedge_ids() == ["e1", "e2", "e3", "e1", "e4"]
    assert not any(accepts(A, Picture(tuple([tuple(w)]))) for w in (["x1"] * 4, ["x1", "x2", "x3", "x1"]))


def test_chain_language():
    A = chain_automaton()
    expected = {chain_word(w) for w in (3, 6, 9, 12)}
    assert enumerate_language(A, 1, 12) == expected
    assert enumerate_language(A, 2, 12) == expected


def test_other_fixture_languages():
    ladder = enumerate_language(ladder_automaton(), 9, 3)
    assert {p.shape for p in ladder} == {(3, 2), (6, 2), (9, 2)}
    assert enumerate_language(branching_automaton(), 4, 4) == {
        Picture((("a", "b", "e"), ("c", "d", "f"))),
        Picture((("a", "b", "g"), ("c", "d", "h"))),
    }
    seeded = enumerate_language(two_seed_automaton(), 3, 8)
    assert row("a", "b", "z") in seeded and row("a", "b", "c", "a", "b", "z") in seeded
    assert column("u", "v", "z") in seeded


def test_search_bound_is_reported():
    with pytest.raises(SearchBoundExceeded):
        enumerate_language(chain_automaton(), 1, 12, max_states=3)


def test_environment_bound(monkeypatch):
    monkeypatch.setenv("GRIDLANG_MAX_STATES", "2")
    with pytest.raises(SearchBoundExceeded):
        find_derivation(chain_automaton(), chain_word(6))


FIXTURES = [chain_automaton, ladder_automaton, branching_automaton, two_seed_automaton]


@pytest.mark.parametrize("make, bounds", [
    (chain_automaton, (2, 9)),
    (ladder_automaton, (6, 3)),
    (branching_automaton, (3, 4)),
    (two_seed_automaton, (4, 7)),
])
def test_enumeration_matches_naive_gluing(make, bounds):
    A = make()
    assert enumerate_language(A, *bounds) == naive_language(A, *bounds)


def test_converted_domino_matches_naive_gluing():
    A = wts_to_saha(domino_wts())
    assert enumerate_language(A, 2, 3) == naive_language(A, 2, 3)


@pytest.mark.parametrize("make", FIXTURES)
@pytest.mark.parametrize("seed", [1, 7, 42])
def test_enumeration_ignores_exploration_order(make, seed):
    A = make()
    assert enumerate_language(A, 6, 7, seed=seed) == enumerate_language(A, 6, 7)


@pytest.mark.parametrize("make", FIXTURES)
def test_acceptance_agrees_with_enumeration(make):
    A = make()
    language = enumerate_language(A, 3, 4)
    for h in range(1, 4):
        for w in range(1, 5):
            for p in {q for q in language if q.shape == (h, w)}:
                assert accepts(A, p)
    for p in language:
        flipped = Picture(tuple(tuple("?" for _ in r) for r in p.rows))
        assert not accepts(A, flipped)


def check_configuration(A, c):
    emb = canonical_embedding(c.graph)
    r0, c0, _, _ = c.bounds()
    assert emb == {x: (r - r0 + 1, col - c0 + 1) for x, (r, col) in c.positions.items()}
    assert c.active <= set(c.labels)
    for x, lab in c.labels.items():
        assert lab == A.labels[c.origin[x]]
    for a, b in c.v_edges:
        assert (c.origin[a], c.origin[b]) in A.graph.v_edges
    for a, b in c.h_edges:
        assert (c.origin[a], c.origin[b]) in A.graph.h_edges


def random_walks(A, rng, walks, depth):
    steps = 0
    for _ in range(walks):
        c = rng.choice(initial_configurations(A))
        check_configuration(A, c)
        for _ in range(depth):
            moves = list(successors(A, c))
            if not moves:
                if c.is_final and c.is_rectangle():
                    assert is_picture_graph(c.graph) is not None
                break
            g, nxt = rng.choice(moves)
            e = g.hyperedge
            check_configuration(A, nxt)
            assert len(nxt) == len(c) + len(e.members) - len(e.incoming)
            assert induced_subgraph(nxt.graph, c.labels) == c.graph
            steps += 1
            c = nxt
    return steps


def test_gluing_invariants_on_random_derivations():
    rng = random.Random(2024)
    automata = [make() for make in FIXTURES] + [wts_to_saha(diagonal_wts()), wts_to_saha(domino_wts())]
    steps = sum(random_walks(A, rng, 80, 30) for A in automata)
    assert steps >= 1000


@settings(max_examples=25)
@given(st.integers(0, 10**6))
def test_gluing_invariants_property(seed):
    rng = random.Random(seed)
    random_walks(rng.choice([chain_automaton, ladder_automaton, two_seed_automaton])(), rng, 2, 20)
