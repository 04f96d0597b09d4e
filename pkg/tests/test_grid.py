import pytest
from hypothesis import given, strategies as st

from gridlang.errors import DisconnectedGraphError, EmbeddingConflict, NotAPictureGraph
from gridlang.grid import (
    PseudoPictureGraph,
    canonical_embedding,
    induced_subgraph,
    is_picture_graph,
    is_subgrid,
    picture_graph,
    picture_of,
)
from gridlang.picture import Picture

from oracles import grid_positions

SINGLE = PseudoPictureGraph({"x": "a"})
PATH = PseudoPictureGraph({"x": "a", "y": "b", "z": "c"}, {("y", "z")}, {("x", "y")})
BROKEN_SQUARE = PseudoPictureGraph(
    {"x": "a", "y": "b", "u": "c", "w": "d"}, {("x", "u"), ("y", "w")}, {("x", "y")})
SQUARE = PseudoPictureGraph(
    {"x": "a", "y": "b", "u": "c", "w": "d"}, {("x", "u"), ("y", "w")}, {("x", "y"), ("u", "w")})


def test_single_node_embedding():
    assert canonical_embedding(SINGLE) == {"x": (1, 1)}


def test_path_embedding():
    assert canonical_embedding(PATH) == {"x": (1, 1), "y": (1, 2), "z": (2, 2)}


def test_broken_square_is_not_a_subgrid():
    with pytest.raises(EmbeddingConflict) as info:
        canonical_embedding(BROKEN_SQUARE)
    assert set(info.value.nodes) == {"u", "w"}


def test_is_subgrid_examples():
    assert [is_subgrid(G) for G in (SINGLE, PATH, BROKEN_SQUARE)] == [True, True, False]


def test_disconnected_and_empty_graphs():
    with pytest.raises(DisconnectedGraphError):
        canonical_embedding(PseudoPictureGraph({"x": "a", "y": "b"}))
    with pytest.raises(DisconnectedGraphError):
        canonical_embedding(PseudoPictureGraph({}))
    assert not is_subgrid(PseudoPictureGraph({}))


def test_edge_kinds_must_be_disjoint():
    with pytest.raises(ValueError):
        PseudoPictureGraph({"x": "a", "y": "b"}, {("x", "y")}, {("x", "y")})


def test_collision_is_a_conflict():
    # going right then down then left then up lands on a different node than the start
    G = PseudoPictureGraph({k: "a" for k in "abcde"}, {("b", "c"), ("e", "d")}, {("a", "b"), ("d", "c")})
    assert not is_subgrid(G)


def test_picture_graph_shapes():
    assert is_picture_graph(SINGLE) == (1, 1)
    assert is_picture_graph(PseudoPictureGraph({"x": "a", "y": "b"}, set(), {("x", "y")})) == (1, 2)
    assert is_picture_graph(PATH) is None
    assert is_picture_graph(SQUARE) == (2, 2)


def test_picture_of_examples():
    assert picture_of(SINGLE) == Picture((("a",),))
    assert picture_of(PseudoPictureGraph({"x": "a", "y": "b"}, set(), {("x", "y")})) == Picture((("a", "b"),))
    assert picture_of(SQUARE) == Picture((("a", "b"), ("c", "d")))
    with pytest.raises(NotAPictureGraph):
        picture_of(PATH)


def test_induced_subgraph_examples():
    assert induced_subgraph(SQUARE, SQUARE.nodes) == SQUARE
    empty = induced_subgraph(SQUARE, set())
    assert not empty.labels and not empty.v_edges and not empty.h_edges
    diagonal = induced_subgraph(SQUARE, {"x", "w"})
    assert diagonal.labels == {"x": "a", "w": "d"} and not diagonal.v_edges and not diagonal.h_edges


pictures = st.integers(1, 4).flatmap(lambda h: st.integers(1, 4).flatmap(
    lambda w: st.lists(st.lists(st.sampled_from("ab"), min_size=w, max_size=w), min_size=h, max_size=h)
)).map(lambda rows: Picture(tuple(map(tuple, rows))))


@given(pictures)
def test_picture_graph_round_trip(p):
    G = picture_graph(p)
    assert is_picture_graph(G) == (p.height, p.width)
    assert picture_of(G) == p


@st.composite
def grid_subsets(draw):
    """Induced subgraphs of a small picture graph; not always connected."""
    h, w = draw(st.integers(1, 4)), draw(st.integers(1, 4))
    G = picture_graph(Picture.uniform("a", h, w))
    keep = draw(st.sets(st.sampled_from(sorted(G.labels)), min_size=1))
    return induced_subgraph(G, keep)


@given(grid_subsets())
def test_embedding_agrees_with_independent_layout(G):
    pos = grid_positions(G.labels, G.v_edges, G.h_edges)
    connected = G.is_connected()
    assert is_subgrid(G) == (connected and pos is not None)
    if is_subgrid(G):
        emb = canonical_embedding(G)
        assert emb == canonical_embedding(G)
        assert min(r for r, _ in emb.values()) == 1 and min(c for _, c in emb.values()) == 1
        for x, y in G.v_edges:
            assert emb[y] == (emb[x][0] + 1, emb[x][1])
        for x, y in G.h_edges:
            assert emb[y] == (emb[x][0], emb[x][1] + 1)
        assert len(set(emb.values())) == len(emb)


@given(grid_subsets())
def test_subgrid_degrees_are_at_most_one_per_kind(G):
    if not is_subgrid(G):
        return
    for edges in (G.v_edges, G.h_edges):
        sources = [a for a, _ in edges]
        targets = [b for _, b in edges]
        assert len(sources) == len(set(sources)) and len(targets) == len(set(targets))


@given(grid_subsets())
def test_picture_graphs_are_subgrids(G):
    if is_picture_graph(G) is not None:
        assert is_subgrid(G)
