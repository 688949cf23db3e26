import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ensemble import random_semigraph
from semigraph_spectra import (
    EdgeClass,
    Kind,
    ParseError,
    Semigraph,
    ValidationError,
    VertexClass,
    classify_edge,
    classify_vertex,
    edge_census,
    edge_distance,
    emit_semigraph,
    gen_star,
    is_connected,
    pair_kinds,
    parse_semigraph,
    skeleton,
)
from semigraph_spectra.core import CONSECUTIVE, PARTIAL_HALF, QUARTER, distance_pair

seeds = st.integers(min_value=0, max_value=2**32 - 1)
semigraphs = st.builds(
    lambda s, c: random_semigraph(np.random.default_rng(s), connected=c), seeds, st.booleans()
)


def labelled(g, pairs):
    return {tuple(sorted((g.labels[i], g.labels[j]))): k for (i, j), k in pairs.items()}


# --- parsing -------------------------------------------------------------

def test_two_edges_sharing_one_vertex():
    g = parse_semigraph("e a b c d\ne b e f")
    assert (g.n, g.m) == (6, 2)
    assert set(g.edges[0]) & set(g.edges[1]) == {g.index("b")}


def test_intersection_violation():
    with pytest.raises(ValidationError, match="shares 2 vertices") as info:
        parse_semigraph("e a b c\ne a b d")
    assert info.value.line == 2


def test_seven_vertex_example_parses(seven_vertex):
    assert (seven_vertex.n, seven_vertex.m) == (7, 4)
    assert seven_vertex.labels == ("w1", "w2", "w3", "w4", "w5", "w6", "w7")


def test_duplicate_edge_after_reversal():
    with pytest.raises(ValidationError, match="duplicate edge"):
        parse_semigraph("e a b c\ne c b a")


def test_repeated_vertex_in_edge():
    with pytest.raises(ValidationError, match="repeats") as info:
        parse_semigraph("e a b\ne c d c")
    assert (info.value.line, info.value.column) == (2, 7)


@pytest.mark.parametrize("text", ["", "# only a comment\n", "v a\n"])
def test_too_few_vertices(text):
    with pytest.raises(ValidationError, match="n >= 2"):
        parse_semigraph(text)


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("e a b\nx a b", 2, 1),
        ("e a\n", 1, 1),
        ("e a b\n  e c", 2, 3),
    ],
)
def test_syntax_errors_are_located(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_semigraph(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_vertex_declaration_fixes_order():
    g = parse_semigraph("v c b a z\ne a b c")
    assert g.labels == ("c", "b", "a", "z")
    assert g.edges[0].vertices == (0, 1, 2)
    assert classify_vertex(g, "z") is VertexClass.ISOLATED


def test_reversal_normalization():
    g1 = parse_semigraph("v a b c\ne a b c")
    g2 = parse_semigraph("v a b c\ne c b a")
    assert g1 == g2
    assert g1.edges[0].vertices[0] <= g1.edges[0].vertices[-1]


def test_comments_and_blank_lines_ignored():
    g = parse_semigraph("# header\n\n   # indented comment\ne a b\n")
    assert (g.n, g.m) == (2, 1)


# --- classification --------------------------------------------------------

@pytest.mark.parametrize(
    "vertex, expected",
    [
        ("w1", VertexClass.PURE_END),
        ("w4", VertexClass.PURE_END),
        ("w6", VertexClass.PURE_END),
        ("w2", VertexClass.MIDDLE_END),
        ("w5", VertexClass.MIDDLE_END),
        ("w7", VertexClass.MIDDLE_END),
        # middle of (w1..w4) and end of (w3, w7, w6)
        ("w3", VertexClass.MIDDLE_END),
    ],
)
def test_seven_vertex_classes(seven_vertex, vertex, expected):
    assert classify_vertex(seven_vertex, vertex) is expected


@pytest.mark.parametrize(
    "edge, expected",
    [
        (("w1", "w2", "w3", "w4"), EdgeClass.FULL),
        (("w5", "w7"), EdgeClass.QUARTER),
        (("w2", "w5", "w6"), EdgeClass.HALF_ONE_PARTIAL),
        (("w6", "w7", "w3"), EdgeClass.HALF_ONE_PARTIAL),
    ],
)
def test_seven_vertex_edge_classes(seven_vertex, edge, expected):
    assert classify_edge(seven_vertex, edge) is expected


def test_seven_vertex_census(seven_vertex):
    assert edge_census(seven_vertex) == (1, 1, 2, 0)


def test_pure_middle_and_half_two_partial():
    g = parse_semigraph("e a b c d\ne x a y\ne z d w")
    assert classify_vertex(g, "b") is VertexClass.PURE_MIDDLE
    assert classify_edge(g, ("a", "b", "c", "d")) is EdgeClass.HALF_TWO_PARTIAL
    kinds = labelled(g, pair_kinds(g, ("a", "b", "c", "d")))
    assert kinds[("a", "b")] == PARTIAL_HALF
    assert kinds[("b", "c")] == CONSECUTIVE
    assert kinds[("c", "d")] == PARTIAL_HALF


def test_unknown_vertex_and_edge(seven_vertex):
    with pytest.raises(KeyError):
        classify_vertex(seven_vertex, "nope")
    with pytest.raises(KeyError):
        classify_edge(seven_vertex, ("w1", "w4"))


def test_star_census_and_center():
    for n in (1, 4, 9):
        g = gen_star(n)
        assert edge_census(g) == (1, 0, n, 0)
        assert classify_vertex(g, "v1") is VertexClass.MIDDLE_END


# --- pair kinds -------------------------------------------------------------

def test_pair_kinds_half_edge(seven_vertex):
    kinds = labelled(seven_vertex, pair_kinds(seven_vertex, ("w2", "w5", "w6")))
    assert kinds == {
        ("w2", "w5"): PARTIAL_HALF,
        ("w5", "w6"): CONSECUTIVE,
        ("w2", "w6"): distance_pair(2),
    }


def test_pair_kinds_full_edge():
    g = parse_semigraph("e a b c")
    assert labelled(g, pair_kinds(g, ("a", "b", "c"))) == {
        ("a", "b"): CONSECUTIVE,
        ("b", "c"): CONSECUTIVE,
        ("a", "c"): distance_pair(2),
    }


def test_pair_kinds_quarter_edge(seven_vertex):
    assert labelled(seven_vertex, pair_kinds(seven_vertex, ("w5", "w7"))) == {("w5", "w7"): QUARTER}


@settings(max_examples=60, deadline=None)
@given(semigraphs)
def test_pair_kind_counts(g):
    for e in g.edges:
        kinds = pair_kinds(g, e)
        length = len(e)
        assert len(kinds) == length * (length - 1) // 2
        unit = [k for k in kinds.values() if k.kind is not Kind.DISTANCE]
        assert len(unit) == length - 1


# --- distances, skeleton, connectivity ---------------------------------------

@pytest.mark.parametrize("u, v, d", [("w1", "w4", 3), ("w2", "w4", 2), ("w3", "w2", 1)])
def test_edge_distance(seven_vertex, u, v, d):
    e = seven_vertex.edge("w1", "w2", "w3", "w4")
    assert edge_distance(e, seven_vertex.index(u), seven_vertex.index(v)) == d


def test_edge_distance_errors(seven_vertex):
    e = seven_vertex.edge("w5", "w7")
    with pytest.raises(KeyError):
        edge_distance(e, seven_vertex.index("w5"), seven_vertex.index("w1"))
    with pytest.raises(ValueError):
        edge_distance(e, seven_vertex.index("w5"), seven_vertex.index("w5"))


def test_seven_vertex_skeleton(seven_vertex):
    names = {tuple(sorted((seven_vertex.labels[i], seven_vertex.labels[j]))) for i, j in skeleton(seven_vertex)}
    assert names == {
        ("w1", "w2"), ("w2", "w3"), ("w3", "w4"), ("w2", "w5"),
        ("w5", "w6"), ("w3", "w7"), ("w6", "w7"), ("w5", "w7"),
    }


def test_skeleton_of_single_edge_is_a_path():
    g = parse_semigraph("e a b c d")
    assert skeleton(g) == [(0, 1), (1, 2), (2, 3)]


def test_skeleton_of_edgeless():
    assert skeleton(Semigraph(("a", "b"))) == []


def test_is_connected_examples(seven_vertex):
    assert is_connected(seven_vertex)
    assert not is_connected(parse_semigraph("e a b\ne c d"))
    assert all(is_connected(gen_star(n)) for n in range(1, 20))


@settings(max_examples=150, deadline=None)
@given(semigraphs)
def test_connectivity_matches_skeleton_graph(g):
    # networkx traversal of the skeleton is an independent route
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(skeleton(g))
    no_isolated = VertexClass.ISOLATED not in g.vertex_classes
    assert is_connected(g) == (nx.is_connected(h) and no_isolated)


@settings(max_examples=100, deadline=None)
@given(semigraphs)
def test_census_sums_to_m(g):
    assert sum(edge_census(g)) == g.m


@settings(max_examples=100, deadline=None)
@given(semigraphs)
def test_emit_parse_round_trip(g):
    assert parse_semigraph(emit_semigraph(g)) == g


def test_graph_case_is_all_full():
    g = parse_semigraph("e a b\ne b c\ne c a\ne c d")
    assert set(g.vertex_classes) == {VertexClass.PURE_END}
    assert set(g.edge_classes) == {EdgeClass.FULL}
    for e in g.edges:
        assert all(k.weight == 1 for k in pair_kinds(g, e).values())
