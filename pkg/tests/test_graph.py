import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kpacking.generators import gen_complete, gen_cycle, gen_path, gen_star, random_graph
from kpacking.graph import (
    Graph,
    Graph6Error,
    GraphError,
    complement,
    components,
    delete_vertex,
    emit_graph6,
    parse_edge_list,
    parse_graph6,
    structural_summary,
)


@st.composite
def graphs(draw, max_n=20):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, b in zip(pairs, keep) if b])


def test_graph6_roundtrip_literal():
    assert emit_graph6(parse_graph6("D?{")) == "D?{"


def test_single_vertex():
    g = parse_graph6("@")
    assert g.n == 1 and g.m == 0
    assert emit_graph6(Graph.empty(1)) == "@"


def test_c5_decodes_two_regular_connected():
    g = parse_graph6(emit_graph6(gen_cycle(5)))
    assert g.n == 5 and g.degrees() == [2] * 5
    assert len(components(g)) == 1


def test_k4_encoding():
    # 6 adjacency bits fit one byte, so K4 is two characters (same as nauty / networkx)
    s = emit_graph6(gen_complete(4))
    assert s == "C~"
    assert parse_graph6(s).degrees() == [3] * 4


def test_header_accepted():
    assert parse_graph6(">>graph6<<D?{\n") == parse_graph6("D?{")


def test_long_form_roundtrip():
    g = gen_path(100)
    s = emit_graph6(g)
    assert s.startswith("~")
    assert parse_graph6(s) == g


@pytest.mark.parametrize(
    "text,offset",
    [
        ("", 0),
        ("D?", 2),  # truncated bit stream
        ("D?{?", 3),  # trailing byte
        ("D ?{", 1),  # out of range character
        ("~?", 2),  # truncated long header
    ],
)
def test_graph6_errors_name_offset(text, offset):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(text)
    assert info.value.offset == offset
    assert f"byte offset {offset}" in str(info.value)


def test_random_roundtrip_100():
    rng = random.Random(7)
    for _ in range(100):
        g = random_graph(rng.randint(1, 20), rng.random(), rng.randrange(10**9))
        assert parse_graph6(emit_graph6(g)) == g


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_roundtrip_property(g):
    assert parse_graph6(emit_graph6(g)) == g


def test_edge_list_path():
    assert parse_edge_list("4\n0 1\n1 2\n2 3") == gen_path(4)


def test_edge_list_duplicates_collapse():
    g = parse_edge_list("2\n0 1\n1 0")
    assert g.n == 2 and g.m == 1


@pytest.mark.parametrize("text", ["3\n0 0", "3\n0 3", "", "2\n0", "x 1"])
def test_edge_list_errors(text):
    with pytest.raises(GraphError):
        parse_edge_list(text)


def test_graph_rejects_asymmetric():
    with pytest.raises(GraphError):
        Graph(2, [[1], []])


def test_complement_examples():
    assert complement(gen_complete(5)).m == 0
    c = complement(gen_cycle(5))
    assert c.m == 5 and c.degrees() == [2] * 5


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=12))
def test_complement_involution(g):
    h = complement(g)
    assert complement(h) == g
    assert h.degrees() == [g.n - 1 - d for d in g.degrees()]


def test_delete_vertex_examples():
    h = delete_vertex(gen_path(2), 0)
    assert h.n == 1 and h.m == 0
    for v in range(5):
        p = delete_vertex(gen_cycle(5), v)
        assert sorted(p.degrees()) == [1, 1, 2, 2]
        assert structural_summary(p).is_tree


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=10), st.data())
def test_delete_vertex_preserves_adjacency(g, data):
    v = data.draw(st.integers(0, g.n - 1))
    h, old = delete_vertex(g, v, return_map=True)
    assert len(old) == g.n - 1 and v not in old
    for a in range(h.n):
        for b in range(h.n):
            if a != b:
                assert h.has_edge(a, b) == g.has_edge(old[a], old[b])


def test_summary_star():
    s = structural_summary(gen_star(5))
    assert (s.max_degree, s.min_degree, s.delta_prime, s.leaf_count, s.support_count) == (4, 1, 4, 4, 1)


def test_summary_p4():
    s = structural_summary(gen_path(4))
    assert (s.leaf_count, s.support_count, s.delta_prime, s.is_tree) == (2, 2, 2, True)


def test_summary_k2():
    s = structural_summary(gen_path(2))
    assert s.delta_prime is None
    assert s.leaves == (0, 1) and s.supports == (0, 1)


def test_summary_regular_and_components():
    s = structural_summary(Graph.from_edges(5, [(0, 1), (2, 3), (3, 4), (2, 4)]))
    assert not s.is_connected and not s.is_tree
    assert s.component_sizes == (2, 3)
    assert structural_summary(gen_cycle(6)).regular_degree == 2


def test_large_path_is_linear_memory():
    g = gen_path(10**6)
    s = emit_graph6(gen_path(200))
    assert parse_graph6(s).m == 199
    assert g.m == 10**6 - 1 and g.has_edge(5, 6) and not g.has_edge(5, 7)
