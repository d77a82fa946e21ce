import pytest
from hypothesis import given, settings, strategies as st

from gridbondage.graph import (
    INF, Graph, GraphError, GraphFormatError, GridSpec, InvalidEdgeError, cartesian_product,
    complete_graph, connected_components, direct_product, distance, format_graph, grid_graph,
    parse_graph, path_graph, read_graph, remove_edges, strong_product, write_graph,
)

import bruteforce


def assert_simple(g: Graph):
    for u, nb in enumerate(g.neighbors):
        assert u not in nb
        for v in nb:
            assert 0 <= v < g.order
            assert u in g.neighbors[v]


def test_path_graph_small():
    p1 = path_graph(1)
    assert p1.order == 1 and p1.size == 0
    assert path_graph(2).edges == ((0, 1),)
    p5 = path_graph(5)
    assert p5.size == 4
    assert p5.degrees() == (1, 2, 2, 2, 1)


def test_path_graph_rejects_zero():
    with pytest.raises(GraphError):
        path_graph(0)


def test_strong_product_examples():
    k4 = strong_product(path_graph(2), path_graph(2))
    assert k4 == complete_graph(4)
    g = strong_product(path_graph(3), path_graph(3))
    assert (g.order, g.size) == (9, 20)
    assert g.degree(4) == 8
    g = strong_product(path_graph(4), path_graph(5))
    assert (g.order, g.size) == (20, 55)


def test_direct_product_examples():
    g = direct_product(path_graph(2), path_graph(2))
    assert g.edges == ((0, 3), (1, 2))
    g = direct_product(path_graph(6), path_graph(5))
    assert g.order == 30
    parts = connected_components(g)
    assert [len(p) for p in parts] == [15, 15]
    assert distance(g, parts[0][0], parts[1][0]) == INF
    g = direct_product(path_graph(4), path_graph(4))
    assert (g.order, g.size) == (16, 18)


def test_cartesian_product_examples():
    c4 = cartesian_product(path_graph(2), path_graph(2))
    assert c4.degrees() == (2, 2, 2, 2) and c4.size == 4
    assert cartesian_product(path_graph(3), path_graph(3)).size == 12
    assert cartesian_product(path_graph(2), path_graph(3)).size == 7


@pytest.mark.parametrize("n", range(2, 7))
@pytest.mark.parametrize("m", range(2, 7))
@pytest.mark.parametrize("kind", ["strong", "direct", "cartesian"])
def test_products_match_coordinate_definition(kind, n, m):
    g = grid_graph(kind, n, m)
    assert g.order == n * m
    assert list(g.edges) == bruteforce.grid_edges(kind, n, m)
    expected = {
        "strong": n * (m - 1) + m * (n - 1) + 2 * (n - 1) * (m - 1),
        "direct": 2 * (n - 1) * (m - 1),
        "cartesian": n * (m - 1) + m * (n - 1),
    }[kind]
    assert g.size == expected
    assert_simple(g)


@pytest.mark.parametrize("n,m", [(2, 2), (3, 5), (6, 4), (7, 7)])
def test_strong_is_disjoint_union_of_cartesian_and_direct(n, m):
    s = set(grid_graph("strong", n, m).edges)
    c = set(grid_graph("cartesian", n, m).edges)
    d = set(grid_graph("direct", n, m).edges)
    assert not c & d
    assert s == c | d


def test_gridspec_row_major():
    spec = GridSpec("strong", 4, 5)
    assert spec.index(1, 1) == 0
    assert spec.index(2, 1) == 5
    assert spec.index(4, 5) == 19
    assert all(spec.index(*spec.coords(v)) == v for v in range(20))
    assert spec.edge_coords((0, 6)) == [[1, 1], [2, 2]]
    with pytest.raises(GraphError):
        spec.index(5, 1)
    with pytest.raises(GraphError):
        GridSpec("lexicographic", 3, 3)
    with pytest.raises(GraphError):
        GridSpec("strong", 1, 3)


def test_remove_edges():
    g = grid_graph("strong", 3, 3)
    assert remove_edges(g, []) == g
    p3 = remove_edges(path_graph(3), [(0, 1)])
    assert p3.edges == ((1, 2),) and p3.degree(0) == 0
    c4 = remove_edges(complete_graph(4), [(0, 1), (2, 3)])
    assert sorted(c4.edges) == [(0, 2), (0, 3), (1, 2), (1, 3)]
    assert c4.degrees() == (2, 2, 2, 2)
    assert g.size == 20
    assert remove_edges(g, [(0, 4)]).grid is None


def test_remove_missing_edge_names_pair():
    with pytest.raises(InvalidEdgeError, match=r"\(0,2\)"):
        remove_edges(path_graph(3), [(0, 2)])


def test_distance():
    p5 = path_graph(5)
    assert distance(p5, 2, 2) == 0
    assert distance(p5, 0, 4) == 4
    with pytest.raises(GraphError):
        distance(p5, 0, 5)


def test_components():
    assert connected_components(path_graph(7)) == [list(range(7))]
    assert connected_components(grid_graph("direct", 2, 2)) == [[0, 3], [1, 2]]


def test_graph_rejects_bad_adjacency():
    with pytest.raises(GraphError):
        Graph([0b10, 0])  # asymmetric
    with pytest.raises(GraphError):
        Graph([0b1])  # loop
    with pytest.raises(GraphError):
        Graph([0b100, 0])  # out of range
    with pytest.raises(GraphError):
        Graph([0] * 4097)


@st.composite
def graphs(draw, max_order=12):
    n = draw(st.integers(1, max_order))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


@settings(max_examples=60, deadline=None)
@given(graphs(max_order=30))
def test_distance_matches_bfs_and_triangle_inequality(g):
    dist = [[distance(g, u, v) for v in range(g.order)] for u in range(g.order)]
    for u in range(g.order):
        ref = bruteforce.bfs(g.order, g.edges, u)
        for v in range(g.order):
            assert dist[u][v] == ref.get(v, INF)
    comps = connected_components(g)
    for comp in comps:
        for a in comp:
            for b in comp:
                for c in comp:
                    assert dist[a][c] <= dist[a][b] + dist[b][c]


@settings(max_examples=60, deadline=None)
@given(graphs(), st.data())
def test_remove_edges_keeps_invariants(g, data):
    if g.edges:
        es = data.draw(st.lists(st.sampled_from(g.edges), unique=True))
    else:
        es = []
    h = remove_edges(g, es)
    assert_simple(h)
    assert set(h.edges) == set(g.edges) - set(es)


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_text_format_round_trip(g):
    text = format_graph(g, comments=["round trip"])
    assert parse_graph(text) == g
    assert format_graph(parse_graph(text), comments=["round trip"]) == text


def test_text_format_layout(tmp_path):
    g = path_graph(3)
    assert format_graph(g) == "p edge 3 2\ne 1 2\ne 2 3\n"
    path = tmp_path / "p3.txt"
    write_graph(g, path)
    assert read_graph(path) == g


@pytest.mark.parametrize("text,line", [
    ("e 1 2\n", 1),
    ("p edge 3 1\ne 2 1\n", 2),
    ("p edge 3 1\ne 1 4\n", 2),
    ("c hi\np edge 3 2\ne 1 2\ne 1 2\n", 4),
    ("p edge 3 1\nx 1 2\n", 2),
    ("p node 3 1\n", 1),
])
def test_text_format_errors_name_line(text, line):
    with pytest.raises(GraphFormatError, match=f"line {line}"):
        parse_graph(text)


def test_text_format_edge_count_mismatch():
    with pytest.raises(GraphFormatError, match="declared 2"):
        parse_graph("p edge 3 2\ne 1 2\n")
