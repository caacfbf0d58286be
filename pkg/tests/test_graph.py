import pytest

from resmatch.graph import (
    Bipartition,
    DuplicateEdgeWarning,
    GraphFormatError,
    bipartition,
    build_graph,
    degree_profile,
    delete_edges,
    emit_graph_file,
    is_connected,
    is_valid_bipartition,
    normalize_edge,
    parse_graph_file,
)


def test_normalize_edge_orders_endpoints():
    assert normalize_edge(3, 1) == (1, 3)
    assert normalize_edge(1, 3) == (1, 3)


def test_build_graph_basic():
    g = build_graph(4, [(1, 2), (3, 2), (3, 4)])
    assert g.vertex_count == 4
    assert g.edge_count == 3
    assert g.sorted_edges() == [(1, 2), (2, 3), (3, 4)]
    assert g.adjacency()[2] == [1, 3]
    assert g.degree(2) == 2
    assert g.degree(4) == 1


def test_build_graph_collapses_duplicates_with_warning():
    with pytest.warns(DuplicateEdgeWarning, match="2 duplicate"):
        g = build_graph(3, [(1, 2), (2, 1), (1, 2), (2, 3)])
    assert g.edge_count == 2


def test_build_graph_rejects_bad_input():
    with pytest.raises(ValueError, match="self-loop"):
        build_graph(3, [(2, 2)])
    with pytest.raises(ValueError, match="outside"):
        build_graph(3, [(1, 4)])
    with pytest.raises(ValueError, match="non-negative"):
        build_graph(-1, [])


def test_empty_and_edgeless_graphs():
    assert build_graph(0, []).edge_count == 0
    g = build_graph(5, [])
    assert g.sorted_edges() == []
    assert degree_profile(g) == {"min_degree": 0, "max_degree": 0, "histogram": {0: 5}}


def test_coords_validation():
    g = build_graph(2, [(1, 2)], coords={1: (0, 0), 2: (0, 1)})
    assert g.coords[2] == (0, 1)
    with pytest.raises(ValueError, match="cover every vertex"):
        build_graph(2, [(1, 2)], coords={1: (0, 0)})
    with pytest.raises(ValueError, match="injective"):
        build_graph(2, [(1, 2)], coords={1: (0, 0), 2: (0, 0)})
    with pytest.raises(ValueError, match="unknown vertex"):
        build_graph(2, [(1, 2)], coords={1: (0, 0), 2: (0, 1), 3: (1, 1)})


def test_bipartition_even_cycle():
    g = build_graph(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1)])
    b = bipartition(g)
    assert b is not None
    assert b.side0 == frozenset({1, 3, 5})
    assert is_valid_bipartition(g, b)


def test_bipartition_odd_cycle_is_none():
    g = build_graph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])
    assert bipartition(g) is None


def test_bipartition_prefers_coord_parity():
    # path laid out on the lattice; parity classes match the BFS classes
    g = build_graph(3, [(1, 2), (2, 3)], coords={1: (0, 0), 2: (0, 1), 3: (1, 1)})
    b = bipartition(g)
    assert b.side0 == frozenset({1, 3})


def test_is_valid_bipartition_rejects_bad_split():
    g = build_graph(2, [(1, 2)])
    assert not is_valid_bipartition(g, Bipartition(frozenset({1, 2}), frozenset()))
    assert not is_valid_bipartition(g, Bipartition(frozenset({1}), frozenset()))


def test_connectivity():
    assert is_connected(build_graph(0, []))
    assert is_connected(build_graph(1, []))
    assert not is_connected(build_graph(2, []))
    assert is_connected(build_graph(3, [(1, 2), (2, 3)]))
    assert not is_connected(build_graph(4, [(1, 2), (3, 4)]))


def test_degree_profile_star():
    g = build_graph(4, [(1, 2), (1, 3), (1, 4)])
    assert degree_profile(g) == {
        "min_degree": 1,
        "max_degree": 3,
        "histogram": {1: 3, 3: 1},
    }


def test_delete_edges_keeps_vertices():
    g = build_graph(4, [(1, 2), (2, 3), (3, 4)])
    h = delete_edges(g, [(3, 2)])
    assert h.vertex_count == 4
    assert h.sorted_edges() == [(1, 2), (3, 4)]
    with pytest.raises(ValueError, match=r"edge \(1, 4\) is not in the graph"):
        delete_edges(g, [(1, 4)])


def test_delete_edges_preserves_coords():
    g = build_graph(2, [(1, 2)], coords={1: (0, 0), 2: (1, 0)})
    h = delete_edges(g, [(1, 2)])
    assert h.coords == g.coords


GOOD_FILE = """\
# sample
p mg 3 2
v 1 0 0
v 2 1 0
v 3 2 0
e 1 2
e 2 3
"""


def test_parse_graph_file_roundtrip():
    g = parse_graph_file(GOOD_FILE)
    assert g.vertex_count == 3
    assert g.sorted_edges() == [(1, 2), (2, 3)]
    assert g.coords == {1: (0, 0), 2: (1, 0), 3: (2, 0)}
    assert parse_graph_file(emit_graph_file(g)) == g


def test_emit_is_canonical():
    a = build_graph(3, [(2, 3), (1, 2)])
    b = build_graph(3, [(1, 2), (3, 2)])
    assert emit_graph_file(a) == emit_graph_file(b)
    assert emit_graph_file(a).endswith("\n")


def test_emit_without_coords_has_no_vertex_records():
    text = emit_graph_file(build_graph(2, [(1, 2)]))
    assert text == "p mg 2 1\ne 1 2\n"


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("e 1 2\n", "record before header"),
        ("p mg 2\n", "malformed header"),
        ("p mg 2 x\n", "malformed header"),
        ("p mg -1 0\n", "negative count"),
        ("p mg 2 1\np mg 2 1\n", "duplicate header"),
        ("p mg 2 1\ne 1\n", "malformed edge record"),
        ("p mg 2 1\ne 1 3\n", "out of range"),
        ("p mg 2 1\ne 1 1\n", "self-loop"),
        ("p mg 2 1\nq 1 2\n", "unknown record tag"),
        ("p mg 2 2\ne 1 2\n", "header declares 2 edges"),
        ("p mg 2 1\nv 5 0 0\ne 1 2\n", "vertex id 5 out of range"),
        ("p mg 2 1\nv 1 0 0\nv 1 1 1\ne 1 2\n", "duplicate coordinates"),
        ("", "missing 'p mg' header"),
    ],
)
def test_parse_errors_name_the_line(text, fragment):
    with pytest.raises(GraphFormatError, match=fragment):
        parse_graph_file(text)


def test_parse_reports_line_numbers():
    with pytest.raises(GraphFormatError, match="line 3"):
        parse_graph_file("# c\np mg 2 1\ne 1 1\n")


def test_parse_collapses_duplicate_edges_with_warning():
    with pytest.warns(DuplicateEdgeWarning):
        g = parse_graph_file("p mg 2 2\ne 1 2\ne 2 1\n")
    assert g.edge_count == 1
