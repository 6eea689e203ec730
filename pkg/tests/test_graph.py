"""Explicit graph construction, partitions, adjacency, exports."""

import numpy as np
import pytest

from zdspectra.graph import (
    DEFAULT_SIZE_CAP,
    NotEquitableError,
    SizeCapExceeded,
    adjacency_matrix,
    adjacency_to_csv,
    build_bipartite,
    build_graph,
    empirical_quotient,
    expected_cell_sizes,
    to_dot,
    to_json_descriptor,
)
from zdspectra.quotient import build_p, build_q

from oracles import brute_adjacency, brute_edges, brute_vertices


# === vertex enumeration ===

def test_vertex_count_closed_form(graphs):
    for m in (2, 3, 4):
        for n in (2, 3, 4, 5):
            g = graphs(m, n)
            assert g.vertex_count == m**n - (m - 1) ** n - 1


def test_vertices_match_brute_enumeration(graphs):
    for m, n in [(2, 3), (2, 4), (3, 3), (4, 2)]:
        g = graphs(m, n)
        assert [v.coords for v in g.vertices] == brute_vertices(m, n)


def test_vertex_labels():
    g = build_graph(2, 3)
    assert g.labels() == ("001", "010", "011", "100", "101", "110")
    wide = build_graph(11, 2)
    assert "," in wide.labels()[0]


def test_support_bitmask_tracks_nonzeros(graphs):
    g = graphs(3, 3)
    for v in g.vertices:
        for i, c in enumerate(v.coords):
            assert bool(v.support & (1 << i)) == (c != 0)
        assert v.zero_count == sum(1 for c in v.coords if c == 0)


def test_build_validation():
    with pytest.raises(ValueError):
        build_graph(1, 3)
    with pytest.raises(ValueError):
        build_graph(2, 1)
    with pytest.raises(ValueError):
        build_graph(2, 64)
    with pytest.raises(ValueError):
        build_bipartite(2, 0)
    with pytest.raises(ValueError):
        build_graph(True, 3)


def test_size_cap_raises_before_enumeration():
    with pytest.raises(SizeCapExceeded) as info:
        build_graph(3, 4, size_cap=5)
    assert info.value.count == 3**4 - 2**4 - 1
    assert info.value.cap == 5
    with pytest.raises(SizeCapExceeded):
        build_bipartite(4, 6, size_cap=100)
    assert DEFAULT_SIZE_CAP == 20_000


# === adjacency ===

def test_adjacency_matches_brute_force(graphs):
    for m, n in [(2, 4), (3, 3), (2, 5)]:
        g = graphs(m, n)
        expected = np.array(brute_adjacency([v.coords for v in g.vertices]))
        assert np.array_equal(adjacency_matrix(g), expected)


def test_adjacency_shape_and_symmetry(graphs):
    a = adjacency_matrix(graphs(3, 4))
    assert a.dtype == np.int8
    assert np.array_equal(a, a.T)
    assert not a.diagonal().any()


def test_edges_match_brute_force(graphs):
    g = graphs(2, 4)
    assert set(g.edges()) == brute_edges([v.coords for v in g.vertices])
    assert g.edge_count() == len(brute_edges([v.coords for v in g.vertices]))


def test_degree_law(graphs):
    # Every vertex with i zero coordinates has m^i - 1 neighbors.
    for m, n in [(2, 4), (3, 4), (4, 3)]:
        g = graphs(m, n)
        degrees = adjacency_matrix(g).sum(axis=1)
        for v, d in zip(g.vertices, degrees):
            assert d == m**v.zero_count - 1


def test_degree_multiset_for_the_illustration(graphs):
    degrees = adjacency_matrix(graphs(2, 4)).sum(axis=1).tolist()
    multiset = {d: degrees.count(d) for d in set(degrees)}
    assert multiset == {1: 4, 3: 6, 7: 4}


# === the zero-count partition ===

def test_cell_sizes_closed_form(graphs):
    for m in (2, 3, 4):
        for n in (2, 3, 4, 5, 6):
            g = graphs(m, n)
            sizes = tuple(len(cell) for cell in g.cells)
            assert sizes == expected_cell_sizes(m, n, "full")
            b = graphs(m, n, "bipartite")
            bsizes = tuple(len(cell) for cell in b.cells)
            assert bsizes == expected_cell_sizes(m, n, "bipartite")


def test_cells_group_by_zero_count(graphs):
    g = graphs(3, 4)
    for i, cell in enumerate(g.cells, start=1):
        assert all(g.vertices[v].zero_count == i for v in cell)


def test_expected_cell_sizes_role_validation():
    with pytest.raises(ValueError):
        expected_cell_sizes(2, 4, "directed")


def test_empirical_quotient_equals_closed_form(graphs):
    for m in (2, 3):
        for n in (2, 3, 4, 5):
            assert empirical_quotient(graphs(m, n)) == build_p(m, n).entries
            assert (
                empirical_quotient(graphs(m, n, "bipartite"))
                == build_q(m, n).entries
            )


def test_empirical_quotient_with_explicit_cells(graphs):
    g = graphs(2, 4)
    cells = [list(cell) for cell in g.cells]
    assert empirical_quotient(g, cells) == build_p(2, 4).entries


def test_empirical_quotient_partition_validation(graphs):
    g = graphs(2, 3)
    with pytest.raises(ValueError):
        empirical_quotient(g, [[0, 1, 2]])
    with pytest.raises(ValueError):
        empirical_quotient(g, [[0, 1, 2, 3, 4, 5], []])
    with pytest.raises(ValueError):
        empirical_quotient(g, [[0, 0, 1, 2, 3, 4], [5]])


def test_non_equitable_partition_reports_witnesses(graphs):
    g = graphs(2, 3)
    # 001 has three neighbors, 011 has one, so a cell holding both is
    # not equitable toward the cell of everything else.
    bad = [[0, 2], [1, 3, 4, 5]]
    with pytest.raises(NotEquitableError) as info:
        empirical_quotient(g, bad)
    assert info.value.cell_i == 1
    witnesses = info.value.witnesses
    assert {w[0] for w in witnesses} == {"001", "011"}
    assert witnesses[0][1] != witnesses[1][1]


# === the two-sided subgraph ===

def test_bipartite_vertices_and_sides(graphs):
    b = graphs(2, 4, "bipartite")
    assert b.labels() == (
        "0010", "0110", "1010", "1110",
        "0001", "0101", "1001", "1101",
    )
    side_a, side_b = b.sides
    for i in side_a:
        coords = b.vertices[i].coords
        assert coords[-2] != 0 and coords[-1] == 0
    for i in side_b:
        coords = b.vertices[i].coords
        assert coords[-2] == 0 and coords[-1] != 0


def test_bipartite_count_closed_form(graphs):
    for m in (2, 3, 4):
        for n in (2, 3, 4, 5):
            b = graphs(m, n, "bipartite")
            assert b.vertex_count == 2 * (m - 1) * m ** (n - 2)
            assert len(b.sides[0]) == len(b.sides[1])


def test_bipartite_edges_cross_sides_only(graphs):
    for m, n in [(2, 4), (3, 3), (3, 4)]:
        b = graphs(m, n, "bipartite")
        side_of = {}
        for s, side in enumerate(b.sides):
            for i in side:
                side_of[i] = s
        edges = list(b.edges())
        assert edges
        assert all(side_of[i] != side_of[j] for i, j in edges)


def test_bipartite_adjacency_agrees_with_support_rule(graphs):
    b = graphs(2, 4, "bipartite")
    expected = np.array(brute_adjacency([v.coords for v in b.vertices]))
    assert np.array_equal(adjacency_matrix(b), expected)


def test_bipartite_is_induced_from_the_full_graph(graphs):
    g = graphs(3, 3)
    b = graphs(3, 3, "bipartite")
    full_edges = set(g.edges())
    index_of = {v.coords: i for i, v in enumerate(g.vertices)}
    for i, j in b.edges():
        a = index_of[b.vertices[i].coords]
        c = index_of[b.vertices[j].coords]
        assert (min(a, c), max(a, c)) in full_edges


# === exports ===

def test_dot_output_shape(graphs):
    text = to_dot(graphs(2, 3))
    assert text.startswith("graph full_m2_n3 {")
    assert text.rstrip().endswith("}")
    assert text.count("rank=same") == 2
    assert '"001" -- "010";' in text
    assert text.count(" -- ") == graphs(2, 3).edge_count()


def test_dot_name_override_and_role(graphs):
    assert to_dot(graphs(2, 4, "bipartite")).startswith("graph bipartite_m2_n4 {")
    assert to_dot(graphs(2, 3), name="custom").startswith("graph custom {")


def test_adjacency_csv_round_trip(graphs):
    g = graphs(2, 3)
    text = adjacency_to_csv(g)
    rows = [line.split(",") for line in text.strip().split("\n")]
    parsed = np.array([[int(x) for x in row] for row in rows])
    assert np.array_equal(parsed, adjacency_matrix(g))
    assert text.endswith("\n")


def test_json_descriptor(graphs):
    desc = to_json_descriptor(graphs(2, 3))
    assert desc["m"] == 2 and desc["n"] == 3
    assert desc["graph"] == "full"
    assert len(desc["vertices"]) == 6
    assert len(desc["edges"]) == 6
    assert all(i < j for i, j in desc["edges"])
