from __future__ import annotations

import re

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ccattack.editmatrix import compute_matrix
from ccattack.searchgraph import (
    SINK,
    SOURCE,
    GraphError,
    build_induced_graph,
    count_shortest_paths,
    cut_set,
    disconnects,
    enumerate_shortest_paths,
    iter_shortest_paths,
    path_to_alignment,
    to_dot,
)
from ccattack.testing.oracle import brute_force_distance

LISTED = {
    "0111011011", "0111011101", "0111011110", "0111101011", "0111101101", "0111101110",
    "1011011011", "1011011101", "1011011110", "1011101011", "1011101101", "1011101110",
    "1101011011", "1101011101", "1101011110", "1101101011", "1101101101", "1101101110",
}


@pytest.fixture
def small():
    return build_induced_graph("1110110111", "1101011", 1)


def test_small_example_graph_size(small):
    assert len(small.vertices) == 24
    assert len(small.edges) == 38
    assert small.distance == 3


def test_small_example_solutions(small, backend):
    sols = enumerate_shortest_paths(small)
    assert len(sols) == 18
    assert {s.keep_mask for s in sols} == LISTED
    assert all(s.cost == 3 for s in sols)
    assert count_shortest_paths(small.matrix) == 18


def test_candidate_1111111_path_count(backend):
    m = compute_matrix("1111111010", "11110", 2)
    assert count_shortest_paths(m) == 59
    assert sum(1 for _ in iter_shortest_paths(m)) == 59


def test_path_count_matches_oracle_for_1111111():
    want = brute_force_distance("1111111010", "11110", 2).optimal_alignments
    got = enumerate_shortest_paths(build_induced_graph("1111111010", "11110", 2))
    assert {(s.keep_mask, s.noise_positions) for s in got} == {(a.keep_mask, a.noise_positions) for a in want}
    assert len(want) == 59


def test_filter_prunes_prefixes():
    m = compute_matrix("1110110111", "1101011", 1)
    only_leading_zero = lambda mask, final: mask[0] == 0  # noqa: E731
    paths = list(iter_shortest_paths(m, only_leading_zero))
    assert len(paths) == 6
    assert all(path_to_alignment(p, m.x, m.y).keep_mask.startswith("0") for p in paths)


def test_path_decoding_rejects_bad_paths(small):
    with pytest.raises(GraphError):
        path_to_alignment([SOURCE, SINK], small.x, small.y)
    path = next(iter_shortest_paths(small.matrix))
    bad = list(path)
    bad[2] = (3, 2)
    with pytest.raises(GraphError):
        path_to_alignment(bad, small.x, small.y, kmax=1)


def test_every_cut_set_disconnects(small):
    for t in range(2, small.N):
        assert disconnects(small, cut_set(small, t))
    with pytest.raises(GraphError):
        cut_set(small, 1)


def test_dropping_a_cut_edge_keeps_a_path(small):
    # Minimality is not claimed, but the first part alone is not always enough.
    assert not disconnects(small, [])


def test_dot_export(small):
    dot = to_dot(small)
    nodes = re.findall(r"^\s+(\w+) \[label=", dot, re.M)
    edges = re.findall(r"->", dot)
    assert len(nodes) == 24 and len(edges) == 38
    assert '"(1,1)"' in dot and "color=grey" in dot
    assert dot == to_dot(build_induced_graph("1110110111", "1101011", 1))


def test_dot_grey_edges_form_the_shortest_paths(small):
    grey = set(small.shortest_path_edges())
    on_paths = set()
    for path in iter_shortest_paths(small.matrix):
        for e in small.edges:
            if any(e.tail == a and e.head == b for a, b in zip(path, path[1:])):
                on_paths.add(e)
    assert grey == on_paths


def test_equal_sequences_give_a_chain():
    g = build_induced_graph("1011", "1011", 1)
    assert g.distance == 0
    assert [s.keep_mask for s in enumerate_shortest_paths(g)] == ["1111"]
    assert len(g.edges) == 5


@settings(max_examples=80, deadline=None)
@given(st.text("01", min_size=2, max_size=11), st.data())
def test_paths_equal_oracle_alignments(x, data):
    y = data.draw(st.text("01", min_size=1, max_size=len(x)))
    k = data.draw(st.integers(1, 3))
    try:
        want = brute_force_distance(x, y, k)
    except ValueError:
        return
    g = build_induced_graph(x, y, k)
    got = enumerate_shortest_paths(g)
    assert {(s.keep_mask, s.noise_positions) for s in got} == {(a.keep_mask, a.noise_positions) for a in want.optimal_alignments}
    assert count_shortest_paths(g.matrix) == len(want.optimal_alignments)
    for t in range(2, len(x)):
        assert disconnects(g, cut_set(g, t))
