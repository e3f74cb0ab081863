import random

import pytest

from src.caterpillar_labeling import decompose
from src.exceptions import TooLargeError, TooSmallError
from src.graph_core import classify
from src.utils.corpus import (
    all_labelings,
    complete_graph,
    connected_graphs,
    connected_graphs_up_to,
    cycle_graph,
    labeling_sample,
    non_path_trees_up_to,
    path_graph,
    random_caterpillar,
    random_caterpillars,
    random_central_vertex,
    star_graph,
    trees,
)


def test_named_families(claw):
    assert path_graph(4).edges == ((1, 2), (2, 3), (3, 4))
    assert cycle_graph(4).edges == ((1, 2), (1, 4), (2, 3), (3, 4))
    assert complete_graph(4).edge_count == 6
    assert star_graph(3, center=2).edges == claw.edges


def test_cycle_needs_three_vertices():
    with pytest.raises(TooSmallError):
        cycle_graph(2)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21)])
def test_connected_graph_counts(n, count):
    graphs = connected_graphs(n)
    assert len(graphs) == count
    assert all(classify(g).is_connected for g in graphs)


def test_connected_graphs_up_to():
    assert len(list(connected_graphs_up_to(4, min_n=2))) == 1 + 2 + 6


def test_atlas_limit():
    with pytest.raises(TooLargeError):
        connected_graphs(8)


@pytest.mark.parametrize("n,count", [(1, 1), (4, 2), (5, 3), (6, 6), (7, 11)])
def test_tree_counts(n, count):
    assert len(trees(n)) == count


def test_non_path_trees():
    found = list(non_path_trees_up_to(6))
    assert len(found) == 1 + 2 + 5
    assert not any(classify(t).is_path for t in found)


def test_random_caterpillars_are_seeded():
    first = random_caterpillars(7, 10)
    second = random_caterpillars(7, 10)
    assert [g.edges for g in first] == [g.edges for g in second]
    for g in first:
        assert 3 <= g.n <= 14
        assert classify(g).is_caterpillar


def test_random_central_vertex_is_on_the_central_path():
    rng = random.Random(3)
    for _ in range(20):
        t = random_caterpillar(rng, 3, 10)
        assert random_central_vertex(rng, t) in decompose(t).central_path


def test_labeling_sample_is_exhaustive_for_small_n():
    sample = labeling_sample(3, 10, random.Random(0))
    assert len(sample) == 6
    assert len({lab.perm for lab in sample}) == 6


def test_labeling_sample_draws_distinct_labelings():
    sample = labeling_sample(6, 25, random.Random(0))
    assert len({lab.perm for lab in sample}) == 25


def test_all_labelings():
    assert len(list(all_labelings(4))) == 24
    assert [lab.perm for lab in all_labelings(3, limit=2)] == [(1, 2, 3), (1, 3, 2)]
