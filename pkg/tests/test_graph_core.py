import math

import pytest

from src.exceptions import (
    DisconnectedError,
    DomainError,
    DuplicateEdgeError,
    LoopError,
    NotATreeError,
    NotBijectiveError,
    OutOfRangeError,
    TooLargeError,
)
from src.graph_core import (
    apply_labeling,
    build_graph,
    classify,
    components_without,
    consecutive_distances,
    diameter_path,
    distance,
    is_connected,
    longest_induced_cycle_length,
    longest_induced_path_length,
    satisfies_distance_bound,
    split_at_bridge,
    square,
    star_transform,
    unstar,
)
from src.models import Labeling
from src.utils.corpus import complete_graph, cycle_graph, path_graph


def test_build_graph_canonicalizes_edges():
    g = build_graph(4, [(2, 1), (3, 2), (4, 3), (1, 4)])
    assert g.edges == ((1, 2), (1, 4), (2, 3), (3, 4))
    assert g.ordered_neighbors(1) == (2, 4)
    assert g.degree(3) == 2


def test_build_graph_keeps_given_adjacency_order():
    g = build_graph(3, [(1, 2), (2, 3)], {2: [3, 1]})
    assert g.ordered_neighbors(2) == (3, 1)
    assert g.ordered_neighbors(1) == (2,)


@pytest.mark.parametrize("n, edges, error", [
    (3, [(1, 1)], LoopError),
    (3, [(1, 2), (2, 1)], DuplicateEdgeError),
    (3, [(1, 4)], OutOfRangeError),
    (0, [], OutOfRangeError),
])
def test_build_graph_rejects_bad_input(n, edges, error):
    with pytest.raises(error):
        build_graph(n, edges)


def test_adjacency_order_must_permute_neighbors():
    with pytest.raises(DomainError):
        build_graph(3, [(1, 2), (2, 3)], {2: [1]})


def test_apply_labeling_identity_and_transposition(p3):
    assert apply_labeling(p3, Labeling.identity(3)) == p3
    swapped = apply_labeling(p3, Labeling(perm=(1, 3, 2)))
    assert set(swapped.edges) == {(1, 3), (2, 3)}


def test_apply_labeling_size_mismatch(p3):
    with pytest.raises(NotBijectiveError):
        apply_labeling(p3, Labeling.identity(4))


def test_labeling_must_be_a_permutation():
    with pytest.raises(NotBijectiveError):
        Labeling(perm=(1, 1, 2))


def test_distances(p3):
    assert distance(p3, 1, 3) == 2
    assert distance(p3, 2, 2) == 0
    assert distance(build_graph(2, []), 1, 2) == math.inf
    with pytest.raises(OutOfRangeError):
        distance(p3, 1, 4)


def test_consecutive_distances_after_relabeling(c4):
    relabeled = apply_labeling(c4, Labeling(perm=(1, 4, 2, 3)))
    assert consecutive_distances(relabeled)[0] == 2
    assert satisfies_distance_bound(relabeled)


def test_components_without(p3, c4):
    assert components_without(p3, [2]) == [(1,), (3,)]
    assert components_without(p3, []) == [(1, 2, 3)]
    assert components_without(c4, [1, 3]) == [(2,), (4,)]
    assert is_connected(c4)
    assert not is_connected(build_graph(4, [(1, 2), (3, 4)]))


def test_classify_bundled_instances(fig1, fig2, k3, c4):
    assert classify(fig2).is_caterpillar
    profile = classify(fig1)
    assert profile.is_tree and not profile.is_caterpillar
    assert classify(k3).triangle_count == 1
    assert classify(c4).is_cycle
    assert classify(path_graph(5)).is_path
    assert classify(fig2).bridges == sorted(fig2.edges)


def test_square(p3, c4):
    assert square(p3).edges == ((1, 2), (1, 3), (2, 3))
    assert square(c4).edges == complete_graph(4).edges


def test_star_transform_round_trip(c4):
    h = star_transform(c4)
    assert h.as_text() == ["x1y2", "x1y4", "x2y3", "x3y4"]
    assert unstar(h) == c4


def test_diameter_path(fig3):
    assert diameter_path(fig3) == [1, 2, 3, 4, 5, 6, 7]
    with pytest.raises(NotATreeError):
        diameter_path(cycle_graph(4))


def test_longest_induced_path(fig1, c5):
    assert longest_induced_path_length(fig1) == 4
    assert longest_induced_path_length(c5) == 3
    assert longest_induced_path_length(complete_graph(4)) == 1


def test_longest_induced_cycle():
    assert longest_induced_cycle_length(cycle_graph(5)) == 5
    assert longest_induced_cycle_length(complete_graph(4)) == 3
    assert longest_induced_cycle_length(path_graph(4)) == 0


def test_induced_searches_respect_guard():
    with pytest.raises(TooLargeError):
        longest_induced_cycle_length(cycle_graph(8), max_n_guard=6)


def test_split_at_bridge(fig4):
    h1, map1, h2, map2 = split_at_bridge(fig4, (3, 15))
    assert (h1.n, h2.n) == (12, 11)
    assert map1[3] == 3 and map2[15] == 3
    assert h1.edge_count + h2.edge_count == fig4.edge_count - 1


def test_split_rejects_non_bridge(c4):
    with pytest.raises(DomainError):
        split_at_bridge(c4, (1, 2))
    with pytest.raises(DisconnectedError):
        split_at_bridge(build_graph(4, [(1, 2)]), (1, 2))


@pytest.mark.parametrize("n", [3, 4, 7, 10])
def test_square_of_path_has_2n_minus_3_edges(n):
    assert square(path_graph(n)).edge_count == 2 * n - 3
