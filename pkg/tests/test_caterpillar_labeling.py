import pytest

from src.caterpillar_labeling import (
    ASSIGN_N,
    LEAF_START,
    PATH_START,
    algorithm1_labeling,
    algorithm1_result,
    bridge_compose,
    compose_T1_B_T2,
    decompose,
    sweep_labeling,
)
from src.exceptions import BadEndpointsError, BadJoinError, BadStartError, NotCaterpillarError
from src.graph_core import apply_labeling, classify, satisfies_distance_bound, split_at_bridge
from src.models import Labeling
from src.utils.corpus import path_graph, star_graph
from src.verification import FIG3_LABELS, FIG4_LABELS


def test_decompose_fig3(fig3):
    d = decompose(fig3)
    assert d.central_path == (1, 2, 3, 4, 5, 6, 7)
    assert d.leaves_at(3) == (8, 9, 10)
    assert d.leaves_at(4) == (11,)
    assert d.leaves_at(6) == (12,)
    assert d.leaf_counts() == (0, 0, 3, 1, 0, 1, 0)


def test_decompose_rejects_non_caterpillar(spider7):
    with pytest.raises(NotCaterpillarError):
        decompose(spider7)


def test_sweep_takes_rightmost_leaf_first(fig3):
    assert sweep_labeling(fig3).perm == (1, 2, 3, 7, 9, 10, 12, 6, 5, 4, 8, 11)


def test_algorithm1_on_fig3(fig3):
    labeling = algorithm1_labeling(fig3, 3)
    assert labeling.perm == FIG3_LABELS
    assert labeling.label_of(3) == 1
    assert satisfies_distance_bound(apply_labeling(fig3, labeling))


@pytest.mark.parametrize("start", [2, 3, 4, 5, 6])
def test_algorithm1_from_inner_path_vertices(fig2, start):
    labeling = algorithm1_labeling(fig2, start)
    assert labeling.label_of(start) == 1
    assert satisfies_distance_bound(apply_labeling(fig2, labeling))


def test_path_endpoint_falls_back_to_sweep(fig3):
    result = algorithm1_result(fig3, 7)
    assert result.labeling.label_of(7) == 1
    assert result.notes
    assert satisfies_distance_bound(apply_labeling(fig3, result.labeling))


def test_leaf_start(fig3):
    labeling = algorithm1_labeling(fig3, 8, LEAF_START)
    assert labeling.label_of(8) == 1
    assert labeling.label_of(3) == 2
    assert satisfies_distance_bound(apply_labeling(fig3, labeling))


def test_leaf_start_at_path_endpoint_reroots(fig3):
    result = algorithm1_result(fig3, 1, LEAF_START)
    assert result.labeling == sweep_labeling(fig3)
    assert "re-rooted" in result.notes[0]


def test_assign_n(fig3):
    for start in (3, 12):
        result = algorithm1_result(fig3, start, ASSIGN_N)
        assert result.labeling.label_of(start) == fig3.n
        assert satisfies_distance_bound(apply_labeling(fig3, result.labeling))
        assert result.notes


def test_assign_n_reversal_is_an_involution(fig3):
    inner = algorithm1_labeling(fig3, 3)
    reversed_once = algorithm1_labeling(fig3, 3, ASSIGN_N)
    assert reversed_once == inner.reversed()
    assert reversed_once.reversed() == inner


@pytest.mark.parametrize("start,variant", [
    (8, PATH_START),
    (4, LEAF_START),
    (13, PATH_START),
    (3, "middle_start"),
])
def test_bad_starts(fig3, start, variant):
    with pytest.raises(BadStartError):
        algorithm1_labeling(fig3, start, variant)


def test_bridge_compose_rebuilds_fig4(fig4):
    h1, map1, h2, map2 = split_at_bridge(fig4, (3, 15))
    u, v = map1[3], map2[15]
    lab1 = algorithm1_labeling(h1, u)
    lab2 = algorithm1_labeling(h2, v)
    joined, labeling = bridge_compose(h1, lab1, h2, lab2, (u, v))
    assert joined.edges == fig4.edges
    assert labeling.perm == FIG4_LABELS
    assert labeling.label_of(3) == 12
    assert labeling.label_of(15) == 13
    assert satisfies_distance_bound(apply_labeling(joined, labeling))


def test_bridge_endpoints_must_carry_label_one(p3):
    identity = Labeling.identity(3)
    with pytest.raises(BadEndpointsError):
        bridge_compose(p3, identity, p3, identity, (2, 1))
    with pytest.raises(BadEndpointsError):
        bridge_compose(p3, identity, p3, identity, (1, 4))


def test_compose_three_paths_gives_identity():
    p3 = path_graph(3)
    tree, labeling = compose_T1_B_T2(p3, p3, p3, ((3, 1), (1, 3)))
    assert tree.edges == path_graph(7).edges
    assert labeling == Labeling.identity(7)


def test_compose_stars_around_a_path():
    claw = star_graph(3)
    tree, labeling = compose_T1_B_T2(claw, path_graph(3), claw, ((2, 1), (2, 3)))
    assert tree.n == 9
    assert classify(tree).is_tree
    assert satisfies_distance_bound(apply_labeling(tree, labeling))


def test_compose_rejects_degenerate_join(p3):
    with pytest.raises(BadJoinError):
        compose_T1_B_T2(p3, p3, p3, ((3, 2), (1, 2)))
