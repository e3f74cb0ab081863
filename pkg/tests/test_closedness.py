import pytest

from src import closedness
from src.closedness import (
    check_Tn_membership,
    closure_number,
    cycle_closure_value,
    cycle_labeling,
    excess_certifies_3closed,
    find_weakly_closed_labeling,
    has_interval_facets,
    is_closed_labeling,
    is_weakly_closed,
    is_weakly_closed_labeling,
    m_of_labeling,
    tree_from_Tn,
    tree_is_3closed,
)
from src.exceptions import (
    DisconnectedError,
    EmptyEdgeSetError,
    IsAPathError,
    NotATreeError,
    PreconditionFailedError,
    TooLargeError,
    TooSmallError,
)
from src.graph_core import (
    apply_labeling,
    build_graph,
    consecutive_distances,
    satisfies_distance_bound,
    star_transform,
)
from src.utils.corpus import complete_graph, cycle_graph, path_graph


class TestClosedLabelings:
    def test_paths_and_complete_graphs_are_closed(self, k3):
        assert is_closed_labeling(path_graph(5))
        assert is_closed_labeling(k3)
        assert is_closed_labeling(complete_graph(4))

    def test_natural_four_cycle_is_not_closed(self, c4):
        assert not is_closed_labeling(c4)
        assert not has_interval_facets(c4)

    def test_interval_facets(self, k3):
        assert has_interval_facets(path_graph(4))
        assert has_interval_facets(k3)
        assert not has_interval_facets(build_graph(3, [(1, 3), (2, 3)]))

    def test_m_of_labeling(self, p3, c4, ex25):
        assert m_of_labeling(p3) == 2
        assert m_of_labeling(c4) == 3
        assert m_of_labeling(ex25) == 5

    def test_m_of_labeling_needs_edges(self):
        with pytest.raises(EmptyEdgeSetError):
            m_of_labeling(build_graph(2, []))


class TestClosureNumber:
    def test_four_cycle(self, c4):
        report = closure_number(c4)
        assert report.m == 3
        assert report.exhaustive
        assert m_of_labeling(apply_labeling(c4, report.witness)) == 3

    def test_five_cycles(self, c5):
        assert closure_number(c5).m == 4
        assert closure_number(cycle_graph(5)).m == 4

    def test_path_in_bad_labeling_is_closed(self, ex25):
        report = closure_number(ex25)
        assert report.m == 2
        assert is_closed_labeling(apply_labeling(ex25, report.witness))

    def test_pruning_does_not_change_the_answer(self, ex25, remark_graph):
        for g in (ex25, remark_graph):
            assert closure_number(g, prune=True).m == closure_number(g).m

    def test_workers_agree_with_serial(self, ex25):
        parallel = closure_number(ex25, workers=2)
        assert parallel.m == 2
        assert is_closed_labeling(apply_labeling(ex25, parallel.witness))

    def test_full_search_by_default(self, c4):
        report = closure_number(c4)
        assert report.lower_bound == 2
        assert not report.cycle_bound

    @pytest.mark.parametrize("length,expected", [(6, 4), (7, 5)])
    def test_cycles_without_the_cycle_bound(self, length, expected):
        report = closure_number(cycle_graph(length), use_cycle_bound=False)
        assert report.m == expected
        assert report.exhaustive
        assert report.lower_bound == 2

    def test_cycle_bound_stop_is_not_exhaustive(self, c4):
        report = closure_number(c4, use_cycle_bound=True)
        assert report.lower_bound == 3
        assert report.m == 3
        assert report.cycle_bound
        assert not report.exhaustive

    def test_default_search_does_not_consult_cycle_values(self, monkeypatch):
        monkeypatch.setattr(closedness, "cycle_closure_value", lambda length: length - 1)
        report = closure_number(cycle_graph(6))
        assert report.m == 4
        assert report.exhaustive

        bounded = closure_number(cycle_graph(6), use_cycle_bound=True)
        assert bounded.lower_bound == 5
        assert bounded.m == 4 or not bounded.exhaustive

    def test_refuses_graph_without_edges(self):
        with pytest.raises(EmptyEdgeSetError):
            closure_number(build_graph(1, []))

    def test_refuses_disconnected_graph(self):
        with pytest.raises(DisconnectedError):
            closure_number(build_graph(4, [(1, 2), (3, 4)]))

    def test_guard(self, fig2):
        with pytest.raises(TooLargeError):
            closure_number(fig2)

    def test_guard_from_environment(self, monkeypatch, c4):
        monkeypatch.setenv("MCLOSED_CLOSURE_MAX_N", "3")
        with pytest.raises(TooLargeError):
            closure_number(c4)


class TestCycles:
    @pytest.mark.parametrize("length,expected", [(4, 3), (5, 4), (6, 4), (7, 5), (8, 5)])
    def test_closure_value(self, length, expected):
        assert cycle_closure_value(length) == expected

    @pytest.mark.parametrize("n,pattern", [
        (6, [3, 1, 3, 1, 3]),
        (8, [4, 1, 4, 1, 4, 1, 4]),
    ])
    def test_even_labeling_alternates_jump_and_step(self, n, pattern):
        labeled = apply_labeling(cycle_graph(n), cycle_labeling(n))
        assert consecutive_distances(labeled) == pattern
        assert pattern[0] == cycle_closure_value(n) - 1

    def test_small_labelings(self):
        assert cycle_labeling(4).perm == (1, 4, 2, 3)
        assert cycle_labeling(5).perm == (1, 3, 5, 2, 4)

    @pytest.mark.parametrize("n", [4, 5, 6, 7])
    def test_labeling_attains_closure_value(self, n):
        labeled = apply_labeling(cycle_graph(n), cycle_labeling(n))
        assert m_of_labeling(labeled) == cycle_closure_value(n)

    def test_too_small(self):
        with pytest.raises(TooSmallError):
            cycle_labeling(3)


class TestWeaklyClosed:
    def test_labeling_condition(self, c4, ex25):
        assert is_weakly_closed_labeling(c4)
        assert not is_weakly_closed_labeling(ex25)

    def test_search(self, ex25):
        assert is_weakly_closed(ex25)
        found = find_weakly_closed_labeling(ex25)
        assert is_weakly_closed_labeling(apply_labeling(ex25, found))

    def test_spider_is_not_weakly_closed(self, spider7):
        assert not is_weakly_closed(spider7)
        assert find_weakly_closed_labeling(spider7) is None


class TestThreeClosedTrees:
    def test_claw(self, claw):
        result = tree_is_3closed(claw)
        assert result.answer
        assert satisfies_distance_bound(apply_labeling(claw, result.witness))

    def test_caterpillar_is_3closed(self, fig2):
        result = tree_is_3closed(fig2)
        assert result.answer
        assert satisfies_distance_bound(apply_labeling(fig2, result.witness))

    def test_spider_is_not_3closed(self, fig1):
        result = tree_is_3closed(fig1)
        assert not result.answer
        assert result.witness is None

    def test_rejects_paths_and_cycles(self, c4):
        with pytest.raises(IsAPathError):
            tree_is_3closed(path_graph(4))
        with pytest.raises(NotATreeError):
            tree_is_3closed(c4)

    def test_excess_certificate(self, claw, p3, remark_graph):
        assert excess_certifies_3closed(claw)
        assert not excess_certifies_3closed(p3)
        assert not excess_certifies_3closed(remark_graph)

    def test_distance_bound_alone_is_not_enough(self, remark_graph):
        assert satisfies_distance_bound(remark_graph)
        assert m_of_labeling(remark_graph) == 4


class TestStarClass:
    def test_claw_is_a_member(self, claw):
        h = star_transform(claw)
        assert check_Tn_membership(h)
        assert tree_from_Tn(h).edges == claw.edges

    def test_cycle_is_not_a_member(self, c4):
        h = star_transform(c4)
        assert not check_Tn_membership(h)
        with pytest.raises(PreconditionFailedError):
            tree_from_Tn(h)
