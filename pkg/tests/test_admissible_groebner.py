import pytest

from src.admissible_groebner import (
    basis_stats,
    enumerate_admissible,
    groebner_basis,
    is_admissible,
    labeling_report,
    leading_monomial,
)
from src.exceptions import DomainError, NotAPathError
from src.graph_core import build_graph
from src.utils.corpus import complete_graph, path_graph


def test_ex25_has_degree_five_and_no_degree_four(ex25):
    basis = groebner_basis(ex25)
    stats = basis_stats(basis)
    assert stats.degree_histogram == {2: 4, 3: 3, 5: 1}
    assert "x3*x4*x5*(x1*y2 - x2*y1)" in [element.to_text() for element in basis]


def test_ex25_path_is_admissible_in_both_directions(ex25):
    assert is_admissible(ex25, [1, 4, 3, 5, 2])
    assert is_admissible(ex25, [2, 5, 3, 4, 1])
    assert not is_admissible(ex25, [1, 4, 3, 5])


def test_interior_between_endpoints_is_not_admissible(c4):
    assert not is_admissible(c4, [1, 2, 3])
    assert is_admissible(c4, [1, 4, 3])


def test_chord_breaks_admissibility():
    k4 = complete_graph(4)
    assert not is_admissible(k4, [2, 1, 4, 3])


def test_non_path_sequence(c4):
    with pytest.raises(NotAPathError):
        is_admissible(c4, [1, 3])


def test_enumerate_admissible(c4):
    assert [p.vertices for p in enumerate_admissible(c4, 1, 3)] == [(1, 4, 3)]
    assert [p.vertices for p in enumerate_admissible(c4, 2, 4)] == [(2, 1, 4)]
    assert [p.vertices for p in enumerate_admissible(c4, 1, 2)] == [(1, 2)]
    with pytest.raises(DomainError):
        enumerate_admissible(c4, 3, 1)


def test_enumeration_ignores_adjacency_order(ex25, fig2):
    for g in (ex25, complete_graph(5), fig2):
        reordered = build_graph(g.n, g.edges, {v: sorted(g.neighbors(v), reverse=True) for v in g.vertices})
        for i in range(1, g.n):
            for j in range(i + 1, g.n + 1):
                assert enumerate_admissible(reordered, i, j) == enumerate_admissible(g, i, j)
        assert groebner_basis(reordered) == groebner_basis(g)


def test_max_vertices_caps_paths(ex25):
    assert enumerate_admissible(ex25, 1, 2, max_vertices=4) == []
    assert len(enumerate_admissible(ex25, 1, 2, max_vertices=5)) == 1


def test_c4_natural_basis(c4):
    texts = [element.to_text() for element in groebner_basis(c4)]
    assert len(texts) == 6
    assert "x4*(x1*y3 - x3*y1)" in texts
    assert "y1*(x2*y4 - x4*y2)" in texts


def test_closed_graphs_have_quadratic_basis(k3, p3):
    for g in (k3, p3, path_graph(6)):
        report = labeling_report(g)
        assert report.closed
        assert report.excess == 0


def test_labeling_report_witnesses(ex25):
    report = labeling_report(ex25)
    assert report.stats.max_degree == 5
    assert report.witness_paths == [(1, 4, 3, 5, 2)]
    assert report.excess == 4


def test_leading_monomial(ex25):
    element = next(e for e in groebner_basis(ex25) if e.degree == 5)
    assert leading_monomial(element) == ((1, 3, 4, 5), (2,))
