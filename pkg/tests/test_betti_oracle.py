import pytest

from src.betti_oracle import (
    beta13_binomial_edge_ideal,
    beta13_edge_ideal,
    verify_cor37,
    verify_general_remark,
)
from src.caterpillar_labeling import algorithm1_labeling
from src.exceptions import PreconditionFailedError
from src.graph_core import apply_labeling, star_transform


def test_beta13_of_star_graphs(p3, claw, k3, c4):
    assert beta13_edge_ideal(star_transform(p3)).beta13 == 0
    assert beta13_edge_ideal(star_transform(claw)).beta13 == 1
    assert beta13_edge_ideal(star_transform(k3)).beta13 == 2
    assert beta13_edge_ideal(star_transform(c4)).beta13 == 2


def test_triangle_contributes_rank_two(k3):
    certificate = beta13_edge_ideal(k3)
    assert certificate.beta13 == 2
    assert [(c.triple, c.rank) for c in certificate.contributing_triples] == [((1, 2, 3), 2)]


def test_claw_certificate_names_its_triple(claw):
    # x2 y3 and x2 y4 share x2; as a plain graph x2 is vertex 2, y_j is vertex 4 + j
    certificate = beta13_edge_ideal(star_transform(claw))
    assert [c.triple for c in certificate.contributing_triples] == [(2, 7, 8)]


def test_binomial_edge_ideal_counts_triangles(k3, c4):
    assert beta13_binomial_edge_ideal(k3) == 2
    assert beta13_binomial_edge_ideal(c4) == 0


def test_tree_identity(p3, claw, fig3):
    assert verify_cor37(p3).equal
    identity = verify_cor37(claw)
    assert (identity.lhs, identity.rhs) == (4, 4)
    assert verify_cor37(apply_labeling(fig3, algorithm1_labeling(fig3, 3))).equal


def test_tree_identity_preconditions(c4, ex25):
    with pytest.raises(PreconditionFailedError):
        verify_cor37(c4)
    with pytest.raises(PreconditionFailedError):
        verify_cor37(ex25)


def test_general_identity(k3, c4):
    identity = verify_general_remark(k3)
    assert (identity.lhs, identity.rhs) == (3, 3)
    identity = verify_general_remark(c4)
    assert (identity.lhs, identity.rhs) == (6, 6)


def test_general_identity_needs_degree_three(ex25):
    with pytest.raises(PreconditionFailedError):
        verify_general_remark(ex25)
