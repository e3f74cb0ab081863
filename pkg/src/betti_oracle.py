"""
β_{1,3} of edge ideals by counting over 3-vertex subsets, and the basis
size identities that use it.

For a 3-subset W the contribution is the number of components of the
independence complex on W minus one: 1 when W induces exactly two edges,
2 when W induces a triangle, 0 otherwise.
"""

from typing import Set, Tuple, Union

import networkx as nx

from src.admissible_groebner import basis_stats, groebner_basis
from src.exceptions import PreconditionFailedError
from src.graph_core import classify, satisfies_distance_bound, star_transform
from src.models import BettiCertificate, BipartiteStar, Graph, IdentityCheck, TripleContribution


def _triples_with_two_edges(g: Graph) -> Set[Tuple[int, int, int]]:
    """Every 3-subset inducing at least two edges contains a vertex adjacent to the other two."""
    triples = set()
    for v in g.vertices:
        neighbors = sorted(g.neighbors(v))
        for a in range(len(neighbors)):
            for b in range(a + 1, len(neighbors)):
                triples.add(tuple(sorted((v, neighbors[a], neighbors[b]))))
    return triples


def _independence_rank(nxg: nx.Graph, triple: Tuple[int, int, int]) -> int:
    induced = nxg.subgraph(triple)
    return nx.number_connected_components(nx.complement(induced)) - 1


def beta13_edge_ideal(h: Union[Graph, BipartiteStar]) -> BettiCertificate:
    """β_{1,3} of the edge ideal I(h) with its contributing triples."""
    g = h.as_graph() if isinstance(h, BipartiteStar) else h
    nxg = g.to_networkx()
    contributions = []
    for triple in sorted(_triples_with_two_edges(g)):
        rank = _independence_rank(nxg, triple)
        if rank > 0:
            contributions.append(TripleContribution(triple=triple, rank=rank))
    return BettiCertificate(
        beta13=sum(c.rank for c in contributions),
        contributing_triples=contributions,
    )


def beta13_binomial_edge_ideal(g: Graph) -> int:
    """β_{1,3}(J_G) = 2 K_3(G)."""
    return 2 * classify(g).triangle_count


def verify_cor37(t: Graph) -> IdentityCheck:
    """
    |basis| = n - 1 + β_{1,3}(I(T*)) for a tree labeled with d(i, i+1) <= 2.

    Raises:
        PreconditionFailedError: if t is not a tree or violates the distance bound
    """
    if not classify(t).is_tree:
        raise PreconditionFailedError("basis size identity for trees needs a tree")
    if not satisfies_distance_bound(t):
        raise PreconditionFailedError("labeling violates d(i, i+1) <= 2")
    lhs = len(groebner_basis(t))
    rhs = t.n - 1 + beta13_edge_ideal(star_transform(t)).beta13
    return IdentityCheck(lhs=lhs, rhs=rhs, equal=lhs == rhs)


def verify_general_remark(g: Graph) -> IdentityCheck:
    """
    |basis| = |E| + β_{1,3}(I(G*)) - 2 K_3(G) for a labeling with all basis degrees <= 3.

    Raises:
        PreconditionFailedError: if some basis element has degree above 3
    """
    basis = groebner_basis(g)
    if basis_stats(basis).max_degree > 3:
        raise PreconditionFailedError("labeling is not 3-closed: a basis element has degree above 3")
    lhs = len(basis)
    rhs = g.edge_count + beta13_edge_ideal(star_transform(g)).beta13 - beta13_binomial_edge_ideal(g)
    return IdentityCheck(lhs=lhs, rhs=rhs, equal=lhs == rhs)
