"""
Admissible paths and the reduced Gröbner basis of the binomial edge ideal J_G
under the lex order x_1 > ... > x_n > y_1 > ... > y_n.

A path i = i_0, ..., i_r = j (i < j) is admissible when its vertices are
distinct, every interior vertex lies below i or above j, and no proper
subsequence of the interior (kept in path order) closes a path from i to j.
The last condition holds exactly when the path has no chord: a chord between
positions a < b with b > a + 1 lets the sequence skip a+1..b-1, and any
skipping subsequence needs such an edge.
"""

from collections import Counter
from typing import List, Optional, Sequence, Tuple

from src.exceptions import DomainError, NotAPathError, OutOfRangeError
from src.models import AdmissiblePath, BasisStats, GroebnerElement, Graph, LabelingReport


def _check_pair(g: Graph, i: int, j: int) -> None:
    for v in (i, j):
        if not 1 <= v <= g.n:
            raise OutOfRangeError(f"vertex {v} outside 1..{g.n}")
    if not i < j:
        raise DomainError(f"admissible paths run from i to j with i < j, got i={i}, j={j}")


def is_admissible(g: Graph, seq: Sequence[int]) -> bool:
    """
    Test the three admissibility conditions for a vertex sequence.

    A sequence given from the larger endpoint is tested after reversal.

    Raises:
        NotAPathError: if some consecutive pair is not an edge of g
    """
    if len(seq) < 2:
        raise NotAPathError("a path needs at least two vertices")
    for v in seq:
        if not 1 <= v <= g.n:
            raise OutOfRangeError(f"vertex {v} outside 1..{g.n}")
    for a, b in zip(seq, seq[1:]):
        if not g.has_edge(a, b):
            raise NotAPathError(f"{{{a},{b}}} is not an edge")

    path = list(seq) if seq[0] < seq[-1] else list(reversed(seq))
    if len(set(path)) != len(path):
        return False
    i, j = path[0], path[-1]
    if any(i < v < j for v in path[1:-1]):
        return False
    for a in range(len(path)):
        for b in range(a + 2, len(path)):
            if g.has_edge(path[a], path[b]):
                return False
    return True


def enumerate_admissible(g: Graph, i: int, j: int, max_vertices: Optional[int] = None) -> List[AdmissiblePath]:
    """
    All admissible paths from i to j, in lexicographic order of their vertex sequences.

    Args:
        g: Labeled graph
        i, j: Endpoints with i < j
        max_vertices: Optional cap on path vertex count (early exit for searches)
    """
    _check_pair(g, i, j)
    cap = g.n if max_vertices is None else min(max_vertices, g.n)
    found: List[Tuple[int, ...]] = []
    path = [i]

    def extend(blocked: frozenset) -> None:
        # blocked = path vertices plus neighbors of every path vertex except the last
        if j in blocked:
            return
        last = path[-1]
        for w in g.ordered_neighbors(last):
            if w == j:
                found.append(tuple(path) + (j,))
                continue
            if w in blocked or i <= w <= j or len(path) + 2 > cap:
                continue
            path.append(w)
            extend(blocked | g.neighbors(last) | {last})
            path.pop()

    extend(frozenset([i]))
    return [AdmissiblePath(vertices=p) for p in sorted(found)]


def element_for_path(path: AdmissiblePath) -> GroebnerElement:
    """The binomial u_π f_ij of an admissible path."""
    i, j = path.i, path.j
    return GroebnerElement(
        path=path,
        x_support=tuple(sorted(k for k in path.interior if k > j)),
        y_support=tuple(sorted(k for k in path.interior if k < i)),
        edge=(i, j),
    )


def groebner_basis(g: Graph, max_vertices: Optional[int] = None) -> List[GroebnerElement]:
    """
    Reduced Gröbner basis of J_G: one element u_π f_ij per admissible path π,
    ordered by (i, j, path sequence). Every edge appears as a length-one path.
    """
    basis: List[GroebnerElement] = []
    for i in range(1, g.n + 1):
        for j in range(i + 1, g.n + 1):
            for path in enumerate_admissible(g, i, j, max_vertices):
                basis.append(element_for_path(path))
    return basis


def basis_stats(basis: Sequence[GroebnerElement]) -> BasisStats:
    """Size, maximum degree (0 when empty) and degree histogram."""
    histogram = Counter(element.degree for element in basis)
    return BasisStats(
        size=len(basis),
        max_degree=max(histogram, default=0),
        degree_histogram=dict(sorted(histogram.items())),
    )


def labeling_report(g: Graph) -> LabelingReport:
    """Basis statistics plus the admissible paths that attain the maximal degree."""
    basis = groebner_basis(g)
    stats = basis_stats(basis)
    witnesses = [element.path.vertices for element in basis if element.degree == stats.max_degree]
    return LabelingReport(
        n=g.n,
        edge_count=g.edge_count,
        stats=stats,
        excess=stats.size - g.edge_count,
        witness_paths=witnesses,
        closed=stats.max_degree <= 2,
    )


def leading_monomial(element: GroebnerElement) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """
    Leading monomial u_π x_i y_j as (x indices, y indices), each ascending.
    """
    i, j = element.edge
    return tuple(sorted(element.x_support + (i,))), tuple(sorted(element.y_support + (j,)))
