"""
Closed, weakly closed, m-closed and 3-closed-tree decisions, the cycle
labelings and the exact closure-number search.
"""

import multiprocessing as mp
from typing import List, Optional, Sequence, Tuple

import networkx as nx

from src.admissible_groebner import basis_stats, groebner_basis, labeling_report
from src.exceptions import (
    DisconnectedError,
    EmptyEdgeSetError,
    IsAPathError,
    NotATreeError,
    PreconditionFailedError,
    TooLargeError,
    TooSmallError,
)
from src.graph_core import classify, is_connected, longest_induced_cycle_length, square, unstar
from src.logger_config import mclosed_logger
from src.models import BipartiteStar, ClosureReport, Graph, Labeling, ThreeClosedResult
from src.utils import settings
from src.utils.search import PartialLabeling, hamiltonian_path, neighbor_masks, vertex_orbits


def is_closed_labeling(g: Graph) -> bool:
    """
    Closed condition for the labeling carried by g: two edges sharing their
    lower endpoint have adjacent upper endpoints, and dually.
    """
    for v in g.vertices:
        upper = sorted(w for w in g.neighbors(v) if w > v)
        lower = sorted(w for w in g.neighbors(v) if w < v)
        for side in (upper, lower):
            for a in range(len(side)):
                for b in range(a + 1, len(side)):
                    if not g.has_edge(side[a], side[b]):
                        return False
    return True


def has_interval_facets(g: Graph) -> bool:
    """True iff every maximal clique of g is an interval [a, b] of labels."""
    for clique in nx.find_cliques(g.to_networkx()):
        if max(clique) - min(clique) + 1 != len(clique):
            return False
    return True


def _require_connected_with_edges(g: Graph) -> None:
    if g.edge_count == 0:
        raise EmptyEdgeSetError("m-closedness is undefined for a graph without edges")
    if not is_connected(g):
        raise DisconnectedError("m-closedness is only defined here for connected graphs")


def m_of_labeling(g: Graph) -> int:
    """Largest degree of a reduced Gröbner basis element for the labeling carried by g."""
    _require_connected_with_edges(g)
    return basis_stats(groebner_basis(g)).max_degree


def excess_certifies_3closed(g: Graph) -> bool:
    """
    True when the basis has exactly one element beyond the edge binomials.

    A basis with an element of degree m >= 3 also has one of degree 3, so a
    single extra element has degree 3 and the labeling is a 3-closed labeling.
    """
    report = labeling_report(g)
    return report.excess == 1 and report.stats.max_degree == 3


def cycle_closure_value(length: int) -> int:
    """Closure number of the cycle with `length` >= 4 vertices."""
    return length // 2 + 1 if length % 2 == 0 else (length + 1) // 2 + 1


def cycle_lower_bound(g: Graph, max_n_guard: Optional[int] = None) -> int:
    """
    Lower bound on the closure number from the longest chordless cycle:
    an induced C_l with l >= 4 forces m >= the closure number of C_l.

    This rests on the cycle closure values, so a search stopped by it is not
    a proof of minimality.
    """
    longest = longest_induced_cycle_length(g, max_n_guard)
    return cycle_closure_value(longest) if longest >= 4 else 2


# Every reduced basis holds the edge binomials, which have degree 2
TRIVIAL_LOWER_BOUND = 2

# Shared incumbent for worker processes
_shared_bound = None


def _init_worker(shared) -> None:
    global _shared_bound
    _shared_bound = shared


class _ClosureSearch:
    """Branch-and-bound over labelings, labels placed in increasing order."""

    def __init__(self, g: Graph, incumbent: int, witness: Tuple[int, ...], lower_bound: int, shared=None):
        self.state = PartialLabeling(g)
        self.best = incumbent
        self.witness = witness
        self.lower_bound = lower_bound
        self.shared = shared
        self.nodes = 0
        self.cut_at_bound = False

    def _cap(self) -> int:
        if self.shared is not None:
            return min(self.best, self.shared.value)
        return self.best

    def _publish(self, value: int) -> None:
        if self.shared is not None:
            with self.shared.get_lock():
                if value < self.shared.value:
                    self.shared.value = value

    def run(self, first_vertices: Sequence[int]) -> None:
        for v in first_vertices:
            if self._cap() <= self.lower_bound:
                self.cut_at_bound = True
                break
            self.state.place(v)
            self._descend(0)
            self.state.unplace()

    def _descend(self, bound: int) -> None:
        self.nodes += 1
        state = self.state
        if state.placed == state.n:
            if bound < self.best:
                self.best = bound
                self.witness = tuple(state.label_of[1:])
                self._publish(bound)
            return
        for v in state.candidates():
            cap = self._cap()
            if cap <= self.lower_bound:
                self.cut_at_bound = True
                return
            state.place(v)
            degree = state.last_pair_degree(cap)
            if max(bound, degree) < cap:
                self._descend(max(bound, degree))
            state.unplace()


def _run_branch(args) -> Tuple[int, Tuple[int, ...], int, bool]:
    g, firsts, incumbent, witness, lower_bound = args
    search = _ClosureSearch(g, incumbent, witness, lower_bound, _shared_bound)
    search.run(firsts)
    return search.best, search.witness, search.nodes, search.cut_at_bound


def _first_vertices(g: Graph, prune: bool) -> List[int]:
    if not prune:
        return list(g.vertices)
    return [orbit[0] for orbit in vertex_orbits(g)]


def closure_number(g: Graph, max_n: Optional[int] = None, prune: bool = False,
                   workers: Optional[int] = None, use_cycle_bound: bool = False) -> ClosureReport:
    """
    Exact closure number by branch-and-bound over all labelings.

    After label k is placed, every pair (i, k) has its admissible paths fixed:
    interiors are labels below i or vertices still unplaced. The running
    maximum is therefore a lower bound for the branch and exact at leaves.

    Args:
        g: Connected graph with at least one edge
        max_n: Size guard (default from MCLOSED_CLOSURE_MAX_N)
        prune: Fix label 1 to one vertex per automorphism orbit
        workers: Process count; branches split by the vertex labeled 1
        use_cycle_bound: Stop once the chordless-cycle bound is reached. The
            search is then shorter but `exhaustive` is False whenever that
            stop cut off unexplored labelings. Off by default, so the cycle
            closure values can be checked against a full search.

    Raises:
        EmptyEdgeSetError, DisconnectedError, TooLargeError
    """
    guard = settings.closure_max_n() if max_n is None else max_n
    _require_connected_with_edges(g)
    if g.n > guard:
        raise TooLargeError("closure_number", g.n, guard)

    worker_count = settings.default_workers() if workers is None else workers
    lower_bound = TRIVIAL_LOWER_BOUND
    if use_cycle_bound:
        lower_bound = max(lower_bound, cycle_lower_bound(g, max_n_guard=max(guard, g.n)))
    incumbent = m_of_labeling(g)
    witness = Labeling.identity(g.n).perm
    firsts = _first_vertices(g, prune)

    nodes = 0
    cut = incumbent <= lower_bound
    if not cut:
        if worker_count > 1 and len(firsts) > 1:
            shared = mp.Value("i", incumbent)
            jobs = [(g, [v], incumbent, witness, lower_bound) for v in firsts]
            with mp.Pool(processes=worker_count, initializer=_init_worker, initargs=(shared,)) as pool:
                results = pool.map(_run_branch, jobs)
            for best, branch_witness, branch_nodes, branch_cut in results:
                nodes += branch_nodes
                cut = cut or branch_cut
                if best < incumbent:
                    incumbent, witness = best, branch_witness
        else:
            search = _ClosureSearch(g, incumbent, witness, lower_bound)
            search.run(firsts)
            incumbent, witness, nodes = search.best, search.witness, search.nodes
            cut = search.cut_at_bound

    mclosed_logger.debug(f"closure_number: n={g.n} m={incumbent} nodes={nodes} "
                         f"lower_bound={lower_bound} cut={cut} prune={prune}")
    return ClosureReport(
        m=incumbent,
        witness=Labeling(perm=witness),
        searched=nodes,
        exhaustive=not cut or lower_bound == TRIVIAL_LOWER_BOUND,
        lower_bound=lower_bound,
        cycle_bound=use_cycle_bound,
        symmetry_pruning=prune,
        max_n=guard,
    )


def cycle_labeling(n: int) -> Labeling:
    """
    Labeling of the cycle v_1 v_2 ... v_n v_1 (vertex v_i is id i) that
    attains the cycle's closure number.

    Even n: consecutive labels alternate a jump of n/2 with a step of 1.
    Odd n: v_i gets 2i - 1 for i < m and 2(i - m + 1) otherwise, m = (n+1)/2 + 1.

    Raises:
        TooSmallError: for n < 4
    """
    if n < 4:
        raise TooSmallError(f"cycle labelings are defined for n >= 4, got {n}")
    if n % 2 == 0:
        half = n // 2
        position = 1
        order = [position]
        for k in range(1, n):
            position += half if k % 2 == 1 else 1
            order.append((position - 1) % n + 1)
        return Labeling.from_vertex_order(order)

    m = cycle_closure_value(n)
    return Labeling(perm=tuple(2 * i - 1 if i < m else 2 * (i - m + 1) for i in range(1, n + 1)))


def is_weakly_closed_labeling(g: Graph) -> bool:
    """For every edge {i, j} with j > i + 1, each k in between is adjacent to i or to j."""
    for i, j in g.edges:
        for k in range(i + 1, j):
            if not (g.has_edge(i, k) or g.has_edge(k, j)):
                return False
    return True


def find_weakly_closed_labeling(g: Graph, max_n: Optional[int] = None) -> Optional[Labeling]:
    """A labeling satisfying the weakly closed condition, or None."""
    guard = settings.closure_max_n() if max_n is None else max_n
    if g.n > guard:
        raise TooLargeError("is_weakly_closed", g.n, guard)

    state = PartialLabeling(g)

    def descend() -> bool:
        if state.placed == state.n:
            return True
        for v in state.candidates():
            state.place(v)
            if state.last_weakly_closed() and descend():
                return True
            state.unplace()
        return False

    # label 1 on one vertex per automorphism orbit
    for orbit in vertex_orbits(g):
        state.place(orbit[0])
        if descend():
            return state.labeling()
        state.unplace()
    return None


def is_weakly_closed(g: Graph, max_n: Optional[int] = None) -> bool:
    """True iff some labeling of g is weakly closed."""
    return find_weakly_closed_labeling(g, max_n) is not None


def _require_tree_not_path(t: Graph) -> None:
    profile = classify(t)
    if not profile.is_tree:
        raise NotATreeError("tree_is_3closed needs a tree")
    if profile.is_path:
        raise IsAPathError("a path is 2-closed, not 3-closed")


def tree_is_3closed(t: Graph) -> ThreeClosedResult:
    """
    Decide whether a tree that is not a path is 3-closed.

    Such a tree is 3-closed iff a labeling has d(i, i+1) <= 2 for all i,
    i.e. iff the square of the tree has a Hamiltonian path; the path order
    is the witness labeling.
    """
    _require_tree_not_path(t)
    sq = square(t)
    order = hamiltonian_path(t.n, neighbor_masks(sq))
    if order is None:
        return ThreeClosedResult(answer=False)
    return ThreeClosedResult(answer=True, witness=Labeling.from_vertex_order(order))


def check_Tn_membership(h: BipartiteStar) -> bool:
    """
    Membership of a star graph in the class of 3-closed tree images:
    all edges x_i y_j have i < j, every i < n satisfies one of
    x_i y_{i+1}; x_i y_j and x_{i+1} y_j for some j > i + 1;
    x_j y_i and x_j y_{i+1} for some j < i; and there are n - 1 edges.
    """
    edges = set(h.star_edges)
    if any(i >= j for i, j in edges):
        return False
    if len(edges) != h.n - 1:
        return False
    for i in range(1, h.n):
        if (i, i + 1) in edges:
            continue
        if any((i, j) in edges and (i + 1, j) in edges for j in range(i + 2, h.n + 1)):
            continue
        if any((j, i) in edges and (j, i + 1) in edges for j in range(1, i)):
            continue
        return False
    return True


def tree_from_Tn(h: BipartiteStar) -> Graph:
    """
    The tree H_* of a member of the class; its vertex ids form a labeling
    with d(i, i+1) <= 2.

    Raises:
        PreconditionFailedError: if h is not a member
    """
    if not check_Tn_membership(h):
        raise PreconditionFailedError("star graph does not satisfy the membership conditions")
    return unstar(h)
