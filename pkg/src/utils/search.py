"""
Bitmask search machinery shared by the labeling searches.

PartialLabeling places labels 1, 2, ... in increasing order; every
unplaced vertex will eventually carry a label above every placed one,
which is what makes the admissible-path degree of a placed pair final as
soon as its upper endpoint is placed.
"""

from typing import Dict, List, Optional, Sequence, Set, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from src.models import Graph, Labeling


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def neighbor_masks(g: Graph) -> List[int]:
    """nbr[v] has bit w set for every neighbor w of v (index 0 unused)."""
    masks = [0] * (g.n + 1)
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


class PartialLabeling:
    """Labels 1..k placed on distinct vertices, with bitmask bookkeeping."""

    def __init__(self, g: Graph):
        self.n = g.n
        self.nbr = neighbor_masks(g)
        self.vertex_of = [0] * (g.n + 1)
        self.label_of = [0] * (g.n + 1)
        # below[i] = vertices carrying a label < i
        self.below = [0] * (g.n + 2)
        self.unplaced = sum(1 << v for v in g.vertices)
        self.placed = 0

    def place(self, v: int) -> None:
        k = self.placed + 1
        self.vertex_of[k] = v
        self.label_of[v] = k
        self.below[k + 1] = self.below[k] | (1 << v)
        self.unplaced &= ~(1 << v)
        self.placed = k

    def unplace(self) -> None:
        k = self.placed
        v = self.vertex_of[k]
        self.vertex_of[k] = 0
        self.label_of[v] = 0
        self.unplaced |= 1 << v
        self.placed = k - 1

    def candidates(self) -> List[int]:
        """Unplaced vertices, neighbors of the last placed vertex first."""
        if self.placed == 0:
            return list(_bits(self.unplaced))
        last = self.vertex_of[self.placed]
        near = self.nbr[last] & self.unplaced
        return list(_bits(near)) + list(_bits(self.unplaced & ~near))

    def longest_restricted_path(self, u: int, v: int, allowed: int, cap: int) -> int:
        """
        Vertex count of a longest induced u..v path whose interior lies in
        `allowed`; the search stops once a path of `cap` vertices is found.
        """
        nbr = self.nbr
        v_bit = 1 << v
        best = 0

        def extend(last: int, count: int, blocked: int) -> None:
            nonlocal best
            # blocked = path vertices plus neighbors of all but the last
            if best >= cap or blocked & v_bit:
                return
            if nbr[last] & v_bit:
                if count + 1 > best:
                    best = count + 1
                return
            grown = blocked | nbr[last] | (1 << last)
            for w in _bits(nbr[last] & allowed & ~blocked):
                extend(w, count + 1, grown)

        extend(u, 1, 1 << u)
        return best

    def last_pair_degree(self, cap: int) -> int:
        """
        Largest admissible-path vertex count over pairs (i, k) where k is the
        label placed last; early exit once `cap` is reached.
        """
        k = self.placed
        v = self.vertex_of[k]
        allowed_above = self.unplaced
        best = 0
        for i in range(1, k):
            u = self.vertex_of[i]
            degree = self.longest_restricted_path(u, v, self.below[i] | allowed_above, cap)
            if degree > best:
                best = degree
                if best >= cap:
                    break
        return best

    def last_weakly_closed(self) -> bool:
        """Weak closedness condition for every edge {i, k} with k the last label."""
        k = self.placed
        v = self.vertex_of[k]
        for u in _bits(self.nbr[v] & self.below[k]):
            i = self.label_of[u]
            if i >= k - 1:
                continue
            between = self.below[k] & ~self.below[i + 1]
            if between & ~(self.nbr[u] | self.nbr[v]):
                return False
        return True

    def labeling(self) -> Labeling:
        return Labeling(perm=tuple(self.label_of[1:]))


def vertex_orbits(g: Graph) -> List[Tuple[int, ...]]:
    """
    Automorphism orbits of the vertex set, each sorted, ordered by minimum.

    Weisfeiler-Lehman hashes give candidate classes; membership of a vertex
    in an orbit is confirmed by an isomorphism that maps the marked
    representative onto it.
    """
    nxg = g.to_networkx()
    hashes = nx.weisfeiler_lehman_subgraph_hashes(nxg, iterations=max(1, g.n))
    classes: Dict[Tuple[str, ...], List[int]] = {}
    for v in g.vertices:
        classes.setdefault(tuple(hashes[v]), []).append(v)

    def marked(v: int) -> nx.Graph:
        copy = nxg.copy()
        nx.set_node_attributes(copy, False, "mark")
        copy.nodes[v]["mark"] = True
        return copy

    orbits: List[Tuple[int, ...]] = []
    for members in classes.values():
        pending = list(members)
        while pending:
            rep = pending.pop(0)
            rep_graph = marked(rep)
            orbit = [rep]
            rest = []
            for v in pending:
                matcher = GraphMatcher(rep_graph, marked(v), node_match=lambda a, b: a["mark"] == b["mark"])
                (orbit if matcher.is_isomorphic() else rest).append(v)
            orbits.append(tuple(sorted(orbit)))
            pending = rest
    return sorted(orbits, key=lambda orbit: orbit[0])


def hamiltonian_path(n: int, adj: Sequence[int], starts: Optional[Sequence[int]] = None) -> Optional[List[int]]:
    """
    A Hamiltonian path of the graph given by neighbor masks, or None.

    Backtracking with a memo of failed (visited, end) states, a connectivity
    check on the unvisited part and a dead-end count.
    """
    full = sum(1 << v for v in range(1, n + 1))
    failed: Set[Tuple[int, int]] = set()

    def degree_in(v: int, mask: int) -> int:
        return bin(adj[v] & mask).count("1")

    def viable(visited: int, end: int) -> bool:
        remaining = full & ~visited
        frontier = adj[end] & remaining
        if not frontier:
            return False
        seen = frontier
        while frontier:
            grown = 0
            for w in _bits(frontier):
                grown |= adj[w]
            frontier = grown & remaining & ~seen
            seen |= frontier
        if seen != remaining:
            return False

        end_bit = 1 << end
        forced = 0
        for w in _bits(remaining):
            available = adj[w] & (remaining | end_bit)
            if available == 0:
                return False
            if (available & (available - 1)) == 0:
                # w can only be the last vertex of the path
                if available == end_bit and remaining != 1 << w:
                    return False
                forced += 1
                if forced > 1:
                    return False
        return True

    path: List[int] = []

    def extend(visited: int, end: int) -> bool:
        if visited == full:
            return True
        key = (visited, end)
        if key in failed:
            return False
        if viable(visited, end):
            remaining = full & ~visited
            for w in sorted(_bits(adj[end] & remaining), key=lambda x: (degree_in(x, remaining), x)):
                path.append(w)
                if extend(visited | (1 << w), w):
                    return True
                path.pop()
        failed.add(key)
        return False

    order = starts if starts is not None else sorted(range(1, n + 1), key=lambda v: (degree_in(v, full), v))
    for start in order:
        path[:] = [start]
        if extend(1 << start, start):
            return list(path)
    return None
