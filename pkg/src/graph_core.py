"""
Graph substrate: construction, labelings, distances, components, structural
classification, the square graph, the star transform G* and induced path/cycle
searches. Every other module consumes these functions.
"""

import math
from collections import deque
from typing import Dict, List, Optional, Sequence, Tuple, Union

import networkx as nx

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
from src.models import BipartiteStar, Graph, GraphClassification, Labeling
from src.utils import settings

Distance = Union[int, float]


def build_graph(n: int, edges: Sequence[Sequence[int]],
                adjacency_order: Optional[Dict[int, Sequence[int]]] = None) -> Graph:
    """
    Build a canonical Graph on [n].

    Args:
        n: Vertex count (positive)
        edges: Unordered pairs {u, v}
        adjacency_order: Optional explicit neighbor order per vertex; vertices
            not listed keep ascending order

    Raises:
        OutOfRangeError, LoopError, DuplicateEdgeError
    """
    if n < 1:
        raise OutOfRangeError(f"vertex count must be positive, got {n}")

    seen = set()
    canonical: List[Tuple[int, int]] = []
    for pair in edges:
        if len(pair) != 2:
            raise DomainError(f"edge {list(pair)} does not have exactly two endpoints")
        u, v = int(pair[0]), int(pair[1])
        if u == v:
            raise LoopError(f"loop at vertex {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise OutOfRangeError(f"edge {{{u},{v}}} has an endpoint outside 1..{n}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {{{key[0]},{key[1]}}}")
        seen.add(key)
        canonical.append(key)

    order: Dict[int, Tuple[int, ...]] = {}
    if adjacency_order:
        neighbor_sets: Dict[int, set] = {v: set() for v in range(1, n + 1)}
        for u, v in canonical:
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)
        for raw_vertex, sequence in adjacency_order.items():
            v = int(raw_vertex)
            if not 1 <= v <= n:
                raise OutOfRangeError(f"adjacency order given for vertex {v} outside 1..{n}")
            listed = tuple(int(w) for w in sequence)
            if len(listed) != len(neighbor_sets[v]) or set(listed) != neighbor_sets[v]:
                raise DomainError(
                    f"adjacency order of vertex {v} {list(listed)} is not a permutation of its neighbors "
                    f"{sorted(neighbor_sets[v])}")
            order[v] = listed

    return Graph.from_parts(n, canonical, order)


def apply_labeling(g: Graph, lab: Labeling) -> Graph:
    """Rename every vertex v to lab(v); the stored adjacency order is transported."""
    if lab.n != g.n:
        raise NotBijectiveError(f"labeling covers {lab.n} vertices but the graph has {g.n}")
    edges = [(lab.label_of(u), lab.label_of(v)) for u, v in g.edges]
    order = {lab.label_of(v): [lab.label_of(w) for w in g.ordered_neighbors(v)] for v in g.vertices}
    return Graph.from_parts(g.n, edges, order)


def _check_vertex(g: Graph, v: int) -> None:
    if not 1 <= v <= g.n:
        raise OutOfRangeError(f"vertex {v} outside 1..{g.n}")


def bfs_distances(g: Graph, source: int) -> Dict[int, int]:
    """Edge-count distances from `source` to every reachable vertex."""
    _check_vertex(g, source)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.ordered_neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(g: Graph, u: int, v: int) -> Distance:
    """Shortest-path edge count between u and v; math.inf when disconnected."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    return bfs_distances(g, u).get(v, math.inf)


def consecutive_distances(g: Graph) -> List[Distance]:
    """[d(1,2), d(2,3), ..., d(n-1,n)] for a graph whose vertices are labels."""
    return [distance(g, i, i + 1) for i in range(1, g.n)]


def satisfies_distance_bound(g: Graph, bound: int = 2) -> bool:
    """True iff d(i, i+1) <= bound for every 1 <= i < n."""
    return all(d <= bound for d in consecutive_distances(g))


def components_without(g: Graph, s: Sequence[int] = ()) -> List[Tuple[int, ...]]:
    """
    Connected components of the subgraph induced on [n] \\ s.

    Each component is sorted and the list is ordered by minimum element, so
    len(result) is c(S).
    """
    removed = set(s)
    for v in removed:
        _check_vertex(g, v)
    nxg = g.to_networkx()
    nxg.remove_nodes_from(removed)
    components = [tuple(sorted(c)) for c in nx.connected_components(nxg)]
    return sorted(components, key=lambda comp: comp[0])


def is_connected(g: Graph) -> bool:
    return len(components_without(g)) == 1


def classify(g: Graph) -> GraphClassification:
    """Tree/path/cycle/caterpillar flags, bridge set and triangle count K_3."""
    nxg = g.to_networkx()
    connected = nx.is_connected(nxg)
    degrees = [g.degree(v) for v in g.vertices]
    is_tree = connected and g.edge_count == g.n - 1
    is_path = is_tree and max(degrees, default=0) <= 2
    is_cycle = connected and g.n >= 3 and all(d == 2 for d in degrees)

    is_caterpillar = False
    if is_tree:
        spine = [v for v in g.vertices if g.degree(v) > 1]
        if len(spine) <= 1:
            is_caterpillar = True
        else:
            spine_graph = nxg.subgraph(spine)
            spine_degrees = [d for _, d in spine_graph.degree()]
            is_caterpillar = nx.is_connected(spine_graph) and max(spine_degrees) <= 2

    bridges = sorted((min(u, v), max(u, v)) for u, v in nx.bridges(nxg))
    triangle_count = sum(nx.triangles(nxg).values()) // 3

    return GraphClassification(
        is_connected=connected,
        is_tree=is_tree,
        is_path=is_path,
        is_cycle=is_cycle,
        is_caterpillar=is_caterpillar,
        bridges=bridges,
        triangle_count=triangle_count,
    )


def square(g: Graph) -> Graph:
    """Graph on the same vertices with {u, v} an edge iff 1 <= d(u, v) <= 2."""
    edges = set()
    for u in g.vertices:
        reach = set(g.neighbors(u))
        for w in g.neighbors(u):
            reach |= g.neighbors(w)
        reach.discard(u)
        edges.update((u, v) for v in reach if u < v)
    return Graph.from_parts(g.n, sorted(edges))


def star_transform(g: Graph) -> BipartiteStar:
    """G*: one edge x_i y_j for each edge {i, j} of G with i < j."""
    return BipartiteStar(n=g.n, star_edges=tuple(g.edges))


def unstar(h: BipartiteStar) -> Graph:
    """H_*: the graph on [n] with an edge {i, j} for each x_i y_j of H."""
    return Graph.from_parts(h.n, list(h.star_edges))


def _double_sweep(g: Graph) -> Tuple[int, int]:
    """Endpoints of a longest path of a tree, smallest ids on ties."""
    first = bfs_distances(g, 1)
    far = max(first.values())
    a = min(v for v, d in first.items() if d == far)
    second = bfs_distances(g, a)
    far = max(second.values())
    b = min(v for v, d in second.items() if d == far)
    return a, b


def tree_path(g: Graph, a: int, b: int) -> List[int]:
    """The unique a..b path of a tree."""
    parent = {a: 0}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        if u == b:
            break
        for w in g.ordered_neighbors(u):
            if w not in parent:
                parent[w] = u
                queue.append(w)
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    return path[::-1]


def diameter_path(g: Graph) -> List[int]:
    """
    A longest path of a tree, found by double sweep from vertex 1.

    The path runs from its smaller-id endpoint to its larger-id endpoint.
    """
    if not classify(g).is_tree:
        raise NotATreeError("diameter_path needs a tree")
    if g.n == 1:
        return [1]
    a, b = _double_sweep(g)
    if a > b:
        a, b = b, a
    return tree_path(g, a, b)


def longest_induced_path_length(g: Graph, max_n_guard: Optional[int] = None) -> int:
    """
    Edge count of a longest induced path.

    Trees use the diameter (every tree path is induced); other graphs use an
    exponential search refused above `max_n_guard`.
    """
    guard = settings.induced_path_max_n() if max_n_guard is None else max_n_guard
    profile = classify(g)
    if profile.is_tree:
        return len(diameter_path(g)) - 1
    if g.n > guard:
        raise TooLargeError("longest_induced_path_length", g.n, guard)

    best = 0

    def extend(path: List[int], blocked: set) -> None:
        nonlocal best
        best = max(best, len(path) - 1)
        last = path[-1]
        for w in g.ordered_neighbors(last):
            if w in blocked:
                continue
            # w may touch only the last path vertex
            new_blocked = blocked | g.neighbors(last) | {last}
            path.append(w)
            extend(path, new_blocked)
            path.pop()

    for start in g.vertices:
        extend([start], {start})
    return best


def longest_induced_cycle_length(g: Graph, max_n_guard: Optional[int] = None) -> int:
    """Vertex count of a longest chordless cycle (0 for a forest)."""
    guard = settings.induced_path_max_n() if max_n_guard is None else max_n_guard
    if classify(g).is_tree or g.edge_count < 3:
        return 0
    if g.n > guard:
        raise TooLargeError("longest_induced_cycle_length", g.n, guard)

    best = 0

    def extend(start: int, path: List[int], on_path: set) -> None:
        nonlocal best
        last = path[-1]
        for w in g.ordered_neighbors(last):
            if w <= start or w in on_path:
                continue
            touches = g.neighbors(w) & on_path
            if touches == {last}:
                path.append(w)
                on_path.add(w)
                extend(start, path, on_path)
                on_path.discard(w)
                path.pop()
            elif touches == {last, start} and len(path) >= 2:
                best = max(best, len(path) + 1)

    for start in g.vertices:
        extend(start, [start], {start})
    return best


def split_at_bridge(g: Graph, e: Tuple[int, int]) -> Tuple[Graph, Dict[int, int], Graph, Dict[int, int]]:
    """
    Remove the bridge e = (u, v) and return both sides renumbered from 1.

    Returns (H1, map1, H2, map2) where H1 contains u, H2 contains v and each
    map sends an original vertex to its number in its side.
    """
    u, v = e
    if not g.has_edge(u, v):
        raise DomainError(f"{{{u},{v}}} is not an edge")
    nxg = g.to_networkx()
    nxg.remove_edge(u, v)
    side_u = sorted(nx.node_connected_component(nxg, u))
    if v in side_u:
        raise DomainError(f"{{{u},{v}}} is not a bridge")
    side_v = sorted(nx.node_connected_component(nxg, v))
    if len(side_u) + len(side_v) != g.n:
        raise DisconnectedError("split_at_bridge needs a connected graph")

    def side(vertices: List[int]) -> Tuple[Graph, Dict[int, int]]:
        renumber = {w: k for k, w in enumerate(vertices, start=1)}
        edges = [(renumber[a], renumber[b]) for a, b in g.edges
                 if a in renumber and b in renumber and {a, b} != {u, v}]
        order = {renumber[w]: [renumber[x] for x in g.ordered_neighbors(w) if x in renumber and {w, x} != {u, v}]
                 for w in vertices}
        return Graph.from_parts(len(vertices), edges, order), renumber

    h1, map1 = side(side_u)
    h2, map2 = side(side_v)
    return h1, map1, h2, map2
