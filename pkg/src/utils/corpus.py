"""
Graph corpora for property checks: named families, exhaustive small graphs
and trees from networkx, and seeded random caterpillars and labelings.

Random generators take a `random.Random` so that every corpus can be
replayed from the seed recorded in a report.
"""

import math
import random
from itertools import permutations
from typing import Iterator, List, Optional, Tuple

import networkx as nx

from src.caterpillar_labeling import decompose
from src.exceptions import TooLargeError, TooSmallError
from src.graph_core import build_graph
from src.models import Graph, Labeling

# graph_atlas_g covers every graph with at most 7 vertices
ATLAS_MAX_N = 7


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    """C_n as v_1 v_2 ... v_n v_1 with vertex v_i = i."""
    if n < 3:
        raise TooSmallError(f"a cycle needs at least 3 vertices, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def star_graph(leaves: int, center: int = 1) -> Graph:
    """K_{1,leaves} with the given center id; leaves take the remaining ids."""
    n = leaves + 1
    return build_graph(n, [(center, v) for v in range(1, n + 1) if v != center])


def from_networkx(nxg: nx.Graph) -> Graph:
    """Graph from a networkx graph, nodes renumbered 1..n in sorted order."""
    relabeled = nx.convert_node_labels_to_integers(nxg, first_label=1, ordering="sorted")
    return build_graph(relabeled.number_of_nodes(), list(relabeled.edges()))


def connected_graphs(n: int) -> List[Graph]:
    """
    Every connected graph on n vertices up to isomorphism.

    Raises:
        TooLargeError: for n above the atlas range
    """
    if n > ATLAS_MAX_N:
        raise TooLargeError("connected_graphs", n, ATLAS_MAX_N)
    return [
        from_networkx(g)
        for g in nx.graph_atlas_g()
        if g.number_of_nodes() == n and n > 0 and nx.is_connected(g)
    ]


def connected_graphs_up_to(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from connected_graphs(n)


def trees(n: int) -> List[Graph]:
    """Every tree on n vertices up to isomorphism."""
    if n == 1:
        return [build_graph(1, [])]
    return [from_networkx(t) for t in nx.nonisomorphic_trees(n)]


def non_path_trees_up_to(max_n: int) -> Iterator[Graph]:
    """Trees that are not paths; the smallest one is the star on 4 vertices."""
    for n in range(4, max_n + 1):
        for t in trees(n):
            if max(t.degree(v) for v in t.vertices) > 2:
                yield t


def random_caterpillar(rng: random.Random, min_n: int = 3, max_n: int = 14) -> Graph:
    """
    Seeded caterpillar: a spine of at least two vertices, every other vertex
    a leaf hung on a random spine vertex, ids shuffled.
    """
    n = rng.randint(min_n, max_n)
    spine = rng.randint(2, n)
    ids = list(range(1, n + 1))
    rng.shuffle(ids)
    edges = [(ids[k], ids[k + 1]) for k in range(spine - 1)]
    edges += [(ids[rng.randrange(spine)], ids[k]) for k in range(spine, n)]
    return build_graph(n, edges)


def random_caterpillars(seed: int, count: int, min_n: int = 3, max_n: int = 14) -> List[Graph]:
    rng = random.Random(seed)
    return [random_caterpillar(rng, min_n, max_n) for _ in range(count)]


def random_central_vertex(rng: random.Random, t: Graph) -> int:
    """A random vertex of the diameter path of a caterpillar."""
    return rng.choice(decompose(t).central_path)


def random_caterpillar_pair(rng: random.Random, max_n: int = 8) -> Tuple[Graph, Graph]:
    return random_caterpillar(rng, 2, max_n), random_caterpillar(rng, 2, max_n)


def labeling_sample(n: int, count: int, rng: random.Random) -> List[Labeling]:
    """All n! labelings when that is at most `count`, otherwise `count` distinct random ones."""
    if math.factorial(n) <= count:
        return [Labeling(perm=p) for p in permutations(range(1, n + 1))]
    seen = set()
    base = list(range(1, n + 1))
    while len(seen) < count:
        rng.shuffle(base)
        seen.add(tuple(base))
    return [Labeling(perm=p) for p in sorted(seen)]


def all_labelings(n: int, limit: Optional[int] = None) -> Iterator[Labeling]:
    for k, perm in enumerate(permutations(range(1, n + 1))):
        if limit is not None and k >= limit:
            return
        yield Labeling(perm=perm)
