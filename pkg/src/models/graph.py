"""
Pydantic models for labeled simple graphs, labelings and the bipartite star graph G*.
Vertices are the integers 1..n; a labeling renames vertex v to perm[v-1].
"""

from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator

from src.exceptions import (
    DuplicateEdgeError,
    LoopError,
    NotBijectiveError,
    OutOfRangeError,
)


class Graph(BaseModel):
    """
    Simple undirected graph on the vertex set [n].

    `adjacency[v-1]` is the stored neighbor order of v; it is input data and
    decides which leaf is "rightmost" for the caterpillar labelings.
    """

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {
                "n": 4,
                "edges": [[1, 2], [1, 4], [2, 3], [3, 4]],
                "adjacency": [[2, 4], [1, 3], [2, 4], [1, 3]],
            }
        },
    )

    n: int = Field(..., ge=1, description="Number of vertices")
    edges: Tuple[Tuple[int, int], ...] = Field(..., description="Canonical edge list, u < v, sorted")
    adjacency: Tuple[Tuple[int, ...], ...] = Field(..., description="Ordered neighbor sequence per vertex")

    _neighbors: Tuple[FrozenSet[int], ...] = PrivateAttr()
    _edge_set: FrozenSet[Tuple[int, int]] = PrivateAttr()

    @model_validator(mode="after")
    def _check_invariants(self):
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise LoopError(f"loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise OutOfRangeError(f"edge {{{u},{v}}} has an endpoint outside 1..{self.n}")
            if u > v:
                raise ValueError(f"edge ({u},{v}) is not canonical (u < v)")
            if (u, v) in seen:
                raise DuplicateEdgeError(f"duplicate edge {{{u},{v}}}")
            seen.add((u, v))
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency must list exactly one neighbor sequence per vertex")
        for v, order in enumerate(self.adjacency, start=1):
            expected = {b if a == v else a for a, b in self.edges if v in (a, b)}
            if len(order) != len(expected) or set(order) != expected:
                raise ValueError(f"adjacency order of vertex {v} is inconsistent with the edge set")
        return self

    def model_post_init(self, __context) -> None:
        self._neighbors = tuple([frozenset()] + [frozenset(order) for order in self.adjacency])
        self._edge_set = frozenset(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self._neighbors[v]

    def ordered_neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v - 1]

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._edge_set if u < v else (v, u) in self._edge_set

    def degree(self, v: int) -> int:
        return len(self.adjacency[v - 1])

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def to_networkx(self) -> nx.Graph:
        """Fresh networkx copy (vertices 1..n, isolated vertices kept)."""
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    def induced_subgraph(self, keep: Sequence[int]) -> Tuple["Graph", Dict[int, int]]:
        """
        Induced subgraph on `keep`, renumbered 1..len(keep) in the given order.

        Returns the subgraph and the map old vertex -> new vertex.
        """
        renumber = {v: i for i, v in enumerate(keep, start=1)}
        edges = [(renumber[u], renumber[v]) for u, v in self.edges if u in renumber and v in renumber]
        order = {renumber[v]: [renumber[w] for w in self.adjacency[v - 1] if w in renumber] for v in keep}
        return Graph.from_parts(len(keep), edges, order), renumber

    def as_json(self) -> dict:
        return {
            "n": self.n,
            "edges": [list(e) for e in self.edges],
            "adjacency_order": {str(v): list(self.adjacency[v - 1]) for v in self.vertices},
        }

    @classmethod
    def from_parts(cls, n: int, edges: Sequence[Tuple[int, int]],
                   adjacency_order: Optional[Dict[int, Sequence[int]]] = None) -> "Graph":
        """Assemble a Graph from already-validated canonical parts."""
        canonical = sorted((min(u, v), max(u, v)) for u, v in edges)
        neighbor_sets: List[set] = [set() for _ in range(n + 1)]
        for u, v in canonical:
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)
        adjacency = []
        for v in range(1, n + 1):
            given = (adjacency_order or {}).get(v)
            adjacency.append(tuple(given) if given is not None else tuple(sorted(neighbor_sets[v])))
        return cls(n=n, edges=tuple(canonical), adjacency=tuple(adjacency))

    def __str__(self) -> str:
        return f"Graph(n={self.n}, edges={[list(e) for e in self.edges]})"


class Labeling(BaseModel):
    """Bijection from vertex ids 1..n to labels 1..n; perm[v-1] is the label of v."""

    model_config = ConfigDict(frozen=True)

    perm: Tuple[int, ...] = Field(..., description="perm[v-1] = label assigned to vertex v")

    @model_validator(mode="after")
    def _check_bijective(self):
        if sorted(self.perm) != list(range(1, len(self.perm) + 1)):
            raise NotBijectiveError(f"labeling {list(self.perm)} is not a permutation of 1..{len(self.perm)}")
        return self

    @property
    def n(self) -> int:
        return len(self.perm)

    def label_of(self, v: int) -> int:
        return self.perm[v - 1]

    def vertex_of(self, label: int) -> int:
        return self.perm.index(label) + 1

    def vertex_order(self) -> Tuple[int, ...]:
        """Vertices listed by increasing label."""
        order = [0] * self.n
        for v, label in enumerate(self.perm, start=1):
            order[label - 1] = v
        return tuple(order)

    def reversed(self) -> "Labeling":
        """Label i becomes n - i + 1."""
        return Labeling(perm=tuple(self.n - label + 1 for label in self.perm))

    @classmethod
    def identity(cls, n: int) -> "Labeling":
        return cls(perm=tuple(range(1, n + 1)))

    @classmethod
    def from_mapping(cls, mapping: Dict[int, int], n: int) -> "Labeling":
        """Labeling from a {vertex: label} dict covering 1..n."""
        missing = [v for v in range(1, n + 1) if v not in mapping]
        if missing:
            raise NotBijectiveError(f"labeling leaves vertices {missing} unlabeled")
        return cls(perm=tuple(mapping[v] for v in range(1, n + 1)))

    @classmethod
    def from_vertex_order(cls, order: Sequence[int]) -> "Labeling":
        """Labeling that gives label k to order[k-1]."""
        n = len(order)
        mapping = {v: k for k, v in enumerate(order, start=1)}
        if len(mapping) != n:
            raise NotBijectiveError(f"vertex order {list(order)} repeats a vertex")
        return cls.from_mapping(mapping, n)


class BipartiteStar(BaseModel):
    """
    Bipartite graph on {x_1..x_n} ⊔ {y_1..y_n} whose edges x_i y_j all have i < j.

    A pair (i, j) in `star_edges` stands for the edge x_i y_j.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, description="Number of vertices of the underlying graph")
    star_edges: Tuple[Tuple[int, int], ...] = Field(..., description="Sorted pairs (i, j) meaning x_i y_j, i < j")

    @model_validator(mode="after")
    def _check_pairs(self):
        for i, j in self.star_edges:
            if not i < j:
                raise ValueError(f"star edge x{i}y{j} violates i < j")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise OutOfRangeError(f"star edge x{i}y{j} outside 1..{self.n}")
        if len(set(self.star_edges)) != len(self.star_edges):
            raise DuplicateEdgeError("duplicate star edge")
        return self

    def as_graph(self) -> Graph:
        """Plain graph on 2n vertices: x_i is vertex i, y_j is vertex n + j."""
        return Graph.from_parts(2 * self.n, [(i, self.n + j) for i, j in self.star_edges])

    def as_text(self) -> List[str]:
        return [f"x{i}y{j}" for i, j in self.star_edges]
