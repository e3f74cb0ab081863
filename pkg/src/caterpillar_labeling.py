"""
Constructive 3-closed labelings of caterpillar trees and of trees glued
from caterpillars.

All labelings produced here satisfy d(i, i+1) <= 2 for every i < n.
"Rightmost leaf" always means the last still-unlabeled leaf in the stored
adjacency order of its support vertex.
"""

from typing import Dict, List, Sequence, Tuple

from src.exceptions import BadEndpointsError, BadJoinError, BadStartError, NotCaterpillarError
from src.graph_core import classify, diameter_path, tree_path
from src.logger_config import mclosed_logger
from src.models import CaterpillarDecomposition, Graph, Labeling, LabelingResult

PATH_START = "path_start"
LEAF_START = "leaf_start"
ASSIGN_N = "assign_n"
VARIANTS = (PATH_START, LEAF_START, ASSIGN_N)


def _require_caterpillar(t: Graph, what: str) -> None:
    if not classify(t).is_caterpillar:
        raise NotCaterpillarError(f"{what} needs a caterpillar tree")


def _decomposition_along(t: Graph, path: Sequence[int]) -> CaterpillarDecomposition:
    on_path = set(path)
    leaves = {v: tuple(w for w in t.ordered_neighbors(v) if w not in on_path) for v in path}
    return CaterpillarDecomposition(central_path=tuple(path), leaf_neighbors=leaves)


def decompose(t: Graph) -> CaterpillarDecomposition:
    """
    Central path (diameter path from the smaller endpoint id) and the leaf
    neighbors N'(v_j) of each path vertex in stored adjacency order.

    Raises:
        NotCaterpillarError
    """
    _require_caterpillar(t, "decompose")
    decomposition = _decomposition_along(t, diameter_path(t))
    covered = len(decomposition.central_path) + sum(decomposition.leaf_counts())
    if covered != t.n:
        raise NotCaterpillarError("some vertex is neither on the central path nor adjacent to it")
    return decomposition


class _Labeler:
    """Label counter over a decomposition, consuming leaves right to left."""

    def __init__(self, decomposition: CaterpillarDecomposition, first_label: int = 1):
        self.path = (0,) + decomposition.central_path  # 1-based
        self.remaining: Dict[int, List[int]] = {v: list(ls) for v, ls in decomposition.leaf_neighbors.items()}
        self.labels: Dict[int, int] = {}
        self.t = first_label

    def label(self, v: int) -> None:
        self.labels[v] = self.t
        self.t += 1

    def label_path(self, j: int) -> None:
        self.label(self.path[j])

    def label_leaves(self, j: int) -> None:
        leaves = self.remaining[self.path[j]]
        while leaves:
            self.label(leaves.pop())


def _sweep(decomposition: CaterpillarDecomposition) -> Dict[int, int]:
    labeler = _Labeler(decomposition)
    labeler.label_path(1)
    for j in range(2, decomposition.length + 1):
        labeler.label_path(j)
        labeler.label_leaves(j)
    return labeler.labels


def sweep_labeling(t: Graph) -> Labeling:
    """v_1 gets 1; then each v_j for j = 2..l followed by its leaves, rightmost first."""
    return Labeling.from_mapping(_sweep(decompose(t)), t.n)


def _reversed_decomposition(decomposition: CaterpillarDecomposition) -> CaterpillarDecomposition:
    return CaterpillarDecomposition(
        central_path=tuple(reversed(decomposition.central_path)),
        leaf_neighbors=decomposition.leaf_neighbors,
    )


def _algorithm1_sweeps(labeler: _Labeler, i0: int, length: int) -> None:
    """Forward pass from v_{i0}, return pass to v_1, then the middle segment."""
    ell = length
    j = i0

    while j < ell - 1:
        labeler.label_leaves(j + 1)
        labeler.label_path(j + 2)
        j += 2

    if j == ell - 1:
        labeler.label_path(ell)
        j = ell
    else:
        labeler.label_path(ell - 1)
        j = ell - 1

    while j > 2:
        labeler.label_leaves(j - 1)
        labeler.label_path(j - 2)
        j -= 2

    if j == 2 and i0 > 1:
        labeler.label_path(1)
        j = 1
    elif i0 > 2:
        labeler.label_path(2)
        j = 2

    while j < i0 - 2:
        labeler.label_leaves(j + 1)
        labeler.label_path(j + 2)
        j += 2

    if j == i0 - 2:
        labeler.label_leaves(i0 - 1)


def _leaf_support(decomposition: CaterpillarDecomposition, v: int) -> int:
    """1-based path position of the vertex that v hangs from, 0 if none."""
    for position, w in enumerate(decomposition.central_path, start=1):
        if v in decomposition.leaf_neighbors[w]:
            return position
    return 0


def algorithm1_result(t: Graph, start: int, variant: str = PATH_START) -> LabelingResult:
    """
    alg1 labeling (forward pass, return pass, middle segment) with the notes gathered on the way.

    path_start: start on the central path gets 1. leaf_start: a leaf of an
    inner path vertex gets 1 and its support 2. assign_n: any vertex gets n.

    Raises:
        NotCaterpillarError, BadStartError
    """
    if variant not in VARIANTS:
        raise BadStartError(f"unknown variant {variant!r}, expected one of {VARIANTS}")
    if not 1 <= start <= t.n:
        raise BadStartError(f"start vertex {start} outside 1..{t.n}")

    decomposition = decompose(t)
    path = decomposition.central_path
    ell = decomposition.length
    notes: List[str] = []

    if variant == ASSIGN_N:
        inner_variant = PATH_START if start in path else LEAF_START
        inner = algorithm1_result(t, start, inner_variant)
        notes.extend(inner.notes)
        notes.append(f"labels reversed (i -> {t.n} - i + 1) so that vertex {start} gets {t.n}")
        return LabelingResult(labeling=inner.labeling.reversed(), notes=notes)

    if variant == PATH_START:
        if start not in path:
            raise BadStartError(f"vertex {start} is not on the central path {list(path)}")
        i0 = path.index(start) + 1
        if i0 == 1 or i0 == ell:
            notes.append(f"start is a central-path endpoint; forward sweep from vertex {start}")
            sweep_from = decomposition if i0 == 1 else _reversed_decomposition(decomposition)
            return LabelingResult(labeling=Labeling.from_mapping(_sweep(sweep_from), t.n), notes=notes)
        labeler = _Labeler(decomposition)
        labeler.label_path(i0)
        _algorithm1_sweeps(labeler, i0, ell)
        return LabelingResult(labeling=Labeling.from_mapping(labeler.labels, t.n), notes=notes)

    # leaf_start
    if start in (path[0], path[-1]):
        notes.append(f"leaf {start} is a central-path endpoint; central path re-rooted at it (forward sweep)")
        sweep_from = decomposition if start == path[0] else _reversed_decomposition(decomposition)
        return LabelingResult(labeling=Labeling.from_mapping(_sweep(sweep_from), t.n), notes=notes)
    i0 = _leaf_support(decomposition, start)
    if i0 == 0:
        raise BadStartError(f"vertex {start} is not a leaf neighbor of the central path")
    if not 1 < i0 < ell:
        raise BadStartError(f"leaf {start} hangs from path position {i0}; leaf_start needs 1 < i0 < {ell}")
    labeler = _Labeler(decomposition)
    labeler.label(start)
    labeler.remaining[path[i0 - 1]].remove(start)
    labeler.label_path(i0)
    _algorithm1_sweeps(labeler, i0, ell)
    return LabelingResult(labeling=Labeling.from_mapping(labeler.labels, t.n), notes=notes)


def algorithm1_labeling(t: Graph, start: int, variant: str = PATH_START) -> Labeling:
    """alg1 labeling of a caterpillar (see algorithm1_result)."""
    return algorithm1_result(t, start, variant).labeling


def _join_graphs(h1: Graph, h2: Graph, e: Tuple[int, int]) -> Graph:
    """h1 keeps its ids, h2 is shifted by h1.n, e = (u in h1, v in h2) becomes an edge."""
    u, v = e
    shift = h1.n
    edges = list(h1.edges) + [(a + shift, b + shift) for a, b in h2.edges] + [(u, v + shift)]
    order: Dict[int, List[int]] = {w: list(h1.ordered_neighbors(w)) for w in h1.vertices}
    for w in h2.vertices:
        order[w + shift] = [x + shift for x in h2.ordered_neighbors(w)]
    order[u].append(v + shift)
    order[v + shift].append(u)
    return Graph.from_parts(h1.n + h2.n, edges, order)


def bridge_compose(h1: Graph, lab1: Labeling, h2: Graph, lab2: Labeling,
                   e: Tuple[int, int]) -> Tuple[Graph, Labeling]:
    """
    Join h1 and h2 by the bridge e = (u, v), u in h1 and v in h2.

    Vertex ids of h2 are shifted by n1 = |h1|. A vertex of h1 with label i
    gets n1 - i + 1 and a vertex of h2 with label i gets n1 + i, so the
    bridge becomes {n1, n1 + 1}.

    Raises:
        BadEndpointsError: if u or v does not carry label 1
    """
    u, v = e
    if not (1 <= u <= h1.n and 1 <= v <= h2.n):
        raise BadEndpointsError(f"bridge {e} does not join a vertex of h1 to a vertex of h2")
    if lab1.n != h1.n or lab2.n != h2.n:
        raise BadEndpointsError("labelings do not match their graphs")
    if lab1.label_of(u) != 1 or lab2.label_of(v) != 1:
        raise BadEndpointsError(
            f"bridge endpoints must carry label 1, got {lab1.label_of(u)} and {lab2.label_of(v)}")

    n1 = h1.n
    perm = tuple(n1 - label + 1 for label in lab1.perm) + tuple(n1 + label for label in lab2.perm)
    return _join_graphs(h1, h2, e), Labeling(perm=perm)


def _covers(t: Graph, path: Sequence[int]) -> bool:
    on_path = set(path)
    return all(v in on_path or t.neighbors(v) & on_path for v in t.vertices)


def compose_T1_B_T2(t1: Graph, b: Graph, t2: Graph,
                    joins: Tuple[Tuple[int, int], Tuple[int, int]]) -> Tuple[Graph, Labeling]:
    """
    Glue caterpillars t1, b, t2 into one tree and label it.

    joins = ((x1, a), (x2, z)): vertex x1 of t1 is identified with vertex a
    of b, and vertex x2 of t2 with vertex z of b, where a..z is a central
    path of b. Global ids: t1 keeps 1..n1, then the other vertices of b in
    ascending order, then the other vertices of t2.

    t1 is labeled 1..n1 with n1 at its junction, b continues with a sweep
    from the junction, t2 continues with alg1 from its junction.

    Raises:
        NotCaterpillarError, BadJoinError
    """
    for piece, name in ((t1, "t1"), (b, "b"), (t2, "t2")):
        _require_caterpillar(piece, f"compose_T1_B_T2 ({name})")
    (x1, a), (x2, z) = joins
    if not (1 <= x1 <= t1.n and 1 <= x2 <= t2.n and 1 <= a <= b.n and 1 <= z <= b.n) or a == z:
        raise BadJoinError(f"joins {joins} do not name distinct vertices of b attached to t1 and t2")
    b_path = tree_path(b, a, z)
    if not _covers(b, b_path):
        raise BadJoinError(f"b has no central path from {a} to {z}")

    # global ids
    b_ids: Dict[int, int] = {a: x1}
    for y in (y for y in b.vertices if y != a):
        b_ids[y] = t1.n + len(b_ids)
    t2_ids: Dict[int, int] = {x2: b_ids[z]}
    offset = t1.n + b.n - 1
    for w in (w for w in t2.vertices if w != x2):
        t2_ids[w] = offset + len(t2_ids)
    total = t1.n + b.n + t2.n - 2

    edges = list(t1.edges)
    edges += [(b_ids[p], b_ids[q]) for p, q in b.edges]
    edges += [(t2_ids[p], t2_ids[q]) for p, q in t2.edges]
    order: Dict[int, List[int]] = {v: list(t1.ordered_neighbors(v)) for v in t1.vertices}
    for y in b.vertices:
        order.setdefault(b_ids[y], []).extend(b_ids[q] for q in b.ordered_neighbors(y))
    for w in t2.vertices:
        order.setdefault(t2_ids[w], []).extend(t2_ids[q] for q in t2.ordered_neighbors(w))
    combined = Graph.from_parts(total, edges, order)

    t1_part = set(t1.vertices)
    b_part = set(b_ids.values())
    t2_part = set(t2_ids.values())
    b_route = [b_ids[y] for y in b_path]
    junction1, junction2 = x1, b_ids[z]

    # a junction off the central path moves its pendant edge into b
    if t1.n > 1 and x1 not in decompose(t1).central_path:
        (w,) = t1.neighbors(x1)
        t1_part.discard(x1)
        b_part.add(w)
        b_route.insert(0, w)
        junction1 = w
        mclosed_logger.debug(f"junction {x1} is off the central path of t1; edge {{{w},{x1}}} moved into b")
    if t2.n > 1 and x2 not in decompose(t2).central_path:
        (w,) = t2.neighbors(x2)
        w_global = t2_ids[w]
        t2_part.discard(junction2)
        b_part.add(w_global)
        b_route.append(w_global)
        junction2 = w_global
        mclosed_logger.debug(f"junction {x2} is off the central path of t2; edge {{{w},{x2}}} moved into b")

    labels: Dict[int, int] = {}

    piece1, map1 = combined.induced_subgraph(sorted(t1_part))
    lab1 = algorithm1_labeling(piece1, map1[junction1], ASSIGN_N) if piece1.n > 1 else Labeling.identity(1)
    for v, local in map1.items():
        labels[v] = lab1.label_of(local)
    n1 = piece1.n

    piece_b, map_b = combined.induced_subgraph(sorted(b_part))
    local_route = [map_b[v] for v in b_route]
    if not _covers(piece_b, local_route):
        raise BadJoinError("junction path does not cover b")
    route_set = set(local_route)
    for end in (local_route[0], local_route[-1]):
        if not piece_b.neighbors(end) <= route_set:
            raise BadJoinError(f"junction {end} of b carries leaves off the junction path")
    sweep_b = _sweep(_decomposition_along(piece_b, local_route))
    for v, local in map_b.items():
        labels[v] = n1 + sweep_b[local] - 1
    n2 = n1 + piece_b.n - 1

    piece2, map2 = combined.induced_subgraph(sorted(t2_part))
    if piece2.n > 1:
        start = map2[junction2]
        variant = PATH_START if start in decompose(piece2).central_path else LEAF_START
        lab2 = algorithm1_labeling(piece2, start, variant)
    else:
        lab2 = Labeling.identity(1)
    for v, local in map2.items():
        labels[v] = n2 + lab2.label_of(local) - 1

    return combined, Labeling.from_mapping(labels, total)
