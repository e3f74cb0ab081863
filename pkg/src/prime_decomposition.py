"""
Minimal prime components P_S(G) of binomial edge ideals.

S gives a minimal prime exactly when S is empty or every i in S satisfies
c(S \\ {i}) < c(S), with c counting components of G restricted to [n] \\ S.
"""

from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence

from src.caterpillar_labeling import decompose
from src.exceptions import DisconnectedError, OutOfRangeError, TooLargeError
from src.graph_core import components_without, is_connected
from src.logger_config import mclosed_logger
from src.models import Graph, PrimeComponent
from src.utils import settings
from src.utils.search import neighbor_masks


class ComponentCounter:
    """c(S) over bitmasks, memoized per removed set."""

    def __init__(self, g: Graph):
        self.nbr = neighbor_masks(g)
        self.full = sum(1 << v for v in g.vertices)
        self._cache: Dict[int, int] = {}

    def count(self, removed: int) -> int:
        cached = self._cache.get(removed)
        if cached is not None:
            return cached
        remaining = self.full & ~removed
        components = 0
        while remaining:
            seed = remaining & -remaining
            seen = seed
            frontier = seed
            while frontier:
                grown = 0
                bits = frontier
                while bits:
                    low = bits & -bits
                    grown |= self.nbr[low.bit_length() - 1]
                    bits ^= low
                frontier = grown & remaining & ~seen
                seen |= frontier
            remaining &= ~seen
            components += 1
        self._cache[removed] = components
        return components

    def is_minimal(self, removed: int) -> bool:
        c = self.count(removed)
        bits = removed
        while bits:
            low = bits & -bits
            if self.count(removed & ~low) >= c:
                return False
            bits ^= low
        return True


def _mask(vertices: Iterable[int]) -> int:
    return sum(1 << v for v in vertices)


def _check_subset(g: Graph, s: Sequence[int]) -> None:
    for v in s:
        if not 1 <= v <= g.n:
            raise OutOfRangeError(f"vertex {v} outside 1..{g.n}")


def prime_component(g: Graph, s: Sequence[int]) -> PrimeComponent:
    """P_S(G): the cut set plus the components of G on [n] \\ S."""
    _check_subset(g, s)
    cut = tuple(sorted(set(s)))
    return PrimeComponent(s=cut, components=tuple(components_without(g, cut)), n=g.n)


def is_minimal_prime(g: Graph, s: Sequence[int]) -> bool:
    """S = ∅, or removing any single i from S strictly lowers the component count."""
    _check_subset(g, s)
    if not is_connected(g):
        raise DisconnectedError("minimal prime test needs a connected graph")
    return ComponentCounter(g).is_minimal(_mask(set(s)))


def _sort_key(pc: PrimeComponent):
    return (len(pc.s), pc.s)


def minimal_primes(g: Graph, max_n: Optional[int] = None) -> List[PrimeComponent]:
    """
    All minimal prime components, ordered by (|S|, S).

    Degree-1 vertices never belong to a minimal S, so only the others are
    enumerated.

    Raises:
        TooLargeError, DisconnectedError
    """
    guard = settings.primes_max_n() if max_n is None else max_n
    if g.n > guard:
        raise TooLargeError("minimal_primes", g.n, guard)
    if not is_connected(g):
        raise DisconnectedError("minimal_primes needs a connected graph")

    counter = ComponentCounter(g)
    candidates = [v for v in g.vertices if g.degree(v) > 1]
    found: List[PrimeComponent] = []
    for size in range(len(candidates) + 1):
        for subset in combinations(candidates, size):
            if counter.is_minimal(_mask(subset)):
                found.append(prime_component(g, subset))
    mclosed_logger.debug(f"minimal_primes: {len(found)} minimal sets among {2 ** len(candidates)} candidates")
    return sorted(found, key=_sort_key)


def dimension_witness(g: Graph, max_n: Optional[int] = None) -> PrimeComponent:
    """A prime component attaining the Krull dimension (smallest |S| on ties)."""
    guard = settings.primes_max_n() if max_n is None else max_n
    if g.n > guard:
        raise TooLargeError("krull_dimension", g.n, guard)
    if is_connected(g):
        pool = minimal_primes(g, guard)
    else:
        pool = [prime_component(g, subset)
                for size in range(g.n + 1) for subset in combinations(g.vertices, size)]
    best = pool[0]
    for pc in pool[1:]:
        if pc.dim_contribution > best.dim_contribution:
            best = pc
    return best


def krull_dimension(g: Graph, max_n: Optional[int] = None) -> int:
    """dim R/J_G = max over S of (n - |S|) + c(S)."""
    return dimension_witness(g, max_n).dim_contribution


def caterpillar_minimal_primes(t: Graph) -> List[PrimeComponent]:
    """
    Minimal prime components of a caterpillar read off its central path.

    S ⊆ {v_2, ..., v_{l-1}} qualifies when each member of degree 2 has its
    neighbors within S (in path order) at path distance >= 2 on both sides,
    and each member of degree 3 has that on at least one side. Members of
    degree >= 4 carry no condition; a side with no neighbor in S counts as
    satisfied.

    Raises:
        NotCaterpillarError
    """
    path = decompose(t).central_path
    inner = list(range(2, len(path)))

    def qualifies(positions: Sequence[int]) -> bool:
        for k, p in enumerate(positions):
            left_ok = k == 0 or p - positions[k - 1] >= 2
            right_ok = k == len(positions) - 1 or positions[k + 1] - p >= 2
            degree = t.degree(path[p - 1])
            if degree == 2 and not (left_ok and right_ok):
                return False
            if degree == 3 and not (left_ok or right_ok):
                return False
        return True

    found = []
    for size in range(len(inner) + 1):
        for positions in combinations(inner, size):
            if qualifies(positions):
                found.append(prime_component(t, [path[p - 1] for p in positions]))
    return sorted(found, key=_sort_key)


def generator_membership(g: Graph, pc: PrimeComponent) -> bool:
    """Every edge has an endpoint in S or both endpoints in one component."""
    cut = set(pc.s)
    component_of = {v: idx for idx, comp in enumerate(pc.components) for v in comp}
    for i, j in g.edges:
        if i in cut or j in cut:
            continue
        if i not in component_of or component_of.get(i) != component_of.get(j):
            return False
    return True
