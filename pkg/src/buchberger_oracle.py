"""
Desk-scale Buchberger engine over QQ under the lex order
x_1 > ... > x_n > y_1 > ... > y_n.

Used only to certify that the admissible-path basis is the reduced Gröbner
basis of J_G. Every run is bounded by a step guard.
"""

from typing import Dict, List, Optional, Sequence, Set, Tuple

from sympy.polys.monomials import monomial_lcm, monomial_mul
from sympy.polys.orderings import lex

from src.admissible_groebner import groebner_basis
from src.exceptions import DomainError, GuardExceededError, TooLargeError
from src.logger_config import mclosed_logger
from src.models import GroebnerElement, Graph
from src.utils import settings
from src.utils.polynomial import Polynomial, lm_divides, monomial_from_support, spoly

STRATEGIES = ("normal", "first")

Pair = Tuple[int, int]


def edge_generators(g: Graph) -> List[Polynomial]:
    """One binomial f_ij = x_i y_j - x_j y_i per edge {i, j}, i < j."""
    return [Polynomial.binomial(i, j, g.n) for i, j in g.edges]


def element_polynomial(element: GroebnerElement, n: int) -> Polynomial:
    """Expand u_π f_ij into a Polynomial on 2n variables."""
    i, j = element.edge
    u = monomial_from_support(n, element.x_support, element.y_support)
    return Polynomial.binomial(i, j, n).mul_term(u, 1)


def _chain_criterion(pair: Pair, basis: List[Polynomial], pending: Set[Pair]) -> bool:
    """True if some third element makes the pair redundant."""
    a, b = pair
    lcm_ab = monomial_lcm(basis[a].LM, basis[b].LM)
    for k in range(len(basis)):
        if k in (a, b):
            continue
        if (min(a, k), max(a, k)) in pending or (min(b, k), max(b, k)) in pending:
            continue
        if monomial_lcm(basis[k].LM, lcm_ab) == lcm_ab:
            return True
    return False


def _select(pending: Set[Pair], basis: List[Polynomial], strategy: str) -> Pair:
    if strategy == "normal":
        # smallest lcm of leading monomials
        return min(pending, key=lambda p: (lex(monomial_lcm(basis[p[0]].LM, basis[p[1]].LM)), p))
    return min(pending)


def _check_binomial(p: Polynomial, context: str) -> None:
    if not p.is_unit_binomial():
        mclosed_logger.warning(f"non-binomial intermediate polynomial during {context}: {p.to_text()}")


def reduced_groebner(gens: Sequence[Polynomial], step_guard: Optional[int] = None,
                     strategy: str = "normal") -> List[Polynomial]:
    """
    Reduced Gröbner basis of the ideal generated by `gens`.

    Buchberger completion with the product and chain criteria, then
    minimalization, inter-reduction and monic normalization. The result is
    sorted by leading monomial, largest first.

    Raises:
        GuardExceededError: if more than `step_guard` S-pairs are reduced
    """
    if strategy not in STRATEGIES:
        raise DomainError(f"unknown pair selection strategy {strategy!r}, expected one of {STRATEGIES}")
    guard = settings.oracle_step_guard() if step_guard is None else step_guard

    basis: List[Polynomial] = []
    for p in gens:
        if p:
            basis.append(p.monic())
    if not basis:
        return []

    pending: Set[Pair] = {(a, b) for a in range(len(basis)) for b in range(a + 1, len(basis))}
    steps = 0
    skipped = 0

    while pending:
        pair = _select(pending, basis, strategy)
        pending.discard(pair)
        a, b = pair
        lm_a, lm_b = basis[a].LM, basis[b].LM
        # coprime leading monomials
        if monomial_mul(lm_a, lm_b) == monomial_lcm(lm_a, lm_b):
            skipped += 1
            continue
        if _chain_criterion(pair, basis, pending):
            skipped += 1
            continue

        steps += 1
        if steps > guard:
            raise GuardExceededError(f"Buchberger run exceeded the step guard of {guard} S-pair reductions")

        remainder = spoly(basis[a], basis[b]).rem(basis)
        if remainder:
            remainder = remainder.monic()
            _check_binomial(remainder, "completion")
            new_index = len(basis)
            basis.append(remainder)
            pending.update((k, new_index) for k in range(new_index))

    mclosed_logger.debug(f"Buchberger: {steps} reductions, {skipped} pairs skipped by criteria, "
                         f"{len(basis)} polynomials before reduction")

    # minimal basis: drop elements whose leading monomial is divisible by another's
    minimal: List[Polynomial] = []
    for idx, p in enumerate(basis):
        dominated = any(
            lm_divides(q, p) and (q.LM != p.LM or other < idx)
            for other, q in enumerate(basis) if other != idx
        )
        if not dominated:
            minimal.append(p)

    reduced = []
    for idx, p in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        reduced_p = p.rem(others).monic()
        _check_binomial(reduced_p, "inter-reduction")
        reduced.append(reduced_p)

    return sorted(reduced, key=lambda p: lex(p.LM), reverse=True)


def is_groebner(basis: Sequence[Polynomial]) -> bool:
    """Buchberger criterion: every S-polynomial reduces to zero modulo the basis."""
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            if spoly(basis[a], basis[b]).rem(basis):
                return False
    return True


def expected_basis(g: Graph) -> List[Polynomial]:
    """The admissible-path basis expanded into polynomials."""
    return [element_polynomial(element, g.n) for element in groebner_basis(g)]


def oracle_diff(g: Graph, max_n: Optional[int] = None, step_guard: Optional[int] = None,
                strategy: str = "normal") -> Dict[str, List[str]]:
    """
    Polynomials found only by the oracle ("extra") or only by the
    admissible-path construction ("missing").
    """
    guard = settings.oracle_max_n() if max_n is None else max_n
    if g.n > guard:
        raise TooLargeError("oracle_matches", g.n, guard)
    oracle = set(reduced_groebner(edge_generators(g), step_guard, strategy))
    expected = set(expected_basis(g))
    return {
        "extra": sorted(p.to_text() for p in oracle - expected),
        "missing": sorted(p.to_text() for p in expected - oracle),
    }


def oracle_matches(g: Graph, max_n: Optional[int] = None, step_guard: Optional[int] = None,
                   strategy: str = "normal") -> bool:
    """True iff the Buchberger result equals the admissible-path basis as a set of polynomials."""
    diff = oracle_diff(g, max_n, step_guard, strategy)
    if diff["extra"] or diff["missing"]:
        mclosed_logger.debug(f"oracle mismatch on {g}: {diff}")
        return False
    return True
