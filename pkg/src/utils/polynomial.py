"""
Sparse polynomials over QQ in the 2n variables x_1..x_n, y_1..y_n.

A monomial is a dense exponent tuple of length 2n (x exponents, then y
exponents), the representation sympy's polys layer uses. Under
x_1 > ... > x_n > y_1 > ... > y_n the lex order is plain tuple comparison,
which is what sympy's `lex` ordering key returns.
"""

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.monomials import monomial_div, monomial_divides, monomial_lcm, monomial_mul
from sympy.polys.orderings import lex

Monomial = Tuple[int, ...]


def variable_index(kind: str, k: int, n: int) -> int:
    """Position of x_k (kind "x") or y_k (kind "y") in an exponent tuple."""
    return k - 1 if kind == "x" else n + k - 1


def monomial_from_support(n: int, xs: Iterable[int] = (), ys: Iterable[int] = ()) -> Monomial:
    exponents = [0] * (2 * n)
    for k in xs:
        exponents[variable_index("x", k, n)] += 1
    for k in ys:
        exponents[variable_index("y", k, n)] += 1
    return tuple(exponents)


def monomial_text(m: Monomial) -> str:
    n = len(m) // 2
    factors = []
    for pos, e in enumerate(m):
        if e == 0:
            continue
        name = f"x{pos + 1}" if pos < n else f"y{pos - n + 1}"
        factors.extend([name] * e)
    return "*".join(factors) if factors else "1"


class Polynomial:
    """Immutable-by-convention map monomial -> nonzero rational coefficient."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[Dict[Monomial, object]] = None):
        self.nvars = nvars
        self.terms: Dict[Monomial, object] = {m: QQ.convert(c) for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def binomial(cls, i: int, j: int, n: int) -> "Polynomial":
        """f_ij = x_i y_j - x_j y_i."""
        return cls(2 * n, {
            monomial_from_support(n, [i], [j]): QQ(1),
            monomial_from_support(n, [j], [i]): QQ(-1),
        })

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    @property
    def LM(self) -> Monomial:
        return max(self.terms, key=lex)

    @property
    def LC(self):
        return self.terms[self.LM]

    @property
    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def sorted_terms(self) -> List[Tuple[Monomial, object]]:
        """Terms from the leading one down."""
        return sorted(self.terms.items(), key=lambda item: lex(item[0]), reverse=True)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, QQ(0)) + c
        return Polynomial(self.nvars, terms)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, QQ(0)) - c
        return Polynomial(self.nvars, terms)

    def mul_term(self, monom: Monomial, coeff) -> "Polynomial":
        return Polynomial(self.nvars, {monomial_mul(m, monom): c * coeff for m, c in self.terms.items()})

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.LC
        return Polynomial(self.nvars, {m: c / lc for m, c in self.terms.items()})

    def rem(self, divisors: Sequence["Polynomial"]) -> "Polynomial":
        """Full remainder of multivariate division by `divisors`, tried in the given order."""
        p = Polynomial(self.nvars, self.terms)
        remainder: Dict[Monomial, object] = {}
        while p:
            lm, lc = p.LM, p.LC
            for g in divisors:
                quotient = monomial_div(lm, g.LM)
                if quotient is not None:
                    p = p - g.mul_term(quotient, lc / g.LC)
                    break
            else:
                remainder[lm] = lc
                del p.terms[lm]
        return Polynomial(self.nvars, remainder)

    def is_unit_binomial(self) -> bool:
        """True for a polynomial with two terms of coefficients +1 and -1 (up to sign)."""
        return len(self.terms) == 2 and sorted(self.terms.values()) == [QQ(-1), QQ(1)]

    def to_text(self) -> str:
        parts = []
        for k, (m, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            magnitude = -c if c < 0 else c
            body = monomial_text(m)
            if magnitude != 1:
                body = f"{magnitude}*{body}"
            if k == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()})"


def spoly(p1: Polynomial, p2: Polynomial) -> Polynomial:
    """S-polynomial of two monic polynomials."""
    lcm12 = monomial_lcm(p1.LM, p2.LM)
    s1 = p1.mul_term(monomial_div(lcm12, p1.LM), QQ(1) / p1.LC)
    s2 = p2.mul_term(monomial_div(lcm12, p2.LM), QQ(1) / p2.LC)
    return s1 - s2


def lm_divides(a: Polynomial, b: Polynomial) -> bool:
    """LM(a) divides LM(b)."""
    return monomial_divides(a.LM, b.LM)
