"""
DRINFELD Level Arithmetic

Prime divisors and valuations of levels in F_q[T] by trial division over
monic irreducibles. Levels in this toolkit have small degree.
"""

from typing import List, Tuple

from ..algebra.poly import Poly, monic_polys
from ..core.exceptions import LevelError


def valuation(n: Poly, P: Poly) -> int:
    """Largest α with P^α | n."""
    if n.is_zero():
        raise LevelError("the zero polynomial is not a level")
    alpha = 0
    while P.divides(n):
        n = n // P
        alpha += 1
    return alpha


def factor_level(n: Poly) -> List[Tuple[Poly, int]]:
    """[(P, α)] with n = unit · Π P^α, primes in canonical order."""
    if n.is_zero():
        raise LevelError("the zero polynomial is not a level")
    out: List[Tuple[Poly, int]] = []
    rest = n.monic()
    degree = 1
    while rest.degree >= 1 and degree <= rest.degree:
        for P in monic_polys(n.field, degree):
            if not P.is_irreducible():
                continue
            alpha = 0
            while P.divides(rest):
                rest = rest // P
                alpha += 1
            if alpha:
                out.append((P, alpha))
        degree += 1
    return out


def prime_divisors(n: Poly) -> List[Poly]:
    return [P for P, _ in factor_level(n)]


def is_squarefree_level(n: Poly) -> bool:
    return all(alpha == 1 for _, alpha in factor_level(n))
