"""
DRINFELD Goss Polynomials

Carlitz factorials, lattice exponential coefficients, and Goss polynomial
tables G_1..G_kmax built from the recurrence

    G_1 = X,   G_i = X (G_{i-1} + Σ_{s>=1} α_s G_{i-q^s}),   G_j = 0 for j <= 0.

A table can be rescaled (H_i(X) = G_i(cX)) and truncated below a given
X-degree; both are exact because the recurrence only raises X-degrees.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from ..algebra.field import FiniteField
from ..algebra.kpoly import ScalarPoly, format_x_poly
from ..algebra.poly import Poly, bracket
from ..algebra.scalar import Scalar, ScalarLike, as_scalar
from ..core.exceptions import ArithmeticDomainError, GradingError, NotIrreducibleError
from ..series.useries import USeries
from .additive import carlitz_poly

logger = logging.getLogger(__name__)

# sparse polynomial in X: degree -> coefficient
XTerms = Dict[int, Scalar]

PERIOD_LATTICE = "period"


def d_sequence(field: FiniteField, i: int) -> Poly:
    """D_0 = 1, D_i = [i] D_{i-1}^q."""
    d = Poly.one(field)
    for j in range(1, i + 1):
        d = bracket(field, j) * d.frobenius(1)
    return d


def period_alpha(field: FiniteField, depth: int) -> Tuple[Scalar, ...]:
    """α_j = 1/D_j for 0 <= j <= depth."""
    out = []
    d = Poly.one(field)
    for j in range(depth + 1):
        if j:
            d = bracket(field, j) * d.frobenius(1)
        out.append(Scalar(Poly.one(field), d))
    return tuple(out)


def torsion_alpha(P: Poly) -> Tuple[Scalar, ...]:
    """α_j = coeff(ρ_P, X^(q^j)) / P, the exponential of ker ρ_P."""
    if not P.is_monic() or not P.is_irreducible():
        raise NotIrreducibleError(f"{P} is not monic irreducible")
    rho = carlitz_poly(P)
    return tuple(Scalar(rho.coefficient(j), P) for j in range(P.degree + 1))


def lattice_tag(P: Optional[Poly]) -> str:
    return PERIOD_LATTICE if P is None else f"torsion:{P}"


@dataclass(frozen=True)
class GossTable:
    """G_1..G_kmax for one lattice, optionally rescaled and truncated."""

    lattice: str
    alpha: Tuple[Scalar, ...]
    kmax: int
    polys: Tuple[XTerms, ...]
    scale: Optional[Scalar] = None
    max_degree: Optional[int] = None

    @property
    def field(self) -> FiniteField:
        return self.alpha[0].field

    def __getitem__(self, i: int) -> XTerms:
        """G_i as {X-degree: coefficient}; G_j = 0 for j <= 0."""
        if i <= 0:
            return {}
        if i > self.kmax:
            raise IndexError(f"Goss table built up to {self.kmax}, G_{i} requested")
        return self.polys[i - 1]

    def as_poly(self, i: int) -> ScalarPoly:
        return ScalarPoly.from_sparse(self.field, self[i])

    def row(self, i: int) -> str:
        """Canonical text of G_i, e.g. 'X^4 + (1/T)X^2'."""
        return format_x_poly(self[i])


def goss_table(alpha: Sequence[ScalarLike], kmax: int, lattice: str = "custom",
               scale: Optional[ScalarLike] = None, max_degree: Optional[int] = None) -> GossTable:
    """Build the table by the recurrence; α_0 must be 1."""
    field = alpha[0].field
    alpha = tuple(as_scalar(field, a) for a in alpha)
    if not alpha[0].is_one():
        raise GradingError("the lattice exponential must have α_0 = 1")
    q = field.q
    c = Scalar.one(field) if scale is None else as_scalar(field, scale)
    # (shift q^s, c·α_s) for the s that can contribute below kmax
    shifts: List[Tuple[int, Scalar]] = []
    s = 1
    while s < len(alpha) and q ** s < kmax:
        if not alpha[s].is_zero():
            shifts.append((q ** s, c * alpha[s]))
        s += 1
    limit = max_degree if max_degree is not None else kmax + 1
    polys: List[XTerms] = []
    for i in range(1, kmax + 1):
        if i == 1:
            polys.append({1: c} if limit > 1 else {})
            continue
        acc: XTerms = {}
        _accumulate(acc, polys[i - 2], c, limit)
        for shift, coeff in shifts:
            if i - shift >= 1:
                _accumulate(acc, polys[i - shift - 1], coeff, limit)
        polys.append({m: v for m, v in acc.items() if not v.is_zero()})
    logger.debug("built Goss table %s up to %d", lattice, kmax)
    return GossTable(lattice, alpha, kmax, tuple(polys), None if scale is None else c, max_degree)


def _accumulate(acc: XTerms, poly: XTerms, coeff: Scalar, limit: int) -> None:
    """acc += coeff · X · poly, dropping X-degrees >= limit."""
    for m, v in poly.items():
        if m + 1 >= limit:
            continue
        t = v * coeff
        acc[m + 1] = acc[m + 1] + t if m + 1 in acc else t


def goss_eval(G: XTerms, s: USeries, out_prec: Optional[int] = None) -> USeries:
    """G(s) for a sparse polynomial G in X and a series s of positive order.

    The lowest power s^m0 limits the precision: prec_s + (m0 - 1)·order(s).
    """
    field = s.field
    if s.order < 1 or 0 in s.coeffs:
        raise ArithmeticDomainError("Goss polynomials are evaluated at series of positive order")
    terms = sorted((m, as_scalar(field, c)) for m, c in G.items() if m >= 1)
    if not terms:
        prec = s.prec if out_prec is None else min(out_prec, s.prec)
        return USeries.zero(field, prec, type=s.type)
    target = s.prec + (terms[0][0] - 1) * s.order
    if out_prec is not None:
        target = min(target, out_prec)
    strides: Dict[int, USeries] = {}
    power = (s ** terms[0][0]).truncate(target)
    current = terms[0][0]
    acc: XTerms = {}
    for m, c in terms:
        if m > current:
            diff = m - current
            if diff not in strides:
                strides[diff] = (s ** diff).truncate(target)
            power = (power * strides[diff]).truncate(target)
            current = m
        for i, a in power.coeffs.items():
            t = a * c
            acc[i] = acc[i] + t if i in acc else t
    return USeries(field, acc, target, type=terms[0][0] * s.type)


# Symbolic tracking of α-exponents

Monomial = Tuple[int, Tuple[int, ...]]


def symbolic_goss(field: FiniteField, depth: int, kmax: int) -> List[Dict[Monomial, int]]:
    """G_1..G_kmax with α_1..α_depth kept symbolic.

    Each entry maps (X-degree, (e_1, ..., e_depth)) to a coefficient in F_p,
    meaning coefficient · X^m · Π α_s^(e_s).
    """
    q, p = field.q, field.p
    zero = (0,) * depth
    out: List[Dict[Monomial, int]] = []
    for i in range(1, kmax + 1):
        if i == 1:
            out.append({(1, zero): 1})
            continue
        acc: Dict[Monomial, int] = {}
        for (m, e), c in out[i - 2].items():
            key = (m + 1, e)
            acc[key] = (acc.get(key, 0) + c) % p
        for s in range(1, depth + 1):
            j = i - q ** s
            if j < 1:
                break
            for (m, e), c in out[j - 1].items():
                bumped = e[: s - 1] + (e[s - 1] + 1,) + e[s:]
                key = (m + 1, bumped)
                acc[key] = (acc.get(key, 0) + c) % p
        out.append({k: c for k, c in acc.items() if c})
    return out


def isobaric_violations(field: FiniteField, table: List[Dict[Monomial, int]]) -> List[Tuple[int, Monomial]]:
    """Monomials of G_i with m + Σ e_s (q^s - 1) != i."""
    q = field.q
    bad = []
    for i, poly in enumerate(table, start=1):
        for m, e in poly:
            weight = m + sum(es * (q ** (s + 1) - 1) for s, es in enumerate(e))
            if weight != i:
                bad.append((i, (m, e)))
    return bad


def specialize(field: FiniteField, poly: Dict[Monomial, int], alpha: Sequence[Scalar]) -> XTerms:
    """Substitute numeric α values into a symbolic Goss polynomial."""
    out: XTerms = {}
    for (m, e), c in poly.items():
        value = Scalar.from_int(field, c)
        for s, es in enumerate(e, start=1):
            if es:
                value = value * alpha[s] ** es
        out[m] = out[m] + value if m in out else value
    return {m: v for m, v in out.items() if not v.is_zero()}


# Toy lattice F_q inside F_q(z), exponential z - z^q

def toy_lattice_check(field: FiniteField, k: int) -> Tuple[bool, Scalar, Scalar]:
    """Compare Σ_{λ∈F_q} (z-λ)^(-k) with G_k(1/(z - z^q)) in F_q(z).

    z is played by T. Returns (equal, lhs, rhs).
    """
    z = Poly.T(field)
    lhs = Scalar.zero(field)
    for lam in field.elements():
        lhs = lhs + Scalar(Poly.one(field), z - Poly.constant(field, lam)) ** k
    minus_one = Scalar.from_int(field, -1)
    table = goss_table((Scalar.one(field), minus_one), k, lattice="toy")
    x = Scalar(Poly.one(field), z - z.frobenius(1))
    rhs = Scalar.zero(field)
    for m, c in table[k].items():
        rhs = rhs + c * x ** m
    return lhs == rhs, lhs, rhs
