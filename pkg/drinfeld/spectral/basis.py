"""
DRINFELD Monomial Bases

Bases of M_{k,l}(GL_2(A)) and S_{k,l}(GL_2(A)) by the monomials
g_1^a Δ^b h^l with a(q-1) + b(q^2-1) + l(q+1) = k. The u-order of a
monomial is b(q-1) + l and its lowest coefficient is (-1)^(b+l), so a
series in the span is decomposed by back substitution on increasing
orders.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from ..algebra.field import FiniteField
from ..algebra.scalar import Scalar
from ..core.exceptions import GradingError, SpanError
from ..forms.generators import FormFactory, GeneratorId, get_factory
from ..series.useries import USeries

logger = logging.getLogger(__name__)

Exponents = Tuple[int, int]


def dimension_formula(q: int, k: int, l: int) -> int:
    """⌊(k - l(q+1))/(q^2-1)⌋ + 1 when M_{k,l} is nonzero, else 0."""
    rest = k - l * (q + 1)
    if rest < 0 or (k - 2 * l) % (q - 1):
        return 0
    return rest // (q * q - 1) + 1


def monomial_label(a: int, b: int, l: int) -> str:
    parts = []
    for name, e in (("g1", a), ("Delta", b), ("h", l)):
        if e:
            parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class MonomialBasis:
    """Exponent pairs (a, b) of g_1^a Δ^b h^l, sorted by u-order."""

    q: int
    k: int
    l: int
    cusp: bool
    exponents: Tuple[Exponents, ...]

    @property
    def dimension(self) -> int:
        return len(self.exponents)

    @property
    def orders(self) -> Tuple[int, ...]:
        return tuple(b * (self.q - 1) + self.l for _, b in self.exponents)

    @property
    def max_order(self) -> int:
        return max(self.orders, default=0)

    def leading(self, i: int) -> int:
        """Lowest coefficient (-1)^(b+l) of the i-th monomial."""
        _, b = self.exponents[i]
        return -1 if (b + self.l) % 2 else 1

    def labels(self) -> List[str]:
        return [monomial_label(a, b, self.l) for a, b in self.exponents]

    def series(self, field: FiniteField, prec: int, factory: Optional[FormFactory] = None) -> List[USeries]:
        """Expansions of every monomial to precision prec."""
        factory = factory or get_factory(field)
        return [monomial_series(factory, a, b, self.l, prec) for a, b in self.exponents]


def enumerate_basis(q: int, k: int, l: int, cusp: bool = False) -> MonomialBasis:
    """All (a, b) with a(q-1) + b(q^2-1) + l(q+1) = k; cusp forms need b >= 1 or l >= 1."""
    if not 0 <= l <= q - 2:
        raise GradingError(f"type must satisfy 0 <= l <= q-2, got l={l}")
    exponents: List[Exponents] = []
    rest = k - l * (q + 1)
    if rest >= 0 and (k - 2 * l) % (q - 1) == 0:
        for b in range(rest // (q * q - 1) + 1):
            if cusp and l == 0 and b == 0:
                continue
            a = (rest - b * (q * q - 1)) // (q - 1)
            exponents.append((a, b))
    return MonomialBasis(q, k, l, cusp, tuple(exponents))


def monomial_series(factory: FormFactory, a: int, b: int, l: int, prec: int) -> USeries:
    """g_1^a Δ^b h^l to precision prec."""
    field = factory.field
    result = USeries.one(field, prec)
    for name, e in (("g1", a), ("Delta", b), ("h", l)):
        if e:
            result = result * (factory.build(GeneratorId(name), prec) ** e)
    return result.truncate(prec)


def decompose(f: USeries, series: Sequence[USeries], orders: Sequence[int],
              labels: Optional[Sequence[str]] = None) -> List[Scalar]:
    """Coordinates of f on series with distinct u-orders, by back substitution.

    The residual after subtraction must vanish on the certified range.
    """
    labels = list(labels) if labels is not None else [str(o) for o in orders]
    coords: List[Scalar] = [Scalar.zero(f.field)] * len(orders)
    residual = f
    for i in sorted(range(len(orders)), key=lambda j: orders[j]):
        order = orders[i]
        lead = series[i].coefficient(order)
        if lead.is_zero():
            raise SpanError(f"basis element {labels[i]} has no term at u^{order}", witness=order)
        c = residual.coefficient(order) / lead
        coords[i] = c
        if not c.is_zero():
            residual = residual - series[i].scale(c)
    if not residual.is_zero():
        witness = residual.order
        logger.warning("residual after decomposition is nonzero at u^%d", witness)
        raise SpanError(f"series does not lie in the span of {labels}: residual at u^{witness}",
                        witness=witness)
    return coords
