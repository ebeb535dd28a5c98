"""
DRINFELD Additive Polynomials

F_q-linear polynomials Σ c_i X^(q^i) over A and the Carlitz module
a ↦ ρ_a generated by ρ_T = TX + X^q.
"""

from typing import Iterable, List, Tuple, Union

from ..algebra.field import FiniteField
from ..algebra.poly import Poly
from ..algebra.scalar import Scalar
from ..core.exceptions import ArithmeticDomainError, FieldError


class AdditivePoly:
    """Σ c_i X^(q^i) with c_i in A, stored as (c_0, ..., c_d)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs: Iterable[Poly]):
        items = list(coeffs)
        while items and items[-1].is_zero():
            items.pop()
        self.field = field
        self.coeffs: Tuple[Poly, ...] = tuple(items)

    @classmethod
    def x(cls, field: FiniteField) -> "AdditivePoly":
        return cls(field, [Poly.one(field)])

    @property
    def q_degree(self) -> int:
        """d such that the top term is X^(q^d); -1 for zero."""
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> Poly:
        """Coefficient of X^(q^i)."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Poly.zero(self.field)

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: "AdditivePoly") -> None:
        if other.field is not self.field:
            raise FieldError("additive polynomials live over different fields")

    def __add__(self, other: "AdditivePoly") -> "AdditivePoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return AdditivePoly(self.field, [self.coefficient(i) + other.coefficient(i) for i in range(n)])

    def __sub__(self, other: "AdditivePoly") -> "AdditivePoly":
        return self + other.scale(Poly.constant(self.field, self.field.neg(1)))

    def scale(self, c: Poly) -> "AdditivePoly":
        return AdditivePoly(self.field, [c * a for a in self.coeffs])

    def compose(self, other: "AdditivePoly") -> "AdditivePoly":
        """(self ∘ other)(X) = Σ_i c_i (Σ_j d_j X^(q^j))^(q^i)."""
        self._check(other)
        if self.is_zero() or other.is_zero():
            return AdditivePoly(self.field, [])
        out: List[Poly] = [Poly.zero(self.field)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            for j, d in enumerate(other.coeffs):
                out[i + j] = out[i + j] + c * d.frobenius(i)
        return AdditivePoly(self.field, out)

    def evaluate(self, x: Union[Poly, Scalar]) -> Union[Poly, Scalar]:
        """Σ c_i x^(q^i), using Frobenius for the q-power steps."""
        acc = x * 0
        power = x
        for i, c in enumerate(self.coeffs):
            if i:
                power = power.frobenius(1)
            if not c.is_zero():
                acc = acc + power * c
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, AdditivePoly):
            return NotImplemented
        return self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __str__(self) -> str:
        q = self.field.q
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            mono = "X" if i == 0 else f"X^{q ** i}"
            if c.is_one():
                parts.append(mono)
            else:
                text = str(c)
                if "+" in text:
                    text = f"({text})"
                parts.append(f"{text}*{mono}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"AdditivePoly({self})"


def carlitz_poly(a: Poly) -> AdditivePoly:
    """ρ_a for a nonzero a in A."""
    if a.is_zero():
        raise ArithmeticDomainError("the Carlitz module is only evaluated at nonzero a")
    field = a.field
    t = Poly.T(field)
    # ρ_{T^(k+1)} = T ρ_{T^k} + (ρ_{T^k})^q shifted one q-degree
    power: List[Poly] = [Poly.one(field)]
    acc: List[Poly] = [Poly.zero(field)] * (a.degree + 1)
    for k in range(a.degree + 1):
        ak = a.coefficient(k)
        if ak:
            for i, c in enumerate(power):
                acc[i] = acc[i] + c.scale(ak)
        if k < a.degree:
            nxt = [t * c for c in power] + [Poly.zero(field)]
            for i, c in enumerate(power):
                nxt[i + 1] = nxt[i + 1] + c.frobenius(1)
            power = nxt
    return AdditivePoly(field, acc)
