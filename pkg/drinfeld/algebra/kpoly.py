"""
DRINFELD Polynomials over K

Dense polynomials in an auxiliary variable X with coefficients in K. Used
for characteristic and minimal polynomials of Hecke matrices and for
printing Goss polynomials.
"""

from typing import Dict, Iterable, List, Sequence, Tuple

from ..core.exceptions import ArithmeticDomainError
from .field import FiniteField
from .scalar import Scalar, ScalarLike, as_scalar


class ScalarPoly:
    """Polynomial in X over K = F_q(T), coefficients low degree first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs: Iterable[ScalarLike] = ()):
        items = [as_scalar(field, c) for c in coeffs]
        while items and items[-1].is_zero():
            items.pop()
        self.field = field
        self.coeffs: Tuple[Scalar, ...] = tuple(items)

    @classmethod
    def x(cls, field: FiniteField) -> "ScalarPoly":
        return cls(field, [0, 1])

    @classmethod
    def constant(cls, field: FiniteField, c: ScalarLike) -> "ScalarPoly":
        return cls(field, [c])

    @classmethod
    def from_sparse(cls, field: FiniteField, terms: Dict[int, Scalar]) -> "ScalarPoly":
        if not terms:
            return cls(field)
        dense: List[ScalarLike] = [0] * (max(terms) + 1)
        for m, c in terms.items():
            dense[m] = c
        return cls(field, dense)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0].is_one()

    def coefficient(self, i: int) -> Scalar:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Scalar.zero(self.field)

    @property
    def leading(self) -> Scalar:
        return self.coefficient(self.degree)

    def __add__(self, other: "ScalarPoly") -> "ScalarPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return ScalarPoly(self.field, [self.coefficient(i) + other.coefficient(i) for i in range(n)])

    def __neg__(self) -> "ScalarPoly":
        return ScalarPoly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other: "ScalarPoly") -> "ScalarPoly":
        return self + (-other)

    def __mul__(self, other) -> "ScalarPoly":
        if not isinstance(other, ScalarPoly):
            c = as_scalar(self.field, other)
            return ScalarPoly(self.field, [a * c for a in self.coeffs])
        if self.is_zero() or other.is_zero():
            return ScalarPoly(self.field)
        out = [Scalar.zero(self.field)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return ScalarPoly(self.field, out)

    __rmul__ = __mul__

    def __divmod__(self, other: "ScalarPoly") -> Tuple["ScalarPoly", "ScalarPoly"]:
        if other.is_zero():
            raise ArithmeticDomainError("division by the zero polynomial over K")
        rem = list(self.coeffs)
        quot = [Scalar.zero(self.field)] * max(len(rem) - len(other.coeffs) + 1, 0)
        inv_lead = other.leading.inverse()
        m = len(other.coeffs)
        for shift in range(len(rem) - m, -1, -1):
            top = rem[shift + m - 1]
            if top.is_zero():
                continue
            c = top * inv_lead
            quot[shift] = c
            for i, b in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - c * b
        return ScalarPoly(self.field, quot), ScalarPoly(self.field, rem[: m - 1])

    def __mod__(self, other: "ScalarPoly") -> "ScalarPoly":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "ScalarPoly") -> "ScalarPoly":
        return divmod(self, other)[0]

    def monic(self) -> "ScalarPoly":
        if self.is_zero():
            return self
        return self * self.leading.inverse()

    def gcd(self, other: "ScalarPoly") -> "ScalarPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def lcm(self, other: "ScalarPoly") -> "ScalarPoly":
        if self.is_zero() or other.is_zero():
            return ScalarPoly(self.field)
        return ((self * other) // self.gcd(other)).monic()

    def derivative(self) -> "ScalarPoly":
        return ScalarPoly(self.field, [c * i for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x: ScalarLike) -> Scalar:
        x = as_scalar(self.field, x)
        acc = Scalar.zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, ScalarPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __str__(self) -> str:
        return format_x_poly({i: c for i, c in enumerate(self.coeffs)})

    def __repr__(self) -> str:
        return f"ScalarPoly({self})"


def format_coefficient(c: Scalar) -> str:
    text = str(c)
    if any(ch in text for ch in "+/*^"):
        return f"({text})"
    return text


def format_x_poly(terms: Dict[int, Scalar], exponents: Sequence[int] = None, var: str = "X") -> str:
    """Render Σ c_m X^m in decreasing degree, e.g. 'X^4 + (1/T)X^2'."""
    parts = []
    for m in sorted(terms, reverse=True):
        c = terms[m]
        if c.is_zero():
            continue
        e = exponents[m] if exponents is not None else m
        mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
        coeff = format_coefficient(c)
        if not mono:
            parts.append(str(c))
        elif c.is_one():
            parts.append(mono)
        else:
            parts.append(f"{coeff}{mono}")
    return " + ".join(parts) if parts else "0"
