"""
DRINFELD Scalars

Elements of K = F_q(T) stored as reduced fractions num/den with a monic
denominator. Zero is 0/1, so equality is representation equality. Values
with denominator 1 take fast paths through every operation.
"""

from typing import Union

from ..core.exceptions import ArithmeticDomainError, FieldError
from .field import FiniteField
from .poly import Poly, ensure_poly

ScalarLike = Union["Scalar", Poly, int]


class Scalar:
    """An element of K = F_q(T). Immutable."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Union[Poly, int], den: Union[Poly, int, None] = None, field: FiniteField = None):
        if isinstance(num, Poly):
            field = num.field
        elif isinstance(den, Poly):
            field = den.field
        if field is None:
            raise FieldError("a field is required to build a Scalar from integers")
        num = ensure_poly(field, num)
        den = Poly.one(field) if den is None else ensure_poly(field, den)
        if den.is_zero():
            raise ArithmeticDomainError("zero denominator")
        self._set(*_reduce(num, den))

    def _set(self, num: Poly, den: Poly) -> None:
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _make(cls, num: Poly, den: Poly) -> "Scalar":
        obj = cls.__new__(cls)
        obj._set(num, den)
        return obj

    @classmethod
    def integral(cls, num: Poly) -> "Scalar":
        """Wrap a polynomial as a Scalar without any reduction work."""
        return cls._make(num, Poly.one(num.field))

    @classmethod
    def zero(cls, field: FiniteField) -> "Scalar":
        return cls.integral(Poly.zero(field))

    @classmethod
    def one(cls, field: FiniteField) -> "Scalar":
        return cls.integral(Poly.one(field))

    @classmethod
    def from_int(cls, field: FiniteField, n: int) -> "Scalar":
        return cls.integral(ensure_poly(field, n))

    @classmethod
    def T(cls, field: FiniteField) -> "Scalar":
        return cls.integral(Poly.T(field))

    @property
    def field(self) -> FiniteField:
        return self.num.field

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_integral(self) -> bool:
        return self.den.is_one()

    def _coerce(self, other: ScalarLike) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field is not self.field:
                raise FieldError("scalars live over different fields")
            return other
        if isinstance(other, Poly):
            if other.field is not self.field:
                raise FieldError("scalars live over different fields")
            return Scalar.integral(other)
        if isinstance(other, int):
            return Scalar.from_int(self.field, other)
        return NotImplemented

    # Field operations

    def __add__(self, other: ScalarLike) -> "Scalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den.is_one() and other.den.is_one():
            return Scalar.integral(self.num + other.num)
        if self.den == other.den:
            return Scalar._make(*_reduce(self.num + other.num, self.den))
        return Scalar._make(*_reduce(self.num * other.den + other.num * self.den, self.den * other.den))

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar._make(-self.num, self.den)

    def __sub__(self, other: ScalarLike) -> "Scalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: ScalarLike) -> "Scalar":
        return (-self) + other

    def __mul__(self, other: ScalarLike) -> "Scalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den.is_one() and other.den.is_one():
            return Scalar.integral(self.num * other.num)
        if self.is_zero() or other.is_zero():
            return Scalar.zero(self.field)
        # cross-cancel before multiplying to keep degrees small
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        num = (self.num // g1) * (other.num // g2)
        den = (self.den // g2) * (other.den // g1)
        return Scalar._make(*_normalize_sign(num, den))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ArithmeticDomainError("inverse of zero in K")
        return Scalar._make(*_normalize_sign(self.den, self.num))

    def __truediv__(self, other: ScalarLike) -> "Scalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other: ScalarLike) -> "Scalar":
        return self.inverse() * other

    def __pow__(self, e: int) -> "Scalar":
        if e < 0:
            return self.inverse() ** (-e)
        return Scalar._make(self.num ** e, self.den ** e)

    def frobenius(self, n: int = 1) -> "Scalar":
        """Return self^(q^n)."""
        return Scalar._make(self.num.frobenius(n), self.den.frobenius(n))

    @property
    def degree(self) -> int:
        """deg(num) - deg(den); -1 is reported for zero as for Poly."""
        if self.is_zero():
            return -1
        return self.num.degree - self.den.degree

    # Comparison and text

    def __eq__(self, other) -> bool:
        if isinstance(other, (Poly, int)):
            other = self._coerce(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __ne__(self, other) -> bool:
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __str__(self) -> str:
        num = str(self.num)
        if self.den.is_one():
            return num
        den = str(self.den)
        if self.num.degree > 0 and len(num.split("+")) > 1:
            num = f"({num})"
        if len(den.split("+")) > 1 or "*" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self) -> str:
        return f"Scalar({self})"


def _normalize_sign(num: Poly, den: Poly):
    lead = den.leading
    if lead == 1:
        return num, den
    inv = num.field.inv(lead)
    return num.scale(inv), den.scale(inv)


def _reduce(num: Poly, den: Poly):
    if num.is_zero():
        return num, Poly.one(num.field)
    if den.is_constant():
        inv = num.field.inv(den.leading)
        return num.scale(inv), Poly.one(num.field)
    g = num.gcd(den)
    if not g.is_one():
        num, den = num // g, den // g
    return _normalize_sign(num, den)


def as_scalar(field: FiniteField, value: ScalarLike) -> Scalar:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, Poly):
        return Scalar.integral(value)
    return Scalar.from_int(field, value)
