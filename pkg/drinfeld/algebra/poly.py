"""
DRINFELD Polynomials over F_q

Dense polynomials in T with coefficient vectors held as numpy int64 arrays
(low degree first, canonical form without trailing zeros). Over a prime
field multiplication is a single np.convolve reduced mod p; over F_{p^r}
it runs row-wise through the field's lookup tables.
"""

import itertools
from typing import Iterable, Iterator, Optional, Tuple, Union

import numpy as np

from ..core.exceptions import ArithmeticDomainError, FieldError, ResourceLimitError
from .field import FiniteField

_CONVOLVE_SAFE_P = 1 << 15


class Poly:
    """An element of A = F_q[T]. Immutable."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: FiniteField, coeffs: Union[Iterable[int], np.ndarray] = ()):
        arr = np.array(coeffs, dtype=np.int64).reshape(-1)
        if field.prime_field:
            arr %= field.p
        elif arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise FieldError("coefficient codes out of range for F_q")
        self._init(field, _trim(arr))

    def _init(self, field: FiniteField, arr: np.ndarray) -> None:
        if arr.size - 1 > field.degree_ceiling:
            raise ResourceLimitError(
                f"polynomial degree {arr.size - 1} exceeds the ceiling {field.degree_ceiling}"
            )
        arr.flags.writeable = False
        self.field = field
        self.coeffs = arr
        self._hash = None

    @classmethod
    def _raw(cls, field: FiniteField, arr: np.ndarray) -> "Poly":
        """Wrap an already reduced array, trimming it."""
        obj = cls.__new__(cls)
        obj._init(field, _trim(arr))
        return obj

    # Constructors

    @classmethod
    def zero(cls, field: FiniteField) -> "Poly":
        return cls._raw(field, np.zeros(0, dtype=np.int64))

    @classmethod
    def one(cls, field: FiniteField) -> "Poly":
        return cls._raw(field, np.ones(1, dtype=np.int64))

    @classmethod
    def constant(cls, field: FiniteField, c: int) -> "Poly":
        return cls._raw(field, np.array([c % field.q if not field.prime_field else c % field.p], dtype=np.int64))

    @classmethod
    def T(cls, field: FiniteField) -> "Poly":
        return cls.monomial(field, 1)

    @classmethod
    def monomial(cls, field: FiniteField, degree: int, c: int = 1) -> "Poly":
        arr = np.zeros(degree + 1, dtype=np.int64)
        arr[degree] = c
        return cls._raw(field, arr)

    # Basic properties

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return self.coeffs.size - 1

    def is_zero(self) -> bool:
        return self.coeffs.size == 0

    def is_one(self) -> bool:
        return self.coeffs.size == 1 and self.coeffs[0] == 1

    def is_constant(self) -> bool:
        return self.coeffs.size <= 1

    @property
    def leading(self) -> int:
        if self.is_zero():
            return 0
        return int(self.coeffs[-1])

    def is_monic(self) -> bool:
        return self.leading == 1

    def coefficient(self, i: int) -> int:
        return int(self.coeffs[i]) if 0 <= i < self.coeffs.size else 0

    def _check(self, other: "Poly") -> None:
        if other.field is not self.field:
            raise FieldError("polynomials live over different fields")

    # Ring operations

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if a.size < b.size:
            a, b = b, a
        if b.size == 0:
            return self if a is self.coeffs else other
        out = a.copy()
        if self.field.prime_field:
            out[: b.size] = (out[: b.size] + b) % self.field.p
        else:
            out[: b.size] = self.field.add_table[out[: b.size], b]
        return Poly._raw(self.field, out)

    def __neg__(self) -> "Poly":
        if self.field.prime_field:
            return Poly._raw(self.field, (-self.coeffs) % self.field.p)
        return Poly._raw(self.field, self.field.neg_table[self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["Poly", int]) -> "Poly":
        if isinstance(other, int):
            return self.scale(self.field.from_int(other))
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if a.size == 0 or b.size == 0:
            return Poly.zero(self.field)
        if a.size == 1:
            return other.scale(int(a[0]))
        if b.size == 1:
            return self.scale(int(b[0]))
        field = self.field
        if field.prime_field:
            if field.p < _CONVOLVE_SAFE_P:
                out = np.convolve(a, b) % field.p
            else:
                acc = np.zeros(a.size + b.size - 1, dtype=object)
                bo = b.astype(object)
                for i, c in enumerate(a.tolist()):
                    if c:
                        acc[i: i + b.size] += c * bo
                out = np.array([int(x) % field.p for x in acc], dtype=np.int64)
            return Poly._raw(field, out)
        out = np.zeros(a.size + b.size - 1, dtype=np.int64)
        for i, c in enumerate(a.tolist()):
            if c:
                out[i: i + b.size] = field.add_table[out[i: i + b.size], field.mul_table[c, b]]
        return Poly._raw(field, out)

    __rmul__ = __mul__

    def scale(self, c: int) -> "Poly":
        """Multiply by the F_q element with code c."""
        if c == 0 or self.is_zero():
            return Poly.zero(self.field)
        if c == 1:
            return self
        if self.field.prime_field:
            return Poly._raw(self.field, (self.coeffs * c) % self.field.p)
        return Poly._raw(self.field, self.field.mul_table[c, self.coeffs])

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ArithmeticDomainError("negative power of a polynomial")
        result = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def frobenius(self, n: int = 1) -> "Poly":
        """Return self^(q^n): coefficients are fixed, T goes to T^(q^n)."""
        if n == 0 or self.degree <= 0:
            return self
        step = self.field.q ** n
        out = np.zeros(self.degree * step + 1, dtype=np.int64)
        out[::step] = self.coeffs
        return Poly._raw(self.field, out)

    # Euclidean structure

    def __divmod__(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        self._check(other)
        if other.is_zero():
            raise ArithmeticDomainError("polynomial division by zero")
        field = self.field
        if self.degree < other.degree:
            return Poly.zero(field), self
        b = other.coeffs
        inv_lead = field.inv(int(b[-1]))
        rem = self.coeffs.copy()
        quot = np.zeros(self.degree - other.degree + 1, dtype=np.int64)
        m = b.size
        for shift in range(rem.size - m, -1, -1):
            top = int(rem[shift + m - 1])
            if top == 0:
                continue
            c = field.mul(top, inv_lead)
            quot[shift] = c
            if field.prime_field:
                rem[shift: shift + m] = (rem[shift: shift + m] - c * b) % field.p
            else:
                rem[shift: shift + m] = field.add_table[
                    rem[shift: shift + m], field.neg_table[field.mul_table[c, b]]
                ]
        return Poly._raw(field, quot), Poly._raw(field, rem[: m - 1].copy())

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        quot, rem = divmod(self, other)
        if not rem.is_zero():
            raise ArithmeticDomainError(f"{other} does not divide {self}")
        return quot

    def divides(self, other: "Poly") -> bool:
        return (other % self).is_zero()

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.leading))

    def gcd(self, other: "Poly") -> "Poly":
        """Monic greatest common divisor; gcd(0, 0) = 0."""
        self._check(other)
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def lcm(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.field)
        return ((self * other) // self.gcd(other)).monic()

    def powmod(self, e: int, modulus: "Poly") -> "Poly":
        result = Poly.one(self.field) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            e >>= 1
            if e:
                base = (base * base) % modulus
        return result

    def is_irreducible(self) -> bool:
        """Rabin-style test: gcd(T^(q^i) - T, self) = 1 for i <= deg/2."""
        n = self.degree
        if n < 1:
            return False
        if n == 1:
            return True
        t = Poly.T(self.field)
        x = t % self
        for _ in range(n // 2):
            x = x.powmod(self.field.q, self)
            if not (x - t).gcd(self).is_one():
                return False
        return True

    def derivative(self) -> "Poly":
        if self.degree < 1:
            return Poly.zero(self.field)
        idx = np.arange(1, self.coeffs.size, dtype=np.int64)
        if self.field.prime_field:
            return Poly._raw(self.field, (self.coeffs[1:] * idx) % self.field.p)
        out = np.array(
            [self.field.mul(int(c), self.field.from_int(int(i))) for c, i in zip(self.coeffs[1:], idx)],
            dtype=np.int64,
        )
        return Poly._raw(self.field, out)

    def evaluate(self, x):
        """Horner evaluation at an F_q code, a Poly or a Scalar."""
        if isinstance(x, int):
            acc = 0
            for c in reversed(self.coeffs.tolist()):
                acc = self.field.add(self.field.mul(acc, x), c)
            return acc
        acc = x * 0
        for c in reversed(self.coeffs.tolist()):
            acc = acc * x + Poly.constant(self.field, c)
        return acc

    # Comparison and hashing

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == Poly.constant(self.field, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return other.field is self.field and np.array_equal(self.coeffs, other.coeffs)

    def __ne__(self, other) -> bool:
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field.spec, self.coeffs.tobytes()))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (self.degree, tuple(reversed(self.coeffs.tolist())))

    # Text encoding

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = int(self.coeffs[i])
            if c == 0:
                continue
            c_str = self.field.element_str(c)
            if not self.field.prime_field and "+" in c_str:
                c_str = f"({c_str})"
            if i == 0:
                terms.append(c_str)
                continue
            mono = "T" if i == 1 else f"T^{i}"
            terms.append(mono if c == 1 else f"{c_str}*{mono}")
        return "+".join(terms)

    def __repr__(self) -> str:
        return f"Poly({self})"


def _trim(arr: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(arr)
    if nz.size == 0:
        return np.zeros(0, dtype=np.int64)
    return arr[: nz[-1] + 1]


def monic_polys(field: FiniteField, degree: int) -> Iterator[Poly]:
    """All monic polynomials of the given degree, in a fixed order."""
    for tail in itertools.product(range(field.q), repeat=degree):
        yield Poly._raw(field, np.array(list(tail) + [1], dtype=np.int64))


def monic_polys_up_to(field: FiniteField, max_degree: int) -> Iterator[Poly]:
    for d in range(max_degree + 1):
        yield from monic_polys(field, d)


def bracket(field: FiniteField, i: int) -> Poly:
    """[i] = T^(q^i) - T."""
    t = Poly.T(field)
    return t.frobenius(i) - t


def ensure_poly(field: FiniteField, value: Union[Poly, int]) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, np.integer)):
        return Poly.constant(field, field.from_int(int(value)))
    raise FieldError(f"cannot interpret {value!r} as a polynomial")


