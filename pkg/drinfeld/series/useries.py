"""
DRINFELD Truncated u-Series

Sparse truncated expansions Σ a_i u^i with coefficients in K, graded by
type: a stored index i always satisfies i ≡ type (mod q-1). Every
operation records the exact precision of its result; coefficients at
indices >= prec are unknown and reading them raises.
"""

from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from ..algebra.field import FiniteField
from ..algebra.poly import Poly
from ..algebra.scalar import Scalar, ScalarLike, as_scalar
from ..core.exceptions import (
    ArithmeticDomainError,
    FieldError,
    GradingError,
    InsufficientPrecisionError,
)


@dataclass(frozen=True)
class SeriesComparison:
    """Outcome of comparing two truncated series on their common range."""

    equal: bool
    checked_prec: int
    witness: Optional[int] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.equal


class USeries:
    """A truncated u-expansion with weight, type, level tag and precision."""

    __slots__ = ("field", "coeffs", "prec", "weight", "type", "level", "order")

    def __init__(self, field: FiniteField, coeffs: Dict[int, ScalarLike], prec: int,
                 weight: int = 0, type: Optional[int] = None, level: Optional[Poly] = None):
        if prec < 1:
            raise InsufficientPrecisionError(f"precision must be >= 1, got {prec}")
        step = field.q - 1
        clean: Dict[int, Scalar] = {}
        for i, c in coeffs.items():
            if i < 0:
                raise GradingError(f"negative u-index {i}")
            if i >= prec:
                continue
            c = as_scalar(field, c)
            if not c.is_zero():
                clean[i] = c
        if type is None:
            type = min(clean) % step if clean else 0
        type %= step
        for i in clean:
            if i % step != type:
                raise GradingError(f"index {i} is not congruent to type {type} mod {step}")
        self._set(field, clean, prec, weight, type, level)

    def _set(self, field, coeffs, prec, weight, type, level) -> None:
        self.field = field
        self.coeffs = coeffs
        self.prec = prec
        self.weight = weight
        self.type = type
        self.level = level if level is not None else Poly.one(field)
        self.order = min(coeffs) if coeffs else prec

    @classmethod
    def _make(cls, field, coeffs, prec, weight, type, level) -> "USeries":
        """Build from already clean, graded, truncated data."""
        obj = cls.__new__(cls)
        obj._set(field, coeffs, prec, weight, type % (field.q - 1), level)
        return obj

    # Constructors

    @classmethod
    def zero(cls, field: FiniteField, prec: int, weight: int = 0, type: int = 0,
             level: Optional[Poly] = None) -> "USeries":
        return cls._make(field, {}, prec, weight, type, level)

    @classmethod
    def one(cls, field: FiniteField, prec: int) -> "USeries":
        return cls._make(field, {0: Scalar.one(field)}, prec, 0, 0, None)

    @classmethod
    def monomial(cls, field: FiniteField, index: int, prec: int, coeff: ScalarLike = 1,
                 weight: int = 0) -> "USeries":
        return cls(field, {index: coeff}, prec, weight=weight, type=index)

    @classmethod
    def u(cls, field: FiniteField, prec: int) -> "USeries":
        return cls.monomial(field, 1, prec)

    # Accessors

    @property
    def step(self) -> int:
        return self.field.q - 1

    def coefficient(self, i: int) -> Scalar:
        """Coefficient of u^i; raises when i is beyond the certified precision."""
        if i >= self.prec:
            raise InsufficientPrecisionError(
                f"coefficient u^{i} requested but series is only certified below u^{self.prec}",
                required=i + 1, available=self.prec,
            )
        return self.coeffs.get(i, Scalar.zero(self.field))

    __getitem__ = coefficient

    def items(self) -> List[Tuple[int, Scalar]]:
        return sorted(self.coeffs.items())

    def indices(self) -> Iterator[int]:
        return iter(range(self.type, self.prec, self.step))

    def lowest_term(self) -> Optional[Tuple[int, Scalar]]:
        if not self.coeffs:
            return None
        return self.order, self.coeffs[self.order]

    def is_zero(self) -> bool:
        """True when every certified coefficient vanishes."""
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(c.is_integral() for c in self.coeffs.values())

    def with_grading(self, weight: Optional[int] = None, type: Optional[int] = None,
                     level: Optional[Poly] = None) -> "USeries":
        """Retag weight/type/level; the type must still match every index."""
        new_type = self.type if type is None else type % self.step
        if new_type != self.type and self.coeffs:
            raise GradingError(f"cannot retag type {self.type} series as type {new_type}")
        return USeries._make(self.field, self.coeffs, self.prec,
                             self.weight if weight is None else weight,
                             new_type, self.level if level is None else level)

    def truncate(self, prec: int) -> "USeries":
        if prec >= self.prec:
            return self
        coeffs = {i: c for i, c in self.coeffs.items() if i < prec}
        return USeries._make(self.field, coeffs, prec, self.weight, self.type, self.level)

    def _check_field(self, other: "USeries") -> None:
        if other.field is not self.field:
            raise FieldError("series live over different fields")

    # Vector space structure

    def _check_grading(self, other: "USeries") -> None:
        self._check_field(other)
        if self.weight != other.weight or self.type != other.type:
            raise GradingError(
                f"weight/type mismatch: ({self.weight}, {self.type}) vs ({other.weight}, {other.type})"
            )

    def __add__(self, other: "USeries") -> "USeries":
        self._check_grading(other)
        prec = min(self.prec, other.prec)
        out = {i: c for i, c in self.coeffs.items() if i < prec}
        for i, c in other.coeffs.items():
            if i >= prec:
                continue
            s = out[i] + c if i in out else c
            if s.is_zero():
                out.pop(i, None)
            else:
                out[i] = s
        return USeries._make(self.field, out, prec, self.weight, self.type, self.level.lcm(other.level))

    def __neg__(self) -> "USeries":
        return USeries._make(self.field, {i: -c for i, c in self.coeffs.items()}, self.prec,
                             self.weight, self.type, self.level)

    def __sub__(self, other: "USeries") -> "USeries":
        return self + (-other)

    def scale(self, c: ScalarLike) -> "USeries":
        c = as_scalar(self.field, c)
        if c.is_zero():
            return USeries.zero(self.field, self.prec, self.weight, self.type, self.level)
        return USeries._make(self.field, {i: a * c for i, a in self.coeffs.items()}, self.prec,
                             self.weight, self.type, self.level)

    # Ring structure

    def __mul__(self, other) -> "USeries":
        if not isinstance(other, USeries):
            return self.scale(other)
        self._check_field(other)
        prec = min(self.prec + other.order, other.prec + self.order)
        coeffs = _multiply(self.coeffs, other.coeffs, prec)
        return USeries._make(self.field, coeffs, prec, self.weight + other.weight,
                             self.type + other.type, self.level.lcm(other.level))

    __rmul__ = scale

    def frobenius_pow(self, n: int = 1) -> "USeries":
        """f^(q^n) via the Frobenius shortcut Σ a_i^(q^n) u^(i q^n)."""
        if n == 0:
            return self
        qn = self.field.q ** n
        coeffs = {i * qn: c.frobenius(n) for i, c in self.coeffs.items()}
        return USeries._make(self.field, coeffs, self.prec * qn, self.weight * qn,
                             self.type * qn, self.level)

    def __pow__(self, e: int) -> "USeries":
        if e < 0:
            return self.invert_unit() ** (-e)
        if e == 0:
            return USeries.one(self.field, self.prec)
        q = self.field.q
        result: Optional[USeries] = None
        frob = self
        while e:
            e, digit = divmod(e, q)
            if digit:
                term = _binary_power(frob, digit)
                result = term if result is None else result * term
            if e:
                frob = frob.frobenius_pow(1)
        return result

    def compose(self, s: "USeries", out_prec: Optional[int] = None) -> "USeries":
        """Substitute the series s (order >= 1) for u."""
        self._check_field(s)
        if s.order < 1 or (0 in s.coeffs):
            raise ArithmeticDomainError("substitution requires a series of positive order")
        v = s.order
        target = self.prec * v
        nonconstant = [j for j in self.coeffs if j >= 1]
        if nonconstant:
            target = min(target, s.prec + (min(nonconstant) - 1) * v)
        if out_prec is not None:
            target = min(target, out_prec)
        out: Dict[int, Scalar] = {}
        if 0 in self.coeffs and target > 0:
            out[0] = self.coeffs[0]
        step = self.step
        first = self.type if self.type >= 1 else step
        if first * v < target:
            s_t = s.truncate(target)
            power = _binary_power(s_t, first).truncate(target)
            stride = _binary_power(s_t, step).truncate(target) if first + step <= max(self.coeffs, default=0) else None
            j = first
            while j * v < target and j < self.prec:
                a = self.coeffs.get(j)
                if a is not None:
                    for i, c in power.coeffs.items():
                        if i < target:
                            term = c * a
                            out[i] = out[i] + term if i in out else term
                j += step
                if j * v >= target or j >= self.prec or stride is None:
                    break
                power = (power * stride).truncate(target)
        out = {i: c for i, c in out.items() if not c.is_zero()}
        return USeries._make(self.field, out, target, self.weight, self.type * s.type, self.level)

    def invert_unit(self) -> "USeries":
        """Inverse of a series with nonzero constant term."""
        a0 = self.coeffs.get(0)
        if a0 is None:
            raise ArithmeticDomainError("series is not a unit (zero constant term)")
        inv0 = a0.inverse()
        terms = [(i, c) for i, c in self.items() if i > 0]
        out: Dict[int, Scalar] = {0: inv0}
        step = self.step
        for n in range(step, self.prec, step):
            acc = None
            for i, c in terms:
                if i > n:
                    break
                b = out.get(n - i)
                if b is not None:
                    t = c * b
                    acc = t if acc is None else acc + t
            if acc is not None and not acc.is_zero():
                out[n] = -(acc * inv0)
        return USeries._make(self.field, out, self.prec, -self.weight, -self.type, self.level)

    # Comparison

    def compare(self, other: "USeries") -> SeriesComparison:
        """Compare on the common certified range [0, min(prec))."""
        self._check_field(other)
        checked = min(self.prec, other.prec)
        if (self.weight, self.type) != (other.weight, other.type):
            return SeriesComparison(False, checked, None, "weight/type mismatch")
        keys = sorted(i for i in set(self.coeffs) | set(other.coeffs) if i < checked)
        zero = Scalar.zero(self.field)
        for i in keys:
            if self.coeffs.get(i, zero) != other.coeffs.get(i, zero):
                return SeriesComparison(False, checked, i, f"coefficients differ at u^{i}")
        return SeriesComparison(True, checked)

    def __str__(self) -> str:
        parts = []
        for i, c in self.items():
            mono = "" if i == 0 else ("u" if i == 1 else f"u^{i}")
            text = str(c)
            if not mono:
                parts.append(text)
            elif c.is_one():
                parts.append(mono)
            else:
                if "+" in text or "/" in text:
                    text = f"({text})"
                parts.append(f"{text}*{mono}")
        parts.append(f"O(u^{self.prec})")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"USeries(k={self.weight}, l={self.type}, prec={self.prec}, terms={len(self.coeffs)})"


def _binary_power(f: USeries, e: int) -> USeries:
    result: Optional[USeries] = None
    base = f
    while e:
        if e & 1:
            result = base if result is None else result * base
        e >>= 1
        if e:
            base = base * base
    return result


def _multiply(a: Dict[int, Scalar], b: Dict[int, Scalar], prec: int) -> Dict[int, Scalar]:
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    items_b = sorted(b.items())
    if all(c.den.is_one() for c in a.values()) and all(c.den.is_one() for _, c in items_b):
        acc: Dict[int, Poly] = {}
        for i, x in a.items():
            x = x.num
            for j, y in items_b:
                k = i + j
                if k >= prec:
                    break
                t = x * y.num
                acc[k] = acc[k] + t if k in acc else t
        return {k: Scalar.integral(v) for k, v in acc.items() if not v.is_zero()}
    out: Dict[int, Scalar] = {}
    for i, x in a.items():
        for j, y in items_b:
            k = i + j
            if k >= prec:
                break
            t = x * y
            out[k] = out[k] + t if k in out else t
    return {k: v for k, v in out.items() if not v.is_zero()}


def sum_series(terms: List[USeries]) -> USeries:
    """Sum of same-grade series (precision is the minimum)."""
    result = terms[0]
    for t in terms[1:]:
        result = result + t
    return result
