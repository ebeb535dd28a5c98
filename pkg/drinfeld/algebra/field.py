"""
DRINFELD Finite Fields

F_q with q = p^r, p odd. Elements are integer codes 0..q-1: for r = 1 the
residue itself, for r > 1 the base-p digits of a polynomial in w reduced
modulo the field's defining polynomial. Addition and multiplication tables
are numpy arrays so Poly can work on whole coefficient vectors at once.
"""

import itertools
from dataclasses import dataclass, field as dataclass_field
from functools import lru_cache
from typing import Iterator, List, Optional, Tuple

import numpy as np
from sympy import isprime

from ..core.config import Config
from ..core.exceptions import ArithmeticDomainError, FieldError

MAX_TABLE_ORDER = 4096


def _poly_mulmod_p(a: List[int], b: List[int], p: int) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _poly_rem_p(a: List[int], m: List[int], p: int) -> List[int]:
    a = list(a)
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) >= len(m):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(m)
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def _is_irreducible_over_fp(coeffs: Tuple[int, ...], p: int) -> bool:
    """Brute-force irreducibility over F_p for the small degrees used as moduli."""
    r = len(coeffs) - 1
    if r < 1:
        return False
    if r == 1:
        return True
    for d in range(1, r // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            divisor = list(tail) + [1]
            if not _poly_rem_p(list(coeffs), divisor, p):
                return False
    return True


def smallest_irreducible_modulus(p: int, r: int) -> Tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree r over F_p.

    Candidates are ordered by the integer sum c_i p^i of their lower
    coefficients, i.e. lexicographically on (c_{r-1}, ..., c_0).
    """
    for n in range(p ** r):
        tail = [(n // p ** i) % p for i in range(r)]
        candidate = tuple(tail) + (1,)
        if _is_irreducible_over_fp(candidate, p):
            return candidate
    raise FieldError(f"No irreducible polynomial of degree {r} over F_{p}")


@dataclass(frozen=True)
class FieldSpec:
    """Parameters of F_q: odd prime p, degree r and the modulus (low to high)."""

    p: int
    r: int = 1
    modulus: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 3 or not isprime(self.p):
            raise FieldError(f"p must be an odd prime, got {self.p}")
        if not isinstance(self.r, int) or self.r < 1:
            raise FieldError(f"r must be a positive integer, got {self.r}")
        if self.r == 1:
            object.__setattr__(self, "modulus", None)
            return
        if self.p ** self.r > MAX_TABLE_ORDER:
            raise FieldError(f"q = {self.p}^{self.r} exceeds the supported order {MAX_TABLE_ORDER}")
        modulus = self.modulus
        if modulus is None:
            modulus = smallest_irreducible_modulus(self.p, self.r)
        modulus = tuple(int(c) % self.p for c in modulus)
        if len(modulus) != self.r + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {self.r}: {modulus}")
        if not _is_irreducible_over_fp(modulus, self.p):
            raise FieldError(f"modulus {modulus} is reducible over F_{self.p}")
        object.__setattr__(self, "modulus", modulus)

    @property
    def q(self) -> int:
        return self.p ** self.r


@dataclass(eq=False)
class FiniteField:
    """The field F_q described by a FieldSpec, with lookup tables for r > 1."""

    spec: FieldSpec
    degree_ceiling: int = 100000
    add_table: Optional[np.ndarray] = dataclass_field(default=None, repr=False)
    mul_table: Optional[np.ndarray] = dataclass_field(default=None, repr=False)
    neg_table: Optional[np.ndarray] = dataclass_field(default=None, repr=False)
    inv_table: Optional[np.ndarray] = dataclass_field(default=None, repr=False)

    def __post_init__(self):
        if self.spec.r > 1:
            self._build_tables()

    @property
    def p(self) -> int:
        return self.spec.p

    @property
    def r(self) -> int:
        return self.spec.r

    @property
    def q(self) -> int:
        return self.spec.q

    @property
    def prime_field(self) -> bool:
        return self.spec.r == 1

    def _digits(self, code: int) -> List[int]:
        return [(code // self.p ** i) % self.p for i in range(self.r)]

    def _code(self, digits: List[int]) -> int:
        return sum((d % self.p) * self.p ** i for i, d in enumerate(digits[: self.r]))

    def _build_tables(self) -> None:
        q, p = self.q, self.p
        digits = [self._digits(c) for c in range(q)]
        add = np.zeros((q, q), dtype=np.int64)
        mul = np.zeros((q, q), dtype=np.int64)
        modulus = list(self.spec.modulus)
        for a in range(q):
            for b in range(q):
                add[a, b] = self._code([(x + y) % p for x, y in zip(digits[a], digits[b])])
                prod = _poly_mulmod_p(digits[a], digits[b], p)
                mul[a, b] = self._code(_poly_rem_p(prod, modulus, p) + [0] * self.r)
        neg = np.array([self._code([(-x) % p for x in digits[a]]) for a in range(q)], dtype=np.int64)
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = int(np.nonzero(mul[a] == 1)[0][0])
        self.add_table, self.mul_table, self.neg_table, self.inv_table = add, mul, neg, inv

    # Element arithmetic on codes

    def add(self, a: int, b: int) -> int:
        if self.prime_field:
            return (a + b) % self.p
        return int(self.add_table[a, b])

    def neg(self, a: int) -> int:
        if self.prime_field:
            return (-a) % self.p
        return int(self.neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.prime_field:
            return (a * b) % self.p
        return int(self.mul_table[a, b])

    def inv(self, a: int) -> int:
        if a % self.q == 0:
            raise ArithmeticDomainError("inverse of zero in F_q")
        if self.prime_field:
            return pow(a, self.p - 2, self.p)
        return int(self.inv_table[a])

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def from_int(self, n: int) -> int:
        """Image of the integer n under Z -> F_p -> F_q."""
        return n % self.p

    def elements(self) -> Iterator[int]:
        return iter(range(self.q))

    def nonzero_elements(self) -> Iterator[int]:
        return iter(range(1, self.q))

    def element_str(self, a: int) -> str:
        if self.prime_field:
            return str(a)
        terms = []
        for i, d in reversed(list(enumerate(self._digits(a)))):
            if d == 0:
                continue
            if i == 0:
                terms.append(str(d))
            else:
                mono = "w" if i == 1 else f"w^{i}"
                terms.append(mono if d == 1 else f"{d}*{mono}")
        return "+".join(terms) if terms else "0"

    def element_from_digits(self, digits: List[int]) -> int:
        """Reduce a polynomial in w (low to high digits) to an element code."""
        if self.prime_field:
            return digits[0] % self.p if digits else 0
        reduced = _poly_rem_p([d % self.p for d in digits], list(self.spec.modulus), self.p)
        return self._code(reduced + [0] * self.r)

    def modulus_str(self) -> str:
        if self.prime_field:
            return ""
        terms = []
        for i, c in reversed(list(enumerate(self.spec.modulus))):
            if c == 0:
                continue
            mono = "1" if i == 0 else ("w" if i == 1 else f"w^{i}")
            terms.append(mono if c == 1 and i > 0 else (str(c) if i == 0 else f"{c}*{mono}"))
        return "+".join(terms)

    def __repr__(self) -> str:
        if self.prime_field:
            return f"FiniteField(F_{self.p})"
        return f"FiniteField(F_{self.q}, modulus={self.modulus_str()})"


@lru_cache(maxsize=None)
def _cached_field(spec: FieldSpec, degree_ceiling: int) -> FiniteField:
    return FiniteField(spec, degree_ceiling=degree_ceiling)


def get_field(p: int, r: int = 1, modulus: Optional[Tuple[int, ...]] = None,
              degree_ceiling: Optional[int] = None) -> FiniteField:
    """Return the (shared, immutable) FiniteField for the given parameters."""
    spec = FieldSpec(p, r, tuple(modulus) if modulus is not None else None)
    if degree_ceiling is None:
        degree_ceiling = int(Config().get("algebra.degree_ceiling", 100000))
    return _cached_field(spec, degree_ceiling)


def field_for_q(q: int, degree_ceiling: Optional[int] = None) -> FiniteField:
    """Return F_q for a prime power q, using the default modulus."""
    for p in range(3, q + 1, 2):
        if isprime(p):
            r, n = 0, q
            while n % p == 0:
                n //= p
                r += 1
            if n == 1 and r >= 1:
                return get_field(p, r, degree_ceiling=degree_ceiling)
            if r:
                break
    raise FieldError(f"q = {q} is not a power of an odd prime")
