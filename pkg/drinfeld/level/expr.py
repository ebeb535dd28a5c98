"""
DRINFELD Form Expressions

A Handle names δ_d φ for a registered base form φ and a monic d; a
FormExpr is a finite K-linear combination of handles of one weight and
type. The empty combination is the exact zero.
"""

from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Tuple

from ..algebra.field import FiniteField
from ..algebra.poly import Poly
from ..algebra.scalar import Scalar, ScalarLike, as_scalar
from ..core.exceptions import GradingError, LevelError


@dataclass(frozen=True)
class Handle:
    """δ_d applied to the base form called `base`."""

    base: str
    d: Poly

    def __post_init__(self):
        if not self.d.is_monic():
            raise LevelError(f"degeneracy index must be monic, got {self.d}")

    def shifted(self, e: Poly) -> "Handle":
        """δ_e δ_d φ = δ_(ed) φ."""
        return Handle(self.base, self.d * e)

    def sort_key(self):
        return (self.base, self.d.sort_key())

    def __str__(self) -> str:
        if self.d.is_one():
            return self.base
        return f"delta_({self.d}) {self.base}"


class FormExpr:
    """Σ c_i · handle_i with every handle of weight k and type l."""

    __slots__ = ("field", "k", "l", "terms")

    def __init__(self, field: FiniteField, k: int, l: int, terms: Optional[Mapping[Handle, ScalarLike]] = None):
        self.field = field
        self.k = k
        self.l = l
        clean: Dict[Handle, Scalar] = {}
        for h, c in (terms or {}).items():
            c = as_scalar(field, c)
            if not c.is_zero():
                clean[h] = c
        self.terms = clean

    @classmethod
    def zero(cls, field: FiniteField, k: int, l: int) -> "FormExpr":
        return cls(field, k, l)

    @classmethod
    def single(cls, field: FiniteField, k: int, l: int, handle: Handle, coeff: ScalarLike = 1) -> "FormExpr":
        return cls(field, k, l, {handle: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> List[Tuple[Handle, Scalar]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def handles(self) -> Iterator[Handle]:
        return iter(self.terms)

    def coefficient(self, handle: Handle) -> Scalar:
        return self.terms.get(handle, Scalar.zero(self.field))

    def _check(self, other: "FormExpr") -> None:
        if other.field is not self.field:
            raise GradingError("expressions live over different fields")
        if (self.k, self.l) != (other.k, other.l):
            raise GradingError(f"cannot combine ({self.k},{self.l}) with ({other.k},{other.l})")

    def __add__(self, other: "FormExpr") -> "FormExpr":
        self._check(other)
        out = dict(self.terms)
        for h, c in other.terms.items():
            out[h] = out[h] + c if h in out else c
        return FormExpr(self.field, self.k, self.l, out)

    def __neg__(self) -> "FormExpr":
        return FormExpr(self.field, self.k, self.l, {h: -c for h, c in self.terms.items()})

    def __sub__(self, other: "FormExpr") -> "FormExpr":
        return self + (-other)

    def scale(self, c: ScalarLike) -> "FormExpr":
        c = as_scalar(self.field, c)
        return FormExpr(self.field, self.k, self.l, {h: a * c for h, a in self.terms.items()})

    __rmul__ = scale

    def linear_map(self, image: Callable[[Handle], "FormExpr"], k: Optional[int] = None,
                   l: Optional[int] = None) -> "FormExpr":
        """Extend a map on handles linearly."""
        acc = FormExpr.zero(self.field, self.k if k is None else k, self.l if l is None else l)
        for h, c in self.items():
            acc = acc + image(h).scale(c)
        return acc

    def shifted(self, e: Poly) -> "FormExpr":
        """δ_e applied to every handle."""
        return FormExpr(self.field, self.k, self.l, {h.shifted(e): c for h, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormExpr):
            return NotImplemented
        return (self.k, self.l) == (other.k, other.l) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.k, self.l, frozenset(self.terms.items())))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for h, c in self.items():
            if c.is_one():
                parts.append(str(h))
            else:
                text = str(c)
                if "+" in text or "/" in text:
                    text = f"({text})"
                parts.append(f"{text}*{h}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"FormExpr(k={self.k}, l={self.l}, {self})"
