"""
DRINFELD Algebra Components

Exact arithmetic shared by every other layer:
- F_q with q = p^r (FieldSpec, FiniteField)
- A = F_q[T] (Poly)
- K = F_q(T) (Scalar)
- polynomials over K in an auxiliary variable (ScalarPoly)
- the canonical text encoding (parse_poly, parse_scalar)
"""

from .field import FieldSpec, FiniteField, get_field, field_for_q, smallest_irreducible_modulus
from .poly import Poly, monic_polys, monic_polys_up_to, bracket, ensure_poly
from .scalar import Scalar, as_scalar
from .kpoly import ScalarPoly, format_x_poly
from .text import parse_poly, parse_scalar

__all__ = [
    'FieldSpec',
    'FiniteField',
    'get_field',
    'field_for_q',
    'smallest_irreducible_modulus',
    'Poly',
    'monic_polys',
    'monic_polys_up_to',
    'bracket',
    'ensure_poly',
    'Scalar',
    'as_scalar',
    'ScalarPoly',
    'format_x_poly',
    'parse_poly',
    'parse_scalar',
]
