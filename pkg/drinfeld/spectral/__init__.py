"""
DRINFELD Spectral Components

Monomial bases of level-one spaces, exact Hecke matrices over K,
Berkowitz characteristic polynomials, Krylov minimal polynomials and the
spectral verdicts built on them.
"""

from .linalg import ScalarMatrix, berkowitz_vector, charpoly, determinant, minpoly, is_squarefree, vector_annihilator
from .basis import MonomialBasis, dimension_formula, enumerate_basis, monomial_label, monomial_series, decompose
from .report import (
    HeckeReport,
    matrix_on_span,
    conjecture_checks,
    matrix_precision,
    hecke_matrix,
    lambda_P_check,
    eigenvalue_from_coefficient,
    sweep,
    span_report,
    level_T_weight_q_plus_one,
)

__all__ = [
    'ScalarMatrix',
    'berkowitz_vector',
    'charpoly',
    'determinant',
    'minpoly',
    'is_squarefree',
    'vector_annihilator',
    'MonomialBasis',
    'dimension_formula',
    'enumerate_basis',
    'monomial_label',
    'monomial_series',
    'decompose',
    'HeckeReport',
    'matrix_on_span',
    'conjecture_checks',
    'matrix_precision',
    'hecke_matrix',
    'lambda_P_check',
    'eigenvalue_from_coefficient',
    'sweep',
    'span_report',
    'level_T_weight_q_plus_one',
]
