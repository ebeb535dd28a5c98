"""
DRINFELD Level Components

Forms of level n as linear combinations of handles δ_d φ:
- FormRegistry of base forms with their W, U and T data
- Atkin-Lehner and Hecke operators, traces to lower level
- oldform/newform membership with graded verdicts
- structural identity checks
"""

from .expr import Handle, FormExpr
from .divisors import valuation, factor_level, prime_divisors, is_squarefree_level
from .registry import (
    LEVEL_ONE,
    EISENSTEIN,
    DELTA_T,
    DELTA_W,
    POWER,
    PRODUCT,
    BaseEntry,
    FormRegistry,
    get_registry,
)
from .actions import (
    register_delta_images,
    w_action,
    t_action,
    u_action,
    u_or_series,
    TraceResult,
    trace,
    trace_prime,
    trace_series,
    trace_high_alpha,
    high_alpha_consistency,
    hecke_at,
)
from .membership import Membership, is_p_new, is_p_old, is_in_old, is_in_new
from .checks import (
    ExactCheck,
    involution_check,
    cross_commutation_check,
    u_w_commutation_check,
    u_symbolic_check,
    series_commutators,
    zero_soundness_check,
    stability_check,
)

__all__ = [
    'Handle',
    'FormExpr',
    'valuation',
    'factor_level',
    'prime_divisors',
    'is_squarefree_level',
    'LEVEL_ONE',
    'EISENSTEIN',
    'DELTA_T',
    'DELTA_W',
    'POWER',
    'PRODUCT',
    'BaseEntry',
    'FormRegistry',
    'get_registry',
    'register_delta_images',
    'w_action',
    't_action',
    'u_action',
    'u_or_series',
    'TraceResult',
    'trace',
    'trace_prime',
    'trace_series',
    'trace_high_alpha',
    'high_alpha_consistency',
    'hecke_at',
    'Membership',
    'is_p_new',
    'is_p_old',
    'is_in_old',
    'is_in_new',
    'ExactCheck',
    'involution_check',
    'cross_commutation_check',
    'u_w_commutation_check',
    'u_symbolic_check',
    'series_commutators',
    'zero_soundness_check',
    'stability_check',
]
