"""
DRINFELD Hecke Components

T_p, U_p, δ_P and Frobenius twisting on u-expansions, the low-coefficient
binomial formula for deg P = 1, and the structural checks built on them.
"""

from .operators import (
    PrimeP,
    op_delta_P,
    op_U,
    op_T,
    scale_part,
    op_frobenius_twist,
    oracle_instances,
    op_T_low_coeff_oracle,
    oracle_agreement,
    frobenius_commutation_check,
    decomposition_check,
    degree_bound_check,
)

__all__ = [
    'PrimeP',
    'op_delta_P',
    'op_U',
    'op_T',
    'scale_part',
    'op_frobenius_twist',
    'oracle_instances',
    'op_T_low_coeff_oracle',
    'oracle_agreement',
    'frobenius_commutation_check',
    'decomposition_check',
    'degree_bound_check',
]
