"""
DRINFELD - Exact computations with Drinfeld modular forms over F_q[T]

A computer-algebra library and verification harness organised in layers:
1. Algebra - F_q, A = F_q[T] and K = F_q(T)
2. Series - graded truncated u-expansions with a precision ledger
3. Carlitz - Carlitz module, u(az) and Goss polynomial tables
4. Forms - generator forms g_1, g_d, h, Delta, E, E_P, Delta_T, Delta_W
5. Hecke - T_p, U_p, delta_1 / delta_P and Frobenius twisting
6. Level - registry of forms with Atkin-Lehner actions, traces, old/new
7. Spectral - Hecke matrices on monomial bases and their checks
8. CLI - reproducible verification suites with JSON reports

Version: 1.0.0
Author: DRINFELD Development Team
"""

__version__ = "1.0.0"
__author__ = "DRINFELD Development Team"
