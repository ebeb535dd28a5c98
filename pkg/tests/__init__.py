"""
DRINFELD Test Suite

This package contains all test modules for the DRINFELD package:
- test_algebra.py: F_q, F_q[T] and K = F_q(T) arithmetic
- test_series.py: graded u-series, precision and the cache codec
- test_carlitz.py: Carlitz module, periods and Goss polynomials
- test_forms.py: generator expansions
- test_hecke.py: T_P, U_P and δ_P
- test_level.py: Atkin-Lehner, traces, oldforms and newforms
- test_spectral.py: bases, charpoly/minpoly and Hecke reports
- test_core.py: configuration, logging and models
- test_cli.py: subcommands and verification suites
"""

__version__ = "1.0.0"
__author__ = "DRINFELD Team"
