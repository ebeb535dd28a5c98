"""
DRINFELD Level Checks

Structural identities of the level layer, each returning a
SeriesComparison or an exact boolean with the two sides:

- involution:        W_(P^α) W_(P^α) = P^(α(2l-k))
- cross-commutation: W_P1 W_P2 = W_P2 W_P1
- U-W commutation:   U_P1(f|W_P2) = (U_P1 f)|W_P2, U_P1 applied to series
- exact-zero soundness of traces
- Hecke stability of old/new membership
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from ..algebra.poly import Poly
from ..algebra.scalar import Scalar
from ..hecke.operators import PrimeP, op_T, op_U
from ..series.useries import SeriesComparison, USeries
from .actions import hecke_at, trace, trace_prime, trace_series, u_action, w_action
from .divisors import valuation
from .expr import FormExpr
from .membership import Membership, is_in_new, is_in_old
from .registry import FormRegistry


@dataclass(frozen=True)
class ExactCheck:
    """Exact comparison of two expressions, with a series confirmation when requested."""

    holds: bool
    lhs: FormExpr
    rhs: FormExpr
    series: Optional[SeriesComparison] = None

    def __bool__(self) -> bool:
        return self.holds and (self.series is None or self.series.equal)


def _confirm(registry: FormRegistry, lhs: FormExpr, rhs: FormExpr, prec: Optional[int]) -> Optional[SeriesComparison]:
    if prec is None:
        return None
    return registry.series_of(lhs, prec).compare(registry.series_of(rhs, prec))


def involution_check(registry: FormRegistry, e: FormExpr, P: Poly, level: Optional[Poly] = None,
                     prec: Optional[int] = None) -> ExactCheck:
    """e|W|W against P^(α(2l-k))·e."""
    n = registry.level_of(e) if level is None else level
    alpha = valuation(n, P)
    lhs = w_action(registry, w_action(registry, e, P, n), P, n)
    rhs = e.scale(Scalar.integral(P) ** (alpha * (2 * e.l - e.k)))
    return ExactCheck(lhs == rhs, lhs, rhs, _confirm(registry, lhs, rhs, prec))


def cross_commutation_check(registry: FormRegistry, e: FormExpr, P1: Poly, P2: Poly,
                            level: Optional[Poly] = None, prec: Optional[int] = None) -> ExactCheck:
    """W_P1 W_P2 e against W_P2 W_P1 e."""
    n = registry.level_of(e) if level is None else level
    lhs = w_action(registry, w_action(registry, e, P2, n), P1, n)
    rhs = w_action(registry, w_action(registry, e, P1, n), P2, n)
    return ExactCheck(lhs == rhs, lhs, rhs, _confirm(registry, lhs, rhs, prec))


def u_w_commutation_check(registry: FormRegistry, e: FormExpr, P1: Poly, P2: Poly, prec: int,
                          level: Optional[Poly] = None) -> SeriesComparison:
    """U_P1 on the series of e|W_P2 against the series of (U_P1 e)|W_P2."""
    n = registry.level_of(e) if level is None else level
    prime = PrimeP(P1, registry.factory.ctx)
    lhs = op_U(registry.series_of(w_action(registry, e, P2, n), prec * prime.qd), prime, prec)
    rhs = registry.series_of(w_action(registry, u_action(registry, e, P1), P2, n), prec)
    return lhs.compare(rhs)


def u_symbolic_check(registry: FormRegistry, e: FormExpr, P: Poly, prec: int) -> SeriesComparison:
    """Symbolic U_P against U_P on the series."""
    prime = PrimeP(P, registry.factory.ctx)
    lhs = op_U(registry.series_of(e, prec * prime.qd), prime, prec)
    rhs = registry.series_of(u_action(registry, e, P), prec)
    return lhs.compare(rhs)


def series_commutators(f: USeries, P1: PrimeP, P2: PrimeP, out_prec: int,
                       t_second: bool = False) -> SeriesComparison:
    """U_P1 U_P2 f against U_P2 U_P1 f; with t_second, U_P1 T_P2 f against T_P2 U_P1 f."""
    second = op_T if t_second else op_U
    mid1 = out_prec * P1.qd
    mid2 = out_prec * P2.qd
    lhs = op_U(second(f, P2, mid1), P1, out_prec)
    rhs = second(op_U(f, P1, mid2), P2, out_prec)
    return lhs.compare(rhs)


def zero_soundness_check(registry: FormRegistry, e: FormExpr, P: Poly, prec: int,
                         level: Optional[Poly] = None, primed: bool = False) -> Tuple[bool, SeriesComparison]:
    """A trace reported exactly zero must also vanish on the series route.

    Returns (trace exactly zero, comparison of the series trace with 0).
    """
    n = registry.level_of(e) if level is None else level
    if primed:
        result = trace_prime(registry, e, P, n, prec)
        source = w_action(registry, e, P, n)
    else:
        result = trace(registry, e, P, n, prec)
        source = e
    series = trace_series(registry, source, P, prec, n)
    zero = USeries.zero(registry.field, series.prec, weight=series.weight, type=series.type)
    return result.is_exact_zero(), series.compare(zero)


def stability_check(registry: FormRegistry, e: FormExpr, P: Poly, level: Poly, prec: int = 40,
                    new: bool = True) -> Tuple[FormExpr, Membership]:
    """Apply U_P (P | n) or T_P (P ∤ n) and test the image for the same space."""
    image = hecke_at(registry, e, P, level)
    if new:
        return image, is_in_new(registry, image, level, prec)
    return image, is_in_old(registry, image, level, prec)
