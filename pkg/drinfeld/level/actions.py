"""
DRINFELD Level Operators

Symbolic operators on FormExpr over a FormRegistry:

    δ_{P^i d'} φ | W_{P^α} = P^(i(2l-k)) δ_{P^(α-i) d'} φ      (P prime to the level of φ)
    δ_d φ | W_P            = δ_d (φ | W_P)                      (P exactly divides the level of φ)
    U_P δ_d φ              = 0                                  (P | d)
    U_P δ_d φ              = δ_d T_P φ - P^(k-l) δ_(dP) φ       (P prime to d and to the level of φ)
    U_P δ_d φ              = δ_d U_P φ                          (P prime to d, P | level of φ)

and the trace to level n/P:

    Tr  f = f + P^(-l) U_P(f | W_P)                                      (P ∥ n)
    Tr' f = Tr(f | W_P)
    Tr  f = P^(-l-(α-1)(2l-k)) U_P(f | W_(P^α)) | W_(P^(α-1))             (P^α ∥ n, α >= 2)

When the registry cannot close U_P symbolically, the trace falls back to
a series of certified precision.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from ..algebra.poly import Poly
from ..algebra.scalar import Scalar
from ..core.exceptions import LevelError, NotIrreducibleError, UnknownActionError
from ..core.logger import Logger
from ..hecke.operators import PrimeP, op_U
from ..series.useries import SeriesComparison, USeries
from .divisors import valuation
from .expr import FormExpr, Handle
from .registry import FormRegistry

_logger = Logger("level")


def _check_prime(P: Poly) -> None:
    if not P.is_monic() or P.degree < 1 or not P.is_irreducible():
        raise NotIrreducibleError(f"{P} is not a monic irreducible polynomial")


def register_delta_images(registry: FormRegistry, phi: Handle, P: Poly) -> Tuple[Handle, Handle]:
    """(δ_1 φ, δ_P φ) for φ of level m with P prime to m.

    Their W_P action is δ_1φ|W_P = δ_Pφ and δ_Pφ|W_P = P^(2l-k) δ_1φ.
    """
    _check_prime(P)
    level = registry.handle_level(phi)
    if P.divides(level):
        raise LevelError(f"{P} divides the level {level} of {phi}")
    return phi, phi.shifted(P)


# Atkin-Lehner

def _w_handle(registry: FormRegistry, h: Handle, k: int, l: int, P: Poly, alpha: int, n: Poly) -> FormExpr:
    entry = registry.entry(h.base)
    field = registry.field
    if not P.divides(entry.level):
        i = valuation(h.d, P)
        if i > alpha:
            raise LevelError(f"{h} does not have level dividing {n}")
        rest = h.d // (P ** i)
        coeff = Scalar.integral(P) ** (i * (2 * l - k))
        return FormExpr.single(field, k, l, Handle(h.base, rest * P ** (alpha - i)), coeff)
    if alpha != 1 or P.divides(h.d):
        raise UnknownActionError(f"no W_{P}^{alpha} data for {h}")
    image = registry.w_image(h.base, P)
    if image is not None:
        return image.shifted(h.d)
    if entry.old is not None:
        return w_action(registry, entry.old.shifted(h.d), P, n)
    raise UnknownActionError(f"no W_{P} data for {h.base}")


def w_action(registry: FormRegistry, e: FormExpr, P: Poly, level: Optional[Poly] = None) -> FormExpr:
    """e | W_(P^α) at the given level (default: the level of e), P^α ∥ level."""
    n = registry.level_of(e) if level is None else level
    if e.is_zero():
        return e
    alpha = valuation(n, P)
    if alpha == 0:
        raise LevelError(f"{P} does not divide the level {n}")
    return e.linear_map(lambda h: _w_handle(registry, h, e.k, e.l, P, alpha, n))


# Hecke

def _t_base(registry: FormRegistry, name: str, P: Poly) -> FormExpr:
    image = registry.t_image(name, P)
    if image is not None:
        return image
    old = registry.entry(name).old
    if old is not None:
        return t_action(registry, old, P)
    raise UnknownActionError(f"no T_{P} data for {name}")


def t_action(registry: FormRegistry, e: FormExpr, P: Poly) -> FormExpr:
    """T_P e for P prime to the level of e; T_P commutes with every δ_d."""
    n = registry.level_of(e)
    if P.divides(n):
        raise LevelError(f"T_{P} is undefined at level {n}; use U")
    return e.linear_map(lambda h: _t_base(registry, h.base, P).shifted(h.d))


def _u_handle(registry: FormRegistry, h: Handle, k: int, l: int, P: Poly) -> FormExpr:
    entry = registry.entry(h.base)
    field = registry.field
    if P.divides(h.d):
        return FormExpr.zero(field, k, l)
    if not P.divides(entry.level):
        t = _t_base(registry, h.base, P).shifted(h.d)
        tail = FormExpr.single(field, k, l, h.shifted(P), Scalar.integral(P) ** (k - l))
        return t - tail
    image = registry.u_image(h.base, P)
    if image is not None:
        return image.shifted(h.d)
    if entry.old is not None:
        return u_action(registry, entry.old.shifted(h.d), P)
    raise UnknownActionError(f"no U_{P} data for {h.base}")


def u_action(registry: FormRegistry, e: FormExpr, P: Poly) -> FormExpr:
    """U_P e, exactly, from the registry rules."""
    return e.linear_map(lambda h: _u_handle(registry, h, e.k, e.l, P))


def u_or_series(registry: FormRegistry, e: FormExpr, P: Poly, prec: int) -> Tuple[Optional[FormExpr], Optional[USeries]]:
    """U_P e as (exact expression, None), or (None, series to precision prec)."""
    try:
        return u_action(registry, e, P), None
    except UnknownActionError as err:
        _logger.debug("U falls back to series", P=str(P), reason=str(err))
        prime = PrimeP(P, registry.factory.ctx)
        return None, op_U(registry.series_of(e, prec * prime.qd), prime, prec)


# Traces

@dataclass(frozen=True)
class TraceResult:
    """Trace to level n/P: an exact expression when the registry closes it, else a series."""

    prime: Poly
    level: Poly
    expr: Optional[FormExpr] = None
    series: Optional[USeries] = None

    @property
    def exact(self) -> bool:
        return self.expr is not None

    def is_exact_zero(self) -> bool:
        return self.expr is not None and self.expr.is_zero()

    def to_series(self, registry: FormRegistry, prec: int) -> USeries:
        if self.expr is not None:
            return registry.series_of(self.expr, prec)
        return self.series.truncate(prec)

    def __str__(self) -> str:
        if self.expr is not None:
            return str(self.expr)
        return str(self.series)


def _alpha_one(registry: FormRegistry, e: FormExpr, P: Poly, level: Optional[Poly]) -> Poly:
    _check_prime(P)
    n = registry.level_of(e) if level is None else level
    alpha = valuation(n, P)
    if alpha == 0:
        raise LevelError(f"{P} does not divide the level {n}")
    if alpha > 1:
        raise LevelError(f"{P}^2 divides the level {n}; use trace_high_alpha")
    return n


def trace(registry: FormRegistry, e: FormExpr, P: Poly, level: Optional[Poly] = None,
          prec: int = 40) -> TraceResult:
    """Tr f = f + P^(-l) U_P(f|W_P) from level n down to n/P."""
    n = _alpha_one(registry, e, P, level)
    w = w_action(registry, e, P, n)
    factor = Scalar.integral(P) ** (-e.l)
    exact, series = u_or_series(registry, w, P, prec)
    if exact is not None:
        return TraceResult(P, n // P, expr=e + exact.scale(factor))
    total = registry.series_of(e, prec) + series.scale(factor)
    return TraceResult(P, n // P, series=total.with_grading(level=n // P))


def trace_prime(registry: FormRegistry, e: FormExpr, P: Poly, level: Optional[Poly] = None,
                prec: int = 40) -> TraceResult:
    """Tr' f = Tr(f|W_P)."""
    n = _alpha_one(registry, e, P, level)
    return trace(registry, w_action(registry, e, P, n), P, n, prec)


def trace_series(registry: FormRegistry, e: FormExpr, P: Poly, prec: int, level: Optional[Poly] = None) -> USeries:
    """Tr f with U_P applied to the series of f|W_P, never symbolically."""
    n = _alpha_one(registry, e, P, level)
    prime = PrimeP(P, registry.factory.ctx)
    w = w_action(registry, e, P, n)
    u = op_U(registry.series_of(w, prec * prime.qd), prime, prec)
    return registry.series_of(e, prec) + u.scale(Scalar.integral(P) ** (-e.l))


def trace_high_alpha(registry: FormRegistry, e: FormExpr, P: Poly, level: Optional[Poly] = None) -> TraceResult:
    """Tr f = P^(-l-(α-1)(2l-k)) U_P(f|W_(P^α)) | W_(P^(α-1)) for P^α ∥ n, α >= 2."""
    _check_prime(P)
    n = registry.level_of(e) if level is None else level
    alpha = valuation(n, P)
    if alpha < 2:
        raise LevelError(f"trace_high_alpha needs P^2 | level, got level {n}")
    m = n // P
    if e.is_zero():
        return TraceResult(P, m, expr=e)
    w = w_action(registry, e, P, n)
    u = u_action(registry, w, P)
    back = w_action(registry, u, P, m) if not u.is_zero() else u
    factor = Scalar.integral(P) ** (-e.l - (alpha - 1) * (2 * e.l - e.k))
    return TraceResult(P, m, expr=back.scale(factor))


def high_alpha_consistency(registry: FormRegistry, e: FormExpr, P: Poly, prec: int,
                           level: Optional[Poly] = None) -> SeriesComparison:
    """U_P on f|W_(P^α): symbolic rules against the series operator."""
    n = registry.level_of(e) if level is None else level
    prime = PrimeP(P, registry.factory.ctx)
    w = w_action(registry, e, P, n)
    symbolic = registry.series_of(u_action(registry, w, P), prec)
    numeric = op_U(registry.series_of(w, prec * prime.qd), prime, prec)
    return symbolic.compare(numeric)


def hecke_at(registry: FormRegistry, e: FormExpr, P: Poly, level: Optional[Poly] = None) -> FormExpr:
    """U_P when P divides the level, T_P otherwise."""
    n = registry.level_of(e) if level is None else level
    if P.divides(n):
        return u_action(registry, e, P)
    return t_action(registry, e, P)
