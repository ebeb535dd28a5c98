"""
DRINFELD Oldform / Newform Membership

A form of level n is P-new when both traces Tr and Tr' to n/P vanish,
and new when it is P-new for every P | n. Exact zeros come from the
symbolic layer; a nonzero trace is confirmed on its series, and a trace
that is only available as a series gives at best a verdict to precision.
"""

from dataclasses import dataclass
from typing import List, Optional

from ..algebra.poly import Poly
from ..core.exceptions import LevelError, UnknownActionError
from ..core.logger import Logger
from ..core.models import MembershipVerdict
from ..spectral.basis import dimension_formula
from .actions import TraceResult, trace, trace_prime
from .divisors import is_squarefree_level, prime_divisors
from .expr import FormExpr
from .registry import FormRegistry

_logger = Logger("level")


@dataclass(frozen=True)
class Membership:
    verdict: MembershipVerdict
    prime: Optional[Poly] = None
    prec: Optional[int] = None
    witness: Optional[int] = None
    detail: str = ""

    @property
    def yes(self) -> bool:
        return self.verdict in (MembershipVerdict.YES_EXACT, MembershipVerdict.YES_TO_PRECISION)

    def __str__(self) -> str:
        text = self.verdict.value
        if self.verdict == MembershipVerdict.YES_TO_PRECISION:
            text += f"({self.prec})"
        if self.witness is not None:
            text += f" witness u^{self.witness}"
        if self.prime is not None:
            text += f" at {self.prime}"
        return text


def _judge(registry: FormRegistry, result: TraceResult, prec: int, label: str) -> Membership:
    P = result.prime
    if result.is_exact_zero():
        return Membership(MembershipVerdict.YES_EXACT, P, detail=f"{label} is exactly zero")
    series = result.to_series(registry, prec)
    if not series.is_zero():
        return Membership(MembershipVerdict.NO, P, prec, series.order,
                          detail=f"{label} has a nonzero coefficient")
    return Membership(MembershipVerdict.YES_TO_PRECISION, P, series.prec,
                      detail=f"{label} vanishes below u^{series.prec}")


def _combine(parts: List[Membership], prime: Optional[Poly] = None) -> Membership:
    for m in parts:
        if m.verdict == MembershipVerdict.NO:
            return m
    for m in parts:
        if m.verdict == MembershipVerdict.UNDETERMINED:
            return m
    if all(m.verdict == MembershipVerdict.YES_EXACT for m in parts):
        return Membership(MembershipVerdict.YES_EXACT, prime, detail="; ".join(m.detail for m in parts))
    prec = min(m.prec for m in parts if m.verdict == MembershipVerdict.YES_TO_PRECISION)
    return Membership(MembershipVerdict.YES_TO_PRECISION, prime, prec, detail="; ".join(m.detail for m in parts))


def is_p_new(registry: FormRegistry, e: FormExpr, P: Poly, level: Optional[Poly] = None,
             prec: int = 40) -> Membership:
    """e lies in the kernel of both traces from level n to n/P."""
    n = registry.level_of(e) if level is None else level
    try:
        parts = [
            _judge(registry, trace(registry, e, P, n, prec), prec, "Tr"),
            _judge(registry, trace_prime(registry, e, P, n, prec), prec, "Tr'"),
        ]
    except UnknownActionError as err:
        _logger.debug("p-new test undetermined", P=str(P), reason=str(err))
        return Membership(MembershipVerdict.UNDETERMINED, P, detail=str(err))
    return _combine(parts, P)


def is_p_old(registry: FormRegistry, e: FormExpr, P: Poly, level: Optional[Poly] = None) -> Membership:
    """e lies in δ_1(M(n/P)) + δ_P(M(n/P)) when each handle visibly does."""
    n = registry.level_of(e) if level is None else level
    if not P.divides(n):
        raise LevelError(f"{P} does not divide the level {n}")
    lower = n // P
    for h in e.handles():
        d = h.d // P if P.divides(h.d) else h.d
        if not (registry.entry(h.base).level * d).divides(lower):
            return Membership(MembershipVerdict.UNDETERMINED, P,
                              detail=f"{h} is not visibly of level {lower} up to δ_{P}")
    return Membership(MembershipVerdict.YES_EXACT, P, detail=f"every handle is δ_1 or δ_{P} of level {lower}")


def _level_one_space_is_zero(registry: FormRegistry, e: FormExpr, level: Poly) -> bool:
    return level.degree >= 1 and level.is_irreducible() and dimension_formula(registry.q, e.k, e.l) == 0


def is_in_old(registry: FormRegistry, e: FormExpr, level: Poly, prec: int = 40) -> Membership:
    """e lies in Σ_{P | n} (δ_1 + δ_P)(level n/P) when each handle visibly does.

    At a prime level P the old space is δ_1 M + δ_P M with M = M_{k,l}(GL_2(A)),
    so a nonzero form is not old when M = 0.
    """
    if e.is_zero():
        return Membership(MembershipVerdict.YES_EXACT, detail="zero form")
    for h in e.handles():
        own = registry.handle_level(h)
        if not own.divides(level):
            raise LevelError(f"{h} has level {own}, not dividing {level}")
        if own.monic() != level.monic():
            continue
        if not h.d.is_one():
            continue
        if registry.entry(h.base).old is not None:
            continue
        if _level_one_space_is_zero(registry, e, level):
            series = registry.series_of(e, prec)
            if not series.is_zero():
                return Membership(MembershipVerdict.NO, level, prec, series.order,
                                  detail=f"M_({e.k},{e.l}) has dimension 0 at level one")
        return Membership(MembershipVerdict.UNDETERMINED, detail=f"{h} is not visibly old at level {level}")
    return Membership(MembershipVerdict.YES_EXACT, detail="every handle comes from lower level")


def is_in_new(registry: FormRegistry, e: FormExpr, level: Poly, prec: int = 40) -> Membership:
    """P-new for every prime P | n; n must be squarefree."""
    if not is_squarefree_level(level):
        raise LevelError(f"newform membership needs a squarefree level, got {level}")
    parts = [is_p_new(registry, e, P, level, prec) for P in prime_divisors(level)]
    return _combine(parts)
