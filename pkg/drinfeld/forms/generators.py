"""
DRINFELD Generator Forms

u-expansions of the generators used throughout the toolkit:
- g_1, g_d and the normalized Eisenstein builder
- the discriminant Δ and the form h
- E = Σ a·u(az) and its level-P variant E_P = E - P·E(Pz)
- Δ_T, Δ_W of level T

Sums over monic a are taken directly on the sparse expansions u(az)^m;
restricting to multiples of P gives g_1(Pz) and E(Pz) without a general
substitution.
"""

import logging
import re
import threading
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

from ..algebra.field import FiniteField
from ..algebra.poly import Poly, bracket
from ..algebra.scalar import Scalar, ScalarLike, as_scalar
from ..algebra.text import parse_poly
from ..carlitz.context import CarlitzContext, get_context
from ..core.exceptions import GradingError, NotIrreducibleError
from ..core.logger import Logger
from ..series.useries import SeriesComparison, USeries

logger = logging.getLogger(__name__)

GENERATOR_NAMES = ("g1", "gd", "h", "Delta", "E", "E_P", "Delta_T", "Delta_W")

_GENERATOR_PATTERN = re.compile(r"^(g1|h|Delta_T|Delta_W|Delta|E)$|^gd[:(](\d+)\)?$|^E_P[:(](.+?)\)?$")


@dataclass(frozen=True)
class GeneratorId:
    """A named generator form: g1, gd(d), h, Delta, E, E_P(P), Delta_T, Delta_W."""

    name: str
    d: Optional[int] = None
    P: Optional[Poly] = None

    def __post_init__(self):
        if self.name not in GENERATOR_NAMES:
            raise GradingError(f"unknown generator {self.name!r}")
        if self.name == "gd" and (self.d is None or self.d < 1):
            raise GradingError("gd needs d >= 1")
        if self.name == "E_P" and self.P is None:
            raise GradingError("E_P needs a prime P")

    def weight(self, q: int) -> int:
        return {
            "g1": q - 1,
            "gd": q ** (self.d or 1) - 1,
            "h": q + 1,
            "Delta": q * q - 1,
            "E": 2,
            "E_P": 2,
            "Delta_T": q - 1,
            "Delta_W": q - 1,
        }[self.name]

    @property
    def type(self) -> int:
        return 1 if self.name in ("h", "E", "E_P") else 0

    def level(self, field: FiniteField) -> Poly:
        if self.name == "E_P":
            return self.P
        if self.name in ("Delta_T", "Delta_W"):
            return Poly.T(field)
        return Poly.one(field)

    def __str__(self) -> str:
        if self.name == "gd":
            return f"gd({self.d})"
        if self.name == "E_P":
            return f"E_P({self.P})"
        return self.name


def parse_generator(field: FiniteField, text: str) -> GeneratorId:
    """Parse 'h', 'Delta', 'gd:2', 'E_P:T+1', 'E_P(T+1)', ..."""
    match = _GENERATOR_PATTERN.match(text.strip())
    if not match:
        raise GradingError(f"unknown generator {text!r}; expected one of {', '.join(GENERATOR_NAMES)}")
    simple, d, P = match.groups()
    if simple:
        return GeneratorId(simple)
    if d is not None:
        return GeneratorId("gd", d=int(d))
    return GeneratorId("E_P", P=parse_poly(field, P))


def _add_into(acc: Dict[int, Scalar], series: USeries, coeff: Optional[Poly] = None) -> None:
    for i, c in series.coeffs.items():
        t = c if coeff is None else c * coeff
        acc[i] = acc[i] + t if i in acc else t


class FormFactory:
    """Builds and caches generator expansions for one field."""

    def __init__(self, field: FiniteField, context: Optional[CarlitzContext] = None):
        self.field = field
        self.q = field.q
        self.ctx = context or get_context(field)
        self.logger = Logger("forms")
        self._cache: Dict[Tuple[GeneratorId, int], USeries] = {}
        self._lock = threading.RLock()

    # Sums over monic a

    def power_sum(self, m: int, prec: int, weighted: bool = False,
                  keep: Optional[Callable[[Poly], bool]] = None) -> USeries:
        """Σ over monic a (optionally filtered) of u(az)^m, times a when weighted."""
        acc: Dict[int, Scalar] = {}
        for a in self.ctx.monics_below(prec, m):
            if keep is not None and not keep(a):
                continue
            _add_into(acc, self.ctx.u_power(a, m, prec), a if weighted else None)
        return USeries(self.field, acc, prec, type=m)

    def multiples_of(self, P: Poly) -> Callable[[Poly], bool]:
        return lambda a: P.divides(a)

    def coprime_to(self, P: Poly) -> Callable[[Poly], bool]:
        return lambda a: not P.divides(a)

    # Generators

    def build(self, gid: GeneratorId, prec: int) -> USeries:
        """Expansion of a named generator, cached per precision."""
        key = (gid, prec)
        # reentrant: h builds Delta_W and E_T through this method
        with self._lock:
            cached = self._cache.get(key)
            if cached is not None:
                return cached
            for (other, other_prec), series in self._cache.items():
                if other == gid and other_prec >= prec:
                    return series.truncate(prec)
            try:
                self.logger.log_step_start("build", form=str(gid), q=self.q, prec=prec)
                builders = {
                    "g1": lambda: self.build_g1(prec),
                    "gd": lambda: self.build_gd(gid.d, prec),
                    "h": lambda: self.build_h(prec),
                    "Delta": lambda: self.build_Delta(prec),
                    "E": lambda: self.build_E(prec),
                    "E_P": lambda: self.build_E_P(gid.P, prec),
                    "Delta_T": lambda: self.build_Delta_T(prec),
                    "Delta_W": lambda: self.build_Delta_W(prec),
                }
                series = builders[gid.name]()
                self._cache[key] = series
                self.logger.log_step_complete("build", form=str(gid), terms=len(series.coeffs))
                return series
            except Exception as e:
                self.logger.error(f"Error building {gid}: {e}")
                raise

    def build_E(self, prec: int) -> USeries:
        """E = Σ_{a monic} a·u(az); weight 2, type 1."""
        return self.power_sum(1, prec, weighted=True).with_grading(weight=2)

    def build_E_P(self, P: Poly, prec: int) -> USeries:
        """E_P = E - P·E(Pz) = Σ over monic a prime to P of a·u(az)."""
        if not P.is_monic() or not P.is_irreducible():
            raise NotIrreducibleError(f"E_P needs a monic irreducible P, got {P}")
        series = self.power_sum(1, prec, weighted=True, keep=self.coprime_to(P))
        return series.with_grading(weight=2, level=P)

    def _bracket_scalar(self, i: int) -> Scalar:
        return Scalar.integral(bracket(self.field, i))

    def build_g1(self, prec: int) -> USeries:
        """g_1 = 1 - [1]·Σ_a u(az)^(q-1); weight q-1, type 0."""
        s = self.power_sum(self.q - 1, prec).scale(-self._bracket_scalar(1))
        coeffs = dict(s.coeffs)
        coeffs[0] = Scalar.one(self.field)
        return USeries(self.field, coeffs, prec, weight=self.q - 1, type=0)

    def goss_sum(self, k: int, prec: int, keep: Optional[Callable[[Poly], bool]] = None) -> USeries:
        """Σ_a G_k(u(az)) for the period lattice, as Σ_m c_m Σ_a u(az)^m."""
        table = self.ctx.period_table(k)
        acc: Dict[int, Scalar] = {}
        for m, c in table[k].items():
            _add_into(acc, self.power_sum(m, prec, keep=keep).scale(c))
        return USeries(self.field, acc, prec, type=k)

    def build_eisenstein_normalized(self, k: int, prec: int, constant: Optional[ScalarLike] = None) -> USeries:
        """c - Σ_a G_k(u(az)) with G_k from the period lattice; weight k, type 0."""
        if k % (self.q - 1):
            raise GradingError(f"normalized Eisenstein series need (q-1) | k, got k={k}")
        series = -self.goss_sum(k, prec)
        coeffs = dict(series.coeffs)
        c = Scalar.zero(self.field) if constant is None else as_scalar(self.field, constant)
        if not c.is_zero():
            coeffs[0] = c
        return USeries(self.field, coeffs, prec, weight=k, type=0)

    def build_gd(self, d: int, prec: int) -> USeries:
        """g_d = (-1)^(d+1) L_d · (c - Σ_a G_(q^d-1)(u(az))), constant term 1."""
        L = Poly.one(self.field)
        for i in range(1, d + 1):
            L = L * bracket(self.field, i)
        sign = Scalar.from_int(self.field, 1 if d % 2 else -1)
        factor = sign * Scalar.integral(L)
        series = self.build_eisenstein_normalized(self.q ** d - 1, prec, constant=factor.inverse())
        return series.scale(factor)

    def build_Delta(self, prec: int) -> USeries:
        """Δ = [2]·(c - Σ_a G_(q^2-1)(u(az))) + g_1^(q+1)/[1] with c making Δ cuspidal."""
        b1, b2 = self._bracket_scalar(1), self._bracket_scalar(2)
        g1_part = (self.build_g1(prec) ** (self.q + 1)).scale(b1.inverse())
        c = -g1_part.coefficient(0) / b2
        eis = self.build_eisenstein_normalized(self.q * self.q - 1, prec, constant=c).scale(b2)
        return g1_part + eis

    def _s_and_s_t(self, prec: int) -> Tuple[USeries, USeries]:
        t = Poly.T(self.field)
        s = self.power_sum(self.q - 1, prec)
        s_t = self.power_sum(self.q - 1, prec, keep=self.multiples_of(t))
        return s, s_t

    def build_Delta_T(self, prec: int) -> USeries:
        """Δ_T = (g_1(Tz) - g_1(z))/[1] = S - S_T, level T."""
        s, s_t = self._s_and_s_t(prec)
        return (s - s_t).with_grading(weight=self.q - 1, level=Poly.T(self.field))

    def build_Delta_W(self, prec: int) -> USeries:
        """Δ_W = (T^q g_1(Tz) - T g_1(z))/[1] = 1 + T·S - T^q·S_T, level T."""
        s, s_t = self._s_and_s_t(prec)
        t = Scalar.T(self.field)
        body = s.scale(t) - s_t.scale(t.frobenius(1))
        coeffs = dict(body.coeffs)
        coeffs[0] = coeffs.get(0, Scalar.zero(self.field)) + 1
        return USeries(self.field, coeffs, prec, weight=self.q - 1, type=0, level=Poly.T(self.field))

    def build_h(self, prec: int) -> USeries:
        """h = -Δ_W·E_T; weight q+1, type 1, level one."""
        t = Poly.T(self.field)
        product = self.build(GeneratorId("Delta_W"), prec) * self.build(GeneratorId("E_P", P=t), prec)
        return (-product).with_grading(weight=self.q + 1, level=Poly.one(self.field))

    # Diagnostics

    def h_power_identity(self, prec: int) -> SeriesComparison:
        """Compare h^(q-1) with -Δ."""
        h = self.build(GeneratorId("h"), prec)
        delta = self.build(GeneratorId("Delta"), prec)
        lhs = (h ** (self.q - 1)).with_grading(weight=self.q * self.q - 1)
        return lhs.compare(-delta)


_factories: Dict[FiniteField, FormFactory] = {}
_factories_lock = threading.Lock()


def get_factory(field: FiniteField) -> FormFactory:
    with _factories_lock:
        factory = _factories.get(field)
        if factory is None:
            factory = FormFactory(field)
            _factories[field] = factory
        return factory
