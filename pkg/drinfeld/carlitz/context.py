"""
DRINFELD Carlitz Context

Memoization of Carlitz polynomials, rescaled parameters and Goss tables
for one field. Built values are immutable; construction is serialized by
a re-entrant lock, so a context may be shared between threads.
"""

import threading
from typing import Dict, List, Optional, Tuple

from ..algebra.field import FiniteField
from ..algebra.poly import Poly, monic_polys
from ..algebra.scalar import Scalar
from ..core.logger import Logger
from ..series.useries import USeries
from .additive import AdditivePoly, carlitz_poly
from .expansion import u_scale_power
from .goss import GossTable, goss_table, lattice_tag, period_alpha, torsion_alpha


class CarlitzContext:
    """Per-field cache for the Carlitz layer."""

    def __init__(self, field: FiniteField):
        self.field = field
        self.logger = Logger("carlitz")
        self._lock = threading.RLock()
        self._rho: Dict[Poly, AdditivePoly] = {}
        self._powers: Dict[Tuple[Poly, int], USeries] = {}
        self._period: Optional[GossTable] = None
        self._torsion: Dict[Tuple[Poly, Optional[int]], GossTable] = {}
        self._monics: Dict[int, Tuple[Poly, ...]] = {}

    def rho(self, a: Poly) -> AdditivePoly:
        with self._lock:
            if a not in self._rho:
                self._rho[a] = carlitz_poly(a)
            return self._rho[a]

    def monics(self, degree: int) -> Tuple[Poly, ...]:
        with self._lock:
            if degree not in self._monics:
                self._monics[degree] = tuple(monic_polys(self.field, degree))
            return self._monics[degree]

    def monics_below(self, prec: int, m: int = 1) -> List[Poly]:
        """Monic a with m·q^deg(a) < prec, i.e. those whose u(az)^m is visible."""
        out: List[Poly] = []
        d = 0
        while m * self.field.q ** d < prec:
            out.extend(self.monics(d))
            d += 1
        return out

    def u_power(self, a: Poly, m: int, prec: int) -> USeries:
        """u(az)^m to precision prec."""
        key = (a, m)
        with self._lock:
            cached = self._powers.get(key)
            if cached is not None and cached.prec >= prec:
                return cached.truncate(prec)
            series = u_scale_power(self.rho(a), m, prec)
            self._powers[key] = series
            return series

    def u_scale(self, a: Poly, prec: int) -> USeries:
        return self.u_power(a, 1, prec)

    def period_table(self, kmax: int) -> GossTable:
        """Goss table of the period lattice A (α_j = 1/D_j)."""
        with self._lock:
            if self._period is None or self._period.kmax < kmax:
                depth = 0
                while self.field.q ** (depth + 1) < kmax:
                    depth += 1
                self.logger.debug("building period Goss table", kmax=kmax, depth=depth)
                self._period = goss_table(period_alpha(self.field, depth), kmax, lattice=lattice_tag(None))
            return self._period

    def torsion_table(self, P: Poly, kmax: int, max_degree: Optional[int] = None,
                      scaled: bool = True) -> GossTable:
        """Goss table of ker ρ_P; scaled tables hold H_j(X) = G_j(P X)."""
        key = (P, max_degree if scaled else -1)
        with self._lock:
            table = self._torsion.get(key)
            if table is None or table.kmax < kmax:
                self.logger.debug("building torsion Goss table", P=str(P), kmax=kmax, max_degree=max_degree)
                table = goss_table(
                    torsion_alpha(P), kmax, lattice=lattice_tag(P),
                    scale=Scalar.integral(P) if scaled else None,
                    max_degree=max_degree if scaled else None,
                )
                self._torsion[key] = table
            return table


_contexts: Dict[FiniteField, CarlitzContext] = {}
_contexts_lock = threading.Lock()


def get_context(field: FiniteField) -> CarlitzContext:
    """Shared context for a field."""
    with _contexts_lock:
        ctx = _contexts.get(field)
        if ctx is None:
            ctx = CarlitzContext(field)
            _contexts[field] = ctx
        return ctx
