"""
DRINFELD Form Registry

Named base forms of known level together with the exact data the level
layer needs:

- T_P images for primes P prime to the level
- U_P images and Atkin-Lehner W_P images for primes P dividing the level
- an optional expression of the base through forms of lower level

Data is derived by kind: level-one monomials take T_P from the exact
Hecke matrix on M_{k,l}(GL_2(A)); E_P carries W_P = -1, U_P = P, T_Q = Q;
Δ_T and Δ_W exchange under W_T; q^n-th powers and products inherit their
data from the factors. Registration is serialized by a lock; lookups on a
fully registered registry are read-only.
"""

import threading
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..algebra.field import FiniteField
from ..algebra.poly import Poly, bracket
from ..algebra.scalar import Scalar
from ..core.exceptions import GradingError, LevelError, NotIrreducibleError, UnknownActionError
from ..core.logger import Logger
from ..forms.generators import FormFactory, GeneratorId, get_factory, parse_generator
from ..hecke.operators import PrimeP
from ..series.useries import USeries
from ..spectral.basis import enumerate_basis, monomial_label, monomial_series
from ..spectral.linalg import ScalarMatrix
from ..spectral.report import matrix_on_span, matrix_precision
from .expr import FormExpr, Handle

LEVEL_ONE = "level_one"
EISENSTEIN = "eisenstein"
DELTA_T = "delta_t"
DELTA_W = "delta_w"
POWER = "power"
PRODUCT = "product"


@dataclass
class BaseEntry:
    """A registered base form φ of weight k, type l and level m."""

    name: str
    kind: str
    k: int
    l: int
    level: Poly
    recipe: Callable[[int], USeries]
    params: Tuple = ()
    old: Optional[FormExpr] = None


def _wrap(name: str) -> str:
    return f"({name})" if "*" in name or "^" in name else name


class FormRegistry:
    """Registry of base forms and the symbolic data attached to them."""

    def __init__(self, field: FiniteField, factory: Optional[FormFactory] = None):
        self.field = field
        self.q = field.q
        self.factory = factory or get_factory(field)
        self.logger = Logger("level")
        self._lock = threading.RLock()
        self._entries: Dict[str, BaseEntry] = {}
        self._series: Dict[str, USeries] = {}
        self._handle_series: Dict[Handle, USeries] = {}
        self._matrices: Dict[Tuple[Poly, int, int], Tuple[List[str], ScalarMatrix]] = {}

    # Lookup

    def entry(self, name: str) -> BaseEntry:
        try:
            return self._entries[name]
        except KeyError:
            raise UnknownActionError(f"no registered form named {name!r}") from None

    def __contains__(self, name: str) -> bool:
        return name in self._entries

    def names(self) -> List[str]:
        return sorted(self._entries)

    def handle(self, name: str, d: Optional[Poly] = None) -> Handle:
        self.entry(name)
        return Handle(name, Poly.one(self.field) if d is None else d)

    def expr(self, name: str, d: Optional[Poly] = None, coeff=1) -> FormExpr:
        entry = self.entry(name)
        return FormExpr.single(self.field, entry.k, entry.l, self.handle(name, d), coeff)

    def zero(self, k: int, l: int) -> FormExpr:
        return FormExpr.zero(self.field, k, l)

    def handle_level(self, h: Handle) -> Poly:
        return self.entry(h.base).level * h.d

    def level_of(self, e: FormExpr) -> Poly:
        level = Poly.one(self.field)
        for h in e.handles():
            level = level.lcm(self.handle_level(h))
        return level

    # Registration

    def _add(self, entry: BaseEntry) -> str:
        with self._lock:
            existing = self._entries.get(entry.name)
            if existing is not None:
                return existing.name
            self._entries[entry.name] = entry
            self.logger.debug("registered form", name=entry.name, kind=entry.kind, k=entry.k,
                              l=entry.l, level=str(entry.level))
            return entry.name

    def register_level_one(self, a: int, b: int, c: int) -> str:
        """g_1^a Δ^b h^c with 0 <= c <= q-2."""
        q = self.q
        if not 0 <= c <= q - 2:
            raise GradingError(f"h exponent must lie in [0, q-2], got {c}")
        k = a * (q - 1) + b * (q * q - 1) + c * (q + 1)
        name = monomial_label(a, b, c)
        recipe = lambda prec: monomial_series(self.factory, a, b, c, prec).with_grading(level=Poly.one(self.field))
        return self._add(BaseEntry(name, LEVEL_ONE, k, c, Poly.one(self.field), recipe, (a, b, c)))

    def register_eisenstein(self, P: Poly) -> str:
        """E_P = E - P·E(Pz), weight 2, type 1, level P."""
        if not P.is_monic() or P.degree < 1 or not P.is_irreducible():
            raise NotIrreducibleError(f"E_P needs a monic irreducible P, got {P}")
        text = str(P)
        name = f"E_{text}" if text.isalnum() else f"E_({text})"
        gid = GeneratorId("E_P", P=P)
        recipe = lambda prec: self.factory.build(gid, prec)
        return self._add(BaseEntry(name, EISENSTEIN, 2, 1, P, recipe, (P,)))

    def register_level_T(self) -> Tuple[str, str]:
        """Δ_T and Δ_W of level T, with their expressions through g_1(z), g_1(Tz)."""
        field = self.field
        t = Poly.T(field)
        g1 = self.register_level_one(1, 0, 0)
        b1 = Scalar.integral(bracket(field, 1))
        k = self.q - 1
        g1_1 = FormExpr.single(field, k, 0, Handle(g1, Poly.one(field)))
        g1_T = FormExpr.single(field, k, 0, Handle(g1, t))
        old_t = (g1_T - g1_1).scale(b1.inverse())
        T = Scalar.T(field)
        old_w = (g1_T.scale(T.frobenius(1)) - g1_1.scale(T)).scale(b1.inverse())
        for name, kind, old in (("Delta_T", DELTA_T, old_t), ("Delta_W", DELTA_W, old_w)):
            gid = GeneratorId(name)
            recipe = (lambda g: lambda prec: self.factory.build(g, prec))(gid)
            self._add(BaseEntry(name, kind, k, 0, t, recipe, (), old))
        return "Delta_T", "Delta_W"

    def register_generator(self, text: str) -> str:
        """Register a modular generator by name ('g1', 'h', 'Delta', 'E_P:T+1', 'Delta_T', ...)."""
        gid = parse_generator(self.field, text)
        if gid.name == "g1":
            return self.register_level_one(1, 0, 0)
        if gid.name == "h":
            return self.register_level_one(0, 0, 1)
        if gid.name == "Delta":
            return self.register_level_one(0, 1, 0)
        if gid.name == "E_P":
            return self.register_eisenstein(gid.P)
        if gid.name in ("Delta_T", "Delta_W"):
            self.register_level_T()
            return gid.name
        raise LevelError(f"{gid} is not registered as a modular form with level data")

    def register_power(self, name: str, n: int = 1) -> str:
        """φ^(q^n); same type, weight k·q^n, same level."""
        if n < 1:
            raise GradingError("Frobenius power needs n >= 1")
        base = self.entry(name)
        qn = self.q ** n
        if base.kind == LEVEL_ONE and base.params[2] == 0:
            a, b, _ = base.params
            return self.register_level_one(a * qn, b * qn, 0)
        power_name = f"{_wrap(name)}^{qn}"
        if power_name in self._entries:
            return power_name

        def recipe(prec: int, name=name, n=n, qn=qn) -> USeries:
            return self.base_series(name, -(-prec // qn)).frobenius_pow(n).truncate(prec)

        entry = BaseEntry(power_name, POWER, base.k * qn, base.l, base.level, recipe, (name, n))
        self._add(entry)
        if base.old is not None:
            entry.old = self.frobenius_expr(base.old, n)
        return power_name

    def register_product(self, names: Sequence[str]) -> str:
        """Product of registered forms; level-one monomials multiply exponents."""
        entries = [self.entry(nm) for nm in names]
        if all(e.kind == LEVEL_ONE for e in entries):
            a = sum(e.params[0] for e in entries)
            b = sum(e.params[1] for e in entries)
            c = sum(e.params[2] for e in entries)
            return self.register_level_one(a, b, c)
        name = "*".join(_wrap(nm) for nm in names)
        k = sum(e.k for e in entries)
        l = sum(e.l for e in entries) % (self.q - 1)
        level = Poly.one(self.field)
        for e in entries:
            level = level.lcm(e.level)
        factor_names = tuple(names)

        def recipe(prec: int, factor_names=factor_names) -> USeries:
            result = self.base_series(factor_names[0], prec)
            for nm in factor_names[1:]:
                result = result * self.base_series(nm, prec)
            return result.truncate(prec)

        return self._add(BaseEntry(name, PRODUCT, k, l, level, recipe, factor_names))

    # Series

    def base_series(self, name: str, prec: int) -> USeries:
        entry = self.entry(name)
        with self._lock:
            cached = self._series.get(name)
            if cached is not None and cached.prec >= prec:
                return cached.truncate(prec)
        series = entry.recipe(prec)
        if series.weight != entry.k or series.type != entry.l % (self.q - 1):
            raise GradingError(f"{name}: recipe produced ({series.weight},{series.type}), expected ({entry.k},{entry.l})")
        with self._lock:
            self._series[name] = series
        return series.truncate(prec)

    def series(self, h: Handle, prec: int) -> USeries:
        """δ_d φ = d^l φ(dz) to precision prec."""
        with self._lock:
            cached = self._handle_series.get(h)
            if cached is not None and cached.prec >= prec:
                return cached.truncate(prec)
        entry = self.entry(h.base)
        if h.d.is_one():
            series = self.base_series(h.base, prec)
        else:
            v = self.q ** h.d.degree
            base = self.base_series(h.base, -(-prec // v))
            s = self.factory.ctx.u_scale(h.d, prec)
            series = base.compose(s, prec).scale(Scalar.integral(h.d) ** entry.l)
            series = series.with_grading(weight=entry.k, type=entry.l, level=entry.level * h.d)
        with self._lock:
            self._handle_series[h] = series
        return series

    def series_of(self, e: FormExpr, prec: int) -> USeries:
        """Σ c·series(handle) to precision prec."""
        acc = USeries.zero(self.field, prec, weight=e.k, type=e.l)
        for h, c in e.items():
            acc = acc + self.series(h, prec).scale(c)
        return acc

    # Derived data

    def frobenius_expr(self, e: FormExpr, n: int) -> FormExpr:
        """(Σ c δ_d φ)^(q^n) = Σ c^(q^n) d^((q^n - 1) l) δ_d(φ^(q^n))."""
        qn = self.q ** n
        out: Dict[Handle, Scalar] = {}
        for h, c in e.items():
            power = self.register_power(h.base, n)
            coeff = c.frobenius(n) * Scalar.integral(h.d) ** ((qn - 1) * e.l)
            out[Handle(power, h.d)] = coeff
        return FormExpr(self.field, e.k * qn, e.l, out)

    def hecke_images(self, P: Poly, k: int, l: int) -> Tuple[List[str], ScalarMatrix]:
        """T_P on the full monomial basis of M_{k,l}(GL_2(A)); names and matrix."""
        key = (P, k, l)
        with self._lock:
            cached = self._matrices.get(key)
        if cached is not None:
            return cached
        prime = PrimeP(P, self.factory.ctx)
        basis = enumerate_basis(self.q, k, l, cusp=False)
        names = [self.register_level_one(a, b, l) for a, b in basis.exponents]
        out_prec = matrix_precision(basis)
        series = [self.base_series(nm, out_prec * prime.qd) for nm in names]
        M = matrix_on_span(prime, series, basis.orders, out_prec, names)
        with self._lock:
            self._matrices[key] = (names, M)
        return names, M

    def t_image(self, name: str, P: Poly) -> Optional[FormExpr]:
        """T_P φ for P prime to the level of φ, when the kind determines it."""
        entry = self.entry(name)
        if P.divides(entry.level):
            raise LevelError(f"T_{P} is undefined at level {entry.level}")
        if entry.kind == LEVEL_ONE:
            names, M = self.hecke_images(P, entry.k, entry.l)
            j = names.index(name)
            terms = {Handle(nm, Poly.one(self.field)): M[i, j] for i, nm in enumerate(names)}
            return FormExpr(self.field, entry.k, entry.l, terms)
        if entry.kind == EISENSTEIN:
            return self.expr(name, coeff=P)
        if entry.kind == POWER:
            base, n = entry.params
            inner = self.t_image(base, P)
            return None if inner is None else self.frobenius_expr(inner, n)
        return None

    def u_image(self, name: str, P: Poly) -> Optional[FormExpr]:
        """U_P φ for P dividing the level of φ, when the kind determines it."""
        entry = self.entry(name)
        if entry.kind == EISENSTEIN and entry.params[0] == P:
            return self.expr(name, coeff=P)
        if entry.kind == POWER:
            base, n = entry.params
            inner = self.u_image(base, P)
            return None if inner is None else self.frobenius_expr(inner, n)
        return None

    def w_image(self, name: str, P: Poly) -> Optional[FormExpr]:
        """φ|W_P for P exactly dividing the level of φ."""
        entry = self.entry(name)
        field = self.field
        if entry.kind == EISENSTEIN and entry.params[0] == P:
            return self.expr(name, coeff=-1)
        if entry.kind in (DELTA_T, DELTA_W) and P == Poly.T(field):
            T = Scalar.T(field)
            if entry.kind == DELTA_W:
                return self.expr("Delta_T", coeff=-T)
            return self.expr("Delta_W", coeff=-(T.frobenius(1).inverse()))
        if entry.kind == POWER:
            base, n = entry.params
            inner = self.w_image(base, P)
            if inner is None:
                return None
            qn = self.q ** n
            correction = Scalar.integral(P) ** (-(qn - 1) * entry.l)
            return self.frobenius_expr(inner, n).scale(correction)
        if entry.kind == PRODUCT:
            return self._product_w_image(entry, P)
        return None

    def _product_w_image(self, entry: BaseEntry, P: Poly) -> Optional[FormExpr]:
        """(fg)|W_P = P^(l - l_f - l_g) (f|W_P)(g|W_P) when each factor maps to a single base form."""
        coeff = Scalar.one(self.field)
        images: List[str] = []
        for nm in entry.params:
            factor = self.entry(nm)
            if not P.divides(factor.level):
                return None
            image = self.w_image(nm, P)
            if image is None or len(image.terms) != 1:
                return None
            (h, c), = image.items()
            if not h.d.is_one():
                return None
            coeff = coeff * c
            images.append(h.base)
        shift = entry.l - sum(self.entry(nm).l for nm in entry.params)
        coeff = coeff * Scalar.integral(P) ** shift
        product = self.register_product(images)
        return self.expr(product, coeff=coeff)


_registries: Dict[FiniteField, FormRegistry] = {}
_registries_lock = threading.Lock()


def get_registry(field: FiniteField) -> FormRegistry:
    """Shared registry for a field."""
    with _registries_lock:
        registry = _registries.get(field)
        if registry is None:
            registry = FormRegistry(field)
            _registries[field] = registry
        return registry
