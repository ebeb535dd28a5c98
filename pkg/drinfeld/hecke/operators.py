"""
DRINFELD Hecke Operators

Operators at a prime P of degree d acting on u-expansions:

    δ_P f = P^l · f(Pz)
    U_p f = Σ_j a_f(j) · G_{j,P}(P u)
    T_p f = P^k · f(Pz) + U_p f          (P prime to the level of f)

Coefficient m of U_p f only involves a_f(j) for j <= m·q^d, so an output
precision N needs the input certified below N·q^d.
"""

from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Tuple

from ..algebra.field import FiniteField
from ..algebra.poly import Poly
from ..algebra.scalar import Scalar
from ..carlitz.context import CarlitzContext, get_context
from ..carlitz.goss import GossTable
from ..core.exceptions import (
    InsufficientPrecisionError,
    LevelError,
    NotIrreducibleError,
    OracleDomainError,
)
from ..core.logger import Logger
from ..core.utils import binomial_mod_p
from ..series.useries import SeriesComparison, USeries

_logger = Logger("hecke")


@dataclass(frozen=True)
class PrimeP:
    """A monic irreducible P with its cached Carlitz data."""

    P: Poly
    ctx: CarlitzContext = dc_field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if not self.P.is_monic() or self.P.degree < 1 or not self.P.is_irreducible():
            raise NotIrreducibleError(f"{self.P} is not a monic irreducible polynomial")
        if self.ctx is None:
            object.__setattr__(self, "ctx", get_context(self.P.field))

    @property
    def field(self) -> FiniteField:
        return self.P.field

    @property
    def d(self) -> int:
        return self.P.degree

    @property
    def qd(self) -> int:
        return self.field.q ** self.d

    @property
    def scalar(self) -> Scalar:
        return Scalar.integral(self.P)

    def u_scale(self, prec: int) -> USeries:
        """u(Pz) to precision prec."""
        return self.ctx.u_scale(self.P, prec)

    def table(self, kmax: int, max_degree: int) -> GossTable:
        """H_j(X) = G_{j,P}(P X) for j <= kmax, X-degrees below max_degree."""
        return self.ctx.torsion_table(self.P, kmax, max_degree)

    def output_prec(self, f: USeries, out_prec: Optional[int] = None) -> int:
        """Output precision of U_p/T_p on f, checked against f's precision."""
        if out_prec is None:
            out_prec = f.prec // self.qd
            if out_prec < 1:
                raise InsufficientPrecisionError(
                    f"input certified below u^{f.prec} cannot feed an operator at {self.P}",
                    required=self.qd, available=f.prec,
                )
        required = out_prec * self.qd
        if f.prec < required:
            raise InsufficientPrecisionError(
                f"output precision {out_prec} at {self.P} needs input precision {required}, have {f.prec}",
                required=required, available=f.prec,
            )
        return out_prec

    def __str__(self) -> str:
        return str(self.P)


def op_delta_P(f: USeries, P: PrimeP, out_prec: Optional[int] = None) -> USeries:
    """δ_P f = P^l · f(Pz); level multiplied by P."""
    target = f.prec * P.qd if out_prec is None else min(out_prec, f.prec * P.qd)
    image = f.compose(P.u_scale(target), target)
    return image.scale(P.scalar ** f.type).with_grading(weight=f.weight, type=f.type, level=f.level * P.P)


def _u_part(f: USeries, P: PrimeP, out_prec: int) -> Dict[int, Scalar]:
    kmax = out_prec * P.qd
    table = P.table(kmax, out_prec)
    acc: Dict[int, Scalar] = {}
    for j, a in f.coeffs.items():
        if j < 1 or j > kmax:
            continue
        for m, c in table[j].items():
            t = a * c
            acc[m] = acc[m] + t if m in acc else t
    return acc


def op_U(f: USeries, P: PrimeP, out_prec: Optional[int] = None) -> USeries:
    """U_p f = Σ_j a_f(j) G_{j,P}(P u); weight, type and level preserved."""
    out_prec = P.output_prec(f, out_prec)
    _logger.debug("applying U", P=str(P), prec=out_prec, terms=len(f.coeffs))
    return USeries(f.field, _u_part(f, P, out_prec), out_prec, weight=f.weight, type=f.type, level=f.level)


def scale_part(f: USeries, P: PrimeP, out_prec: int) -> USeries:
    """P^k · f(Pz) to precision out_prec."""
    image = f.compose(P.u_scale(out_prec), out_prec)
    return image.scale(P.scalar ** f.weight).with_grading(weight=f.weight, type=f.type, level=f.level)


def op_T(f: USeries, P: PrimeP, out_prec: Optional[int] = None) -> USeries:
    """T_p f = P^k f(Pz) + U_p f, defined when P does not divide the level of f."""
    if P.P.divides(f.level):
        raise LevelError(f"T at {P} is undefined on forms of level {f.level}; use U")
    out_prec = P.output_prec(f, out_prec)
    _logger.debug("applying T", P=str(P), prec=out_prec, weight=f.weight, type=f.type)
    u_part = USeries(f.field, _u_part(f, P, out_prec), out_prec, weight=f.weight, type=f.type, level=f.level)
    return u_part + scale_part(f, P, out_prec)


def op_frobenius_twist(f: USeries, n: int = 1) -> USeries:
    """f^(q^n)."""
    return f.frobenius_pow(n)


# Closed-form low coefficients for deg P = 1

def oracle_instances(f: USeries, P: PrimeP) -> List[int]:
    """Indices where the binomial formula applies: l and l+(q-1) for l >= 1,
    q-1 for l = 0, restricted to m < q·order(f) so P^k f(Pz) cannot reach them."""
    q = f.field.q
    l = f.type
    candidates = [l, l + q - 1] if l >= 1 else [q - 1]
    return [m for m in candidates if m < P.qd * f.order and m < f.prec]


def op_T_low_coeff_oracle(f: USeries, P: PrimeP, m: int) -> Scalar:
    """Σ_t C(m-1, t) P^(m-t) a_f(m + t(q-1)), binomials mod p."""
    if P.d != 1:
        raise OracleDomainError(f"the binomial coefficient formula needs deg P = 1, got {P.d}")
    field = f.field
    q, p = field.q, field.p
    total = Scalar.zero(field)
    for t in range(m):
        b = binomial_mod_p(m - 1, t, p)
        if not b:
            continue
        a = f.coefficient(m + t * (q - 1))
        if a.is_zero():
            continue
        total = total + a * (P.scalar ** (m - t)) * b
    return total


def oracle_agreement(f: USeries, P: PrimeP, tf: Optional[USeries] = None) -> List[Tuple[int, Scalar, Scalar]]:
    """(m, oracle value, coefficient of T_p f) for every applicable m."""
    if tf is None:
        tf = op_T(f, P)
    out = []
    for m in oracle_instances(f, P):
        if m < tf.prec:
            out.append((m, op_T_low_coeff_oracle(f, P, m), tf.coefficient(m)))
    return out


# Checks

def frobenius_commutation_check(f: USeries, P: PrimeP, n: int = 1) -> SeriesComparison:
    """T_p(f^(q^n)) against (T_p f)^(q^n)."""
    lhs = op_T(op_frobenius_twist(f, n), P)
    rhs = op_frobenius_twist(op_T(f, P), n)
    return lhs.compare(rhs)


def decomposition_check(f: USeries, P: PrimeP, out_prec: Optional[int] = None) -> SeriesComparison:
    """T_p f against U_p f + P^k f(Pz) built independently."""
    out_prec = P.output_prec(f, out_prec)
    t = op_T(f, P, out_prec)
    parts = op_U(f, P, out_prec) + scale_part(f, P, out_prec)
    return t.compare(parts)


def degree_bound_check(f: USeries, P: PrimeP, tf: Optional[USeries] = None) -> Tuple[bool, int]:
    """0 < deg a_{T_p f}(m) < k/2 with m = l, or m = q-1 when l = 0; returns (holds, degree)."""
    if tf is None:
        tf = op_T(f, P)
    a = tf.coefficient(f.type if f.type else f.field.q - 1)
    if a.is_zero():
        return False, -1
    degree = a.degree
    return 0 < degree and 2 * degree < f.weight, degree
