"""
DRINFELD Hecke Spectral Reports

Exact T_p matrices on monomial bases of level one, their characteristic
and minimal polynomials, and the four spectral verdicts:

- kernel_trivial          χ(0) != 0
- no_pm_Pk2_eigenvalue    k odd, or χ(±P^(k/2)) != 0
- diagonalizable          gcd(m, m') = 1
- id_minus_PkT2_bijective det(I - P^(-k) M^2) != 0
"""

from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from ..algebra.field import FiniteField
from ..algebra.kpoly import ScalarPoly
from ..algebra.poly import Poly
from ..algebra.scalar import Scalar
from ..core.logger import Logger
from ..core.models import HeckeReportModel, HeckeVerdicts
from ..forms.generators import FormFactory, GeneratorId, get_factory
from ..hecke.operators import PrimeP, op_T
from ..series.useries import USeries
from .basis import MonomialBasis, decompose, enumerate_basis
from .linalg import ScalarMatrix, charpoly, determinant, is_squarefree, minpoly

_logger = Logger("spectral")


@dataclass(frozen=True)
class HeckeReport:
    """T_p on a monomial basis with its polynomials and verdicts."""

    P: PrimeP
    basis: MonomialBasis
    matrix: ScalarMatrix
    charpoly: ScalarPoly
    minpoly: ScalarPoly
    verdicts: HeckeVerdicts
    certified_prec: int

    @property
    def k(self) -> int:
        return self.basis.k

    @property
    def l(self) -> int:
        return self.basis.l

    @property
    def dimension(self) -> int:
        return self.basis.dimension

    def all_verdicts(self) -> bool:
        v = self.verdicts
        return v.kernel_trivial and v.no_pm_Pk2_eigenvalue and v.diagonalizable and v.id_minus_PkT2_bijective

    def to_model(self) -> HeckeReportModel:
        return HeckeReportModel(
            q=self.basis.q,
            P=str(self.P),
            k=self.k,
            l=self.l,
            cusp=self.basis.cusp,
            basis=self.basis.labels(),
            matrix=self.matrix.to_text(),
            charpoly=str(self.charpoly),
            minpoly=str(self.minpoly),
            verdicts=self.verdicts,
            certified_prec=self.certified_prec,
        )


def matrix_on_span(P: PrimeP, series: Sequence[USeries], orders: Sequence[int], out_prec: int,
                   labels: Optional[Sequence[str]] = None) -> ScalarMatrix:
    """Matrix of T_p on the span of series with distinct u-orders; column j is T_p(series_j)."""
    field = P.field
    targets = [s.truncate(out_prec) for s in series]
    columns = []
    for j, f in enumerate(series):
        image = op_T(f, P, out_prec)
        columns.append(decompose(image, targets, orders, labels))
        _logger.debug("column computed", P=str(P), column=j)
    return ScalarMatrix.from_columns(field, columns)


def conjecture_checks(M: ScalarMatrix, chi: ScalarPoly, m: ScalarPoly, P: PrimeP, k: int) -> HeckeVerdicts:
    """The four verdicts; every one holds vacuously on a zero-dimensional space."""
    if M.n_rows == 0:
        return HeckeVerdicts(kernel_trivial=True, no_pm_Pk2_eigenvalue=True,
                             diagonalizable=True, id_minus_PkT2_bijective=True)
    field = M.field
    kernel_trivial = not chi.coefficient(0).is_zero()
    if k % 2:
        no_pm = True
    else:
        c = P.scalar ** (k // 2)
        no_pm = not chi.evaluate(c).is_zero() and not chi.evaluate(-c).is_zero()
    diagonalizable = is_squarefree(m)
    shifted = ScalarMatrix.identity(field, M.n_rows) - (M * M) * (P.scalar ** (-k))
    bijective = not determinant(shifted).is_zero()
    return HeckeVerdicts(kernel_trivial=kernel_trivial, no_pm_Pk2_eigenvalue=no_pm,
                         diagonalizable=diagonalizable, id_minus_PkT2_bijective=bijective)


def matrix_precision(basis: MonomialBasis) -> int:
    """Output precision for a triangular solve: max order + dim + 1."""
    return basis.max_order + basis.dimension + 1


def hecke_matrix(P: PrimeP, k: int, l: int, cusp: bool = True,
                 factory: Optional[FormFactory] = None) -> HeckeReport:
    """T_p on the monomial basis of S_{k,l} (cusp) or M_{k,l}."""
    field = P.field
    q = field.q
    basis = enumerate_basis(q, k, l, cusp)
    out_prec = matrix_precision(basis)
    try:
        _logger.log_step_start("hecke_matrix", P=str(P), k=k, l=l, cusp=cusp, dim=basis.dimension)
        if basis.dimension:
            series = basis.series(field, out_prec * P.qd, factory)
            M = matrix_on_span(P, series, basis.orders, out_prec, basis.labels())
        else:
            M = ScalarMatrix(field, [])
        chi = charpoly(M)
        m = minpoly(M)
        verdicts = conjecture_checks(M, chi, m, P, k)
        _logger.log_step_complete("hecke_matrix", P=str(P), k=k, l=l, verdicts=verdicts.model_dump())
        return HeckeReport(P, basis, M, chi, m, verdicts, out_prec)
    except Exception as e:
        _logger.error(f"Error computing T_{P} on S_{k},{l}: {e}")
        raise


def lambda_P_check(report: HeckeReport) -> Tuple[bool, Optional[Scalar]]:
    """On a one-dimensional space of type 1 the eigenvalue equals P.

    Returns (holds, eigenvalue); (True, None) when the space does not qualify.
    """
    if report.dimension != 1 or report.l != 1 or report.P.d != 1:
        return True, None
    lam = report.matrix[0, 0]
    return lam == report.P.scalar, lam


def eigenvalue_from_coefficient(f: USeries, tf: USeries, index: int) -> Scalar:
    """a_{T_p f}(index) / a_f(index) for an eigenform f."""
    return tf.coefficient(index) / f.coefficient(index)


def sweep(P: PrimeP, kmax: int, cusp: bool = True, dims: Optional[Sequence[int]] = None,
          factory: Optional[FormFactory] = None, kmin: int = 1) -> Iterator[HeckeReport]:
    """Reports for every (k, l) with kmin <= k <= kmax whose space dimension is in dims."""
    q = P.field.q
    factory = factory or get_factory(P.field)
    for k in range(kmin, kmax + 1):
        for l in range(q - 1):
            basis = enumerate_basis(q, k, l, cusp)
            if dims is not None and basis.dimension not in dims:
                continue
            if dims is None and basis.dimension == 0:
                continue
            yield hecke_matrix(P, k, l, cusp, factory)


def span_report(field: FiniteField, P: PrimeP, series: Sequence[USeries], labels: Sequence[str],
                out_prec: Optional[int] = None) -> Tuple[ScalarMatrix, int]:
    """T_p matrix on an arbitrary family with distinct orders, e.g. a level-T basis."""
    orders = [s.order for s in series]
    if len(set(orders)) != len(orders):
        raise ValueError(f"basis orders must be distinct, got {orders}")
    if out_prec is None:
        out_prec = max(orders) + len(orders) + 1
    M = matrix_on_span(P, series, orders, out_prec, labels)
    return M, out_prec


def level_T_weight_q_plus_one(P: PrimeP, factory: Optional[FormFactory] = None) -> Tuple[ScalarMatrix, List[str], int]:
    """T_p on S_{q+1,1}(Γ_0(T)) with basis {Δ_T E_T, Δ_W E_T}."""
    field = P.field
    factory = factory or get_factory(field)
    t = Poly.T(field)
    q = field.q
    out_prec = q + 3
    in_prec = out_prec * P.qd
    e_t = factory.build(GeneratorId("E_P", P=t), in_prec)
    series = [factory.build(GeneratorId("Delta_T"), in_prec) * e_t,
              factory.build(GeneratorId("Delta_W"), in_prec) * e_t]
    labels = ["Delta_T*E_T", "Delta_W*E_T"]
    M, prec = span_report(field, P, series, labels, out_prec)
    return M, labels, prec
