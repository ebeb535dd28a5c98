"""
DRINFELD Verification Suites

Named, reproducible suites of checks. Every check carries the label of the
published claim it reproduces, the statement it verifies, a pass/fail verdict, the precision it is certified to and, on
failure, a witness (first differing coefficient or offending value).

Suites:
- gen-expansions, goss-toy                  generator expansions and Goss identities
- eigen-h, eigen-delta, eigen-EP            Hecke eigen-identities on u-series
- dim1, dim2, oracle-lowcoeff               level-one spectral theorems
- dimension-formula                         monomial basis counts
- trace-identities, involution, commute     level operators
- counterexample, newform-stability, simdiag
- frobenius, exple2
"""

from dataclasses import dataclass, field as dc_field
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from ..algebra.field import FiniteField
from ..algebra.poly import Poly, bracket, monic_polys
from ..algebra.scalar import Scalar
from ..algebra.text import parse_poly
from ..carlitz.goss import isobaric_violations, symbolic_goss, toy_lattice_check
from ..core.config import Config
from ..core.exceptions import DrinfeldError, InsufficientPrecisionError, ResourceLimitError, SuiteError
from ..core.logger import Logger
from ..core.models import CheckResult, MembershipVerdict, RunConfig, SuiteReport, Verdict
from ..core.utils import binomial_mod_p, make_rng, stopwatch
from ..forms.generators import GeneratorId, get_factory
from ..hecke.operators import (
    PrimeP,
    decomposition_check,
    degree_bound_check,
    frobenius_commutation_check,
    op_delta_P,
    op_T,
    op_U,
    oracle_agreement,
)
from ..level import (
    FormExpr,
    cross_commutation_check,
    high_alpha_consistency,
    involution_check,
    is_in_new,
    is_in_old,
    is_p_new,
    is_p_old,
    series_commutators,
    stability_check,
    t_action,
    trace_high_alpha,
    trace_prime,
    trace_series,
    u_action,
    u_symbolic_check,
    u_w_commutation_check,
    w_action,
    zero_soundness_check,
)
from ..level.registry import FormRegistry, get_registry
from ..series.useries import SeriesComparison, USeries
from ..spectral import (
    ScalarMatrix,
    dimension_formula,
    enumerate_basis,
    is_squarefree,
    lambda_P_check,
    level_T_weight_q_plus_one,
    minpoly,
    monomial_series,
    sweep,
)


@dataclass(frozen=True)
class Evidence:
    """What a check found: verdict, witness, certified precision and extra data."""

    holds: bool
    witness: Optional[str] = None
    certified_prec: Optional[int] = None
    details: Dict[str, Any] = dc_field(default_factory=dict)

    @classmethod
    def compare(cls, cmp: SeriesComparison, **details: Any) -> "Evidence":
        witness = None
        if not cmp.equal:
            witness = f"u^{cmp.witness}" if cmp.witness is not None else cmp.reason
        return cls(cmp.equal, witness, cmp.checked_prec, details)


class SuiteRun:
    """State shared by the checks of one suite run."""

    def __init__(self, name: str, config: RunConfig, field: FiniteField, explicit_prec: bool = False,
                 settings: Optional[Config] = None):
        self.name = name
        self.config = config
        self.field = field
        self.q = field.q
        self.params = dict(config.params)
        self.explicit_prec = explicit_prec
        self.settings = settings or Config()
        self.rng = make_rng(config.seed)
        self.factory = get_factory(field)
        self.registry: FormRegistry = get_registry(field)
        self.logger = Logger("cli")
        self.checks: List[CheckResult] = []

    # Parameters

    def precision(self, key: Optional[str] = None) -> int:
        """--prec when given, else the configured default for this suite."""
        if self.explicit_prec or key is None:
            return self.config.prec
        return int(self.settings.get(key, self.config.prec))

    def integer(self, key: str, default: int) -> int:
        value = self.params.get(key)
        return default if value is None else int(value)

    def poly(self, key: str, default: str) -> Poly:
        value = self.params.get(key)
        return parse_poly(self.field, default if value is None else str(value))

    def polys(self, key: str, defaults: Sequence[Poly]) -> List[Poly]:
        value = self.params.get(key)
        if value is None:
            return list(defaults)
        items = value if isinstance(value, (list, tuple)) else str(value).split(",")
        return [parse_poly(self.field, str(item).strip()) for item in items if str(item).strip()]

    def prime(self, P: Poly) -> PrimeP:
        return PrimeP(P, self.factory.ctx)

    # Checks

    def check(self, name: str, statement: str, thunk: Callable[[], Evidence],
              label: Optional[str] = None) -> Evidence:
        """Run one check; label defaults to the claim the whole suite reproduces."""
        try:
            evidence = thunk()
        except ResourceLimitError:
            raise
        except DrinfeldError as e:
            self.logger.warning(f"Check {name} raised: {e}", suite=self.name)
            evidence = Evidence(False, f"{type(e).__name__}: {e}")
        self.logger.debug("check", suite=self.name, name=name, holds=evidence.holds)
        self.checks.append(CheckResult(
            name=name,
            paper_label=label or SUITE_LABELS.get(self.name, self.name),
            statement=statement,
            verdict=Verdict.PASS if evidence.holds else Verdict.FAIL,
            witness=None if evidence.holds else evidence.witness,
            certified_prec=evidence.certified_prec,
            details=evidence.details,
        ))
        return evidence


Suite = Callable[[SuiteRun], None]

SUITES: Dict[str, Tuple[Suite, str]] = {}

# suite name -> label of the published claim it reproduces
SUITE_LABELS: Dict[str, str] = {}


def suite(name: str, description: str, label: str) -> Callable[[Suite], Suite]:
    def register(fn: Suite) -> Suite:
        SUITES[name] = (fn, description)
        SUITE_LABELS[name] = label
        return fn
    return register


def suite_names() -> List[str]:
    return sorted(SUITES)


# Helpers

def _b1(field: FiniteField) -> Scalar:
    return Scalar.integral(bracket(field, 1))


def _sign(field: FiniteField, e: int) -> Scalar:
    return Scalar.from_int(field, -1 if e % 2 else 1)


def _binom(field: FiniteField, n: int, k: int) -> Scalar:
    return Scalar.from_int(field, binomial_mod_p(n, k, field.p))


def _first_irreducible(field: FiniteField, degree: int, avoid: Iterable[Poly] = ()) -> Poly:
    avoid = list(avoid)
    for P in monic_polys(field, degree):
        if P.is_irreducible() and P not in avoid:
            return P
    raise SuiteError(f"no monic irreducible of degree {degree} available")


def _default_primes(field: FiniteField) -> List[Poly]:
    t = Poly.T(field)
    return [t, t + Poly.one(field), _first_irreducible(field, 2)]


def _linear_primes(field: FiniteField, skip_T: bool = False) -> List[Poly]:
    t = Poly.T(field)
    return [t + Poly.constant(field, c) for c in range(field.q) if not (skip_T and c == 0)]


def _expected(series: USeries, expected: Dict[int, Scalar], upto: int) -> Evidence:
    """Every coefficient below u^upto equals the expected one (zero when absent)."""
    if series.prec < upto:
        raise InsufficientPrecisionError(f"need u^{upto}, series certified below u^{series.prec}",
                                         required=upto, available=series.prec)
    zero = Scalar.zero(series.field)
    for i in range(upto):
        want = expected.get(i, zero)
        got = series.coefficient(i)
        if got != want:
            return Evidence(False, f"u^{i}: expected {want}, got {got}", upto)
    return Evidence(True, certified_prec=upto)


def _membership(m, *accept: MembershipVerdict) -> Evidence:
    accept = accept or (MembershipVerdict.YES_EXACT,)
    holds = m.verdict in accept
    witness = None if holds else str(m)
    return Evidence(holds, witness, m.prec, {"verdict": m.verdict.value, "detail": m.detail})


def _expr_equal(lhs: FormExpr, rhs: FormExpr, **details: Any) -> Evidence:
    holds = lhs == rhs
    info = {"lhs": str(lhs), "rhs": str(rhs)}
    info.update(details)
    return Evidence(holds, None if holds else f"{lhs} != {rhs}", details=info)


def _sweep_key(k: int, l: int) -> str:
    return f"k={k:03d},l={l}"


# Generators and Goss polynomials

@suite("gen-expansions", "Printed u-expansions of g_1, h, Delta and their products",
       "Example: u-expansions of g_1, h and Delta")
def run_gen_expansions(run: SuiteRun) -> None:
    q, field = run.q, run.field
    b1 = _b1(field)
    one = Scalar.one(field)
    prec = max(run.precision(), (q - 1) * (q * q - q + 1) + 2)
    factory = run.factory
    g1 = factory.build(GeneratorId("g1"), prec)
    h = factory.build(GeneratorId("h"), prec)
    delta = factory.build(GeneratorId("Delta"), prec)

    g1_terms = {0: one, q - 1: -b1, (q - 1) * (q * q - q + 1): -b1}
    run.check("g1.printed", "g_1 = 1 - [1]u^(q-1) - [1]u^((q-1)(q^2-q+1)) + ...",
              lambda: _expected(g1, g1_terms, (q - 1) * (q * q - q + 1) + 1))

    last = 1 + (2 * q - 2) * (q - 1)
    h_terms = {1: -one, 1 + (q - 1) ** 2: -one, 1 + q * (q - 1): b1, last: -one}
    run.check("h.printed", "h = -u - u^(1+(q-1)^2) + [1]u^(1+q(q-1)) - u^(1+(2q-2)(q-1)) + ...",
              lambda: _expected(h, h_terms, last + 1))

    delta_terms = {q - 1: -one, q * (q - 1): one, (q + 1) * (q - 1): -b1}
    run.check("Delta.printed", "Delta = -u^(q-1) + u^(q(q-1)) - [1]u^((q+1)(q-1)) + O(u^((q^2-q+1)(q-1)))",
              lambda: _expected(delta, delta_terms, (q * q - q + 1) * (q - 1)))

    for name, series in (("g1", g1), ("h", h), ("Delta", delta)):
        run.check(f"{name}.integral", f"{name} has coefficients in A",
                  lambda s=series: Evidence(s.is_integral(), None if s.is_integral() else "non-integral coefficient",
                                            s.prec))

    for l in range(1, q - 1):
        upto = (q - 1) ** 2 + l
        for x in range(q + 1):
            terms = {}
            for i in range(x + 1):
                index = i * (q - 1) + l
                if index < upto:
                    terms[index] = _sign(field, l + i) * _binom(field, x, i) * b1 ** i
            run.check(f"g1^{x}*h^{l}.printed",
                      "g_1^x h^l = (-1)^l Σ_i (-1)^i C(x,i) [1]^i u^(i(q-1)+l) + O(u^((q-1)^2+l))",
                      lambda x=x, l=l, terms=terms, upto=upto: _expected(
                          monomial_series(factory, x, 0, l, prec), terms, upto))

        upto = (l + q) * (q - 1) + l
        h_l = {l: _sign(field, l), (q - 1) ** 2 + l: _sign(field, l) * l,
               q * (q - 1) + l: _sign(field, l - 1) * l * b1}
        run.check(f"h^{l}.printed",
                  "h^l = (-1)^l u^l + (-1)^l l u^((q-1)^2+l) + (-1)^(l-1) l [1] u^(q(q-1)+l) + O(u^((l+q)(q-1)+l))",
                  lambda l=l, terms=h_l, upto=upto: _expected(monomial_series(factory, 0, 0, l, prec), terms, upto))

        delta_h = {q - 1 + l: _sign(field, l + 1), q * (q - 1) + l: _sign(field, l) * (1 - l),
                   q * q - 1 + l: _sign(field, l) * (l - 1) * b1}
        delta_h = {i: c for i, c in delta_h.items() if i < upto}
        run.check(f"Delta*h^{l}.printed",
                  "Delta h^l = (-1)^(l+1) u^(q-1+l) + (-1)^l (1-l) u^(q(q-1)+l) + (-1)^l (l-1)[1] u^(q^2-1+l) + ...",
                  lambda l=l, terms=delta_h, upto=upto: _expected(monomial_series(factory, 0, 1, l, prec),
                                                                   terms, upto))

    for x in range(q + 1):
        terms = {(i + 1) * (q - 1): _binom(field, x, i) * _sign(field, i + 1) * b1 ** i
                 for i in range(x + 1) if (i + 1) * (q - 1) < q * (q - 1)}
        run.check(f"g1^{x}*Delta.printed",
                  "g_1^x Delta = Σ_i C(x,i) (-1)^(i+1) [1]^i u^((i+1)(q-1)) + O(u^(q(q-1)))",
                  lambda x=x, terms=terms: _expected(monomial_series(factory, x, 1, 0, prec), terms, q * (q - 1)))

    delta_t = factory.build(GeneratorId("Delta_T"), prec)
    delta_w = factory.build(GeneratorId("Delta_W"), prec)
    t_q = Scalar.T(field).frobenius(1)
    run.check("Delta_W-T^q*Delta_T", "Delta_W - T^q Delta_T = g_1",
              lambda: Evidence.compare((delta_w - delta_t.scale(t_q)).compare(g1)))
    run.check("Delta_T.Delta_W.constants", "a_(Delta_W)(0) = 1, a_(Delta_T)(0) = 0, a_(Delta_T)(q-1) = 1",
              lambda: _expected(delta_t, {q - 1: one}, q) if delta_w.coefficient(0).is_one()
              else Evidence(False, f"a_(Delta_W)(0) = {delta_w.coefficient(0)}", 1))
    run.check("h^(q-1)=-Delta", "h^(q-1) = -Delta",
              lambda: Evidence.compare(factory.h_power_identity(prec)),
              label="Diagnostic: h^(q-1) = -Delta")

    t = Poly.T(field)
    e_prec = run.precision()
    e = factory.build(GeneratorId("E"), e_prec)
    e_t = factory.build(GeneratorId("E_P", P=t), e_prec)
    run.check("E_T=E-delta_T(E)", "E_P = E - P E(Pz) = E - delta_P E",
              lambda: Evidence.compare(e_t.compare(e - op_delta_P(e, run.prime(t), e_prec))))


@suite("goss-toy", "Goss polynomials: toy lattice identity, isobaricity, torsion rows",
       "Goss polynomials: recursion for the period and torsion lattices")
def run_goss_toy(run: SuiteRun) -> None:
    q, field = run.q, run.field
    kmax = run.integer("kmax", q * q + q)
    for k in range(1, kmax + 1):
        def toy(k=k) -> Evidence:
            holds, lhs, rhs = toy_lattice_check(field, k)
            return Evidence(holds, None if holds else f"lhs {lhs} != rhs {rhs}", details={"k": k})
        run.check(f"toy_lattice.k{k:03d}", "Σ_(λ in F_q) (z-λ)^(-k) = G_k(1/(z - z^q)) in F_q(z)", toy)

    def isobaric() -> Evidence:
        bad = isobaric_violations(field, symbolic_goss(field, 2, kmax))
        return Evidence(not bad, None if not bad else f"G_{bad[0][0]} monomial {bad[0][1]}",
                        details={"kmax": kmax})
    run.check("isobaric", "G_i is isobaric of weight i in X and the α_s (weight q^s - 1)", isobaric)

    t = Poly.T(field)

    def torsion_row() -> Evidence:
        table = run.factory.ctx.torsion_table(t, q + 1, scaled=False)
        row = table.row(q + 1)
        want = f"X^{q + 1} + (1/T)X^2"
        return Evidence(row == want, None if row == want else row, details={"row": row})
    run.check("torsion_T.row", "G_(q+1) for ker ρ_T is X^(q+1) + (1/T)X^2", torsion_row)


# Eigen-identities

def _eigen(run: SuiteRun, gid: GeneratorId, P: Poly, eigenvalue: Scalar, use_u: bool = False) -> Evidence:
    prime = run.prime(P)
    out = run.precision("verify.eigen_prec")
    f = run.factory.build(gid, out * prime.qd)
    image = op_U(f, prime, out) if use_u else op_T(f, prime, out)
    return Evidence.compare(image.compare(f.truncate(out).scale(eigenvalue)), eigenvalue=str(eigenvalue))


@suite("eigen-h", "T_P h = P h", "Prop.: T_p h = P h")
def run_eigen_h(run: SuiteRun) -> None:
    for P in run.polys("P", _default_primes(run.field)):
        run.check(f"T_P(h).{P}", "T_P h = P h",
                  lambda P=P: _eigen(run, GeneratorId("h"), P, Scalar.integral(P)))

        def decomposition(P=P) -> Evidence:
            prime = run.prime(P)
            out = run.precision()
            f = run.factory.build(GeneratorId("h"), out * prime.qd)
            return Evidence.compare(decomposition_check(f, prime, out))
        run.check(f"decomposition.{P}", "T_P f = U_P f + P^k f(Pz)", decomposition)


@suite("eigen-delta", "T_P Delta = P^(q-1) Delta", "Prop.: T_p(Delta) = P^(q-1) Delta")
def run_eigen_delta(run: SuiteRun) -> None:
    for P in run.polys("P", _default_primes(run.field)):
        run.check(f"T_P(Delta).{P}", "T_P Delta = P^(q-1) Delta",
                  lambda P=P: _eigen(run, GeneratorId("Delta"), P, Scalar.integral(P) ** (run.q - 1)))


@suite("eigen-EP", "T_P1 E_P2 = P1 E_P2 and U_P E_P = P E_P",
       "Prop.: T_p1 E_P2 = P1 E_P2")
def run_eigen_ep(run: SuiteRun) -> None:
    field = run.field
    t = Poly.T(field)
    if "P1" in run.params or "P2" in run.params:
        pairs = [(run.poly("P1", "T+1"), run.poly("P2", "T"))]
    else:
        pairs = [(t + Poly.one(field), t), (t, t + Poly.one(field))]
    for P1, P2 in pairs:
        run.check(f"T_P1(E_P2).{P1}.{P2}", "T_P1 E_P2 = P1 E_P2",
                  lambda P1=P1, P2=P2: _eigen(run, GeneratorId("E_P", P=P2), P1, Scalar.integral(P1)))
    u_primes = sorted({P2 for _, P2 in pairs}, key=lambda p: p.sort_key())
    for P in u_primes:
        run.check(f"U_P(E_P).{P}", "U_P E_P = P E_P",
                  lambda P=P: _eigen(run, GeneratorId("E_P", P=P), P, Scalar.integral(P), use_u=True),
                  label="Prop.: U_p E_P = P E_P")


# Level-one spectral theorems

def _verdict_details(report) -> Dict[str, Any]:
    return {
        "basis": report.basis.labels(),
        "matrix": report.matrix.to_text(),
        "charpoly": str(report.charpoly),
        "minpoly": str(report.minpoly),
        "verdicts": report.verdicts.model_dump(),
    }


@suite("dim1", "Spectral verdicts on every cusp space of dimension 1",
       "Thm.: the conjectures hold on S_(k,l) of dimension <= 1")
def run_dim1(run: SuiteRun) -> None:
    prime = run.prime(run.poly("P", "T"))
    kmax = run.integer("kmax", int(run.settings.get("verify.kmax", 60)))
    for report in sweep(prime, kmax, cusp=True, dims=[1], factory=run.factory):
        key = _sweep_key(report.k, report.l)
        run.check(f"dim1[{key}]",
                  "dim S_(k,l) = 1: ker T_P = 0, no eigenvalue ±P^(k/2), diagonalizable, I - P^(-k)T_P^2 bijective",
                  lambda r=report: Evidence(r.all_verdicts(),
                                            None if r.all_verdicts() else str(r.verdicts.model_dump()),
                                            r.certified_prec, _verdict_details(r)))
        if report.l == 1 and prime.d == 1:
            def lam(r=report) -> Evidence:
                holds, value = lambda_P_check(r)
                return Evidence(holds, None if holds else f"eigenvalue {value}", r.certified_prec,
                                {"eigenvalue": str(value)})
            run.check(f"lambda[{key}]", "dim S_(k,1) = 1 and deg P = 1: the T_P eigenvalue is P", lam)


@suite("dim2", "No ±P^(k/2) eigenvalue on cusp spaces of dimension 2",
       "Thm.: no eigenvalue ±P^(k/2) on S_(k,l) of dimension 2")
def run_dim2(run: SuiteRun) -> None:
    q, field = run.q, run.field
    prime = run.prime(run.poly("P", "T"))
    kmax = run.integer("kmax", int(run.settings.get("verify.kmax", 60)))
    for report in sweep(prime, kmax, cusp=True, dims=[2], factory=run.factory):
        v = report.verdicts

        def verdict(r=report, v=v) -> Evidence:
            holds = v.no_pm_Pk2_eigenvalue and v.id_minus_PkT2_bijective
            return Evidence(holds, None if holds else str(v.model_dump()), r.certified_prec, _verdict_details(r))
        run.check(f"dim2[{_sweep_key(report.k, report.l)}]",
                  "dim S_(k,l) = 2: no eigenvalue ±P^(k/2) and I - P^(-k)T_P^2 bijective", verdict)

    if prime.d != 1:
        return
    P = prime.scalar
    out = q + 1
    f1 = monomial_series(run.factory, 2 * q + 1, 0, 1, out * prime.qd)
    f2 = monomial_series(run.factory, q, 1, 1, out * prime.qd)
    special = [
        ("a1(g1^(2q+1)h)", "a_(T_P(g_1^(2q+1) h))(1) = -P", f1, 1, -P),
        ("a1(g1^q*Delta*h)", "a_(T_P(g_1^q Delta h))(1) = 0", f2, 1, Scalar.zero(field)),
        ("aq(g1^q*Delta*h)", "a_(T_P(g_1^q Delta h))(q) = P^q", f2, q, P ** q),
    ]
    for name, statement, f, index, want in special:
        def coefficient(f=f, index=index, want=want) -> Evidence:
            got = op_T(f, prime, out).coefficient(index)
            return Evidence(got == want, None if got == want else f"got {got}", out, {"value": str(got)})
        run.check(f"special.{name}", statement, coefficient)


@suite("oracle-lowcoeff", "Binomial low-coefficient formula and the degree bound on dim-1 spaces",
       "Lemma: low coefficients of T_p f")
def run_oracle(run: SuiteRun) -> None:
    q = run.q
    prime = run.prime(run.poly("P", "T"))
    if prime.d != 1:
        raise SuiteError("oracle-lowcoeff needs deg P = 1")
    kmax = run.integer("kmax", int(run.settings.get("verify.kmax", 60)))
    for k in range(1, kmax + 1):
        for l in range(q - 1):
            basis = enumerate_basis(q, k, l, cusp=True)
            if basis.dimension != 1:
                continue
            (a, b), = basis.exponents
            out = l + q + 1
            key = _sweep_key(k, l)

            def agreement(a=a, b=b, l=l, out=out) -> Evidence:
                f = monomial_series(run.factory, a, b, l, out * prime.qd)
                rows = oracle_agreement(f, prime, op_T(f, prime, out))
                bad = [(m, o, c) for m, o, c in rows if o != c]
                witness = None if not bad else f"m={bad[0][0]}: formula {bad[0][1]}, T_P {bad[0][2]}"
                return Evidence(bool(rows) and not bad, witness or (None if rows else "no applicable index"), out,
                                {"indices": [m for m, _, _ in rows]})
            run.check(f"oracle[{key}]", "a_(T_P f)(m) = Σ_t C(m-1,t) P^(m-t) a_f(m+t(q-1))", agreement)

            def bound(a=a, b=b, l=l, k=k, out=out) -> Evidence:
                f = monomial_series(run.factory, a, b, l, out * prime.qd)
                holds, degree = degree_bound_check(f, prime, op_T(f, prime, out))
                return Evidence(holds, None if holds else f"degree {degree}", out, {"degree": degree})
            run.check(f"degree_bound[{key}]", "0 < deg a_(T_P f)(l) < k/2 (index q-1 when l = 0)", bound)


@suite("dimension-formula", "Monomial basis counts against ⌊(k - l(q+1))/(q^2-1)⌋ + 1",
       "Dimension formula for M_(k,l)(GL_2(A))")
def run_dimension_formula(run: SuiteRun) -> None:
    q = run.q
    kmax = run.integer("kmax", 100)
    for l in range(q - 1):
        def counts(l=l) -> Evidence:
            for k in range(1, kmax + 1):
                direct = sum(1 for b in range(k // (q * q - 1) + 1) for a in range(k // (q - 1) + 1)
                             if a * (q - 1) + b * (q * q - 1) + l * (q + 1) == k)
                full = enumerate_basis(q, k, l).dimension
                formula = dimension_formula(q, k, l)
                cusp = enumerate_basis(q, k, l, cusp=True).dimension
                expected_cusp = max(formula - 1, 0) if l == 0 else formula
                if not direct == full == formula or cusp != expected_cusp:
                    return Evidence(False, f"k={k}: count {direct}, basis {full}, formula {formula}, cusp {cusp}")
            return Evidence(True, details={"kmax": kmax})
        run.check(f"dimension[l={l}]", "#{g_1^a Delta^b h^l of weight k} = ⌊(k - l(q+1))/(q^2-1)⌋ + 1", counts)


# Level operators

def _level_one_forms(run: SuiteRun) -> List[str]:
    reg = run.registry
    h = reg.register_generator("h")
    delta = reg.register_generator("Delta")
    return [h, delta, reg.register_product([delta, h])]


@suite("trace-identities", "Tr'(delta_1 phi) = P^(l-k) T_P phi and T_P = U_P + P^(k-l) delta_P",
       "Lemma: Tr and Tr' on delta_1 phi and delta_P phi")
def run_trace_identities(run: SuiteRun) -> None:
    field = run.field
    t = Poly.T(field)
    reg = run.registry
    prec = run.precision()
    for name in _level_one_forms(run):
        for P in run.polys("P", [t, t + Poly.one(field)]):
            e = reg.expr(name)
            factor = Scalar.integral(P) ** (e.l - e.k)
            key = f"{name}.{P}"

            def exact(e=e, P=P, factor=factor) -> Evidence:
                result = trace_prime(reg, e, P, P, prec)
                expected = t_action(reg, e, P).scale(factor)
                if not result.exact:
                    return Evidence(False, "trace not closed symbolically")
                return _expr_equal(result.expr, expected)
            run.check(f"trace_prime[{key}]", "Tr'(delta_1 phi) = P^(l-k) T_P phi", exact)

            def series(e=e, P=P, factor=factor) -> Evidence:
                lhs = trace_series(reg, w_action(reg, e, P, P), P, prec, P)
                rhs = reg.series_of(t_action(reg, e, P).scale(factor), prec)
                return Evidence.compare(lhs.compare(rhs))
            run.check(f"trace_prime_series[{key}]", "Tr'(delta_1 phi) = P^(l-k) T_P phi, U_P on series", series)

            def decomposition(e=e, P=P) -> Evidence:
                prime = run.prime(P)
                f = reg.series_of(e, prec * prime.qd)
                lhs = op_T(f, prime, prec)
                delta_p = reg.series_of(FormExpr.single(field, e.k, e.l, reg.handle(name, P)), prec)
                rhs = op_U(f, prime, prec) + delta_p.scale(Scalar.integral(P) ** (e.k - e.l))
                return Evidence.compare(lhs.compare(rhs))
            run.check(f"T=U+delta[{key}]", "T_P phi = U_P phi + P^(k-l) delta_P phi", decomposition)

            def hecke_data(e=e, P=P) -> Evidence:
                prime = run.prime(P)
                lhs = op_T(reg.series_of(e, prec * prime.qd), prime, prec)
                return Evidence.compare(lhs.compare(reg.series_of(t_action(reg, e, P), prec)))
            run.check(f"T_data[{key}]", "exact T_P phi from the Hecke matrix agrees with T_P on series", hecke_data)


def _random_coeff(run: SuiteRun) -> Poly:
    c0, c1 = (int(c) for c in run.rng.integers(0, run.q, size=2))
    if c0 == 0 and c1 == 0:
        c0 = 1
    return Poly(run.field, [c0, c1])


def _random_form(run: SuiteRun, family: Sequence[Tuple[str, Poly]]) -> FormExpr:
    reg = run.registry
    picks = [i for i in range(len(family)) if run.rng.integers(0, 2)] or [int(run.rng.integers(0, len(family)))]
    e: Optional[FormExpr] = None
    for i in picks:
        name, d = family[i]
        term = reg.expr(name, d, _random_coeff(run))
        e = term if e is None else e + term
    return e


@suite("commute", "U_P1 U_P2 = U_P2 U_P1, U_P1 T_P2 = T_P2 U_P1, U_P1 W_P2 = W_P2 U_P1, W^2 scalar",
       "Lemma: U_p, T_q and W_q commute")
def run_commute(run: SuiteRun) -> None:
    field = run.field
    reg = run.registry
    t = Poly.T(field)
    P1 = run.poly("P1", "T")
    P2 = run.poly("P2", "T+1")
    if P1 == P2:
        raise SuiteError("commute needs two distinct primes")
    prime1, prime2 = run.prime(P1), run.prime(P2)
    prec = run.precision("verify.commute_prec")
    n_forms = run.integer("forms", int(run.settings.get("verify.commute_forms", 20)))
    one = Poly.one(field)
    n = P1 * P2
    h = reg.register_generator("h")
    e1, e2 = reg.register_eisenstein(P1), reg.register_eisenstein(P2)
    level_n = [
        [(h, one), (h, P1), (h, P2), (h, n)],
        [(e1, one), (e1, P2), (e2, one), (e2, P1)],
    ]
    level_p1 = [[(h, one), (h, P1)], [(e1, one)]]
    for i in range(n_forms):
        e = _random_form(run, level_n[i % 2])
        f = _random_form(run, level_p1[i % 2])
        key = f"{i:02d}"
        details = {"form": str(e)}
        run.check(f"UU[{key}]", "U_P1 U_P2 f = U_P2 U_P1 f",
                  lambda e=e: Evidence.compare(series_commutators(
                      reg.series_of(e, prec * prime1.qd * prime2.qd), prime1, prime2, prec), **details))
        run.check(f"UT[{key}]", "U_P1 T_P2 f = T_P2 U_P1 f (P2 prime to the level of f)",
                  lambda f=f: Evidence.compare(series_commutators(
                      reg.series_of(f, prec * prime1.qd * prime2.qd), prime1, prime2, prec, t_second=True),
                      form=str(f)))
        a, b = (P1, P2) if i % 2 == 0 else (P2, P1)
        run.check(f"UW[{key}]", "U_P1 (f|W_P2) = (U_P1 f)|W_P2",
                  lambda e=e, a=a, b=b: Evidence.compare(u_w_commutation_check(reg, e, a, b, prec, n), **details))
        for P in (P1, P2):
            run.check(f"WW[{key}].{P}", "f|W_(P^α)|W_(P^α) = P^(α(2l-k)) f",
                      lambda e=e, P=P: _exact_check(involution_check(reg, e, P, n, prec)))


@suite("involution", "Atkin-Lehner involutions, cross-commutation and the α >= 2 trace",
       "Lemma: Atkin-Lehner involutions on Gamma_0(n)")
def run_involution(run: SuiteRun) -> None:
    field = run.field
    reg = run.registry
    t = Poly.T(field)
    one = Poly.one(field)
    P1 = run.poly("P1", "T")
    P2 = run.poly("P2", "T+1")
    prec = run.precision()
    h = reg.register_generator("h")
    delta = reg.register_generator("Delta")
    e1 = reg.register_eisenstein(P1)
    sq = P1 * P1
    n = P1 * P2

    cases: List[Tuple[str, FormExpr, Poly, Poly]] = []
    for name in (h, delta):
        for d in (one, P1):
            cases.append((f"{name}@{P1}", reg.expr(name, d), P1, P1))
        for d in (one, P1, sq):
            cases.append((f"{name}@{sq}", reg.expr(name, d), sq, P1))
        for d in (one, P1, P2, n):
            for P in (P1, P2):
                cases.append((f"{name}@{n}", reg.expr(name, d), n, P))
    cases.append((f"{e1}@{P1}", reg.expr(e1), P1, P1))
    cases.append((f"{e1}@{n}", reg.expr(e1) + reg.expr(e1, P2, t), n, P2))
    if P1 == t:
        dt, dw = reg.register_level_T()
        cases.append((f"{dt}+{dw}", reg.expr(dt) + reg.expr(dw), t, t))
        cases.append((f"{dw}*{e1}", reg.expr(reg.register_product([dw, e1])), t, t))
    for label, e, level, P in cases:
        key = f"{label}|{str(e)}|W_{P}"
        run.check(f"involution[{key}]", "f|W_(P^α)|W_(P^α) = P^(α(2l-k)) f",
                  lambda e=e, level=level, P=P: _exact_check(involution_check(reg, e, P, level, prec)))

    for name in (h, delta):
        for d in (one, P1, P2, n):
            e = reg.expr(name, d)
            run.check(f"cross[{name}|{d}]", "W_P1 W_P2 = W_P2 W_P1",
                      lambda e=e: _exact_check(cross_commutation_check(reg, e, P1, P2, n, prec)))
        for d in (one, P1, sq):
            e = reg.expr(name, d)
            run.check(f"high_alpha_U[{name}|{d}]", "U_P(f|W_(P^2)) by the level rules agrees with U_P on series",
                      lambda e=e: Evidence.compare(high_alpha_consistency(reg, e, P1, prec, sq)))
        for d in (one, P1):
            e = reg.expr(name, d)

            def vanishes(e=e) -> Evidence:
                result = trace_high_alpha(reg, e, P1, sq)
                return Evidence(result.is_exact_zero(), None if result.is_exact_zero() else str(result))
            run.check(f"trace_high_alpha[{name}|{d}]", "Tr from level P^2 to P kills forms of level P", vanishes)

    if P1 == t:
        dt, dw = reg.register_level_T()

        def old_route() -> Evidence:
            direct = w_action(reg, reg.expr(dw), t)
            via_old = w_action(reg, reg.entry(dw).old, t)
            return Evidence.compare(reg.series_of(direct, prec).compare(reg.series_of(via_old, prec)))
        run.check("Delta_W|W_T.old", "Delta_W|W_T = -T Delta_T, through g_1(z) and g_1(Tz)", old_route)

        def product_rule() -> Evidence:
            product = reg.register_product([dw, e1])
            target = reg.register_product([dt, e1])
            return _expr_equal(w_action(reg, reg.expr(product), t), reg.expr(target, coeff=Poly.T(field)))
        run.check("product_rule", "(Delta_W E_T)|W_T = T Delta_T E_T", product_rule)


def _exact_check(result) -> Evidence:
    cp = result.series.checked_prec if result.series is not None else None
    witness = None
    if not result.holds:
        witness = f"{result.lhs} != {result.rhs}"
    elif result.series is not None and not result.series.equal:
        witness = f"series differ at u^{result.series.witness}"
    return Evidence(bool(result), witness, cp, {"lhs": str(result.lhs)})


# Old and new forms

def _counterexample_checks(run: SuiteRun, prefix: str, e: FormExpr, P: Poly, Q: Poly, prec: int) -> None:
    reg = run.registry
    n = P * Q
    run.check(f"{prefix}.nonzero", "the form is nonzero",
              lambda: Evidence(not reg.series_of(e, prec).is_zero(), "series vanishes", prec, {"form": str(e)}))
    run.check(f"{prefix}.p_old", "the form is p-old at P",
              lambda: _membership(is_p_old(reg, e, P, n)))
    run.check(f"{prefix}.p_new", "Tr and Tr' to level Q vanish symbolically",
              lambda: _membership(is_p_new(reg, e, P, n, prec)))
    for primed in (False, True):
        label = "Tr'" if primed else "Tr"

        def soundness(primed=primed) -> Evidence:
            exact_zero, cmp = zero_soundness_check(reg, e, P, prec, n, primed)
            holds = exact_zero and cmp.equal
            return Evidence(holds, None if holds else (f"u^{cmp.witness}" if exact_zero else "not exactly zero"),
                            cmp.checked_prec)
        run.check(f"{prefix}.{label}_series", f"{label} vanishes on the series route as well", soundness)
    run.check(f"{prefix}.old", "the form is old at level PQ", lambda: _membership(is_in_old(reg, e, n)))
    run.check(f"{prefix}.new", "the form is new at level PQ", lambda: _membership(is_in_new(reg, e, n, prec)))


@suite("counterexample", "E_Q - delta_P E_Q is both old and new at level PQ",
       "Prop.: E_P2 - delta_P E_P2 is old and new")
def run_counterexample(run: SuiteRun) -> None:
    reg = run.registry
    P = run.poly("P", "T+1")
    Q = run.poly("Q", "T")
    if P == Q:
        raise SuiteError("counterexample needs two distinct primes")
    prec = run.precision()
    eq = reg.register_eisenstein(Q)
    e = reg.expr(eq) - reg.expr(eq, P)
    _counterexample_checks(run, "E_Q-delta_P(E_Q)", e, P, Q, prec)
    power = reg.register_power(eq, 1)
    coeff = Scalar.integral(P) ** (run.q - 1)
    frob = reg.expr(power) - reg.expr(power, P, coeff)
    _counterexample_checks(run, "frobenius", frob, P, Q, prec)


def _new_vectors(run: SuiteRun, P1: Poly, P2: Poly) -> Dict[str, FormExpr]:
    reg = run.registry
    e1, e2 = reg.register_eisenstein(P1), reg.register_eisenstein(P2)
    return {
        f"{e1}-delta_{P2}": reg.expr(e1) - reg.expr(e1, P2),
        f"{e2}-delta_{P1}": reg.expr(e2) - reg.expr(e2, P1),
    }


def _old_vectors(run: SuiteRun, P1: Poly, P2: Poly) -> Dict[str, FormExpr]:
    reg = run.registry
    e1, e2 = reg.register_eisenstein(P1), reg.register_eisenstein(P2)
    return {
        e1: reg.expr(e1),
        f"delta_{P2}{e1}": reg.expr(e1, P2),
        e2: reg.expr(e2),
        f"delta_{P1}{e2}": reg.expr(e2, P1),
    }


@suite("newform-stability", "U_P and T_Q preserve the new and old subspaces at level P1 P2",
       "Thm.: the new subspace is invariant under the Hecke operators")
def run_newform_stability(run: SuiteRun) -> None:
    field = run.field
    reg = run.registry
    P1 = run.poly("P1", "T")
    P2 = run.poly("P2", "T+1")
    n = P1 * P2
    prec = run.precision()
    operators = [P1, P2, _first_irreducible(field, 1, avoid=[P1, P2]), _first_irreducible(field, 2)]
    for label, v in _new_vectors(run, P1, P2).items():
        run.check(f"new[{label}]", "the vector is new", lambda v=v: _membership(is_in_new(reg, v, n, prec)))
        for P in operators:
            def stable(v=v, P=P) -> Evidence:
                image, m = stability_check(reg, v, P, n, prec, new=True)
                ev = _membership(m)
                return Evidence(ev.holds, ev.witness, ev.certified_prec, {**ev.details, "image": str(image)})
            op = "U" if P.divides(n) else "T"
            run.check(f"new_stable[{label}].{op}_{P}", "Hecke operators map new forms to new forms", stable)
        for P in (P1, P2):
            run.check(f"U_series[{label}].{P}", "U_P by the level rules agrees with U_P on series",
                      lambda v=v, P=P: Evidence.compare(u_symbolic_check(reg, v, P, prec)))
    for label, v in _old_vectors(run, P1, P2).items():
        for P in operators:
            def stable_old(v=v, P=P) -> Evidence:
                image, m = stability_check(reg, v, P, n, prec, new=False)
                ev = _membership(m)
                return Evidence(ev.holds, ev.witness, ev.certified_prec, {**ev.details, "image": str(image)})
            op = "U" if P.divides(n) else "T"
            run.check(f"old_stable[{label}].{op}_{P}", "Hecke operators map old forms to old forms", stable_old)


@suite("simdiag", "U_P1 and U_P2 are simultaneously diagonalizable on the new vectors",
       "Cor.: U_p are simultaneously diagonalizable on the new subspace")
def run_simdiag(run: SuiteRun) -> None:
    reg = run.registry
    field = run.field
    P1 = run.poly("P1", "T")
    P2 = run.poly("P2", "T+1")
    n = P1 * P2
    prec = run.precision()
    vectors = list(_new_vectors(run, P1, P2).values())
    pivots = [reg.handle(reg.register_eisenstein(P)) for P in (P1, P2)]

    def matrix(P: Poly) -> ScalarMatrix:
        columns = []
        for v in vectors:
            image = u_action(reg, v, P)
            column = [image.coefficient(h) for h in pivots]
            rebuilt = reg.zero(v.k, v.l)
            for c, w in zip(column, vectors):
                rebuilt = rebuilt + w.scale(c)
            if rebuilt != image:
                raise SuiteError(f"U_{P} image {image} leaves the span of the new vectors")
            columns.append(column)
        return ScalarMatrix.from_columns(field, columns)

    for P in (P1, P2):
        for i, v in enumerate(vectors):
            def eigen(v=v, P=P) -> Evidence:
                image = u_action(reg, v, P)
                return _expr_equal(image, v.scale(Scalar.integral(P)))
            run.check(f"eigen[v{i + 1}].U_{P}", "U_P v = P v on the new vectors", eigen)
            run.check(f"series[v{i + 1}].U_{P}", "U_P by the level rules agrees with U_P on series",
                      lambda v=v, P=P: Evidence.compare(u_symbolic_check(reg, v, P, prec)))

    def commuting() -> Evidence:
        M1, M2 = matrix(P1), matrix(P2)
        holds = M1 * M2 == M2 * M1
        return Evidence(holds, None if holds else "matrices do not commute",
                        details={"U_P1": M1.to_text(), "U_P2": M2.to_text()})
    run.check("commute", "U_P1 U_P2 = U_P2 U_P1 on the span", commuting)

    def diagonalizable() -> Evidence:
        out = {}
        for P in (P1, P2):
            m = minpoly(matrix(P))
            out[str(P)] = str(m)
            if not is_squarefree(m):
                return Evidence(False, f"minimal polynomial of U_{P} is {m}", details=out)
        return Evidence(True, details=out)
    run.check("diagonalizable", "U_P1 and U_P2 have squarefree minimal polynomials on the span", diagonalizable)

    def series_commute() -> Evidence:
        prime1, prime2 = run.prime(P1), run.prime(P2)
        v = vectors[0] + vectors[1]
        f = reg.series_of(v, prec * prime1.qd * prime2.qd)
        return Evidence.compare(series_commutators(f, prime1, prime2, prec))
    run.check("commute_series", "U_P1 U_P2 = U_P2 U_P1 on series", series_commute)


# Frobenius and the level-T example

@suite("frobenius", "T_P(f^q) = (T_P f)^q",
       "Remark: T_p(f^(q^n)) = (T_p f)^(q^n)")
def run_frobenius(run: SuiteRun) -> None:
    reg = run.registry
    P = run.poly("P", "T+1")
    P2 = run.poly("P2", "T")
    prime = run.prime(P)
    out = run.precision()
    forms = {
        "h": GeneratorId("h"),
        "Delta": GeneratorId("Delta"),
        f"E_P2({P2})": GeneratorId("E_P", P=P2),
    }
    for label, gid in forms.items():
        run.check(f"series[{label}]", "T_P(f^q) = (T_P f)^q",
                  lambda gid=gid: Evidence.compare(frobenius_commutation_check(
                      run.factory.build(gid, out * prime.qd), prime, 1)))

    names = {"h": reg.register_generator("h"), "Delta": reg.register_generator("Delta"),
             f"E_P2({P2})": reg.register_eisenstein(P2)}
    for label, name in names.items():
        power = reg.register_power(name, 1)

        def symbolic(power=power) -> Evidence:
            e = reg.expr(power)
            lhs = op_T(reg.series_of(e, out * prime.qd), prime, out)
            return Evidence.compare(lhs.compare(reg.series_of(t_action(reg, e, P), out)), power=power)
        run.check(f"power_T_data[{label}]", "the derived T_P data of f^q agrees with T_P on series", symbolic)

    delta_q = reg.register_power(names["Delta"], 1)
    run.check("Delta^q.eigen", "T_P(Delta^q) = P^(q(q-1)) Delta^q",
              lambda: _expr_equal(t_action(reg, reg.expr(delta_q), P),
                                  reg.expr(delta_q, coeff=Scalar.integral(P) ** (run.q * (run.q - 1)))))


@suite("exple2", "T_P = P on S_(q+1,1)(Γ_0(T)) with basis {Delta_T E_T, Delta_W E_T}",
       "Prop. (exple2): a basis of S_(q+1,1)(Gamma_0(T))")
def run_exple2(run: SuiteRun) -> None:
    field = run.field
    reg = run.registry
    t = Poly.T(field)
    primes = run.polys("P", _linear_primes(field, skip_T=True))
    for P in primes:
        def scalar(P=P) -> Evidence:
            M, labels, prec = level_T_weight_q_plus_one(run.prime(P), run.factory)
            holds = M.is_scalar_multiple_of_identity(Scalar.integral(P))
            return Evidence(holds, None if holds else str(M.to_text()), prec,
                            {"basis": labels, "matrix": M.to_text()})
        run.check(f"T_P=P.{P}", "T_P ≡ P on S_(q+1,1)(Γ_0(T))", scalar)

    dt, dw = reg.register_level_T()
    e_t = reg.register_eisenstein(t)
    a = reg.register_product([dt, e_t])
    b = reg.register_product([dw, e_t])
    run.check("W_T.Delta_W*E_T", "(Delta_W E_T)|W_T = T Delta_T E_T",
              lambda: _expr_equal(w_action(reg, reg.expr(b), t), reg.expr(a, coeff=t)))
    run.check("W_T.Delta_T*E_T", "(Delta_T E_T)|W_T = T^(-q) Delta_W E_T",
              lambda: _expr_equal(w_action(reg, reg.expr(a), t),
                                  reg.expr(b, coeff=Scalar.T(field) ** (-run.q))))
    run.check("W_T^2", "W_T W_T = T^(2l-k) on the level-T basis",
              lambda: _exact_check(involution_check(reg, reg.expr(a) + reg.expr(b), t, t, run.precision())))


# Entry point

def run_suite(name: str, config: RunConfig, field: FiniteField, explicit_prec: bool = False,
              settings: Optional[Config] = None) -> SuiteReport:
    """Run one named suite and assemble its report; checks are ordered by name."""
    if name not in SUITES:
        raise SuiteError(f"unknown suite {name!r}; expected one of {', '.join(suite_names())}")
    fn, _ = SUITES[name]
    run = SuiteRun(name, config, field, explicit_prec, settings)
    run.logger.log_step_start("verify", suite=name, q=field.q, prec=config.prec, seed=config.seed)
    with stopwatch() as timer:
        fn(run)
    passed = sum(1 for c in run.checks if c.passed)
    run.logger.log_step_complete("verify", suite=name, passed=passed, total=len(run.checks))
    report_config = {
        "p": field.p,
        "r": field.r,
        "q": field.q,
        "modulus": field.modulus_str() if field.r > 1 else None,
        "prec": config.prec,
        "seed": config.seed,
        "params": {k: config.params[k] for k in sorted(config.params)},
    }
    return SuiteReport(
        config=report_config,
        suite=name,
        checks=run.checks,
        elapsed_ms=timer["elapsed_ms"] if config.timing else None,
    )
