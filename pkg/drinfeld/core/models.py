"""
DRINFELD Data Models

Pydantic models for the DRINFELD toolkit:
- Run configuration for the CLI and the verification harness
- Check/suite reports (JSON schema of `verify`)
- Hecke report and series payloads (JSON schema of `matrix` and `expand`)
"""

from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator
from sympy import isprime


class OutputFormat(str, Enum):
    """Report output formats."""
    JSON = "json"
    TEXT = "text"


class Verdict(str, Enum):
    """Outcome of a single check."""
    PASS = "pass"
    FAIL = "fail"


class MembershipVerdict(str, Enum):
    """Outcome of an oldform/newform membership test."""
    YES_EXACT = "yes_exact"
    YES_TO_PRECISION = "yes_to_precision"
    NO = "no"
    UNDETERMINED = "undetermined"


class FieldConfig(BaseModel):
    """Finite field parameters."""
    p: int = Field(3, description="Odd prime characteristic")
    r: int = Field(1, ge=1, description="Extension degree, q = p^r")
    modulus: Optional[List[int]] = Field(None, description="Monic irreducible modulus over F_p, low degree first")

    @field_validator("p")
    @classmethod
    def p_is_odd_prime(cls, v: int) -> int:
        if v == 2 or not isprime(v):
            raise ValueError(f"p must be an odd prime, got {v}")
        return v

    @property
    def q(self) -> int:
        return self.p ** self.r


class RunConfig(BaseModel):
    """Configuration of one CLI run."""
    field: FieldConfig = Field(default_factory=FieldConfig, description="Field specification")
    prec: int = Field(60, description="Default series precision")
    output_format: OutputFormat = Field(OutputFormat.JSON, description="Report format")
    suite: Optional[str] = Field(None, description="Selected verification suite")
    seed: int = Field(20240917, description="Seed for randomized checks")
    timing: bool = Field(False, description="Include elapsed_ms in reports")
    params: Dict[str, Any] = Field(default_factory=dict, description="Suite-specific parameters")

    @field_validator("prec")
    @classmethod
    def prec_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError(f"precision must be >= 1, got {v}")
        return v


class CheckResult(BaseModel):
    """One verified statement."""
    name: str = Field(..., description="Check identifier")
    paper_label: str = Field(..., description="Published claim the check reproduces")
    statement: str = Field(..., description="The mathematical statement being checked")
    verdict: Verdict = Field(..., description="pass or fail")
    witness: Optional[str] = Field(None, description="First failing coefficient or value")
    certified_prec: Optional[int] = Field(None, description="Precision to which the check is certified")
    details: Dict[str, Any] = Field(default_factory=dict, description="Extra data (matrices, verdict tables)")

    @property
    def passed(self) -> bool:
        return self.verdict == Verdict.PASS


class SuiteReport(BaseModel):
    """Report of a verification suite."""
    config: Dict[str, Any] = Field(..., description="Effective configuration")
    suite: str = Field(..., description="Suite name")
    checks: List[CheckResult] = Field(default_factory=list, description="Checks ordered by name")
    elapsed_ms: Optional[int] = Field(None, description="Wall time, only with --timing")

    @model_validator(mode="after")
    def order_checks(self) -> "SuiteReport":
        self.checks.sort(key=lambda c: c.name)
        return self

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


class HeckeVerdicts(BaseModel):
    """The four spectral checks."""
    kernel_trivial: bool = Field(..., description="chi(0) != 0")
    no_pm_Pk2_eigenvalue: bool = Field(..., description="no eigenvalue +-P^(k/2)")
    diagonalizable: bool = Field(..., description="gcd(m, m') = 1")
    id_minus_PkT2_bijective: bool = Field(..., description="det(I - P^-k M^2) != 0")


class HeckeReportModel(BaseModel):
    """JSON form of a Hecke report."""
    q: int
    P: str
    k: int
    l: int
    cusp: bool
    basis: List[str] = Field(..., description="Monomials g^a*Delta^b*h^l")
    matrix: List[List[str]] = Field(..., description="Matrix entries in canonical text")
    charpoly: str
    minpoly: str
    verdicts: HeckeVerdicts
    certified_prec: int


class SeriesPayload(BaseModel):
    """JSON form of a u-expansion."""
    form: str
    q: int
    k: int
    l: int
    order: int
    certified_prec: int
    coefficients: List[List[Any]] = Field(..., description="[index, coefficient text] pairs")
