"""
DRINFELD Exact Linear Algebra over K

Dense matrices of Scalars stored as tuples of rows. The characteristic
polynomial uses Berkowitz' division-free recursion; minimal polynomials
come from Krylov sequences of the standard basis vectors.
"""

from typing import List, Sequence, Tuple

from ..algebra.field import FiniteField
from ..algebra.kpoly import ScalarPoly
from ..algebra.scalar import Scalar, ScalarLike, as_scalar
from ..core.exceptions import ArithmeticDomainError

Row = Tuple[Scalar, ...]


class ScalarMatrix:
    """Square or rectangular matrix over K = F_q(T). Immutable."""

    __slots__ = ("field", "rows")

    def __init__(self, field: FiniteField, rows: Sequence[Sequence[ScalarLike]]):
        self.field = field
        self.rows: Tuple[Row, ...] = tuple(tuple(as_scalar(field, x) for x in row) for row in rows)
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise ValueError("ragged matrix rows")

    @classmethod
    def identity(cls, field: FiniteField, n: int) -> "ScalarMatrix":
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, field: FiniteField, columns: Sequence[Sequence[ScalarLike]]) -> "ScalarMatrix":
        if not columns:
            return cls(field, [])
        return cls(field, [[col[i] for col in columns] for i in range(len(columns[0]))])

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def __getitem__(self, ij: Tuple[int, int]) -> Scalar:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> List[Scalar]:
        return [row[j] for row in self.rows]

    def __add__(self, other: "ScalarMatrix") -> "ScalarMatrix":
        return ScalarMatrix(self.field, [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self) -> "ScalarMatrix":
        return ScalarMatrix(self.field, [[-a for a in r] for r in self.rows])

    def __sub__(self, other: "ScalarMatrix") -> "ScalarMatrix":
        return self + (-other)

    def __mul__(self, other) -> "ScalarMatrix":
        if not isinstance(other, ScalarMatrix):
            c = as_scalar(self.field, other)
            return ScalarMatrix(self.field, [[a * c for a in r] for r in self.rows])
        if self.n_cols != other.n_rows:
            raise ValueError(f"cannot multiply {self.n_rows}x{self.n_cols} by {other.n_rows}x{other.n_cols}")
        cols = [other.column(j) for j in range(other.n_cols)]
        return ScalarMatrix(self.field, [[_dot(r, c, self.field) for c in cols] for r in self.rows])

    __rmul__ = __mul__

    def apply(self, v: Sequence[Scalar]) -> List[Scalar]:
        """M·v for a column vector v."""
        return [_dot(r, v, self.field) for r in self.rows]

    def is_scalar_multiple_of_identity(self, c: ScalarLike) -> bool:
        c = as_scalar(self.field, c)
        zero = Scalar.zero(self.field)
        return self.is_square() and all(
            self.rows[i][j] == (c if i == j else zero)
            for i in range(self.n_rows) for j in range(self.n_cols)
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, ScalarMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def to_text(self) -> List[List[str]]:
        return [[str(a) for a in r] for r in self.rows]

    def __repr__(self) -> str:
        return f"ScalarMatrix({self.to_text()})"


def _dot(a: Sequence[Scalar], b: Sequence[Scalar], field: FiniteField) -> Scalar:
    acc = Scalar.zero(field)
    for x, y in zip(a, b):
        if not x.is_zero() and not y.is_zero():
            acc = acc + x * y
    return acc


def berkowitz_vector(M: ScalarMatrix) -> List[Scalar]:
    """Coefficients of det(X·I - M), highest degree first, without divisions.

    Each step peels off the last row and column: with A the leading block,
    R the remaining row, C the remaining column and a the corner, the
    Toeplitz column (1, -a, -R·C, -R·A·C, -R·A²·C, ...) multiplies the
    polynomial of A.
    """
    field = M.field
    n = M.n_rows
    if not M.is_square():
        raise ValueError("characteristic polynomial of a non-square matrix")
    one = Scalar.one(field)
    if n == 0:
        return [one]
    rows = [list(r) for r in M.rows]
    poly = [one, -rows[0][0]]
    for size in range(2, n + 1):
        k = size - 1
        A = ScalarMatrix(field, [r[:k] for r in rows[:k]])
        R = rows[k][:k]
        C = [rows[i][k] for i in range(k)]
        column = [one, -rows[k][k]]
        v = C
        for _ in range(size - 1):
            column.append(-_dot(R, v, field))
            v = A.apply(v)
        # lower-triangular Toeplitz (size+1) x size times poly (length size)
        out = []
        for i in range(size + 1):
            acc = Scalar.zero(field)
            for j in range(min(i + 1, size)):
                t = column[i - j]
                if not t.is_zero() and not poly[j].is_zero():
                    acc = acc + t * poly[j]
            out.append(acc)
        poly = out
    return poly


def charpoly(M: ScalarMatrix) -> ScalarPoly:
    """det(X·I - M) as a polynomial over K."""
    return ScalarPoly(M.field, list(reversed(berkowitz_vector(M))))


def determinant(M: ScalarMatrix) -> Scalar:
    n = M.n_rows
    chi0 = charpoly(M).coefficient(0)
    return chi0 if n % 2 == 0 else -chi0


class _KrylovEchelon:
    """Incremental row echelon form that remembers each vector's X-expression."""

    def __init__(self, field: FiniteField):
        self.field = field
        self.entries: List[Tuple[int, List[Scalar], ScalarPoly]] = []

    def reduce(self, v: List[Scalar], expr: ScalarPoly) -> Tuple[List[Scalar], ScalarPoly]:
        v = list(v)
        for pivot, row, row_expr in self.entries:
            c = v[pivot]
            if c.is_zero():
                continue
            v = [a - c * b for a, b in zip(v, row)]
            expr = expr - row_expr * c
        return v, expr

    def add(self, v: List[Scalar], expr: ScalarPoly) -> None:
        pivot = next(i for i, a in enumerate(v) if not a.is_zero())
        inv = v[pivot].inverse()
        self.entries.append((pivot, [a * inv for a in v], expr * inv))


def vector_annihilator(M: ScalarMatrix, v: Sequence[Scalar]) -> ScalarPoly:
    """Monic polynomial m of least degree with m(M)·v = 0."""
    field = M.field
    echelon = _KrylovEchelon(field)
    current = list(v)
    x = ScalarPoly.x(field)
    power = ScalarPoly.constant(field, 1)
    for _ in range(M.n_rows + 1):
        reduced, expr = echelon.reduce(current, power)
        if all(a.is_zero() for a in reduced):
            return expr.monic()
        echelon.add(reduced, expr)
        current = M.apply(current)
        power = power * x
    raise ArithmeticDomainError("Krylov sequence failed to become dependent")


def minpoly(M: ScalarMatrix) -> ScalarPoly:
    """lcm of the annihilators of the standard basis vectors."""
    field = M.field
    n = M.n_rows
    result = ScalarPoly.constant(field, 1)
    zero, one = Scalar.zero(field), Scalar.one(field)
    for i in range(n):
        e = [one if j == i else zero for j in range(n)]
        result = result.lcm(vector_annihilator(M, e))
    return result


def is_squarefree(m: ScalarPoly) -> bool:
    """gcd(m, m') = 1; a vanishing derivative counts as not squarefree."""
    if m.degree <= 0:
        return True
    dm = m.derivative()
    if dm.is_zero():
        return False
    return m.gcd(dm).degree == 0
