"""
DRINFELD Parameter Rescaling

u(az) = 1/ρ_a(1/u) as a u-series. Writing ρ_a(1/u) = u^(-q^d) (1 + V_a(u)),
with V_a sparse, every power u(az)^m = u^(m q^d) / (1 + V_a)^m is obtained
by one sparse inversion.
"""

from typing import Dict

from ..algebra.poly import Poly
from ..algebra.scalar import Scalar
from ..core.exceptions import ArithmeticDomainError
from ..series.useries import USeries
from .additive import AdditivePoly

# sparse polynomial in u with coefficients in A
_Sparse = Dict[int, Poly]


def _sparse_mul(a: _Sparse, b: _Sparse, limit: int) -> _Sparse:
    out: _Sparse = {}
    for i, x in a.items():
        for j, y in b.items():
            k = i + j
            if k >= limit:
                continue
            t = x * y
            out[k] = out[k] + t if k in out else t
    return {k: v for k, v in out.items() if not v.is_zero()}


def _sparse_pow(base: _Sparse, e: int, limit: int, one: Poly) -> _Sparse:
    result: _Sparse = {0: one}
    while e:
        if e & 1:
            result = _sparse_mul(result, base, limit)
        e >>= 1
        if e:
            base = _sparse_mul(base, base, limit)
    return result


def u_scale_power(rho: AdditivePoly, m: int, prec: int) -> USeries:
    """u(az)^m for monic a, given ρ_a; exact below prec."""
    field = rho.field
    d = rho.q_degree
    if d < 0 or not rho.coefficient(d).is_one():
        raise ArithmeticDomainError("u(az) is only expanded for monic a")
    q = field.q
    step = q - 1
    start = m * q ** d
    if start >= prec:
        return USeries.zero(field, prec, type=m)
    limit = prec - start
    one = Poly.one(field)
    v: _Sparse = {q ** d - q ** i: rho.coefficient(i) for i in range(d) if not rho.coefficient(i).is_zero()}
    v[0] = one
    denom = sorted((e, c) for e, c in _sparse_pow(v, m, limit, one).items() if e > 0)
    w: _Sparse = {0: one}
    for n in range(step, limit, step):
        acc = None
        for e, c in denom:
            if e > n:
                break
            prev = w.get(n - e)
            if prev is not None:
                t = c * prev
                acc = t if acc is None else acc + t
        if acc is not None and not acc.is_zero():
            w[n] = -acc
    coeffs = {start + n: Scalar.integral(c) for n, c in w.items()}
    return USeries._make(field, coeffs, prec, 0, m, None)


def u_scale(rho: AdditivePoly, prec: int) -> USeries:
    """The series u(az) = u^(q^deg a) + ...; weight 0, type 1."""
    return u_scale_power(rho, 1, prec)
