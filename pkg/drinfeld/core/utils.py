"""
DRINFELD Core Utilities

Small helpers shared across layers: base-q digits, binomials mod p via
Lucas, seeded random generators and a timing context.
"""

import time
from contextlib import contextmanager
from math import comb
from typing import Iterator, List

import numpy as np


def base_digits(n: int, b: int) -> List[int]:
    """Digits of n in base b, least significant first."""
    if n == 0:
        return [0]
    digits = []
    while n:
        n, d = divmod(n, b)
        digits.append(d)
    return digits


def binomial_mod_p(n: int, k: int, p: int) -> int:
    """C(n, k) mod p by Lucas' theorem; 0 outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    result = 1
    while n or k:
        n, ni = divmod(n, p)
        k, ki = divmod(k, p)
        if ki > ni:
            return 0
        result = result * comb(ni, ki) % p
    return result


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


@contextmanager
def stopwatch() -> Iterator[dict]:
    """Yield a dict whose 'elapsed_ms' is filled on exit."""
    box = {"elapsed_ms": 0}
    start = time.perf_counter()
    try:
        yield box
    finally:
        box["elapsed_ms"] = int((time.perf_counter() - start) * 1000)
