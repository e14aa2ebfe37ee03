"""Catalan numbers by four independent routes, all in exact integers.

C_n = binom(2n, n) / (n + 1), the convolution recurrence
C_{n+1} = C_0 C_n + ... + C_n C_0, the linear recurrence
(n + 2) C_{n+1} = (4n + 2) C_n, and the power-series fixed point of
z C(z)^2 = C(z) - 1 with C(0) = 1.  Catalan numbers are plain Python
ints (arbitrary precision); no floating point is used anywhere here.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

from .core import CatalanError


@dataclass(frozen=True)
class SeriesPrefix:
    """Leading coefficients of a power series; coefficients[k] is the z^k term."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        assert self.coefficients and self.coefficients[0] == 1


def binomial(a: int, b: int) -> int:
    """Exact binomial coefficient; 0 when b > a.

    >>> binomial(6, 3)
    20
    """
    if a < 0 or b < 0:
        raise CatalanError("binomial arguments must be nonnegative")
    return math.comb(a, b)


def catalan_closed(n: int) -> int:
    """C_n by the closed form binom(2n, n) / (n + 1).

    >>> [catalan_closed(n) for n in range(7)]
    [1, 1, 2, 5, 14, 42, 132]
    """
    _check_index(n)
    quotient, remainder = divmod(binomial(2 * n, n), n + 1)
    assert remainder == 0, f"(n + 1) does not divide binom(2n, n) at n = {n}"
    return quotient


_conv_cache = [1]
_conv_lock = threading.Lock()


def catalan_convolution(n: int) -> int:
    """C_n by the convolution recurrence C_{k+1} = sum C_i * C_{k-i}."""
    _check_index(n)
    with _conv_lock:
        while len(_conv_cache) <= n:
            k = len(_conv_cache) - 1  # C_0..C_k known, extend by C_{k+1}
            _conv_cache.append(
                sum(_conv_cache[i] * _conv_cache[k - i] for i in range(k + 1))
            )
        return _conv_cache[n]


def catalan_linear(n: int) -> int:
    """C_n by iterating C_{k+1} = (4k + 2) C_k / (k + 2); each step divides exactly."""
    _check_index(n)
    value = 1
    for k in range(n):
        quotient, remainder = divmod((4 * k + 2) * value, k + 2)
        assert remainder == 0, f"linear recurrence step {k} is not an exact division"
        value = quotient
    return value


def catalan_series(limit: int) -> SeriesPrefix:
    """First ``limit`` coefficients of the series solving C = 1 + z*C^2, C(0) = 1.

    Fixed-point iteration of C <- 1 + z*C^2 truncated to ``limit`` terms
    pins one more coefficient per pass (coefficient k of the iterate only
    depends on coefficients below k, which an earlier pass already fixed),
    so each pass needs to evaluate just the first not-yet-stable
    coefficient of the square; the prefix is stable after ``limit`` passes.
    """
    if limit < 1:
        raise CatalanError("series prefix length must be at least 1")
    coeffs = [1]
    while len(coeffs) < limit:
        k = len(coeffs) - 1  # degree-k term of C^2 feeds the z^{k+1} term
        coeffs.append(sum(coeffs[i] * coeffs[k - i] for i in range(k + 1)))
    return SeriesPrefix(tuple(coeffs))


def _check_index(n: int) -> None:
    if n < 0:
        raise CatalanError("Catalan numbers are indexed from 0")
