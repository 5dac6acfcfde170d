"""Scalar special functions used by the kernel catalogue.

Only three functions are needed: the digamma function (kernels of shape-type
families), log-Pochhammer (rising factorials in negative-binomial and
beta-binomial factors), and log-factorial (base measures of count families).
All are plain-float implementations with no dependencies beyond math/numpy.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = ["digamma", "log_pochhammer", "log_factorial"]

# Upward recurrence is applied until the argument reaches this threshold, after
# which the asymptotic series (terms through x**-14) is accurate to < 1e-13.
_DIGAMMA_SERIES_START = 8.0

# Coefficients of psi(x) ~ ln x - 1/(2x) - sum c_j / x**(2j): B_{2j}/(2j).
_DIGAMMA_TAIL = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
)

# log-factorial lookup: exact compensated cumulative sums for k <= _LOG_FACT_N.
_LOG_FACT_N = 10_000


def _build_log_factorial_table() -> np.ndarray:
    table = np.empty(_LOG_FACT_N + 1)
    table[0] = 0.0
    total = 0.0
    comp = 0.0  # Kahan compensation: keeps the running sum within ~2 ulp
    for k in range(1, _LOG_FACT_N + 1):
        term = math.log(k) - comp
        new_total = total + term
        comp = (new_total - total) - term
        total = new_total
        table[k] = total
    return table


_LOG_FACT_TABLE = _build_log_factorial_table()


def digamma(x: float) -> float:
    """psi(x) = Gamma'(x)/Gamma(x) for x > 0.

    Upward recurrence psi(x) = psi(x+1) - 1/x until the argument is >= 8,
    then the de Moivre series. Absolute error is below 1e-12 across
    [1e-3, 1e6] except where the recurrence's own 1/x terms limit double
    precision; 1e-10 is the asserted bound.
    """
    x = float(x)
    if not x > 0.0:
        raise ValueError(f"digamma requires x > 0, got {x!r}")
    acc = 0.0
    while x < _DIGAMMA_SERIES_START:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    tail = 0.0
    power = inv2
    for c in _DIGAMMA_TAIL:
        tail += c * power
        power *= inv2
    return acc + math.log(x) - 0.5 / x - tail


def log_pochhammer(a: float, k: int) -> float:
    """log of the rising factorial (a)_k = a (a+1) ... (a+k-1), a > 0, k >= 0.

    Direct log-summation for small k (exact increment structure), lgamma
    difference beyond.
    """
    a = float(a)
    if not a > 0.0:
        raise ValueError(f"log_pochhammer requires a > 0, got {a!r}")
    if k != int(k) or k < 0:
        raise ValueError(f"log_pochhammer requires integer k >= 0, got {k!r}")
    k = int(k)
    if k == 0:
        return 0.0
    if k <= 64:
        return float(sum(math.log(a + j) for j in range(k)))
    return math.lgamma(a + k) - math.lgamma(a)


def log_factorial(k: int) -> float:
    """log k! via the cumulative table for k <= 10^4, lgamma(k+1) beyond."""
    if k != int(k) or k < 0:
        raise ValueError(f"log_factorial requires integer k >= 0, got {k!r}")
    k = int(k)
    if k <= _LOG_FACT_N:
        return float(_LOG_FACT_TABLE[k])
    return math.lgamma(k + 1.0)


def digamma_vec(x: np.ndarray) -> np.ndarray:
    """Elementwise digamma for positive arrays (thin loop over the scalar)."""
    arr = np.asarray(x, dtype=float)
    out = np.empty(arr.shape)
    flat_in = arr.ravel()
    flat_out = out.ravel()
    for i in range(flat_in.size):
        flat_out[i] = digamma(flat_in[i])
    return out


def log_factorial_vec(k: np.ndarray) -> np.ndarray:
    """Elementwise log k! for nonnegative integer arrays."""
    arr = np.asarray(k)
    if arr.size and (np.any(arr < 0) or np.any(arr != np.floor(arr))):
        raise ValueError("log_factorial_vec requires nonnegative integers")
    arr = arr.astype(np.int64)
    out = np.empty(arr.shape)
    small = arr <= _LOG_FACT_N
    out[small] = _LOG_FACT_TABLE[arr[small]]
    if np.any(~small):
        big = arr[~small].astype(float)
        out[~small] = np.array([math.lgamma(v + 1.0) for v in big])
    return out
