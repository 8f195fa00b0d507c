"""Independent oracles used by the test suite.

These deliberately avoid the library's own code paths: binomial and
hypergeometric quantities come from exact integer/rational arithmetic
(math.comb, Fraction), and tail sums are assembled by direct summation.
"""

from __future__ import annotations

import math
from fractions import Fraction


def binom_tail_log(n: int, d: int, p: float) -> float:
    """ln Pr[Bin(n, p) >= d] by direct log-space summation.

    Binomial coefficients are exact integers; the only approximations are
    the per-term logs and the final log-sum-exp.
    """
    if d > n:
        return float("-inf")
    if d <= 0:
        return 0.0
    if p == 0.0:
        return float("-inf")
    if p == 1.0:
        return 0.0
    ln_p = math.log(p)
    ln_q = math.log1p(-p)
    terms = [math.log(math.comb(n, k)) + k * ln_p + (n - k) * ln_q
             for k in range(d, n + 1)]
    m = max(terms)
    return m + math.log(math.fsum(math.exp(t - m) for t in terms))


def binom_tail_fraction(n: int, d: int, p: float) -> Fraction:
    """Pr[Bin(n, p) >= d] as an exact rational (p converted exactly)."""
    if d > n:
        return Fraction(0)
    if d <= 0:
        return Fraction(1)
    pf = Fraction(p)
    qf = 1 - pf
    return sum((math.comb(n, k) * pf**k * qf**(n - k) for k in range(d, n + 1)),
               Fraction(0))


def hypergeom_pmf_fraction(N: int, K: int, n: int, k: int) -> Fraction:
    if k < max(0, n + K - N) or k > min(n, K):
        return Fraction(0)
    return Fraction(math.comb(K, k) * math.comb(N - K, n - k), math.comb(N, n))


def hypergeom_upper_fraction(N: int, K: int, n: int, d: int) -> Fraction:
    hi = min(n, K)
    if d > hi:
        return Fraction(0)
    lo = max(0, n + K - N)
    return sum((hypergeom_pmf_fraction(N, K, n, k) for k in range(max(d, lo), hi + 1)),
               Fraction(0))


def kl_bernoulli_mpmath(x: float, y: float):
    """High-precision Bernoulli KL divergence (returns an mpf)."""
    import mpmath as mp
    xm, ym = mp.mpf(x), mp.mpf(y)
    total = mp.mpf(0)
    if xm > 0:
        if ym == 0:
            return mp.inf
        total += xm * mp.log(xm / ym)
    if xm < 1:
        if ym == 1:
            return mp.inf
        total += (1 - xm) * mp.log((1 - xm) / (1 - ym))
    return total
