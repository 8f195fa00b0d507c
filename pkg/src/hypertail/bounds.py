"""Analytic upper-tail bounds for the hypergeometric distribution.

Five methods are provided:

* ``chernoff_upper``    -- exp[-n D(d/n || K/N)]
* ``chernoff_swapped``  -- exp[-K D(d/K || n/N)], from the K/n swap symmetry
* ``beta_upper``        -- I_{K/N}(d, n - d + 1), the binomial tail bound
* ``beta_swapped``      -- I_{n/N}(d, K - d + 1)
* ``serfling_upper``    -- exp(-2 n delta^2 / (1 - (n-1)/N)), the classical
                           finite-population-corrected bound

Validity regimes (enforced in exact integer arithmetic):

* Chernoff and Serfling require the threshold strictly above the mean,
  d N > n K.
* The beta bounds require the stronger d >= nK/N + 1, i.e. (d-1) N >= n K.
  The weaker reading is genuinely unsound for them: at (N=10, K=3, n=6,
  d=2) the exact tail is 2/3 but I_{0.3}(2, 5) = 0.5798.

``best_bound`` evaluates every requested method on every representation in
the symmetry orbit of the query and returns the minimum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterable, Optional, Sequence

from .errors import DomainError, NoApplicableMethodError, PreconditionError
from .exact import (
    HypergeomParams,
    SymmetryRep,
    TailDirection,
    TailQuery,
    Transform,
    exact_upper_tail,
    representation_orbit,
)
from .special import NEG_INF, LogProb, kl_bernoulli, ln_reg_inc_beta, log_to_linear

# Reports skip the exact oracle when the tail summation would exceed this
# many terms.
EXACT_TERM_BUDGET = 10**7


class BoundMethod(Enum):
    CHERNOFF_DIRECT = "chernoff_direct"
    CHERNOFF_SWAPPED = "chernoff_swapped"
    BETA_DIRECT = "beta_direct"
    BETA_SWAPPED = "beta_swapped"
    SERFLING = "serfling"
    BEST_CANONICAL = "best"
    EXACT = "exact"


#: The methods best_bound evaluates when none are requested explicitly.
DEFAULT_METHODS: tuple[BoundMethod, ...] = (
    BoundMethod.CHERNOFF_DIRECT,
    BoundMethod.CHERNOFF_SWAPPED,
    BoundMethod.BETA_DIRECT,
    BoundMethod.BETA_SWAPPED,
    BoundMethod.SERFLING,
)

# Tie-break order for equal bound values: prefer the beta family and the
# swapped variants, then Serfling; deterministic reports depend on this.
_METHOD_PRIORITY = {
    BoundMethod.BETA_SWAPPED: 0,
    BoundMethod.BETA_DIRECT: 1,
    BoundMethod.CHERNOFF_SWAPPED: 2,
    BoundMethod.CHERNOFF_DIRECT: 3,
    BoundMethod.SERFLING: 4,
}


@dataclass(frozen=True, slots=True)
class BoundResult:
    """One bound evaluation.

    ``applicable=False`` means the method's precondition failed for this
    representation; the value fields are then absent.  ``degenerate_support``
    marks the exact-zero results returned when the threshold exceeds the
    representation's support (the tail is identically 0 there).
    """

    method: BoundMethod
    representation: SymmetryRep
    log_value: Optional[LogProb]
    linear_value: Optional[float]
    applicable: bool
    degenerate_support: bool = False
    note: str = ""


@dataclass(frozen=True, slots=True)
class BoundReport:
    """Every requested method evaluated on one query, plus the exact tail
    (when affordable) and the best bound."""

    query: TailQuery
    results: tuple[BoundResult, ...]
    exact: Optional[LogProb]
    best: BoundResult


def _identity_rep(params: HypergeomParams, d: int) -> SymmetryRep:
    return SymmetryRep(params, d, (Transform.IDENTITY,))


def _require_above_mean(params: HypergeomParams, d: int, method: str) -> None:
    # d N > n K  <=>  d > nK/N, exact in integers.
    if d * params.population <= params.draws * params.successes:
        raise PreconditionError(
            f"{method}: threshold {d} is not above the mean "
            f"{params.draws * params.successes}/{params.population} "
            f"(threshold below mean+1 regime)"
        )


def _require_mean_plus_one(params: HypergeomParams, d: int, method: str) -> None:
    # d >= nK/N + 1  <=>  (d - 1) N >= n K, exact in integers.
    if (d - 1) * params.population < params.draws * params.successes:
        raise PreconditionError(
            f"{method}: threshold {d} is below nK/N + 1 = "
            f"{params.draws * params.successes}/{params.population} + 1 "
            f"(threshold below mean+1 regime)"
        )


def chernoff_upper(params: HypergeomParams, d: int) -> BoundResult:
    """Pr[X >= d] <= exp[-n D(d/n || K/N)] for d above the mean.

    For d beyond the support maximum n the formula's argument d/n would
    leave [0, 1]; the tail is identically 0 there, and that exact value is
    returned with the degenerate-support marker.
    """
    if params.draws < 1:
        raise PreconditionError("chernoff_upper requires draws >= 1")
    _require_above_mean(params, d, "chernoff_upper")
    rep = _identity_rep(params, d)
    if d > params.draws:
        return BoundResult(BoundMethod.CHERNOFF_DIRECT, rep, NEG_INF, 0.0,
                           applicable=True, degenerate_support=True)
    log_v = -params.draws * kl_bernoulli(d / params.draws,
                                         params.successes / params.population)
    return BoundResult(BoundMethod.CHERNOFF_DIRECT, rep, log_v,
                       log_to_linear(log_v), applicable=True)


def chernoff_swapped(params: HypergeomParams, d: int) -> BoundResult:
    """Pr[X >= d] <= exp[-K D(d/K || n/N)], the swap-symmetry Chernoff bound.

    When d > K the swapped variable's support is exhausted and the exact
    value 0 is returned with the degenerate-support marker.
    """
    _require_above_mean(params, d, "chernoff_swapped")
    rep = _identity_rep(params, d)
    if d > params.successes:
        return BoundResult(BoundMethod.CHERNOFF_SWAPPED, rep, NEG_INF, 0.0,
                           applicable=True, degenerate_support=True)
    log_v = -params.successes * kl_bernoulli(d / params.successes,
                                             params.draws / params.population)
    return BoundResult(BoundMethod.CHERNOFF_SWAPPED, rep, log_v,
                       log_to_linear(log_v), applicable=True)


def beta_upper(params: HypergeomParams, d: int) -> BoundResult:
    """Pr[X >= d] <= I_{K/N}(d, n - d + 1) for integer d >= nK/N + 1."""
    _require_mean_plus_one(params, d, "beta_upper")
    if d > params.draws:
        raise PreconditionError(
            f"beta_upper: threshold {d} exceeds draws {params.draws}")
    rep = _identity_rep(params, d)
    log_v = ln_reg_inc_beta(params.successes / params.population,
                            float(d), float(params.draws - d + 1))
    return BoundResult(BoundMethod.BETA_DIRECT, rep, log_v,
                       log_to_linear(log_v), applicable=True)


def beta_swapped(params: HypergeomParams, d: int) -> BoundResult:
    """Pr[X >= d] <= I_{n/N}(d, K - d + 1), the swap-symmetry beta bound.

    Exact 0 with the degenerate-support marker when d > K.
    """
    _require_mean_plus_one(params, d, "beta_swapped")
    rep = _identity_rep(params, d)
    if d > params.successes:
        return BoundResult(BoundMethod.BETA_SWAPPED, rep, NEG_INF, 0.0,
                           applicable=True, degenerate_support=True)
    log_v = ln_reg_inc_beta(params.draws / params.population,
                            float(d), float(params.successes - d + 1))
    return BoundResult(BoundMethod.BETA_SWAPPED, rep, log_v,
                       log_to_linear(log_v), applicable=True)


def serfling_upper(params: HypergeomParams, d: int) -> BoundResult:
    """Pr[X >= d] <= exp(-2 n delta^2 / (1 - (n-1)/N)) with
    delta = d/n - K/N > 0."""
    if params.draws < 1:
        raise PreconditionError("serfling_upper requires draws >= 1")
    _require_above_mean(params, d, "serfling_upper")
    N, K, n = params.population, params.successes, params.draws
    delta = (d * N - n * K) / (n * N)
    # 1 - (n-1)/N = (N - n + 1)/N, positive even at n = N.
    log_v = -2.0 * n * delta * delta * N / (N - n + 1)
    rep = _identity_rep(params, d)
    return BoundResult(BoundMethod.SERFLING, rep, log_v,
                       log_to_linear(log_v), applicable=True)


_METHOD_FN = {
    BoundMethod.CHERNOFF_DIRECT: chernoff_upper,
    BoundMethod.CHERNOFF_SWAPPED: chernoff_swapped,
    BoundMethod.BETA_DIRECT: beta_upper,
    BoundMethod.BETA_SWAPPED: beta_swapped,
    BoundMethod.SERFLING: serfling_upper,
}


def _normalize_methods(methods: Optional[Iterable[BoundMethod]]) -> tuple[BoundMethod, ...]:
    if methods is None:
        return DEFAULT_METHODS
    wanted = [m for m in DEFAULT_METHODS if m in set(methods)]
    if not wanted:
        raise DomainError("no evaluable bound methods requested")
    return tuple(wanted)


def _reflected_upper(query: TailQuery) -> TailQuery:
    # Pr[X <= d] = Pr[X' >= n - d] with X' ~ Hypergeometric(N, N-K, n).
    p = query.params
    reflected = HypergeomParams(p.population, p.population - p.successes, p.draws)
    return TailQuery(reflected, p.draws - query.threshold, TailDirection.UPPER)


def _chain_key(rep: SymmetryRep) -> tuple[str, ...]:
    return tuple(t.value for t in rep.transform_chain)


def best_bound(query: TailQuery,
               methods: Optional[Iterable[BoundMethod]] = None,
               compute_exact: bool = True,
               exact_budget: int = EXACT_TERM_BUDGET) -> BoundReport:
    """Evaluate every requested method on every representation in the
    symmetry orbit of the query; return all results, the exact tail when
    the summation budget permits, and the minimum as the best bound.

    Lower-direction queries are reflected to upper-direction ones first.
    Ties are broken by a fixed method order (beta_swapped, beta_direct,
    chernoff_swapped, chernoff_direct, serfling), then by the
    representation's transform chain.
    """
    wanted = _normalize_methods(methods)
    upper = query if query.direction is TailDirection.UPPER else _reflected_upper(query)

    results: list[BoundResult] = []
    for rep in representation_orbit(upper):
        for method in wanted:
            try:
                r = _METHOD_FN[method](rep.params, rep.threshold)
            except PreconditionError as exc:
                results.append(BoundResult(method, rep, None, None,
                                           applicable=False, note=str(exc)))
                continue
            results.append(replace(r, representation=rep))

    applicable = [r for r in results if r.applicable]
    if not applicable:
        raise NoApplicableMethodError(
            f"no bound method applies to N={upper.params.population} "
            f"K={upper.params.successes} n={upper.params.draws} "
            f"d={upper.threshold}: every method/representation pair failed "
            f"its precondition")
    best = min(applicable,
               key=lambda r: (r.log_value, _METHOD_PRIORITY[r.method],
                              _chain_key(r.representation)))

    exact: Optional[LogProb] = None
    if compute_exact:
        p, d = upper.params, upper.threshold
        terms = p.support_max - d + 1
        if d <= p.support_min or d > p.support_max or terms <= exact_budget:
            exact = exact_upper_tail(p, d)

    return BoundReport(query=query, results=tuple(results), exact=exact, best=best)


def invert_threshold(params: HypergeomParams,
                     epsilon: float,
                     methods: Optional[Iterable[BoundMethod]] = None) -> int:
    """Smallest integer d in [floor(nK/N)+1, min(n,K)+1] whose best bound
    is <= epsilon.

    Returns min(n,K)+1 when even the support maximum's bound exceeds
    epsilon; the tail beyond the support is exactly 0.  Found by binary
    search: every bound, hence their minimum, is non-increasing in d.
    """
    if not isinstance(epsilon, (int, float)) or math.isnan(epsilon):
        raise DomainError(f"epsilon must be a number in (0, 1], got {epsilon!r}")
    if not 0.0 < epsilon <= 1.0:
        raise DomainError(f"epsilon must be in (0, 1], got {epsilon!r}")
    wanted = _normalize_methods(methods)
    ln_eps = math.log(epsilon)
    lo = params.mean_floor + 1
    hi = params.support_max

    def satisfied(d: int) -> bool:
        try:
            report = best_bound(TailQuery(params, d), wanted, compute_exact=False)
        except NoApplicableMethodError:
            return False
        return report.best.log_value <= ln_eps

    if lo > hi or not satisfied(hi):
        return params.support_max + 1
    while lo < hi:
        mid = (lo + hi) // 2
        if satisfied(mid):
            hi = mid
        else:
            lo = mid + 1
    return lo
