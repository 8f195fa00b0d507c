"""Exhaustive-grid verification battery.

Checks, over every parameter triple up to a population cap and every
threshold from floor(nK/N)+1 through support_max+1:

* dominance_over_oracle   -- every applicable bound >= the exact tail
* beta_dominates_chernoff -- beta <= Chernoff on the same parametrization
* swap_advantage          -- swapped <= direct whenever n > K (an
                             empirically supported observation, reported
                             separately from the theorem-backed properties)
* bound_monotonicity      -- each bound non-increasing in the threshold
* symmetry_identities     -- PMF swap/complement identities and agreement
                             of exact tails across the symmetry orbit

Violations are recorded verbatim, one line per offending grid point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .bounds import BoundMethod, _METHOD_FN
from .errors import PreconditionError, ValidationError
from .exact import (
    HypergeomParams,
    TailQuery,
    log_pmf,
    representation_orbit,
    upper_tail_table,
)
from .special import NEG_INF, log_to_linear

DEFAULT_TOLERANCE = 1e-12

SOUNDNESS_PROPERTIES = (
    "dominance_over_oracle",
    "beta_dominates_chernoff",
    "bound_monotonicity",
    "symmetry_identities",
)
TOLERATED_PROPERTIES = ("swap_advantage",)


@dataclass
class PropertyCheck:
    name: str
    checks: int = 0
    violations: list[str] = None  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.violations is None:
            self.violations = []

    @property
    def ok(self) -> bool:
        return not self.violations


def _triples(max_population: int):
    if max_population < 1:
        raise ValidationError(
            f"max population must be >= 1, got {max_population}")
    for N in range(1, max_population + 1):
        for K in range(0, N + 1):
            for n in range(0, N + 1):
                yield HypergeomParams(N, K, n)


def _bound_grid_battery(max_population: int, tol: float) -> dict[str, PropertyCheck]:
    """Single pass over the bound-value grid feeding the four value-based
    properties; one pass keeps the exhaustive run affordable."""
    dominance = PropertyCheck("dominance_over_oracle")
    beta_vs_chern = PropertyCheck("beta_dominates_chernoff")
    swap_adv = PropertyCheck("swap_advantage")
    monotone = PropertyCheck("bound_monotonicity")

    pairs_beta = ((BoundMethod.BETA_DIRECT, BoundMethod.CHERNOFF_DIRECT),
                  (BoundMethod.BETA_SWAPPED, BoundMethod.CHERNOFF_SWAPPED))
    pairs_swap = ((BoundMethod.CHERNOFF_SWAPPED, BoundMethod.CHERNOFF_DIRECT),
                  (BoundMethod.BETA_SWAPPED, BoundMethod.BETA_DIRECT))

    for params in _triples(max_population):
        N, K, n = params.population, params.successes, params.draws
        lo_d = params.mean_floor + 1
        hi_d = params.support_max + 1
        if lo_d > hi_d:
            continue
        table = upper_tail_table(params)
        sup_lo, sup_hi = params.support_min, params.support_max
        prev: dict[BoundMethod, Optional[float]] = {m: None for m in _METHOD_FN}
        for d in range(lo_d, hi_d + 1):
            exact_lin = log_to_linear(table[d - sup_lo]) if d <= sup_hi else 0.0
            values: dict[BoundMethod, Optional[float]] = {}
            for method, fn in _METHOD_FN.items():
                try:
                    values[method] = fn(params, d).linear_value
                except PreconditionError:
                    values[method] = None

            where = f"N={N} K={K} n={n} d={d}"
            for method, v in values.items():
                if v is None:
                    continue
                dominance.checks += 1
                if v + tol < exact_lin:
                    dominance.violations.append(
                        f"{where} {method.value}={v:.17e} < exact={exact_lin:.17e}")
                if prev[method] is not None:
                    monotone.checks += 1
                    if v > prev[method] + tol:
                        monotone.violations.append(
                            f"{where} {method.value}={v:.17e} > value at "
                            f"d={d - 1} ({prev[method]:.17e})")
                prev[method] = v

            for m_beta, m_chern in pairs_beta:
                vb, vc = values[m_beta], values[m_chern]
                if vb is None or vc is None:
                    continue
                beta_vs_chern.checks += 1
                if vb > vc + tol:
                    beta_vs_chern.violations.append(
                        f"{where} {m_beta.value}={vb:.17e} > {m_chern.value}={vc:.17e}")

            # The swapped-is-tighter observation is claimed for n > K on
            # thresholds at least one above the mean.
            if n > K and (d - 1) * N >= n * K:
                for m_swap, m_direct in pairs_swap:
                    vs, vd = values[m_swap], values[m_direct]
                    if vs is None or vd is None:
                        continue
                    swap_adv.checks += 1
                    if vs > vd + tol:
                        swap_adv.violations.append(
                            f"{where} {m_swap.value}={vs:.17e} > "
                            f"{m_direct.value}={vd:.17e}")

    return {c.name: c for c in (dominance, beta_vs_chern, swap_adv, monotone)}


def check_symmetries(max_population: int, tol: float = DEFAULT_TOLERANCE) -> PropertyCheck:
    """PMF swap/complement identities (log scale, infinities matching
    exactly) and exact-upper-tail agreement across each query's orbit."""
    check = PropertyCheck("symmetry_identities")
    tables: dict[tuple[int, int, int], list[float]] = {}

    def tail_lin(p: HypergeomParams, d: int) -> float:
        if d <= p.support_min:
            return 1.0
        if d > p.support_max:
            return 0.0
        key = (p.population, p.successes, p.draws)
        t = tables.get(key)
        if t is None:
            t = tables[key] = upper_tail_table(p)
        return log_to_linear(t[d - p.support_min])

    def log_match(a: float, b: float) -> bool:
        if a == NEG_INF or b == NEG_INF:
            return a == b
        return abs(a - b) <= tol

    for params in _triples(max_population):
        N, K, n = params.population, params.successes, params.draws
        swapped = params.swapped()
        comp = params.complemented()
        for k in range(params.support_min - 1, params.support_max + 2):
            a = log_pmf(params, k)
            check.checks += 2
            b = log_pmf(swapped, k)
            if not log_match(a, b):
                check.violations.append(
                    f"swap pmf: N={N} K={K} n={n} k={k} {a!r} != {b!r}")
            c = log_pmf(comp, N - n - K + k)
            if not log_match(a, c):
                check.violations.append(
                    f"complement pmf: N={N} K={K} n={n} k={k} {a!r} != {c!r}")
        for d in range(params.mean_floor + 1, params.support_max + 2):
            base = tail_lin(params, d)
            for rep in representation_orbit(TailQuery(params, d))[1:]:
                check.checks += 1
                other = tail_lin(rep.params, rep.threshold)
                if abs(base - other) > tol:
                    chain = "+".join(t.value for t in rep.transform_chain)
                    check.violations.append(
                        f"orbit tail: N={N} K={K} n={n} d={d} via {chain}: "
                        f"{other:.17e} != {base:.17e}")
    return check


def check_dominance(max_population: int, tol: float = DEFAULT_TOLERANCE) -> PropertyCheck:
    return _bound_grid_battery(max_population, tol)["dominance_over_oracle"]


def check_beta_dominates_chernoff(max_population: int,
                                  tol: float = DEFAULT_TOLERANCE) -> PropertyCheck:
    return _bound_grid_battery(max_population, tol)["beta_dominates_chernoff"]


def check_swap_advantage(max_population: int,
                         tol: float = DEFAULT_TOLERANCE) -> PropertyCheck:
    return _bound_grid_battery(max_population, tol)["swap_advantage"]


def check_monotonicity(max_population: int,
                       tol: float = DEFAULT_TOLERANCE) -> PropertyCheck:
    return _bound_grid_battery(max_population, tol)["bound_monotonicity"]


def run_battery(max_population: int = 40,
                tol: float = DEFAULT_TOLERANCE) -> list[PropertyCheck]:
    """Run the full battery; returns one PropertyCheck per property in a
    fixed report order."""
    by_name = _bound_grid_battery(max_population, tol)
    by_name["symmetry_identities"] = check_symmetries(max_population, tol)
    order = ("dominance_over_oracle", "beta_dominates_chernoff",
             "swap_advantage", "bound_monotonicity", "symmetry_identities")
    return [by_name[name] for name in order]
