"""Exact hypergeometric machinery: parameters, log-PMF, exact tails, and
the parameter symmetries that make swapped/complemented bounds possible.

Conventions: ``HypergeomParams(N, K, n)`` is the distribution of the number
of marked items seen when drawing ``n`` items without replacement from a
population of ``N`` items of which ``K`` are marked.  Tails are computed on
the natural-log scale throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import PreconditionError, ValidationError
from .special import NEG_INF, LogProb, ln_binomial

# Above this the ratio-recurrence intermediates stop being exact in the
# integer arithmetic budget we target; the figure regimes need N <= 1e4.
MAX_POPULATION = 10**9

# Rescale the relative-term accumulator before it can overflow a double.
_RESCALE_LIMIT = 1e280


@dataclass(frozen=True, slots=True)
class HypergeomParams:
    """Population triple (N, K, n) with validity invariants."""

    population: int
    successes: int
    draws: int

    def __post_init__(self) -> None:
        N, K, n = self.population, self.successes, self.draws
        for name, v in (("population", N), ("successes", K), ("draws", n)):
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValidationError(f"{name} must be an integer, got {v!r}")
        if N < 1:
            raise ValidationError(f"population must be >= 1, got {N}")
        if N > MAX_POPULATION:
            raise ValidationError(
                f"population {N} exceeds the supported maximum {MAX_POPULATION}"
            )
        if not 0 <= K <= N:
            raise ValidationError(f"successes exceed population: K={K}, N={N}"
                                  if K > N else f"successes must be >= 0, got {K}")
        if not 0 <= n <= N:
            raise ValidationError(f"draws exceed population: n={n}, N={N}"
                                  if n > N else f"draws must be >= 0, got {n}")

    @property
    def support_min(self) -> int:
        return max(0, self.draws + self.successes - self.population)

    @property
    def support_max(self) -> int:
        return min(self.draws, self.successes)

    @property
    def mean(self) -> Fraction:
        """Exact mean nK/N."""
        return Fraction(self.draws * self.successes, self.population)

    @property
    def mean_floor(self) -> int:
        """floor(nK/N), computed in exact integer arithmetic."""
        return (self.draws * self.successes) // self.population

    @property
    def sampling_fraction(self) -> float:
        return self.draws / self.population

    def swapped(self) -> "HypergeomParams":
        return HypergeomParams(self.population, self.draws, self.successes)

    def complemented(self) -> "HypergeomParams":
        N = self.population
        return HypergeomParams(N, N - self.successes, N - self.draws)


class TailDirection(Enum):
    UPPER = "upper"
    LOWER = "lower"


@dataclass(frozen=True, slots=True)
class TailQuery:
    """A tail-probability question: params, integer threshold, direction.

    The threshold may lie outside the support; tails then degenerate to
    probability 0 or 1.
    """

    params: HypergeomParams
    threshold: int
    direction: TailDirection = TailDirection.UPPER

    def __post_init__(self) -> None:
        if not isinstance(self.threshold, int) or isinstance(self.threshold, bool):
            raise ValidationError(f"threshold must be an integer, got {self.threshold!r}")


class Transform(Enum):
    """Parameter symmetries of the hypergeometric PMF.

    Each transform maps an upper-tail query to one with an identical
    upper-tail probability:

    * ``SWAP``:          (N, K, n, d) -> (N, n, K, d)
    * ``COMPLEMENT_A``:  (N, K, n, d) -> (N, N-K, N-n, N-n-K+d)
    * ``COMPLEMENT_B``:  swap composed with complement,
                         (N, K, n, d) -> (N, N-n, N-K, N-n-K+d)
    """

    IDENTITY = "identity"
    SWAP = "swap"
    COMPLEMENT_A = "complement_a"
    COMPLEMENT_B = "complement_b"


@dataclass(frozen=True, slots=True)
class SymmetryRep:
    """One representation of an upper-tail query under the symmetry group."""

    params: HypergeomParams
    threshold: int
    transform_chain: tuple[Transform, ...]


def apply_transform(params: HypergeomParams, d: int, transform: Transform) -> tuple[HypergeomParams, int]:
    """Apply a single symmetry transform to (params, threshold)."""
    N, K, n = params.population, params.successes, params.draws
    if transform is Transform.IDENTITY:
        return params, d
    if transform is Transform.SWAP:
        return HypergeomParams(N, n, K), d
    if transform is Transform.COMPLEMENT_A:
        return HypergeomParams(N, N - K, N - n), N - n - K + d
    if transform is Transform.COMPLEMENT_B:
        return HypergeomParams(N, N - n, N - K), N - n - K + d
    raise ValueError(f"unknown transform {transform!r}")


def apply_chain(params: HypergeomParams, d: int,
                chain: tuple[Transform, ...]) -> tuple[HypergeomParams, int]:
    for t in chain:
        params, d = apply_transform(params, d, t)
    return params, d


def _require_upper(query: TailQuery, op: str) -> None:
    if query.direction is not TailDirection.UPPER:
        raise PreconditionError(f"{op} requires an upper-direction query")


def swap_rep(query: TailQuery) -> SymmetryRep:
    """The representation with K and n exchanged; the PMF (hence every
    tail) is unchanged."""
    _require_upper(query, "swap_rep")
    p, d = apply_transform(query.params, query.threshold, Transform.SWAP)
    return SymmetryRep(p, d, (Transform.SWAP,))


def complement_rep(query: TailQuery) -> SymmetryRep:
    """The representation counting unmarked items in the complement of the
    sample; the upper tail at the mapped threshold equals the original."""
    _require_upper(query, "complement_rep")
    p, d = apply_transform(query.params, query.threshold, Transform.COMPLEMENT_A)
    return SymmetryRep(p, d, (Transform.COMPLEMENT_A,))


def representation_orbit(query: TailQuery) -> list[SymmetryRep]:
    """All distinct representations of the query under the group generated
    by swap and complement (a Klein four-group, so at most 4).

    Deduplicated on (params, threshold), keeping the first chain in the
    fixed order identity, swap, complement_a, complement_b.
    """
    _require_upper(query, "representation_orbit")
    orbit: list[SymmetryRep] = []
    seen: set[tuple[int, int, int, int]] = set()
    for t in (Transform.IDENTITY, Transform.SWAP,
              Transform.COMPLEMENT_A, Transform.COMPLEMENT_B):
        p, d = apply_transform(query.params, query.threshold, t)
        key = (p.population, p.successes, p.draws, d)
        if key in seen:
            continue
        seen.add(key)
        orbit.append(SymmetryRep(p, d, (t,)))
    return orbit


def log_pmf(params: HypergeomParams, k: int) -> LogProb:
    """ln Pr[X = k] = ln[C(K,k) C(N-K,n-k) / C(N,n)]; -inf off the support."""
    if not isinstance(k, int) or isinstance(k, bool):
        raise ValidationError(f"k must be an integer, got {k!r}")
    if k < params.support_min or k > params.support_max:
        return NEG_INF
    N, K, n = params.population, params.successes, params.draws
    return ln_binomial(K, k) + ln_binomial(N - K, n - k) - ln_binomial(N, n)


def _tail_sum_down(params: HypergeomParams, d: int) -> LogProb:
    """ln sum_{k=d}^{support_max} pmf(k), summed tail-inward (smallest
    terms first) via the ratio recurrence with compensated accumulation."""
    N, K, n = params.population, params.successes, params.draws
    hi = params.support_max
    anchor = log_pmf(params, hi)
    if d == hi:
        return anchor
    # Terms relative to pmf(hi): t_k = pmf(k)/pmf(hi), accumulated downward.
    t = 1.0
    s = 1.0
    comp = 0.0
    offset = 0.0
    for k in range(hi - 1, d - 1, -1):
        # pmf(k)/pmf(k+1); exact integer products, one rounding at the divide.
        t *= ((k + 1) * (N - K - n + k + 1)) / ((K - k) * (n - k))
        y = t - comp
        tot = s + y
        comp = (tot - s) - y
        s = tot
        if s > _RESCALE_LIMIT:
            offset += math.log(s)
            t /= s
            comp /= s
            s = 1.0
    return anchor + offset + math.log(s)


def exact_upper_tail(params: HypergeomParams, d: int) -> LogProb:
    """ln Pr[X >= d], exact.

    Exactly 0.0 (probability 1) when d is at or below the support minimum;
    -inf (probability 0) when d is above the support maximum.
    """
    if not isinstance(d, int) or isinstance(d, bool):
        raise ValidationError(f"threshold must be an integer, got {d!r}")
    if d <= params.support_min:
        return 0.0
    if d > params.support_max:
        return NEG_INF
    return _tail_sum_down(params, d)


def exact_lower_tail(params: HypergeomParams, d: int) -> LogProb:
    """ln Pr[X <= d], via the reflection n - X ~ Hypergeometric(N, N-K, n)."""
    if not isinstance(d, int) or isinstance(d, bool):
        raise ValidationError(f"threshold must be an integer, got {d!r}")
    reflected = HypergeomParams(params.population,
                                params.population - params.successes,
                                params.draws)
    return exact_upper_tail(reflected, params.draws - d)


def upper_tail_table(params: HypergeomParams) -> list[LogProb]:
    """ln Pr[X >= d] for every d in [support_min, support_max], in one
    downward pass.

    Index i holds the tail at d = support_min + i.  This is the bulk
    accelerator for exhaustive verification grids; entry-by-entry it agrees
    with :func:`exact_upper_tail` (tested), except at d = support_min where
    the public function returns exactly 0.0 by convention.
    """
    N, K, n = params.population, params.successes, params.draws
    lo, hi = params.support_min, params.support_max
    anchor = log_pmf(params, hi)
    tails = [0.0] * (hi - lo + 1)
    tails[hi - lo] = anchor
    t = 1.0
    s = 1.0
    comp = 0.0
    offset = 0.0
    for k in range(hi - 1, lo - 1, -1):
        t *= ((k + 1) * (N - K - n + k + 1)) / ((K - k) * (n - k))
        y = t - comp
        tot = s + y
        comp = (tot - s) - y
        s = tot
        if s > _RESCALE_LIMIT:
            offset += math.log(s)
            t /= s
            comp /= s
            s = 1.0
        tails[k - lo] = anchor + offset + math.log(s)
    return tails
