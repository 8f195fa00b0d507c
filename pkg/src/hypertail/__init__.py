"""hypertail: rigorous tail bounds on the hypergeometric distribution.

The library computes Chernoff and regularized-incomplete-beta upper-tail
bounds, their symmetry-swapped variants, the Serfling comparator, and an
exact log-space tail oracle, plus canonicalization over the distribution's
parameter symmetries, a delta-sweep harness, and threshold inversion.

Everything internal runs on the natural-log scale; ``float("-inf")``
encodes probability zero.
"""

__version__ = "0.1.0"

from .bounds import (
    DEFAULT_METHODS,
    EXACT_TERM_BUDGET,
    BoundMethod,
    BoundReport,
    BoundResult,
    best_bound,
    beta_swapped,
    beta_upper,
    chernoff_swapped,
    chernoff_upper,
    invert_threshold,
    serfling_upper,
)
from .errors import (
    DomainError,
    HypertailError,
    NoApplicableMethodError,
    NonConvergenceError,
    PreconditionError,
    ValidationError,
)
from .exact import (
    MAX_POPULATION,
    HypergeomParams,
    SymmetryRep,
    TailDirection,
    TailQuery,
    Transform,
    apply_chain,
    apply_transform,
    complement_rep,
    exact_lower_tail,
    exact_upper_tail,
    log_pmf,
    representation_orbit,
    swap_rep,
    upper_tail_table,
)
from .special import (
    NEG_INF,
    LogProb,
    kl_bernoulli,
    ln_beta,
    ln_binomial,
    ln_gamma,
    ln_reg_inc_beta,
    log_to_linear,
    reg_inc_beta,
)
from .sweep import CSV_HEADER, SweepConfig, SweepRecord, run_sweep, write_sweep_csv
from .verify import (
    PropertyCheck,
    check_beta_dominates_chernoff,
    check_dominance,
    check_monotonicity,
    check_swap_advantage,
    check_symmetries,
    run_battery,
)

__all__ = [
    "BoundMethod", "BoundReport", "BoundResult", "CSV_HEADER",
    "DEFAULT_METHODS", "DomainError", "EXACT_TERM_BUDGET", "HypergeomParams",
    "HypertailError", "LogProb", "MAX_POPULATION", "NEG_INF",
    "NoApplicableMethodError", "NonConvergenceError", "PreconditionError",
    "PropertyCheck", "SweepConfig", "SweepRecord", "SymmetryRep",
    "TailDirection", "TailQuery", "Transform", "ValidationError",
    "apply_chain", "apply_transform", "best_bound", "beta_swapped",
    "beta_upper", "check_beta_dominates_chernoff", "check_dominance",
    "check_monotonicity", "check_swap_advantage", "check_symmetries",
    "chernoff_swapped", "chernoff_upper", "complement_rep",
    "exact_lower_tail", "exact_upper_tail", "invert_threshold",
    "kl_bernoulli", "ln_beta", "ln_binomial", "ln_gamma", "ln_reg_inc_beta",
    "log_pmf", "log_to_linear", "reg_inc_beta", "representation_orbit",
    "run_battery", "run_sweep", "serfling_upper", "swap_rep",
    "upper_tail_table", "write_sweep_csv",
]
