"""Delta-sweep harness: tabulates every bound against the exact tail over a
grid of relative deviations and emits the fixed-schema CSV consumed by the
plot tool and the golden-file tests.
"""

from __future__ import annotations

import math
import os
import tempfile
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .bounds import (
    DEFAULT_METHODS,
    EXACT_TERM_BUDGET,
    BoundMethod,
    best_bound,
    _METHOD_FN,
)
from .errors import NoApplicableMethodError, PreconditionError, ValidationError
from .exact import HypergeomParams, TailQuery, exact_upper_tail, upper_tail_table
from .special import log_to_linear

#: Bit-exact CSV header; a stable contract for downstream tooling.
CSV_HEADER = ("delta,threshold_d,clamped,exact,chernoff_direct,"
              "chernoff_swapped,beta_direct,beta_swapped,serfling,best")

_METHOD_COLUMNS: tuple[BoundMethod, ...] = DEFAULT_METHODS

# Relative tolerance for snapping n(K/N + delta) to an integer before the
# ceiling; absorbs float noise like 500 * (0.02 + 0.03) = 25.000000000000004.
_CEIL_SNAP_RTOL = 1e-9


@dataclass(frozen=True, slots=True)
class SweepConfig:
    """Grid specification for one sweep.

    ``ratio`` is the marked fraction K/N; the integer K is round(ratio * N).
    The delta grid is linear-spaced, inclusive of both endpoints.
    """

    population: int
    ratio: float
    draws: int
    delta_min: float
    delta_max: float
    delta_steps: int
    methods: tuple[BoundMethod, ...] = _METHOD_COLUMNS
    include_exact: bool = True

    def __post_init__(self) -> None:
        if self.delta_steps < 2:
            raise ValidationError(f"delta_steps must be >= 2, got {self.delta_steps}")
        if not 0.0 <= self.ratio <= 1.0:
            raise ValidationError(f"ratio must be in [0, 1], got {self.ratio}")
        K = round(self.ratio * self.population)
        params = HypergeomParams(self.population, K, self.draws)  # validates
        eff_ratio = K / self.population
        if not 0.0 <= self.delta_min < self.delta_max:
            raise ValidationError(
                f"need 0 <= delta_min < delta_max, got [{self.delta_min}, {self.delta_max}]")
        if self.delta_max > 1.0 - eff_ratio + 1e-12:
            raise ValidationError(
                f"delta_max {self.delta_max} exceeds 1 - K/N = {1.0 - eff_ratio}")
        bad = [m for m in self.methods if m not in _METHOD_COLUMNS]
        if bad:
            raise ValidationError(f"unknown sweep methods: {bad}")
        object.__setattr__(self, "methods", tuple(m for m in _METHOD_COLUMNS
                                                  if m in set(self.methods)))
        _ = params

    @property
    def successes(self) -> int:
        return round(self.ratio * self.population)

    @property
    def params(self) -> HypergeomParams:
        return HypergeomParams(self.population, self.successes, self.draws)

    def deltas(self) -> list[float]:
        step = (self.delta_max - self.delta_min) / (self.delta_steps - 1)
        grid = [self.delta_min + i * step for i in range(self.delta_steps)]
        grid[-1] = self.delta_max
        return grid


@dataclass(frozen=True, slots=True)
class SweepRecord:
    """One CSV row: a delta grid point and every bound's linear value.

    ``None`` cells mean the method was inapplicable (or the exact tail was
    over the summation budget) and are written as empty CSV fields.
    """

    delta: float
    threshold: int
    clamped: bool
    exact: Optional[float]
    values: dict[BoundMethod, Optional[float]] = field(default_factory=dict)
    best: Optional[float] = None


def _threshold_for(params: HypergeomParams, delta: float) -> int:
    t = params.draws * (params.successes / params.population + delta)
    nearest = round(t)
    if abs(t - nearest) <= _CEIL_SNAP_RTOL * max(1.0, abs(t)):
        return nearest
    return math.ceil(t)


def run_sweep(config: SweepConfig) -> list[SweepRecord]:
    """Evaluate the sweep grid.

    Rows whose threshold is at or below floor(nK/N) are outside every
    bound's regime; they carry the trivial bound 1 in the requested bound
    columns and are flagged ``clamped``.
    """
    params = config.params
    lo, hi = params.support_min, params.support_max
    mean_floor = params.mean_floor

    table: Optional[list[float]] = None
    if config.include_exact and (hi - lo + 1) <= EXACT_TERM_BUDGET:
        table = upper_tail_table(params)

    def exact_cell(d: int) -> Optional[float]:
        if not config.include_exact:
            return None
        if d <= lo:
            return 1.0
        if d > hi:
            return 0.0
        if table is not None:
            return log_to_linear(table[d - lo])
        if hi - d + 1 <= EXACT_TERM_BUDGET:
            return log_to_linear(exact_upper_tail(params, d))
        return None

    records: list[SweepRecord] = []
    for delta in config.deltas():
        d = _threshold_for(params, delta)
        if d <= mean_floor:
            values = {m: 1.0 for m in config.methods}
            records.append(SweepRecord(delta, d, True, exact_cell(d), values, 1.0))
            continue
        values: dict[BoundMethod, Optional[float]] = {}
        for method in config.methods:
            try:
                values[method] = _METHOD_FN[method](params, d).linear_value
            except PreconditionError:
                values[method] = None
        try:
            report = best_bound(TailQuery(params, d), config.methods,
                                compute_exact=False)
            best = report.best.linear_value
        except NoApplicableMethodError:
            best = None
        records.append(SweepRecord(delta, d, False, exact_cell(d), values, best))
    return records


def _fmt(v: Optional[float]) -> str:
    return "" if v is None else f"{v:.16e}"


def record_lines(records: Sequence[SweepRecord]) -> list[str]:
    lines = [CSV_HEADER]
    for r in records:
        cells = [f"{r.delta:.16e}", str(r.threshold), "1" if r.clamped else "0",
                 _fmt(r.exact)]
        cells += [_fmt(r.values.get(m)) for m in _METHOD_COLUMNS]
        cells.append(_fmt(r.best))
        lines.append(",".join(cells))
    return lines


def write_sweep_csv(config: SweepConfig, out_path: str) -> list[SweepRecord]:
    """Run the sweep and write the CSV atomically (temp file + rename), so
    a failure never leaves a partial file behind."""
    records = run_sweep(config)
    payload = "\n".join(record_lines(records)) + "\n"
    out_dir = os.path.dirname(os.path.abspath(out_path))
    fd, tmp_path = tempfile.mkstemp(dir=out_dir, prefix=".sweep-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(payload)
        os.replace(tmp_path, out_path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise
    return records
