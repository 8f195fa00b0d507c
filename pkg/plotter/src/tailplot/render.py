"""CSV parsing and figure rendering."""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

#: The sweep CSV contract, verbatim.
EXPECTED_HEADER = ["delta", "threshold_d", "clamped", "exact",
                   "chernoff_direct", "chernoff_swapped", "beta_direct",
                   "beta_swapped", "serfling", "best"]

PLOTTABLE_COLUMNS = ("exact", "chernoff_direct", "chernoff_swapped",
                     "beta_direct", "beta_swapped", "serfling", "best")

#: Default series: the exact curve, both bound families, and the Serfling
#: comparator.  The orbit-canonicalized best is available via --columns.
DEFAULT_COLUMNS = ("exact", "chernoff_direct", "chernoff_swapped",
                   "beta_direct", "beta_swapped", "serfling")

# Fixed legend table: blue = Chernoff family, gold = beta family, red =
# exact, purple = Serfling (a distinct color: the reference figures' green
# aggregates bounds this tool does not compute).  Solid marks the
# symmetry-swapped variants, dashed the direct ones.
STYLES: dict[str, dict] = {
    "exact": dict(color="tab:red", linestyle="-", linewidth=2.2),
    "chernoff_direct": dict(color="tab:blue", linestyle="--", linewidth=1.6),
    "chernoff_swapped": dict(color="tab:blue", linestyle="-", linewidth=1.6),
    "beta_direct": dict(color="goldenrod", linestyle="--", linewidth=1.6),
    "beta_swapped": dict(color="goldenrod", linestyle="-", linewidth=1.6),
    "serfling": dict(color="tab:purple", linestyle="--", linewidth=1.4),
    "best": dict(color="dimgray", linestyle=":", linewidth=1.4),
}


class SchemaError(ValueError):
    """The input file does not match the sweep CSV contract."""


@dataclass(frozen=True)
class PlotSpec:
    input_csv: str
    output_image: str
    title: str = ""
    columns: tuple[str, ...] = DEFAULT_COLUMNS
    log_floor: float = 1e-30

    def __post_init__(self) -> None:
        if not self.log_floor > 0.0:
            raise SchemaError(f"log_floor must be > 0, got {self.log_floor}")
        unknown = [c for c in self.columns if c not in PLOTTABLE_COLUMNS]
        if unknown:
            raise SchemaError(
                f"unknown columns {unknown}; plottable: {list(PLOTTABLE_COLUMNS)}")
        if not self.columns:
            raise SchemaError("at least one column must be requested")


@dataclass
class RenderSummary:
    """What was drawn: per-series (delta, value) points after clipping."""

    output_image: str
    yscale: str
    series: dict[str, list[tuple[float, float]]] = field(default_factory=dict)
    linestyles: dict[str, str] = field(default_factory=dict)

    @property
    def series_count(self) -> int:
        return len(self.series)


def _read_rows(path: str) -> list[dict[str, str]]:
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if header != EXPECTED_HEADER:
                raise SchemaError(
                    f"{path}: header does not match the sweep schema; "
                    f"expected {EXPECTED_HEADER}, got {header}")
            rows = [dict(zip(EXPECTED_HEADER, row)) for row in reader]
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    if not rows:
        raise SchemaError(f"{path}: no data rows")
    return rows


def render(spec: PlotSpec) -> RenderSummary:
    """Render the figure and return what was plotted.

    Every plotted point exists in the CSV (after clipping to the floor);
    rows with an empty cell are skipped for that series only.
    """
    rows = _read_rows(spec.input_csv)
    summary = RenderSummary(output_image=spec.output_image, yscale="log")

    for name in spec.columns:
        pts: list[tuple[float, float]] = []
        for row in rows:
            cell = row[name]
            if cell == "":
                continue
            y = float(cell)
            pts.append((float(row["delta"]), max(y, spec.log_floor)))
        if pts:
            summary.series[name] = pts
            summary.linestyles[name] = STYLES[name]["linestyle"]

    fig, ax = plt.subplots(figsize=(7.0, 5.0))
    try:
        for name in spec.columns:
            if name not in summary.series:
                continue
            pts = summary.series[name]
            ax.plot([p[0] for p in pts], [p[1] for p in pts],
                    label=name, **STYLES[name])
        ax.set_yscale("log")
        ax.set_xlabel("relative deviation delta")
        ax.set_ylabel("upper tail probability")
        if spec.title:
            ax.set_title(spec.title)
        ax.legend(loc="best", fontsize=9)
        ax.grid(True, which="both", alpha=0.25)
        fig.tight_layout()
        fig.savefig(spec.output_image, dpi=150)
    finally:
        plt.close(fig)
    return summary


def render_file(input_csv: str, output_image: str, title: str = "",
                columns: Optional[Sequence[str]] = None,
                log_floor: float = 1e-30) -> RenderSummary:
    spec = PlotSpec(input_csv=input_csv, output_image=output_image,
                    title=title,
                    columns=tuple(columns) if columns else DEFAULT_COLUMNS,
                    log_floor=log_floor)
    return render(spec)
