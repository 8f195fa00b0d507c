"""Command-line front end: plot --in PATH --out PATH [options]."""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .render import DEFAULT_COLUMNS, PlotSpec, SchemaError, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plot",
        description="Render a hypertail sweep CSV as a log-scale figure.")
    parser.add_argument("--in", dest="input_csv", required=True,
                        help="sweep CSV produced by `hypertail sweep`")
    parser.add_argument("--out", dest="output_image", required=True,
                        help="output image path (format by extension)")
    parser.add_argument("--title", default="")
    parser.add_argument("--columns", default=None,
                        help="comma-separated subset of "
                             "exact,chernoff_direct,chernoff_swapped,"
                             "beta_direct,beta_swapped,serfling,best")
    parser.add_argument("--log-floor", type=float, default=1e-30,
                        help="clip values below this instead of dropping them")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.columns is not None:
        columns = tuple(c.strip() for c in args.columns.split(",") if c.strip())
    else:
        columns = DEFAULT_COLUMNS
    try:
        spec = PlotSpec(input_csv=args.input_csv,
                        output_image=args.output_image,
                        title=args.title,
                        columns=columns,
                        log_floor=args.log_floor)
        summary = render(spec)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {summary.output_image} "
          f"({summary.series_count} series: {', '.join(summary.series)})")
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
