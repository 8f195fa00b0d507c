"""tailplot: turn hypertail sweep CSVs into log-scale comparison figures.

The input contract is the sweep CSV schema (fixed header below).  Each
requested column becomes one series over delta; swapped bound variants are
drawn solid, direct ones dashed, the exact tail red, and values below the
clipping floor are pinned to it so curves stay continuous at extreme
deltas.
"""

__version__ = "0.1.0"

from .render import (
    DEFAULT_COLUMNS,
    EXPECTED_HEADER,
    PLOTTABLE_COLUMNS,
    STYLES,
    PlotSpec,
    RenderSummary,
    SchemaError,
    render,
)

__all__ = [
    "DEFAULT_COLUMNS", "EXPECTED_HEADER", "PLOTTABLE_COLUMNS", "STYLES",
    "PlotSpec", "RenderSummary", "SchemaError", "render",
]
