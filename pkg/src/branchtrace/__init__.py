"""Branch traces: input-selected computation paths and their statistics.

The package follows one object through several settings: the L/R string
of conditional branches a computation takes for a given input.

* :mod:`branchtrace.collatz` records and inverts half-or-triple
  trajectory traces and surveys ranges of inputs.
* :mod:`branchtrace.rule30` evolves the chaotic elementary cellular
  automaton and extracts its center column as a bit source.
* :mod:`branchtrace.randstat` scores bitstreams with a small battery of
  classical randomness tests.
* :mod:`branchtrace.bounds` tallies description-length accounting over
  input ranges and enumerates composition paths.
* :mod:`branchtrace.dyncompose` is a toy keyed digest whose round
  schedule is its own branch trace (not a cryptographic primitive).
* :mod:`branchtrace.cli` is the `branchtrace` command.
"""

from . import bounds, collatz, dyncompose, randstat, rule30, special
from .bounds import (
    BoundReport,
    bound_report,
    composition_labels,
    description_bits,
    paths_at_depth,
)
from .collatz import (
    StopMode,
    StopReason,
    StopRule,
    SurveyResult,
    TraceRecord,
    decode,
    replay,
    survey,
    trace,
)
from .errors import (
    BlockLengthError,
    BranchTraceError,
    DomainError,
    InconsistentTrace,
    KeyLengthError,
    ResourceError,
)
from .prng import XorShift64Star
from .randstat import (
    AvalancheReport,
    TestReport,
    avalanche,
    battery,
    monobit,
    runs_test,
    serial_test,
    shannon_entropy,
)
from .rule30 import BoundaryMode, Grid, Row, center_column, evolve, random_row, step_row

__version__ = "1.0.0"

__all__ = [
    "BlockLengthError",
    "BoundaryMode",
    "BoundReport",
    "BranchTraceError",
    "DomainError",
    "Grid",
    "InconsistentTrace",
    "KeyLengthError",
    "ResourceError",
    "Row",
    "StopMode",
    "StopReason",
    "StopRule",
    "SurveyResult",
    "TestReport",
    "AvalancheReport",
    "XorShift64Star",
    "avalanche",
    "battery",
    "bound_report",
    "bounds",
    "center_column",
    "collatz",
    "composition_labels",
    "decode",
    "description_bits",
    "dyncompose",
    "evolve",
    "monobit",
    "paths_at_depth",
    "random_row",
    "randstat",
    "replay",
    "rule30",
    "runs_test",
    "serial_test",
    "shannon_entropy",
    "special",
    "step_row",
    "survey",
    "trace",
]
