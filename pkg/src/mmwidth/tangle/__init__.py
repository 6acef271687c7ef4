from __future__ import annotations

from mmwidth.tangle._certificate import (
    SmallSetOracle,
    TangleCertificate,
    grid_tangle,
    obstruction_tangle,
    tangle3_example,
)
from mmwidth.tangle._grid import (
    SweepReport,
    column_masks,
    covering_triple,
    is_small,
    row_masks,
    small_sets,
    sweep_empty_line,
    sweep_rows_columns,
    sweep_small_complement,
    sweep_small_triples,
)
from mmwidth.tangle._verify import TANGLE_MAX_GROUND, TangleReport, TangleVerifier, verify_tangle

__all__ = [
    "TANGLE_MAX_GROUND",
    "SmallSetOracle",
    "SweepReport",
    "TangleCertificate",
    "TangleReport",
    "TangleVerifier",
    "column_masks",
    "covering_triple",
    "grid_tangle",
    "is_small",
    "obstruction_tangle",
    "row_masks",
    "small_sets",
    "sweep_empty_line",
    "sweep_rows_columns",
    "sweep_small_complement",
    "sweep_small_triples",
    "tangle3_example",
    "verify_tangle",
]
