from __future__ import annotations

from mmwidth.cuts._function import (
    DENSE_MEMO_LIMIT,
    CutFunction,
    br_function,
    custom_function,
    mm_function,
    rank_function,
)
from mmwidth.cuts._matching import MatchingCertificate, mm_size, mm_value
from mmwidth.cuts._rank import br_cut, gf2_rank, rank_cut

__all__ = [
    "DENSE_MEMO_LIMIT",
    "CutFunction",
    "MatchingCertificate",
    "br_cut",
    "br_function",
    "custom_function",
    "gf2_rank",
    "mm_function",
    "mm_size",
    "mm_value",
    "rank_cut",
    "rank_function",
]
