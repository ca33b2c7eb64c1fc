"""Indirect normalization: ND to SLT, cut elimination, and back to normal ND."""
from __future__ import annotations

from .cutelim import cut_eliminate_slt
from .nd_slt import nlt_to_slt, slt_cutfree_to_nd_normal


def normalize_indirect(d, fuel: int | None = None, variable: str = "p"):
    """Normal ND derivation with the same end formula and ``oa`` contained in ``oa(d)``."""
    return slt_cutfree_to_nd_normal(cut_eliminate_slt(nlt_to_slt(d), fuel), variable)
