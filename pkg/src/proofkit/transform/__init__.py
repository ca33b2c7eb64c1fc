"""Translations between the calculi and the cut-elimination procedures."""
from .cutelim import DEFAULT_FUEL, FuelExhausted, cut_eliminate_lt, cut_eliminate_slt, default_fuel
from .lt_slt import lt_cutfree_to_slt_cutfree, negate_all, slt_to_lt
from .nd_slt import Contradiction, TranslationError, nlt_to_slt, slt_cut, slt_cutfree_to_nd_normal
from .pipeline import normalize_indirect

__all__ = [
    "Contradiction",
    "DEFAULT_FUEL",
    "FuelExhausted",
    "TranslationError",
    "cut_eliminate_lt",
    "cut_eliminate_slt",
    "default_fuel",
    "lt_cutfree_to_slt_cutfree",
    "negate_all",
    "nlt_to_slt",
    "normalize_indirect",
    "slt_cut",
    "slt_cutfree_to_nd_normal",
    "slt_to_lt",
]
