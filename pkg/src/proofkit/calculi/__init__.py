from .check import check, check_lt, check_slt, is_cut_free
from .constructions import (
    ConstructionError,
    SchematicHeight,
    cut_count,
    derive_identity,
    height,
    instantiate_schema,
    logical,
    neg_left_inverse,
    weaken_all,
    weaken_left,
    weaken_lt,
    weaken_lt_to,
    weaken_to,
)
from .rules import SchemaError
from .tree import *  # noqa: F401,F403
from .tree import CheckReport, Derivation, Family, Sequent, fresh_var

__all__ = [name for name in dir() if not name.startswith("_")]
