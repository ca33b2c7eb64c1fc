from .check import (
    check_nd,
    expected_discharges,
    is_major,
    is_normal,
    maximum_formulas,
    open_assumptions,
    open_labels,
    premise_scopes,
    slot_premises,
    walk,
)
from .subst import LabelSource, discharge_labels, freshen, substitute
from .io import dump_nd, load_nd, load_nds
from .tree import *  # noqa: F401,F403
from .tree import Hyp, NdDerivation, NdNode, child, end_formula, labels, node_count, replace_at

__all__ = [name for name in dir() if not name.startswith("_")]
