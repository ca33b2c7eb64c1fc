from .formula import (
    And,
    F,
    Formula,
    G,
    Imp,
    Neg,
    Or,
    PrefixedFormula,
    Var,
    X,
    contradiction,
    grade,
    is_atomic,
    next_,
    shift,
    size,
    sort_key,
    strip_x,
)
from .index import (
    ONE,
    ZERO,
    Index,
    UnboundVariable,
    index_add,
    index_eq,
    index_eval,
    parse_index,
)
from .parser import FormulaSyntaxError, format_formula, parse_formula
from .trace import (
    LassoTrace,
    enumerate_lassos,
    eval_on_trace,
    find_countermodel,
    valid_on_lassos,
)

__all__ = [name for name in dir() if not name.startswith("_")]
