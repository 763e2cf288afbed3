"""
Semiring definitions and the randomized law checker.

Only the core module is re-exported here. The dual, path, provenance and
registry modules build on `src.arrays` and are imported by their full path.
"""

from .core import (
    ARITH_NAT,
    INF,
    LAW_NAMES,
    MAX_MIN,
    MIN_PLUS,
    STOCK_SEMIRINGS,
    SemiringDef,
    axiom_check,
    broken_semiring,
    combine_add,
    combine_mul,
    render_scalar,
    stock_semiring,
)

__all__ = [
    'ARITH_NAT',
    'INF',
    'LAW_NAMES',
    'MAX_MIN',
    'MIN_PLUS',
    'STOCK_SEMIRINGS',
    'SemiringDef',
    'axiom_check',
    'broken_semiring',
    'combine_add',
    'combine_mul',
    'render_scalar',
    'stock_semiring',
]
