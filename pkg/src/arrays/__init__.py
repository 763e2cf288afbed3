"""
Associative arrays package.

Sparse, semiring-generic arrays over arbitrary key sets and the graph arrays
built from them.
"""

from .assoc_array import (
    UNIT_KEY,
    AssocArray,
    array_mul,
    col_reduce,
    empty,
    ewise_add,
    ewise_mul,
    from_triples,
    identity_diag,
    key_order,
    nnz,
    ones_vector,
    project,
    row_reduce,
    sorted_keys,
    total,
    transpose,
)
from .graph import GraphArrays, build_graph_arrays

__all__ = [
    'UNIT_KEY',
    'AssocArray',
    'GraphArrays',
    'array_mul',
    'build_graph_arrays',
    'col_reduce',
    'empty',
    'ewise_add',
    'ewise_mul',
    'from_triples',
    'identity_diag',
    'key_order',
    'nnz',
    'ones_vector',
    'project',
    'row_reduce',
    'sorted_keys',
    'total',
    'transpose',
]
