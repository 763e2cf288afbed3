"""
Linear operators pushed down to sum partitions.

    B ⊕.⊗ A ⊕.⊗ C = ⊕_p (B ⊕.⊗ A_p ⊕.⊗ C)
    M ⊗ A         = ⊕_p (M ⊗ A_p)
"""

import logging
from typing import Optional

from ..arrays.assoc_array import AssocArray, array_mul, ewise_mul
from ..errors import ConformabilityError
from .sum_partition import SumPartition, map_reduce_linear

logger = logging.getLogger(__name__)


def triple_product(
    B: AssocArray,
    parts: SumPartition,
    C: AssocArray,
    max_workers: Optional[int] = None,
) -> AssocArray:
    """
    ⊕_p (B ⊕.⊗ A_p ⊕.⊗ C), equal to B ⊕.⊗ A ⊕.⊗ C.

    Raises:
        ConformabilityError: If B's columns are not A's rows or C's rows are
            not A's columns
    """
    if B.col_set != parts.row_set:
        raise ConformabilityError("Columns of B must match the row keys of A")
    if C.row_set != parts.col_set:
        raise ConformabilityError("Rows of C must match the column keys of A")

    logger.debug(f"Triple product over P={parts.size} parts")
    return map_reduce_linear(
        parts, lambda part: array_mul(array_mul(B, part), C), max_workers
    )


def apply_mask(
    M: AssocArray,
    parts: SumPartition,
    max_workers: Optional[int] = None,
) -> AssocArray:
    """
    ⊕_p (M ⊗ A_p), equal to M ⊗ A.

    Raises:
        ConformabilityError: If M and A have different key sets
    """
    if M.row_set != parts.row_set or M.col_set != parts.col_set:
        raise ConformabilityError("Mask and array must share their key sets")
    return map_reduce_linear(parts, lambda part: ewise_mul(M, part), max_workers)
