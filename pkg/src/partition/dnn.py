"""
Column-partitioned ReLU layer.

    y = max(x W + b, 0) = Σ_p max(x W_p + b_p, 0),  W_p = W I_p,  b_p = b I_p

where the I_p are {0, 1}-valued diagonal selectors of disjoint column blocks
that sum to the identity. Each output column is produced by exactly one part;
every other part contributes an exact zero there.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from ..algebra.core import ARITH_NAT
from ..arrays.assoc_array import AssocArray, from_triples
from ..errors import ConformabilityError, PartitionError
from .sum_partition import block_of, parallel_map

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SelectorDiag:
    """{0, 1}-valued diagonal selector over the output columns."""

    diag: AssocArray

    @property
    def columns(self) -> Tuple[int, ...]:
        return tuple(k for k, _, _ in self.diag.triples())

    def dense(self, n: int) -> np.ndarray:
        """The selector as an n × n numpy matrix."""
        mask = np.zeros(n, dtype=np.int64)
        mask[list(self.columns)] = 1
        return np.diag(mask)


@dataclass(frozen=True)
class DnnLayerPartition:
    """Weight and bias blocks of a layer split over P column selectors."""

    weight_parts: Tuple[np.ndarray, ...]
    bias_parts: Tuple[np.ndarray, ...]
    selectors: Tuple[SelectorDiag, ...]

    @property
    def size(self) -> int:
        return len(self.selectors)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.weight_parts[0].shape


def make_column_partition(W: np.ndarray, b: np.ndarray, P: int) -> DnnLayerPartition:
    """
    Split a layer's N output columns into P contiguous blocks.

    Args:
        W: M × N weight matrix
        b: length-N bias vector
        P: Number of parts, 1 <= P <= N

    Raises:
        PartitionError: If P is out of range
        ConformabilityError: If b does not have N entries
    """
    W = np.asarray(W)
    b = np.asarray(b)
    if W.ndim != 2:
        raise ConformabilityError(f"W must be a matrix, got shape {W.shape}")
    n_out = W.shape[1]
    if b.shape != (n_out,):
        raise ConformabilityError(f"Bias shape {b.shape} does not match N={n_out}")
    if P < 1 or P > n_out:
        raise PartitionError(f"Need 1 <= P <= N, got P={P}, N={n_out}")

    selectors: List[SelectorDiag] = []
    weight_parts: List[np.ndarray] = []
    bias_parts: List[np.ndarray] = []
    for p in range(P):
        cols = [j for j in range(n_out) if block_of(j, n_out, P) == p]
        diag = from_triples(((j, j, 1) for j in cols), ARITH_NAT, range(n_out), range(n_out))
        selector = SelectorDiag(diag)
        dense = selector.dense(n_out)
        selectors.append(selector)
        weight_parts.append(W @ dense)
        bias_parts.append(b @ dense)

    return DnnLayerPartition(
        weight_parts=tuple(weight_parts),
        bias_parts=tuple(bias_parts),
        selectors=tuple(selectors),
    )


def dense_relu(x: np.ndarray, W: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Unpartitioned max(x W + b, 0)."""
    return np.maximum(np.asarray(x) @ np.asarray(W) + np.asarray(b), 0)


def relu_layer(
    x: np.ndarray,
    layer: DnnLayerPartition,
    max_workers: Optional[int] = None,
) -> np.ndarray:
    """
    Σ_p max(x W_p + b_p, 0), evaluating the parts concurrently.

    Raises:
        ConformabilityError: If x does not have M entries
    """
    x = np.asarray(x)
    n_in = layer.shape[0]
    if x.shape != (n_in,):
        raise ConformabilityError(f"Input shape {x.shape} does not match M={n_in}")

    outputs = parallel_map(
        lambda p: np.maximum(x @ layer.weight_parts[p] + layer.bias_parts[p], 0),
        range(layer.size),
        max_workers,
    )
    return np.sum(np.stack(outputs), axis=0)
