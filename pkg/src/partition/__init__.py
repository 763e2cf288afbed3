"""
Sum-partition package.

Splits arrays into ⊕-summable parts, pushes linear work down to them on a
worker pool, and hosts the partitioned pipelines (triple products, masks,
ReLU layers, traffic statistics).
"""

from .dnn import DnnLayerPartition, SelectorDiag, dense_relu, make_column_partition, relu_layer
from .linear_ops import apply_mask, triple_product
from .sum_partition import (
    STRATEGIES,
    SumPartition,
    compose_linear,
    global_sum,
    map_reduce_linear,
    parallel_map,
    partition,
    reduce,
    tree_reduce,
)
from .traffic import summarize_traffic, traffic_stats

__all__ = [
    'STRATEGIES',
    'DnnLayerPartition',
    'SelectorDiag',
    'SumPartition',
    'apply_mask',
    'compose_linear',
    'dense_relu',
    'global_sum',
    'make_column_partition',
    'map_reduce_linear',
    'parallel_map',
    'partition',
    'reduce',
    'relu_layer',
    'summarize_traffic',
    'traffic_stats',
    'tree_reduce',
    'triple_product',
]
