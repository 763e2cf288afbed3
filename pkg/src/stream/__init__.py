"""
Streaming package: ring-buffered windows summed pairwise across timescales.
"""

from .engine import (
    RingBuffer,
    StreamEngine,
    StreamEvent,
    WindowedMatrix,
    batch_matrix,
    finite_timestamp,
    replay,
)

__all__ = [
    'RingBuffer',
    'StreamEngine',
    'StreamEvent',
    'WindowedMatrix',
    'batch_matrix',
    'finite_timestamp',
    'replay',
]
