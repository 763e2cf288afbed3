"""
Multi-timescale graph streaming.

Events (src, dst, count, timestamp) accumulate into a level-0 window that
closes after m events (fixed-m) or when a timestamp crosses the next multiple
of t (fixed-t). Each closed window is pushed to its level's ring buffer and
paired with its unpaired neighbour: windows 2k and 2k+1 at level s are
⊕-summed into window k at level s + 1, up to the top level L - 1. A level-s
window therefore covers 2^s level-0 windows.
"""

import logging
import math
from collections import deque
from dataclasses import dataclass
from typing import Any, Deque, Dict, Hashable, Iterable, List, NamedTuple, Optional, Tuple

from ..algebra.core import ARITH_NAT, SemiringDef
from ..arrays.assoc_array import AssocArray, ewise_add, from_triples
from ..config import config
from ..errors import (
    DomainValueError,
    InvalidLevelError,
    OutOfOrderEventError,
    StreamClosedError,
    WindowEvictedError,
    WindowPendingError,
    WindowUnavailableError,
)
from ..partition.traffic import summarize_traffic
from ..schemas import StreamConfig, TrafficStats, WindowRecord

logger = logging.getLogger(__name__)


class StreamEvent(NamedTuple):
    src: Hashable
    dst: Hashable
    count: Any
    timestamp: float


@dataclass(frozen=True)
class WindowedMatrix:
    """
    One completed window.

    `span` is the (first, last) event ordinal in fixed-m mode and the
    [start, end) time range in fixed-t mode. `ordinals` is always the
    half-open range of event ordinals the window covers.
    """

    level: int
    index: int
    matrix: AssocArray
    span: Tuple[float, float]
    ordinals: Tuple[int, int]
    partial: bool = False

    def record(self) -> WindowRecord:
        """Output record; traffic statistics only for packet-count windows."""
        counts = self.matrix.semiring.compatible(ARITH_NAT)
        return WindowRecord(
            level=self.level,
            index=self.index,
            nnz=self.matrix.nnz,
            stats=summarize_traffic(self.matrix) if counts else None,
            partial=self.partial,
        )


class RingBuffer:
    """Fixed-capacity store of one level's most recent windows."""

    def __init__(self, level: int, capacity: int):
        self.level = level
        self.capacity = capacity
        self._windows: Deque[WindowedMatrix] = deque(maxlen=capacity)
        self.produced = 0

    def push(self, window: WindowedMatrix) -> None:
        self._windows.append(window)
        self.produced += 1

    def skip(self, count: int) -> None:
        """Account for `count` windows that were never materialized."""
        self._windows.clear()
        self.produced += count

    def get(self, index: int) -> WindowedMatrix:
        if index < 0:
            raise WindowUnavailableError(self.level, index, "does not exist")
        if index >= self.produced:
            raise WindowPendingError(self.level, index)
        oldest = self.produced - len(self._windows)
        if index < oldest:
            raise WindowEvictedError(self.level, index)
        return self._windows[index - oldest]

    def retained(self) -> List[WindowedMatrix]:
        return list(self._windows)

    def __len__(self) -> int:
        return len(self._windows)


def finite_timestamp(value: Any) -> float:
    """Validate a timestamp in seconds; NaN and infinities are rejected."""
    try:
        timestamp = float(value)
    except (TypeError, ValueError):
        raise DomainValueError(f"Not a timestamp: {value!r}") from None
    if not math.isfinite(timestamp):
        raise DomainValueError(f"Timestamp must be finite, got {value!r}")
    return timestamp


def batch_matrix(events: Iterable[StreamEvent], s: SemiringDef = ARITH_NAT) -> AssocArray:
    """The matrix of a raw event slice, built in one pass."""
    return from_triples(((e.src, e.dst, e.count) for e in events), s)


class StreamEngine:
    """
    Single-writer streaming engine over a ring buffer per level.

    Completed windows are immutable and may be read from other threads while
    ingestion continues.
    """

    def __init__(self, stream_config: Optional[StreamConfig] = None, semiring: SemiringDef = ARITH_NAT):
        self.config = stream_config or StreamConfig(
            mode=config.STREAM_MODE,
            m=config.WINDOW_M,
            t=config.WINDOW_T,
            dt=config.SAMPLING_DT,
            levels=config.LEVELS,
            buffer_capacity=config.BUFFER_CAPACITY,
        )
        self.semiring = semiring
        self._buffers = [
            RingBuffer(level, self.config.buffer_capacity) for level in range(self.config.levels)
        ]
        self._unpaired: List[Optional[WindowedMatrix]] = [None] * self.config.levels
        self._closed = False
        self.skipped_windows = 0

        self._ordinal = 0
        self._last_timestamp: Optional[float] = None
        self._open_rows: Dict[Hashable, Dict[Hashable, Any]] = {}
        self._open_first: Optional[int] = None
        self._open_slot: Optional[int] = None

    @property
    def levels(self) -> int:
        return self.config.levels

    # -------------------------------------------------------------------------
    # Ingestion
    # -------------------------------------------------------------------------

    def ingest(self, event: StreamEvent) -> List[WindowedMatrix]:
        """
        Accumulate one event and return every window it completed.

        Raises:
            DomainValueError: If the timestamp is not a finite number
            OutOfOrderEventError: If a fixed-t timestamp goes backwards
            StreamClosedError: If the stream was already flushed
        """
        if self._closed:
            raise StreamClosedError("Stream was flushed; no further events accepted")
        event = StreamEvent(*event)
        timestamp = finite_timestamp(event.timestamp)
        completed: List[WindowedMatrix] = []

        if self.config.mode == "fixed-t":
            if self._last_timestamp is not None and timestamp < self._last_timestamp:
                raise OutOfOrderEventError(event, self._last_timestamp)
            position = timestamp / self.config.t
            if not math.isfinite(position):
                raise DomainValueError(
                    f"Timestamp {timestamp!r} overflows window t={self.config.t}"
                )
            slot = math.floor(position)
            if self._open_slot is None:
                self._open_slot = slot
            if self._open_slot < slot:
                completed.extend(self._advance_to(slot))
        self._last_timestamp = timestamp

        self._accumulate(event)

        if self.config.mode == "fixed-m" and self._ordinal - self._open_first == self.config.m:
            completed.extend(self._close_open_window())
        return completed

    def flush(self) -> List[WindowedMatrix]:
        """
        Emit the open window as a partial level-0 window and close the stream.

        The partial window is retained but never paired. Nothing is emitted
        when no event is pending.
        """
        if self._closed:
            return []
        self._closed = True
        if self._open_first is None:
            return []
        window = self._take_open_window(partial=True)
        self._buffers[0].push(window)
        logger.debug(f"Flushed partial window {window.index} (nnz={window.matrix.nnz})")
        return [window]

    def _accumulate(self, event: StreamEvent) -> None:
        if self._open_first is None:
            self._open_first = self._ordinal
        row = self._open_rows.setdefault(event.src, {})
        if event.dst in row:
            row[event.dst] = self.semiring.add(row[event.dst], event.count)
        else:
            row[event.dst] = event.count
        self._ordinal += 1

    def _take_open_window(self, partial: bool = False) -> WindowedMatrix:
        first = self._ordinal if self._open_first is None else self._open_first
        ordinals = (first, self._ordinal)
        if self.config.mode == "fixed-t":
            start = self._open_slot * self.config.t
            span = (start, start + self.config.t)
        else:
            span = (first, self._ordinal - 1)
        matrix = AssocArray(
            self.semiring,
            self._open_rows,
            self._open_rows,
            {k2 for row in self._open_rows.values() for k2 in row},
        )
        window = WindowedMatrix(
            level=0,
            index=self._buffers[0].produced,
            matrix=matrix,
            span=span,
            ordinals=ordinals,
            partial=partial,
        )
        self._open_rows = {}
        self._open_first = None
        return window

    def _close_open_window(self) -> List[WindowedMatrix]:
        return self._complete(self._take_open_window())

    def _advance_to(self, slot: int) -> List[WindowedMatrix]:
        """
        Close the open fixed-t slot and every empty slot before `slot`.

        Long runs of empty slots are skipped in whole top-level periods once
        the hierarchy is aligned: no window is unpaired at that point, and the
        last capacity × 2^(L-1) empty slots are still materialized, so every
        ring buffer ends up holding exactly the windows it would otherwise.
        """
        completed = self._close_open_window()
        self._open_slot += 1
        empty = slot - self._open_slot
        period = 2 ** (self.levels - 1)
        horizon = self.config.buffer_capacity * period
        lead = -self._buffers[0].produced % period
        skip = (empty - lead - horizon) // period * period
        if skip > 0:
            completed.extend(self._close_empty_slots(lead))
            self._skip_empty_slots(skip)
            empty -= lead + skip
        completed.extend(self._close_empty_slots(empty))
        return completed

    def _close_empty_slots(self, count: int) -> List[WindowedMatrix]:
        completed: List[WindowedMatrix] = []
        for _ in range(count):
            completed.extend(self._close_open_window())
            self._open_slot += 1
        return completed

    def _skip_empty_slots(self, count: int) -> None:
        # count is a multiple of 2^(L-1), so level s advances by count / 2^s.
        skipped = 0
        for level, buffer in enumerate(self._buffers):
            buffer.skip(count >> level)
            skipped += count >> level
        self._open_slot += count
        self.skipped_windows += skipped
        logger.info(f"Skipped {skipped} empty windows over {count} idle slots")

    def _complete(self, window: WindowedMatrix) -> List[WindowedMatrix]:
        """Store a finished window and cascade pairwise sums upward."""
        completed = [window]
        level = window.level
        self._buffers[level].push(window)
        logger.debug(f"Window level={level} index={window.index} nnz={window.matrix.nnz}")
        if level + 1 >= self.levels:
            return completed

        left = self._unpaired[level]
        if left is None:
            self._unpaired[level] = window
            return completed

        self._unpaired[level] = None
        parent = WindowedMatrix(
            level=level + 1,
            index=self._buffers[level + 1].produced,
            matrix=ewise_add(left.matrix, window.matrix),
            span=(left.span[0], window.span[1]),
            ordinals=(left.ordinals[0], window.ordinals[1]),
        )
        completed.extend(self._complete(parent))
        return completed

    # -------------------------------------------------------------------------
    # Queries
    # -------------------------------------------------------------------------

    def _buffer(self, level: int) -> RingBuffer:
        if not 0 <= level < self.levels:
            raise InvalidLevelError(f"Level {level} outside 0..{self.levels - 1}")
        return self._buffers[level]

    def level_matrix(self, level: int, index: int) -> WindowedMatrix:
        """
        A retained window.

        Raises:
            InvalidLevelError: If the level does not exist
            WindowEvictedError: If the window has aged off the ring buffer
            WindowPendingError: If the window has not completed yet
        """
        return self._buffer(level).get(index)

    def retained_indices(self, level: int) -> List[int]:
        return [w.index for w in self._buffer(level).retained()]

    def multiscale_stats(self, level: int) -> List[TrafficStats]:
        """Traffic statistics of every retained window at `level`, oldest first."""
        return [summarize_traffic(w.matrix) for w in self._buffer(level).retained()]


def replay(
    events: Iterable[StreamEvent],
    stream_config: Optional[StreamConfig] = None,
    semiring: SemiringDef = ARITH_NAT,
) -> List[WindowedMatrix]:
    """Run a whole event sequence through a fresh engine, flushing at the end."""
    engine = StreamEngine(stream_config, semiring)
    windows: List[WindowedMatrix] = []
    for event in events:
        windows.extend(engine.ingest(event))
    windows.extend(engine.flush())
    return windows
