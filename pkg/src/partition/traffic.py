"""
Network traffic statistics over source- or destination-partitioned matrices.

Values count packets from a source (row) to a destination (column). With
source partitioning (Σ_p I_p A) the row sets of the parts are disjoint, so
totals, link counts and unique sources add up; the unique destination count
is recovered from the ⊕-sum of the per-part destination degree vectors 1 A_p.
Destination partitioning is the mirror image. The largest link count
combines by max.
"""

import logging
from typing import List, Optional, Tuple

from ..algebra.core import ARITH_NAT
from ..arrays.assoc_array import AssocArray, col_reduce, ewise_add, row_reduce
from ..errors import ModeMismatchError, SemiringMismatchError
from ..schemas import TrafficReport, TrafficStats
from .sum_partition import (
    COL_DISJOINT_STRATEGIES,
    ROW_DISJOINT_STRATEGIES,
    SumPartition,
    parallel_map,
    reduce,
    tree_reduce,
)

logger = logging.getLogger(__name__)

MODES = ("source", "destination")


def summarize_traffic(a: AssocArray) -> TrafficStats:
    """Aggregate statistics of one traffic matrix over arith-nat."""
    if not a.semiring.compatible(ARITH_NAT):
        raise SemiringMismatchError(a.semiring.name, ARITH_NAT.name)
    values = [value for _, _, value in a.triples()]
    return TrafficStats(
        total_packets=sum(values),
        unique_sources=sum(1 for _ in a.stored_rows()),
        unique_destinations=len({k2 for _, k2, _ in a.triples()}),
        unique_links=a.nnz,
        max_link_packets=max(values, default=0),
    )


def _check_mode(parts: SumPartition, mode: str) -> None:
    if mode not in MODES:
        raise ModeMismatchError(f"Unknown mode '{mode}'. Valid modes: {', '.join(MODES)}")
    allowed = ROW_DISJOINT_STRATEGIES if mode == "source" else COL_DISJOINT_STRATEGIES
    if parts.strategy not in allowed:
        raise ModeMismatchError(
            f"{mode} mode needs a {' or '.join(allowed)} partition, got '{parts.strategy}'"
        )


def traffic_stats(
    parts: SumPartition,
    mode: str,
    max_workers: Optional[int] = None,
) -> TrafficReport:
    """
    Whole-matrix statistics computed directly and combined from the parts.

    Args:
        parts: Source (row-disjoint) or destination (column-disjoint) partition
        mode: 'source' or 'destination'

    Returns:
        TrafficReport; `consistent` is True when both computations agree

    Raises:
        ModeMismatchError: If the strategy does not partition along `mode`
    """
    _check_mode(parts, mode)
    cross_axis = col_reduce if mode == "source" else row_reduce

    def summarize_part(part: AssocArray) -> Tuple[TrafficStats, AssocArray]:
        return summarize_traffic(part), cross_axis(part)

    results = parallel_map(summarize_part, parts.parts, max_workers)
    per_part: List[TrafficStats] = [stats for stats, _ in results]
    cross_unique = tree_reduce([vector for _, vector in results], ewise_add).nnz

    own_unique = sum(
        s.unique_sources if mode == "source" else s.unique_destinations for s in per_part
    )
    combined = TrafficStats(
        total_packets=sum(s.total_packets for s in per_part),
        unique_sources=own_unique if mode == "source" else cross_unique,
        unique_destinations=cross_unique if mode == "source" else own_unique,
        unique_links=sum(s.unique_links for s in per_part),
        max_link_packets=max((s.max_link_packets for s in per_part), default=0),
    )
    whole = summarize_traffic(reduce(parts))

    report = TrafficReport(
        mode=mode,
        partitions=parts.size,
        whole=whole,
        combined=combined,
        per_part=per_part,
    )
    if not report.consistent:
        logger.warning(f"Combined traffic statistics differ from whole: {combined} vs {whole}")
    return report
