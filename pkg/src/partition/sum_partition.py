"""
Sum partitioning of hypersparse arrays.

A = A_1 ⊕ A_2 ⊕ ... ⊕ A_P where every part keeps the full key sets of A and
holds a subset of its triples. Linear operators are pushed down to the parts
and the results are ⊕-reduced; the reduction is the only point where parts
meet.
"""

import hashlib
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Tuple, TypeVar

from ..algebra.core import ARITH_NAT, SemiringDef
from ..arrays.assoc_array import AssocArray, ewise_add, total
from ..config import config
from ..errors import PartitionError

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

STRATEGIES = ("random", "row-block", "col-block", "row-cyclic", "row-block-cyclic", "overlap")
ROW_DISJOINT_STRATEGIES = ("row-block", "row-cyclic", "row-block-cyclic")
COL_DISJOINT_STRATEGIES = ("col-block",)


@dataclass(frozen=True)
class SumPartition:
    """P arrays over identical key sets whose ⊕-sum is the source array."""

    parts: Tuple[AssocArray, ...]
    strategy: str
    seed: int

    @property
    def size(self) -> int:
        return len(self.parts)

    @property
    def semiring(self) -> SemiringDef:
        return self.parts[0].semiring

    @property
    def row_set(self) -> frozenset:
        return self.parts[0].row_set

    @property
    def col_set(self) -> frozenset:
        return self.parts[0].col_set

    def part_nnz(self) -> List[int]:
        return [part.nnz for part in self.parts]

    def __iter__(self) -> Iterator[AssocArray]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


# =============================================================================
# WORKER POOL
# =============================================================================

def pool_size(tasks: int, max_workers: Optional[int] = None) -> int:
    """Workers for `tasks` independent jobs, capped at available parallelism."""
    limit = max_workers or config.MAX_WORKERS or os.cpu_count() or 1
    return max(1, min(tasks, limit))


def parallel_map(
    fn: Callable[[T], R],
    items: Sequence[T],
    max_workers: Optional[int] = None,
) -> List[R]:
    """Apply `fn` to every item on a thread pool; results keep input order."""
    workers = pool_size(len(items), max_workers)
    if workers == 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="part") as pool:
        return list(pool.map(fn, items))


# =============================================================================
# ASSIGNMENT OF TRIPLES TO PARTS
# =============================================================================

def stable_bucket(seed: int, k1: Any, k2: Any, buckets: int) -> int:
    """Seeded hash of (seed, k1, k2) that is identical across runs and machines."""
    digest = hashlib.blake2b(repr((seed, k1, k2)).encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "big") % buckets


def block_of(position: int, count: int, buckets: int) -> int:
    """Contiguous block of the `position`-th of `count` sorted keys."""
    return position * buckets // count


def split_value(s: SemiringDef, value: Any) -> Optional[Tuple[Any, Any]]:
    """
    Two values whose ⊕ is `value`, or None when no split is known.

    Idempotent ⊕ duplicates the value; natural numbers split as 1 + (x - 1).
    """
    if s.eq(s.add(value, value), value):
        return value, value
    if s.compatible(ARITH_NAT) and isinstance(value, int) and value >= 2:
        return 1, value - 1
    return None


def partition(
    a: AssocArray,
    P: int,
    strategy: Optional[str] = None,
    seed: Optional[int] = None,
    block_size: Optional[int] = None,
) -> SumPartition:
    """
    Split A into P parts whose ⊕-sum is A.

    Strategies:
        random      part = seeded hash of (seed, k1, k2) mod P
        row-block   contiguous ranges of sorted row keys
        col-block   contiguous ranges of sorted column keys
        row-cyclic  row key at sorted position i goes to part i mod P
        row-block-cyclic
                    runs of `block_size` sorted row keys dealt out cyclically
        overlap     each triple split over two parts (parts overlap)

    Raises:
        PartitionError: If P < 1, block_size < 1 or the strategy is unknown
    """
    strategy = strategy or config.STRATEGY
    seed = config.SEED if seed is None else seed
    block_size = config.BLOCK_SIZE if block_size is None else block_size
    if P < 1:
        raise PartitionError(f"Partition count must be >= 1, got {P}")
    if strategy not in STRATEGIES:
        raise PartitionError(
            f"Unknown strategy '{strategy}'. Valid strategies: {', '.join(STRATEGIES)}"
        )
    if block_size < 1:
        raise PartitionError(f"Block size must be >= 1, got {block_size}")

    s = a.semiring
    buckets: List[Dict[Any, Dict[Any, Any]]] = [{} for _ in range(P)]

    def put(p: int, k1: Any, k2: Any, value: Any) -> None:
        row = buckets[p].setdefault(k1, {})
        row[k2] = s.add(row[k2], value) if k2 in row else value

    # Sorted positions are only needed by the key-range strategies.
    row_pos: Dict[Any, int] = {}
    col_pos: Dict[Any, int] = {}
    if strategy in ROW_DISJOINT_STRATEGIES:
        row_pos = {k: i for i, k in enumerate(a.row_keys)}
    elif strategy == "col-block":
        col_pos = {k: i for i, k in enumerate(a.col_keys)}

    for k1, k2, value in a.triples():
        if strategy == "random":
            put(stable_bucket(seed, k1, k2, P), k1, k2, value)
        elif strategy == "row-block":
            put(block_of(row_pos[k1], len(row_pos), P), k1, k2, value)
        elif strategy == "col-block":
            put(block_of(col_pos[k2], len(col_pos), P), k1, k2, value)
        elif strategy == "row-cyclic":
            put(row_pos[k1] % P, k1, k2, value)
        elif strategy == "row-block-cyclic":
            put(row_pos[k1] // block_size % P, k1, k2, value)
        else:
            p = stable_bucket(seed, k1, k2, P)
            halves = split_value(s, value) if P > 1 else None
            if halves is None:
                put(p, k1, k2, value)
            else:
                put(p, k1, k2, halves[0])
                put((p + 1) % P, k1, k2, halves[1])

    parts = tuple(AssocArray(s, rows, a.row_set, a.col_set) for rows in buckets)
    logger.debug(
        f"Partitioned nnz={a.nnz} into P={P} ({strategy}, seed={seed}): "
        f"{[part.nnz for part in parts]}"
    )
    return SumPartition(parts=parts, strategy=strategy, seed=seed)


# =============================================================================
# REDUCTION AND LINEAR PUSH-DOWN
# =============================================================================

def tree_reduce(items: Sequence[T], combine: Callable[[T, T], T]) -> T:
    """Fixed-shape pairwise tree over item positions: ((0,1),(2,3)),..."""
    if not items:
        raise PartitionError("Cannot reduce an empty sequence")
    level = list(items)
    while len(level) > 1:
        paired = [combine(level[i], level[i + 1]) for i in range(0, len(level) - 1, 2)]
        if len(level) % 2:
            paired.append(level[-1])
        level = paired
    return level[0]


def reduce(parts: SumPartition) -> AssocArray:
    """
    ⊕ of all parts.

    Raises:
        PartitionError: Empty partition, or parts over different key sets
        SemiringMismatchError: Parts over different semirings
    """
    if not parts.parts:
        raise PartitionError("Cannot reduce an empty partition")
    first = parts.parts[0]
    for part in parts.parts[1:]:
        if part.row_set != first.row_set or part.col_set != first.col_set:
            raise PartitionError("Parts of a sum partition must share their key sets")
    return tree_reduce(parts.parts, ewise_add)


def compose_linear(*ops: Callable[[AssocArray], AssocArray]) -> Callable[[AssocArray], AssocArray]:
    """Chain linear stages into one operator, applied left to right."""
    def composed(a: AssocArray) -> AssocArray:
        for op in ops:
            a = op(a)
        return a
    return composed


def map_reduce_linear(
    parts: SumPartition,
    F: Callable[[AssocArray], AssocArray],
    max_workers: Optional[int] = None,
) -> AssocArray:
    """
    F(A) computed as F(A_1) ⊕ ... ⊕ F(A_P).

    Valid only when the caller's F is linear; parts are processed
    concurrently and reduced in a fixed tree order.
    """
    outputs = parallel_map(F, parts.parts, max_workers)
    return tree_reduce(outputs, ewise_add)


def global_sum(parts: SumPartition, max_workers: Optional[int] = None) -> Any:
    """⊕ of every entry of the logical array, as ⊕_p (1 A_p 1ᵀ)."""
    s = parts.semiring
    return tree_reduce(parallel_map(total, parts.parts, max_workers), s.add)
