"""
Tropical path-tracking semiring and least-weight n-hop paths.

Values are pairs (weight, set of vertex strings):
    (x, X) ⊕ (y, Y) = (x, X) if x < y, (y, Y) if y < x, (x, X ∪ Y) on a tie
    (x, X) ⊗ (y, Y) = (x + y, {κλ | κ ∈ X, λ ∈ Y})
with zero (∞, ∅) and one (0, {⟨⟩}).

Any value of weight ∞ is normalized to (∞, ∅).
"""

import logging
import math
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

from ..arrays.assoc_array import AssocArray, array_mul, from_triples, key_order
from ..arrays.graph import GraphArrays
from ..config import config
from ..errors import DomainValueError, EnumerationBudgetError, PathCapacityError, UnknownVertexError
from ..partition.sum_partition import map_reduce_linear, partition
from .core import INF, SemiringDef, render_scalar, tropical_weight
from .dual import DualValue, dual_semiring, im_part, re_part

logger = logging.getLogger(__name__)

PathString = Tuple[Hashable, ...]

SAMPLE_VERTICES = ("a", "b", "c", "d")
SAMPLE_WEIGHTS: Tuple[float, ...] = (0.0, 1.0, 2.0, 3.0, 5.0, INF)


@dataclass(frozen=True)
class TropicalPathValue:
    """A least weight together with every path attaining it."""

    weight: float
    paths: FrozenSet[PathString] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "weight", tropical_weight(self.weight))
        if math.isinf(self.weight):
            object.__setattr__(self, "paths", frozenset())
        else:
            object.__setattr__(self, "paths", frozenset(tuple(p) for p in self.paths))

    def sorted_paths(self) -> List[PathString]:
        return sorted(self.paths, key=lambda p: tuple(key_order(v) for v in p))

    def __repr__(self) -> str:
        shown = ", ".join("<" + ",".join(map(str, p)) + ">" for p in self.sorted_paths())
        return f"({render_scalar(self.weight)}, {{{shown}}})"


PATH_ZERO = TropicalPathValue(INF)
PATH_ONE = TropicalPathValue(0.0, frozenset({()}))


def _guarded(paths: FrozenSet[PathString], guard: int, x: Any, y: Any) -> FrozenSet[PathString]:
    if len(paths) > guard:
        raise PathCapacityError(len(paths), guard, x, y)
    return paths


def render_path_value(value: TropicalPathValue) -> Dict[str, Any]:
    return {
        "weight": render_scalar(value.weight),
        "paths": [[str(v) for v in p] for p in value.sorted_paths()],
    }


def tropical_path_semiring(guard: Optional[int] = None) -> SemiringDef:
    """
    The tropical path semiring with path sets capped at `guard`.

    Raises:
        DomainValueError: If guard < 1
    """
    guard = config.PATH_GUARD if guard is None else guard
    if guard < 1:
        raise DomainValueError(f"Path guard must be >= 1, got {guard}")
    return _tropical_path_semiring(guard)


@lru_cache(maxsize=None)
def _tropical_path_semiring(guard: int) -> SemiringDef:
    def path_add(x: TropicalPathValue, y: TropicalPathValue) -> TropicalPathValue:
        if x.weight < y.weight:
            return x
        if y.weight < x.weight:
            return y
        return TropicalPathValue(x.weight, _guarded(x.paths | y.paths, guard, x, y))

    def path_mul(x: TropicalPathValue, y: TropicalPathValue) -> TropicalPathValue:
        weight = x.weight + y.weight
        if math.isinf(weight):
            return PATH_ZERO
        joined = frozenset(k + l for k in x.paths for l in y.paths)
        return TropicalPathValue(weight, _guarded(joined, guard, x, y))

    def sample(rng: random.Random) -> TropicalPathValue:
        paths = set()
        for _ in range(rng.randint(0, 2)):
            length = rng.randint(0, 2)
            paths.add(tuple(rng.choice(SAMPLE_VERTICES) for _ in range(length)))
        return TropicalPathValue(rng.choice(SAMPLE_WEIGHTS), frozenset(paths))

    return SemiringDef(
        name="tropical-path",
        add=path_add,
        mul=path_mul,
        zero=PATH_ZERO,
        one=PATH_ONE,
        sample=sample,
        render=render_path_value,
    )


# =============================================================================
# n-HOP PATHS
# =============================================================================

def build_path_adjacency(g: GraphArrays, guard: Optional[int] = None) -> AssocArray:
    """
    Complex-index adjacency over the dual of the tropical path semiring.

    Each edge (u, v) with weight w stores (w, {⟨u,v⟩}) + i (w, {⟨v⟩});
    vertex pairs without an edge store nothing.
    """
    sdual = dual_semiring(tropical_path_semiring(guard))
    return from_triples(
        (
            (u, v, DualValue(
                TropicalPathValue(w, frozenset({(u, v)})),
                TropicalPathValue(w, frozenset({(v,)})),
            ))
            for u, v, w in g.edge_list
        ),
        sdual,
        g.vertices,
        g.vertices,
    )


def optimal_nhop_paths(
    g: GraphArrays,
    n: int,
    guard: Optional[int] = None,
    partitions: int = 1,
    seed: Optional[int] = None,
) -> AssocArray:
    """
    Least-weight n-hop paths between every pair of vertices.

    B_1 = Re(Ã) and B_{k+1} = B_k ⊕.⊗ Im(Ã). With `partitions` > 1 each
    product is computed over a row-block sum partition of B_k.

    Returns:
        Array over the tropical path semiring; a missing entry means no n-hop
        path exists

    Raises:
        DomainValueError: If n < 1
        PathCapacityError: If a path set outgrows the guard
    """
    if n < 1:
        raise DomainValueError(f"Hop count must be >= 1, got {n}")

    adjacency = build_path_adjacency(g, guard)
    step = im_part(adjacency)
    paths = re_part(adjacency)
    for hop in range(2, n + 1):
        if partitions > 1:
            parts = partition(paths, partitions, "row-block", seed)
            paths = map_reduce_linear(parts, lambda part: array_mul(part, step))
        else:
            paths = array_mul(paths, step)
        logger.debug(f"B_{hop}: nnz={paths.nnz}")
    return paths


# =============================================================================
# BRUTE-FORCE ORACLE
# =============================================================================

def path_weight(g: GraphArrays, path: Sequence[Hashable]) -> float:
    """
    Total weight of a vertex string, checking every hop is an edge.

    Raises:
        DomainValueError: If some consecutive pair is not an edge
    """
    weight = 0.0
    for u, v in zip(path, path[1:]):
        successors = g.successors(u)
        if v not in successors:
            raise DomainValueError(f"{u!r}->{v!r} is not an edge")
        weight += successors[v]
    return weight


def _walks(
    g: GraphArrays,
    start: Hashable,
    n: int,
    budget: int,
) -> Iterable[Tuple[PathString, float]]:
    """Every n-hop walk out of `start` with its weight, by depth-first search."""
    steps = 0
    stack: List[Tuple[PathString, float]] = [((start,), 0.0)]
    while stack:
        path, weight = stack.pop()
        if len(path) == n + 1:
            yield path, weight
            continue
        for v, w in g.successors(path[-1]).items():
            steps += 1
            if steps > budget:
                raise EnumerationBudgetError(
                    f"Enumerating {n}-hop walks from {start!r} exceeded {budget} steps"
                )
            stack.append((path + (v,), weight + w))


def _check_vertex(g: GraphArrays, vertex: Hashable) -> None:
    if vertex not in g.adjacency.row_set:
        raise UnknownVertexError(f"Unknown vertex {vertex!r}")


def brute_force_paths(
    g: GraphArrays,
    u: Hashable,
    v: Hashable,
    n: int,
    budget: Optional[int] = None,
) -> TropicalPathValue:
    """
    Least-weight n-hop u→v paths by exhaustive enumeration.

    Returns (∞, ∅) when no such path exists.

    Raises:
        UnknownVertexError: If u or v is not a vertex of g
        EnumerationBudgetError: If enumeration exceeds `budget` steps
    """
    _check_vertex(g, u)
    _check_vertex(g, v)
    if n < 1:
        raise DomainValueError(f"Hop count must be >= 1, got {n}")
    budget = config.ENUMERATION_BUDGET if budget is None else budget

    best, found = INF, set()
    for path, weight in _walks(g, u, n, budget):
        if path[-1] != v:
            continue
        if weight < best:
            best, found = weight, {path}
        elif weight == best:
            found.add(path)
    return TropicalPathValue(best, frozenset(found))


def brute_force_all_paths(
    g: GraphArrays,
    n: int,
    budget: Optional[int] = None,
) -> Dict[Tuple[Hashable, Hashable], TropicalPathValue]:
    """Least-weight n-hop paths for every connected pair, by enumeration."""
    if n < 1:
        raise DomainValueError(f"Hop count must be >= 1, got {n}")
    budget = config.ENUMERATION_BUDGET if budget is None else budget

    best: Dict[Tuple[Hashable, Hashable], Tuple[float, set]] = {}
    for u in g.vertices:
        for path, weight in _walks(g, u, n, budget):
            pair = (u, path[-1])
            current = best.get(pair)
            if current is None or weight < current[0]:
                best[pair] = (weight, {path})
            elif weight == current[0]:
                current[1].add(path)
    return {
        pair: TropicalPathValue(weight, frozenset(found))
        for pair, (weight, found) in best.items()
    }
