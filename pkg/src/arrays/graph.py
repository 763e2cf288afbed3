"""
Graph arrays: adjacency, in/out incidence and edge-weight diagonal.

For a weighted digraph (V, E, w) the four arrays satisfy
    A = E_out ⊕.⊗ D_w ⊕.⊗ E_inᵀ
which is checked every time the arrays are built.
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, Hashable, Iterable, List, Optional, Tuple

from ..algebra.core import SemiringDef
from ..errors import FactorizationError, GraphConstructionError
from .assoc_array import AssocArray, array_mul, from_triples, sorted_keys, transpose

logger = logging.getLogger(__name__)

Edge = Tuple[Hashable, Hashable, Any]


@dataclass(frozen=True)
class GraphArrays:
    """The four arrays of a weighted digraph plus its vertex and edge sets."""

    adjacency: AssocArray       # V × V
    in_incidence: AssocArray    # V × E
    out_incidence: AssocArray   # V × E
    weight_diag: AssocArray     # E × E
    vertices: Tuple[Hashable, ...]
    edges: Tuple[int, ...]
    edge_list: Tuple[Edge, ...]

    @property
    def semiring(self) -> SemiringDef:
        return self.adjacency.semiring

    def successors(self, u: Hashable) -> Dict[Hashable, Any]:
        """Out-neighbours of u with their edge weights."""
        return self.adjacency.row(u)

    def factorization(self) -> AssocArray:
        """E_out ⊕.⊗ D_w ⊕.⊗ E_inᵀ."""
        return array_mul(
            array_mul(self.out_incidence, self.weight_diag),
            transpose(self.in_incidence),
        )


def _checked_weight(edge: Edge, s: SemiringDef) -> Any:
    u, v, w = edge
    if isinstance(w, bool) or not isinstance(w, (int, float)):
        raise GraphConstructionError(f"Edge {u!r}->{v!r}: weight {w!r} is not a number")
    if math.isnan(w) or w <= 0 or math.isinf(w):
        raise GraphConstructionError(
            f"Edge {u!r}->{v!r}: weight {w!r} must lie in (0, inf)"
        )
    return float(w) if isinstance(s.one, float) else w


def build_graph_arrays(
    edges: Iterable[Edge],
    s: SemiringDef,
    vertices: Optional[Iterable[Hashable]] = None,
) -> GraphArrays:
    """
    Build the graph arrays of a weighted digraph.

    Edges are numbered 0..|E|-1 in input order. The vertex set is the
    endpoints seen plus any explicit `vertices`.

    Args:
        edges: (src, dst, weight) with weight in (0, inf), no duplicate pairs
        s: Semiring the arrays live in
        vertices: Optional extra vertices (isolated ones included)

    Raises:
        GraphConstructionError: Nonpositive weight or duplicate edge
        FactorizationError: If the factorization identity fails
    """
    edge_list: List[Edge] = []
    seen = set()
    vertex_set = set(vertices or ())
    for edge in edges:
        u, v, _ = edge
        if (u, v) in seen:
            raise GraphConstructionError(f"Duplicate edge {u!r}->{v!r}")
        seen.add((u, v))
        edge_list.append((u, v, _checked_weight(edge, s)))
        vertex_set.update((u, v))

    vertex_keys = sorted_keys(vertex_set)
    edge_keys = tuple(range(len(edge_list)))

    adjacency = from_triples(
        ((u, v, w) for u, v, w in edge_list), s, vertex_keys, vertex_keys
    )
    out_incidence = from_triples(
        ((u, e, s.one) for e, (u, _, _) in enumerate(edge_list)), s, vertex_keys, edge_keys
    )
    in_incidence = from_triples(
        ((v, e, s.one) for e, (_, v, _) in enumerate(edge_list)), s, vertex_keys, edge_keys
    )
    weight_diag = from_triples(
        ((e, e, w) for e, (_, _, w) in enumerate(edge_list)), s, edge_keys, edge_keys
    )

    graph = GraphArrays(
        adjacency=adjacency,
        in_incidence=in_incidence,
        out_incidence=out_incidence,
        weight_diag=weight_diag,
        vertices=vertex_keys,
        edges=edge_keys,
        edge_list=tuple(edge_list),
    )

    if graph.factorization() != adjacency:
        raise FactorizationError(
            f"Adjacency differs from E_out ⊕.⊗ D_w ⊕.⊗ E_inᵀ over {s.name}"
        )

    logger.debug(f"Built graph arrays: |V|={len(vertex_keys)} |E|={len(edge_keys)}")
    return graph
