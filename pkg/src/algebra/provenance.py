"""
Provenance semiring: sets of (value, value, value, key) tuples.

Over a base semiring S and a finite key set V, values are finite subsets of
T = (S∖{0})³ × V:
    X ⊕ Y = X ∪ Y
    X ⊗ Y = {(x1⊗y1, x2⊗y2, x3⊗y3, u) | (x1,x2,x3,u) ∈ X, (y1,y2,y3,u) ∈ Y} ∩ T
with zero ∅ and one {(1, 1, 1, u) | u ∈ V}.

Multiplying the imaginary part of a lifted A by the real part of a lifted B
yields, at each (u, v), one tuple (A(u,w), B(w,v), A(u,w)⊗B(w,v), w) per inner
key w whose term is nonzero.
"""

import logging
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, FrozenSet, Hashable, Iterable, List, NamedTuple, Optional, Tuple

from ..arrays.assoc_array import (
    AssocArray,
    array_mul,
    from_triples,
    key_order,
)
from ..errors import (
    ConformabilityError,
    DomainValueError,
    RecoveryMismatchError,
    SemiringMismatchError,
    VerificationError,
)
from .core import SemiringDef
from .dual import DualValue, dual_semiring, im_part, re_part

logger = logging.getLogger(__name__)

MAX_SAMPLE_TUPLES = 4
SAMPLE_DRAWS = 8


class ProvTuple(NamedTuple):
    """One contributing term: left factor, right factor, product, inner key."""

    v1: Any
    v2: Any
    v3: Any
    key: Hashable


ProvenanceSet = FrozenSet[ProvTuple]


@dataclass(frozen=True, eq=False)
class ProvenanceSemiringDef(SemiringDef):
    """Provenance sets over `base`, with the key set V behind the identity."""

    base: Optional[SemiringDef] = None
    vertices: Tuple[Hashable, ...] = ()


def provenance_semiring(base: SemiringDef, vertices: Iterable[Hashable]) -> ProvenanceSemiringDef:
    """Provenance sets over `base` and the key set `vertices`; cached per pair."""
    return _provenance_semiring(base, frozenset(vertices))


def _tuple_order(t: ProvTuple) -> Tuple:
    return (key_order(t.key), repr(t.v1), repr(t.v2), repr(t.v3))


@lru_cache(maxsize=64)
def _provenance_semiring(base: SemiringDef, vertex_set: FrozenSet[Hashable]) -> ProvenanceSemiringDef:
    vertices = tuple(sorted(vertex_set, key=key_order))
    mul, is_zero = base.mul, base.is_zero

    def prov_add(x: ProvenanceSet, y: ProvenanceSet) -> ProvenanceSet:
        return x | y

    def prov_mul(x: ProvenanceSet, y: ProvenanceSet) -> ProvenanceSet:
        by_key: Dict[Hashable, List[ProvTuple]] = {}
        for t in y:
            by_key.setdefault(t.key, []).append(t)
        out = set()
        for a in x:
            for b in by_key.get(a.key, ()):
                t = ProvTuple(mul(a.v1, b.v1), mul(a.v2, b.v2), mul(a.v3, b.v3), a.key)
                if not (is_zero(t.v1) or is_zero(t.v2) or is_zero(t.v3)):
                    out.add(t)
        return frozenset(out)

    sample = None
    if base.sample is not None and vertices:
        def nonzero(rng: random.Random) -> Any:
            for _ in range(SAMPLE_DRAWS):
                value = base.sample(rng)
                if not is_zero(value):
                    return value
            return base.one

        def sample(rng: random.Random) -> ProvenanceSet:
            return frozenset(
                ProvTuple(nonzero(rng), nonzero(rng), nonzero(rng), rng.choice(vertices))
                for _ in range(rng.randint(0, MAX_SAMPLE_TUPLES))
            )

    def render(value: ProvenanceSet) -> List[List[Any]]:
        return [
            [base.render(t.v1), base.render(t.v2), base.render(t.v3), str(t.key)]
            for t in sorted(value, key=_tuple_order)
        ]

    return ProvenanceSemiringDef(
        name=f"provenance:{base.name}",
        add=prov_add,
        mul=prov_mul,
        zero=frozenset(),
        one=frozenset(ProvTuple(base.one, base.one, base.one, u) for u in vertices),
        sample=sample,
        render=render,
        base=base,
        vertices=vertices,
    )


def lift_provenance(a: AssocArray, sprime: ProvenanceSemiringDef) -> AssocArray:
    """
    A′(u, v) = {(1, x, x, u)} + i {(x, 1, x, v)} for every stored x = A(u, v).

    The result lives in the dual of `sprime`, whose key set must cover A's keys.
    """
    base = a.semiring
    if not a.row_set | a.col_set <= frozenset(sprime.vertices):
        raise ConformabilityError("Array keys fall outside the provenance key set")
    one = base.one
    return from_triples(
        (
            (u, v, DualValue(
                frozenset({ProvTuple(one, x, x, u)}),
                frozenset({ProvTuple(x, one, x, v)}),
            ))
            for u, v, x in a.triples()
        ),
        dual_semiring(sprime),
        a.row_set,
        a.col_set,
    )


def _provenance_setup(
    a: AssocArray,
    b: AssocArray,
    vertices: Iterable[Hashable],
) -> ProvenanceSemiringDef:
    if not a.semiring.compatible(b.semiring):
        raise SemiringMismatchError(a.semiring.name, b.semiring.name)
    if a.col_set != b.row_set:
        raise ConformabilityError("Column keys of A must equal the row keys of B")
    all_keys = a.row_set | a.col_set | b.col_set
    vertex_set = frozenset(vertices)
    if not all_keys <= vertex_set:
        missing = sorted(all_keys - vertex_set, key=key_order)
        raise ConformabilityError(f"Keys outside the vertex set: {missing!r}")
    return provenance_semiring(a.semiring, vertex_set)


def closed_form_provenance(
    a: AssocArray,
    b: AssocArray,
    vertices: Iterable[Hashable],
) -> AssocArray:
    """
    C(u, v) = {(A(u,w), B(w,v), A(u,w)⊗B(w,v), w) | A(u,w)⊗B(w,v) ≠ 0},
    evaluated directly by looping over inner keys.
    """
    sprime = _provenance_setup(a, b, vertices)
    s = a.semiring
    cells: Dict[Tuple[Hashable, Hashable], set] = {}
    for u, w, x in a.triples():
        for v, y in b.row(w).items():
            prod = s.mul(x, y)
            if not s.is_zero(prod):
                cells.setdefault((u, v), set()).add(ProvTuple(x, y, prod, w))
    return from_triples(
        ((u, v, frozenset(found)) for (u, v), found in cells.items()),
        sprime,
        a.row_set,
        b.col_set,
    )


def provenance_product(
    a: AssocArray,
    b: AssocArray,
    vertices: Iterable[Hashable],
    verify: bool = False,
) -> AssocArray:
    """
    C = Im(A′) ⊕.⊗ Re(B′), the contributors of every entry of A ⊕.⊗ B.

    Args:
        a, b: Arrays over one base semiring with A's columns equal to B's rows
        vertices: Key set V, covering every key of A and B
        verify: Also evaluate the closed form and require equality

    Raises:
        ConformabilityError: If the key sets do not line up
        SemiringMismatchError: If A and B use different semirings
        VerificationError: If `verify` is set and the closed form differs
    """
    sprime = _provenance_setup(a, b, vertices)
    product = array_mul(im_part(lift_provenance(a, sprime)), re_part(lift_provenance(b, sprime)))

    if verify:
        expected = closed_form_provenance(a, b, vertices=sprime.vertices)
        if product != expected:
            raise VerificationError("Provenance product differs from its closed form")
        logger.debug(f"Provenance product matches closed form at nnz={product.nnz}")
    return product


# =============================================================================
# PROJECTIONS AND RECOVERY
# =============================================================================

def cat_val_mul(
    a: AssocArray,
    b: AssocArray,
    vertices: Iterable[Hashable],
) -> Dict[Tuple[Hashable, Hashable], FrozenSet[Tuple[Any, Any]]]:
    """The (A(u,w), B(w,v)) value pairs behind every nonzero product entry."""
    c = provenance_product(a, b, vertices)
    return {(u, v): frozenset((t.v1, t.v2) for t in found) for u, v, found in c.triples()}


def cat_key_mul(
    a: AssocArray,
    b: AssocArray,
    vertices: Iterable[Hashable],
) -> Dict[Tuple[Hashable, Hashable], FrozenSet[Hashable]]:
    """The inner keys w behind every nonzero product entry."""
    c = provenance_product(a, b, vertices)
    return {(u, v): frozenset(t.key for t in found) for u, v, found in c.triples()}


def recover_product(c: AssocArray, expected: Optional[AssocArray] = None) -> AssocArray:
    """
    Recover A ⊕.⊗ B from its provenance array.

    Both ⊕ over v1 ⊗ v2 and ⊕ over v3 are evaluated per entry and must agree.

    Args:
        c: Output of `provenance_product`
        expected: Optional product to compare the recovery against

    Raises:
        DomainValueError: If `c` is not over a provenance semiring
        RecoveryMismatchError: If the two forms disagree, or differ from `expected`
    """
    base = getattr(c.semiring, "base", None)
    if not isinstance(c.semiring, ProvenanceSemiringDef) or base is None:
        raise DomainValueError(f"Array over '{c.semiring.name}' is not a provenance array")

    entries = []
    for u, v, found in c.triples():
        from_factors = base.sum(base.mul(t.v1, t.v2) for t in found)
        from_products = base.sum(t.v3 for t in found)
        if not base.eq(from_factors, from_products):
            raise RecoveryMismatchError(
                f"Recovery forms disagree at ({u!r}, {v!r}): "
                f"{from_factors!r} vs {from_products!r}"
            )
        entries.append((u, v, from_factors))

    recovered = from_triples(entries, base, c.row_set, c.col_set)
    if expected is not None and recovered != expected:
        raise RecoveryMismatchError("Recovered product differs from the direct product")
    return recovered
