"""
Associative arrays over arbitrary finite key sets.

An `AssocArray` is an immutable map K1 × K2 → S stored as sorted row-major
triples. Stored values are never the semiring zero, and missing entries read
as zero. Matrices are the special case of integer key sets.
"""

import logging
from typing import Any, Callable, Dict, Hashable, Iterable, Iterator, Optional, Tuple

from ..algebra.core import SemiringDef
from ..errors import SemiringMismatchError

logger = logging.getLogger(__name__)

Key = Hashable
Triple = Tuple[Key, Key, Any]

# Row/column key of the 1 × N and N × 1 all-ones vectors.
UNIT_KEY = "*"


def key_order(key: Key) -> Tuple[str, Any]:
    """Total order over mixed key types: grouped by type name, then by value."""
    return (type(key).__name__, key)


def sorted_keys(keys: Iterable[Key]) -> Tuple[Key, ...]:
    return tuple(sorted(set(keys), key=key_order))


class AssocArray:
    """
    Immutable associative array with a canonical, zero-free triple store.

    Attributes:
        semiring: Semiring the values live in
        row_keys: Sorted row key set K1
        col_keys: Sorted column key set K2
    """

    __slots__ = (
        "semiring", "_row_set", "_col_set", "_row_keys", "_col_keys", "_rows", "_nnz",
    )

    def __init__(
        self,
        semiring: SemiringDef,
        rows: Dict[Key, Dict[Key, Any]],
        row_keys: Iterable[Key],
        col_keys: Iterable[Key],
    ):
        """
        Build from an already accumulated row map. Prefer `from_triples`.

        Zeros are dropped and the key sets are widened to cover every stored
        entry, so the instance is canonical whatever it was given. Frozen key
        sets are shared, not copied.
        """
        rows_out: Dict[Key, Dict[Key, Any]] = {}
        stored_cols = set()
        nnz = 0
        for k1 in sorted(rows, key=key_order):
            row = rows[k1]
            kept = {
                k2: row[k2]
                for k2 in sorted(row, key=key_order)
                if not semiring.is_zero(row[k2])
            }
            if kept:
                rows_out[k1] = kept
                stored_cols.update(kept)
                nnz += len(kept)

        row_set = frozenset(row_keys)
        col_set = frozenset(col_keys)
        if not row_set.issuperset(rows_out):
            row_set = row_set.union(rows_out)
        if not col_set.issuperset(stored_cols):
            col_set = col_set.union(stored_cols)

        self.semiring = semiring
        self._row_set = row_set
        self._col_set = col_set
        self._row_keys: Optional[Tuple[Key, ...]] = None
        self._col_keys: Optional[Tuple[Key, ...]] = None
        self._rows = rows_out
        self._nnz = nnz

    # -------------------------------------------------------------------------
    # Read access
    # -------------------------------------------------------------------------

    @property
    def row_keys(self) -> Tuple[Key, ...]:
        """Sorted row key set K1, sorted on first use."""
        if self._row_keys is None:
            self._row_keys = sorted_keys(self._row_set)
        return self._row_keys

    @property
    def col_keys(self) -> Tuple[Key, ...]:
        if self._col_keys is None:
            self._col_keys = sorted_keys(self._col_set)
        return self._col_keys

    @property
    def nnz(self) -> int:
        return self._nnz

    @property
    def row_set(self) -> frozenset:
        return self._row_set

    @property
    def col_set(self) -> frozenset:
        return self._col_set

    def get(self, k1: Key, k2: Key) -> Any:
        """Value at (k1, k2); the semiring zero when nothing is stored."""
        return self._rows.get(k1, {}).get(k2, self.semiring.zero)

    def row(self, k1: Key) -> Dict[Key, Any]:
        return dict(self._rows.get(k1, {}))

    def stored_rows(self) -> Iterator[Tuple[Key, Dict[Key, Any]]]:
        """Rows with at least one stored entry, in key order."""
        return iter(self._rows.items())

    def triples(self) -> Iterator[Triple]:
        """Stored entries as (row, col, value) in row-major key order."""
        for k1, row in self._rows.items():
            for k2, value in row.items():
                yield k1, k2, value

    def support(self) -> frozenset:
        return frozenset((k1, k2) for k1, k2, _ in self.triples())

    def to_dict(self) -> Dict[Tuple[Key, Key], Any]:
        return {(k1, k2): value for k1, k2, value in self.triples()}

    def with_keys(
        self,
        row_keys: Optional[Iterable[Key]] = None,
        col_keys: Optional[Iterable[Key]] = None,
    ) -> "AssocArray":
        """Same entries over key sets widened by the given keys."""
        return AssocArray(
            self.semiring,
            self._rows,
            self._row_set | set(row_keys or ()),
            self._col_set | set(col_keys or ()),
        )

    def same_entries(self, other: "AssocArray") -> bool:
        """Entry-wise equality under the semiring's eq, ignoring key sets."""
        if not self.semiring.compatible(other.semiring) or self.nnz != other.nnz:
            return False
        eq = self.semiring.eq
        for k1, row in self._rows.items():
            other_row = other._rows.get(k1)
            if other_row is None or other_row.keys() != row.keys():
                return False
            if not all(eq(value, other_row[k2]) for k2, value in row.items()):
                return False
        return True

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AssocArray):
            return NotImplemented
        return (
            self._row_set == other._row_set
            and self._col_set == other._col_set
            and self.same_entries(other)
        )

    def __len__(self) -> int:
        return self._nnz

    def __repr__(self) -> str:
        preview = ", ".join(f"({k1!r},{k2!r})={v!r}" for k1, k2, v in list(self.triples())[:4])
        more = ", ..." if self._nnz > 4 else ""
        return (
            f"<AssocArray {self.semiring.name} {len(self._row_set)}x{len(self._col_set)} "
            f"nnz={self._nnz} {{{preview}{more}}}>"
        )


# =============================================================================
# CONSTRUCTION
# =============================================================================

def _check_same_semiring(a: AssocArray, b: AssocArray) -> None:
    if not a.semiring.compatible(b.semiring):
        raise SemiringMismatchError(a.semiring.name, b.semiring.name)


def from_triples(
    triples: Iterable[Triple],
    s: SemiringDef,
    row_keys: Optional[Iterable[Key]] = None,
    col_keys: Optional[Iterable[Key]] = None,
) -> AssocArray:
    """
    Build an array from (row, col, value) triples.

    Duplicate keys are ⊕-combined in input order, zeros are dropped, and the
    key sets are the union of the keys seen and any explicit keys given.
    """
    rows: Dict[Key, Dict[Key, Any]] = {}
    seen_rows = set(row_keys or ())
    seen_cols = set(col_keys or ())
    for k1, k2, value in triples:
        seen_rows.add(k1)
        seen_cols.add(k2)
        row = rows.setdefault(k1, {})
        row[k2] = s.add(row[k2], value) if k2 in row else value
    return AssocArray(s, rows, seen_rows, seen_cols)


def empty(
    s: SemiringDef,
    row_keys: Iterable[Key] = (),
    col_keys: Iterable[Key] = (),
) -> AssocArray:
    return AssocArray(s, {}, row_keys, col_keys)


def identity_diag(keys: Iterable[Key], s: SemiringDef) -> AssocArray:
    """Diagonal array with 1^S at every (k, k)."""
    keys = frozenset(keys)
    return from_triples(((k, k, s.one) for k in keys), s, keys, keys)


def ones_vector(keys: Iterable[Key], s: SemiringDef) -> AssocArray:
    """The 1 × N all-ones row vector over `keys` (row key `UNIT_KEY`)."""
    keys = frozenset(keys)
    return from_triples(((UNIT_KEY, k, s.one) for k in keys), s, [UNIT_KEY], keys)


def project(
    a: AssocArray,
    fn: Callable[[Any], Any],
    target: SemiringDef,
) -> AssocArray:
    """Apply `fn` to every stored value, landing in `target`; zeros are dropped."""
    rows = {k1: {k2: fn(v) for k2, v in row.items()} for k1, row in a.stored_rows()}
    return AssocArray(target, rows, a.row_set, a.col_set)


# =============================================================================
# ELEMENT-WISE OPERATIONS
# =============================================================================

# Operands over one key space keep sharing its frozenset.

def _union(x: frozenset, y: frozenset) -> frozenset:
    return x if x is y or x == y else x | y


def _intersect(x: frozenset, y: frozenset) -> frozenset:
    return x if x is y or x == y else x & y


def ewise_add(a: AssocArray, b: AssocArray) -> AssocArray:
    """A ⊕ B over (K1 ∪ K3) × (K2 ∪ K4); missing entries read as zero."""
    _check_same_semiring(a, b)
    add = a.semiring.add
    rows: Dict[Key, Dict[Key, Any]] = {k1: dict(row) for k1, row in a.stored_rows()}
    for k1, k2, value in b.triples():
        row = rows.setdefault(k1, {})
        row[k2] = add(row[k2], value) if k2 in row else value
    return AssocArray(
        a.semiring, rows, _union(a.row_set, b.row_set), _union(a.col_set, b.col_set)
    )


def ewise_mul(a: AssocArray, b: AssocArray) -> AssocArray:
    """A ⊗ B over (K1 ∩ K3) × (K2 ∩ K4); only shared supports survive."""
    _check_same_semiring(a, b)
    mul = a.semiring.mul
    rows: Dict[Key, Dict[Key, Any]] = {}
    for k1, row in a.stored_rows():
        other = b._rows.get(k1)
        if not other:
            continue
        shared = {k2: mul(value, other[k2]) for k2, value in row.items() if k2 in other}
        if shared:
            rows[k1] = shared
    return AssocArray(
        a.semiring, rows, _intersect(a.row_set, b.row_set), _intersect(a.col_set, b.col_set)
    )


# =============================================================================
# ARRAY MULTIPLICATION AND FRIENDS
# =============================================================================

def array_mul(a: AssocArray, b: AssocArray) -> AssocArray:
    """
    A ⊕.⊗ B over K1 × K4.

    The inner ⊕ runs over stored entries only: a missing factor is zero and
    zero annihilates, so skipped terms could not change the sum.
    """
    _check_same_semiring(a, b)
    add, mul = a.semiring.add, a.semiring.mul
    b_rows = b._rows
    rows: Dict[Key, Dict[Key, Any]] = {}
    for k1, row in a.stored_rows():
        acc: Dict[Key, Any] = {}
        for k3, x in row.items():
            b_row = b_rows.get(k3)
            if not b_row:
                continue
            for k2, y in b_row.items():
                term = mul(x, y)
                acc[k2] = add(acc[k2], term) if k2 in acc else term
        if acc:
            rows[k1] = acc
    return AssocArray(a.semiring, rows, a.row_set, b.col_set)


def transpose(a: AssocArray) -> AssocArray:
    """(k1, k2) = x becomes (k2, k1) = x; key sets swap."""
    rows: Dict[Key, Dict[Key, Any]] = {}
    for k1, k2, value in a.triples():
        rows.setdefault(k2, {})[k1] = value
    return AssocArray(a.semiring, rows, a.col_set, a.row_set)


def nnz(a: AssocArray) -> int:
    """Number of stored (nonzero) entries."""
    return a.nnz


def _stored_cols(a: AssocArray) -> frozenset:
    return frozenset(k2 for _, row in a.stored_rows() for k2 in row)


# The all-ones vectors below cover only keys that carry entries: every other
# term of the product meets a zero, and the result's key sets come from A.

def row_reduce(a: AssocArray) -> AssocArray:
    """A ⊕.⊗ 1ᵀ: the ⊕ of each row, as an N × 1 column vector."""
    return array_mul(a, transpose(ones_vector(_stored_cols(a), a.semiring)))


def col_reduce(a: AssocArray) -> AssocArray:
    """1 ⊕.⊗ A: the ⊕ of each column, as a 1 × M row vector."""
    rows = frozenset(k1 for k1, _ in a.stored_rows())
    return array_mul(ones_vector(rows, a.semiring), a)


def total(a: AssocArray) -> Any:
    """⊕ of every entry, evaluated as 1 ⊕.⊗ A ⊕.⊗ 1ᵀ."""
    return row_reduce(col_reduce(a)).get(UNIT_KEY, UNIT_KEY)
