"""Tests for src.algebra.dual."""

import random

import pytest

from src.algebra.core import ARITH_NAT, INF, MAX_MIN, MIN_PLUS
from src.algebra.dual import (
    DualValue,
    dual_semiring,
    embed,
    embed_array,
    im_part,
    imaginary_unit,
    re_part,
)
from src.arrays.assoc_array import array_mul, ewise_add, from_triples, project
from src.errors import DomainValueError

pytestmark = pytest.mark.unit


DUAL_NAT = dual_semiring(ARITH_NAT)


class TestDualArithmetic:
    """Tests for x + i y arithmetic."""

    def test_i_squared_is_zero(self):
        """i ⊗ i = 0."""
        i = imaginary_unit(ARITH_NAT)
        assert DUAL_NAT.mul(i, i) == DUAL_NAT.zero

    def test_product_example(self):
        """(2 + 3i)(4 + 5i) = 8 + 22i."""
        assert DUAL_NAT.mul(DualValue(2, 3), DualValue(4, 5)) == DualValue(8, 22)

    def test_pure_parts_annihilate(self):
        """(0 + ix)(y + i0) keeps the cross term only."""
        assert DUAL_NAT.mul(DualValue(0, 3), DualValue(4, 0)) == DualValue(0, 12)
        assert DUAL_NAT.mul(DualValue(0, 3), DualValue(0, 4)) == DualValue(0, 0)

    def test_identities(self):
        """zero = (0, 0), one = (1, 0)."""
        assert DUAL_NAT.zero == DualValue(0, 0)
        assert DUAL_NAT.one == DualValue(1, 0)

    def test_embedding_is_homomorphic(self):
        """embed(x ⊗ y) = embed(x) ⊗ embed(y) and likewise for ⊕."""
        for x, y in [(1.0, 2.0), (0.0, INF), (3.5, 3.5)]:
            s = dual_semiring(MIN_PLUS)
            assert s.mul(embed(MIN_PLUS, x), embed(MIN_PLUS, y)) == embed(MIN_PLUS, x + y)
            assert s.add(embed(MIN_PLUS, x), embed(MIN_PLUS, y)) == embed(MIN_PLUS, min(x, y))

    @pytest.mark.parametrize("base", [ARITH_NAT, MIN_PLUS, MAX_MIN], ids=lambda s: s.name)
    def test_decomposition(self, base):
        """(x, y) = embed(x) ⊕ (i ⊗ embed(y)) on sampled values."""
        s = dual_semiring(base)
        i = imaginary_unit(base)
        rng = random.Random(11)
        for _ in range(200):
            x, y = base.sample(rng), base.sample(rng)
            rebuilt = s.add(embed(base, x), s.mul(i, embed(base, y)))
            assert s.eq(rebuilt, DualValue(x, y))

    def test_cached_per_base(self):
        """One instance per base."""
        assert dual_semiring(ARITH_NAT) is DUAL_NAT
        assert DUAL_NAT.base is ARITH_NAT
        assert DUAL_NAT.name == "dual:arith-nat"


class TestDualParse:
    """Tests for 're|im' tokens."""

    def test_round_trip(self):
        """Tokens parse to values and render back."""
        assert DUAL_NAT.parse("2|3") == DualValue(2, 3)
        assert DUAL_NAT.render(DualValue(2, 3)) == "2|3"

    def test_missing_separator(self):
        """A bare scalar is not a dual value."""
        with pytest.raises(DomainValueError):
            DUAL_NAT.parse("2")


class TestDualArrays:
    """Tests for lifting arrays and reading their parts."""

    def test_embed_then_real_part(self):
        """Re(embed(A)) = A and Im(embed(A)) is empty."""
        a = from_triples([(1, 1, 2), (1, 2, 3)], ARITH_NAT)
        lifted = embed_array(a)
        assert re_part(lifted) == a
        assert im_part(lifted).nnz == 0

    def test_cross_term_of_product(self):
        """Im((A + iB)(C + iD)) = AD ⊕ BC."""
        a = from_triples([(1, 1, 1), (1, 2, 2)], ARITH_NAT, [1], [1, 2])
        b = from_triples([(1, 2, 5)], ARITH_NAT, [1], [1, 2])
        c = from_triples([(1, 1, 3), (2, 1, 4)], ARITH_NAT, [1, 2], [1])
        d = from_triples([(2, 1, 6)], ARITH_NAT, [1, 2], [1])

        def combine(re, im):
            return ewise_add(embed_array(re), project(im, lambda y: DualValue(0, y), DUAL_NAT))

        product = array_mul(combine(a, b), combine(c, d))
        assert re_part(product) == array_mul(a, c)
        assert im_part(product) == ewise_add(array_mul(a, d), array_mul(b, c))

    def test_parts_of_non_dual_array(self):
        """Only dual arrays have parts."""
        with pytest.raises(DomainValueError):
            re_part(from_triples([(1, 1, 1)], ARITH_NAT))
