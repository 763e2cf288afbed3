"""Tests for src.algebra.core and src.algebra.registry."""

import math

import pytest

from src.algebra.core import (
    ARITH_NAT,
    INF,
    LAW_NAMES,
    MAX_MIN,
    MIN_PLUS,
    axiom_check,
    broken_semiring,
    combine_add,
    combine_mul,
    parse_weight,
    render_scalar,
    stock_semiring,
    tropical_weight,
)
from src.algebra.dual import dual_semiring
from src.algebra.registry import resolve_semiring
from src.errors import DomainValueError, UnknownSemiringError


pytestmark = pytest.mark.unit


class TestStockSemirings:
    """Tests for the built-in semirings."""

    def test_min_plus_operations(self):
        """min-plus multiplies by adding and adds by taking the minimum."""
        s = stock_semiring("min-plus")
        assert s.mul(2.0, 3.0) == 5.0
        assert s.add(2.0, 3.0) == 2.0

    @pytest.mark.parametrize("x", [0.0, 1.0, 7.5, INF])
    def test_min_plus_infinity_is_additive_identity(self, x):
        """x ⊕ ∞ = x."""
        assert MIN_PLUS.add(x, INF) == x

    def test_arith_nat_zero_annihilates(self):
        """0 ⊗ 7 = 0."""
        assert ARITH_NAT.mul(0, 7) == 0

    def test_unknown_name_lists_valid_names(self):
        """Unknown names raise an error naming the valid choices."""
        with pytest.raises(UnknownSemiringError) as exc_info:
            stock_semiring("plus-times")
        message = str(exc_info.value)
        assert "plus-times" in message
        for name in ("arith-nat", "min-plus", "max-min"):
            assert name in message

    def test_identities(self):
        """Zero and one of each stock semiring."""
        assert (ARITH_NAT.zero, ARITH_NAT.one) == (0, 1)
        assert (MIN_PLUS.zero, MIN_PLUS.one) == (INF, 0.0)
        assert (MAX_MIN.zero, MAX_MIN.one) == (0.0, INF)


class TestCombine:
    """Tests for combine_add and combine_mul."""

    @pytest.mark.parametrize("s,x,y,expected", [
        (ARITH_NAT, 3, 4, 7),
        (MIN_PLUS, INF, INF, INF),
        (MAX_MIN, 0.5, 0.2, 0.5),
    ])
    def test_combine_add(self, s, x, y, expected):
        """⊕ of the examples."""
        assert combine_add(s, x, y) == expected

    @pytest.mark.parametrize("s,x,y,expected", [
        (ARITH_NAT, 3, 4, 12),
        (MIN_PLUS, 2.0, INF, INF),
        (MAX_MIN, 0.5, 0.2, 0.2),
    ])
    def test_combine_mul(self, s, x, y, expected):
        """⊗ of the examples."""
        assert combine_mul(s, x, y) == expected


class TestDomainValidation:
    """Tests for weight parsing and validation."""

    def test_negative_weight_rejected(self):
        """Negative weights lie outside [0, ∞]."""
        with pytest.raises(DomainValueError):
            tropical_weight(-1)

    def test_nan_rejected(self):
        """NaN is not a weight."""
        with pytest.raises(DomainValueError):
            tropical_weight(float("nan"))

    def test_inf_token(self):
        """The token 'inf' parses to infinity."""
        assert math.isinf(parse_weight("inf"))
        assert parse_weight(" 2.5 ") == 2.5

    def test_natural_parser_rejects_negative(self):
        """arith-nat values are natural numbers."""
        with pytest.raises(DomainValueError):
            ARITH_NAT.parse("-3")

    def test_render_scalar(self):
        """JSON form of scalars."""
        assert render_scalar(INF) == "inf"
        assert render_scalar(2.0) == 2
        assert render_scalar(2.5) == 2.5
        assert render_scalar(7) == 7


class TestAxiomCheck:
    """Tests for the randomized law checker."""

    def test_law_names(self):
        """Ten law instances are checked per sampled triple."""
        assert LAW_NAMES == [
            "add_commutativity", "add_associativity", "add_identity",
            "mul_associativity", "mul_identity_left", "mul_identity_right",
            "annihilation_left", "annihilation_right",
            "distributivity_left", "distributivity_right",
        ]

    def test_min_plus_passes(self):
        """min-plus satisfies every law."""
        report = axiom_check(MIN_PLUS, 1000, 1)
        assert report.passed
        assert report.failures == []
        assert report.trials == 1000

    def test_single_trial(self):
        """One trial is enough to produce a report."""
        report = axiom_check(ARITH_NAT, 1, 99)
        assert report.trials == 1
        assert report.failures == []

    def test_broken_semiring_caught(self):
        """Clamped subtraction as ⊗ violates distributivity."""
        report = axiom_check(broken_semiring(), 1000, 1)
        assert not report.passed
        laws = {failure.law for failure in report.failures}
        assert "distributivity_left" in laws or "distributivity_right" in laws

    def test_deterministic(self):
        """Same (semiring, trials, seed) gives an identical report."""
        first = axiom_check(broken_semiring(), 200, 7)
        second = axiom_check(broken_semiring(), 200, 7)
        assert first.model_dump() == second.model_dump()

    def test_zero_trials_rejected(self):
        """trials must be at least one."""
        with pytest.raises(DomainValueError):
            axiom_check(ARITH_NAT, 0, 1)

    @pytest.mark.slow
    @pytest.mark.parametrize("name", [
        "arith-nat", "min-plus", "max-min",
        "dual:arith-nat", "dual:min-plus", "dual:max-min",
        "tropical-path", "provenance:arith-nat",
    ])
    @pytest.mark.parametrize("seed", [1, 2, 3])
    def test_law_suite(self, name, seed):
        """Every shipped semiring passes 1000 trials on three seeds."""
        report = axiom_check(resolve_semiring(name), 1000, seed)
        assert report.failures == []


class TestResolveSemiring:
    """Tests for command-line semiring names."""

    def test_stock(self):
        """Stock names resolve to the shared definitions."""
        assert resolve_semiring("min-plus") is MIN_PLUS

    def test_dual_is_cached(self):
        """dual:<name> returns one shared instance per base."""
        assert resolve_semiring("dual:arith-nat") is dual_semiring(ARITH_NAT)

    def test_provenance(self):
        """provenance:<stock> carries its base and key set."""
        s = resolve_semiring("provenance:min-plus")
        assert s.name == "provenance:min-plus"
        assert s.base is MIN_PLUS
        assert len(s.one) == len(s.vertices)

    @pytest.mark.parametrize("name", ["nope", "dual:nope", "provenance:tropical-path", ""])
    def test_unknown(self, name):
        """Unresolvable names raise UnknownSemiringError."""
        with pytest.raises(UnknownSemiringError):
            resolve_semiring(name)
