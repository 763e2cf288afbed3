"""Tests for src.algebra.paths."""

import random

import pytest

from src.algebra.core import INF
from src.algebra.paths import (
    PATH_ONE,
    PATH_ZERO,
    TropicalPathValue,
    brute_force_all_paths,
    brute_force_paths,
    optimal_nhop_paths,
    path_weight,
    render_path_value,
    tropical_path_semiring,
)
from src.arrays.assoc_array import array_mul
from src.errors import (
    DomainValueError,
    EnumerationBudgetError,
    PathCapacityError,
    UnknownVertexError,
)


pytestmark = pytest.mark.unit


class TestTropicalPathValue:
    """Tests for (weight, path set) values."""

    def test_infinite_weight_drops_paths(self):
        """(∞, X) is normalized to (∞, ∅)."""
        value = TropicalPathValue(INF, frozenset({("a", "b")}))
        assert value == PATH_ZERO
        assert value.paths == frozenset()

    def test_negative_weight_rejected(self):
        """Weights lie in [0, ∞]."""
        with pytest.raises(DomainValueError):
            TropicalPathValue(-1.0)

    def test_render(self):
        """JSON form with sorted paths."""
        value = TropicalPathValue(2, frozenset({(1, 3, 4), (1, 2, 4)}))
        assert render_path_value(value) == {
            "weight": 2,
            "paths": [["1", "2", "4"], ["1", "3", "4"]],
        }


class TestTropicalPathSemiring:
    """Tests for ⊕ and ⊗ of path values."""

    s = tropical_path_semiring()

    def test_add_keeps_lighter(self):
        """The smaller weight wins outright."""
        x = TropicalPathValue(1, frozenset({("a",)}))
        y = TropicalPathValue(2, frozenset({("b",)}))
        assert self.s.add(x, y) == x

    def test_add_ties_union(self):
        """Equal weights merge their path sets."""
        x = TropicalPathValue(1, frozenset({("a",)}))
        y = TropicalPathValue(1, frozenset({("b",)}))
        assert self.s.add(x, y).paths == frozenset({("a",), ("b",)})

    def test_mul_concatenates(self):
        """Weights add and paths concatenate pairwise."""
        x = TropicalPathValue(1, frozenset({("a", "b")}))
        y = TropicalPathValue(2, frozenset({("c",), ("d",)}))
        assert self.s.mul(x, y) == TropicalPathValue(3, frozenset({("a", "b", "c"), ("a", "b", "d")}))

    def test_identities(self):
        """One is (0, {⟨⟩}); zero is (∞, ∅) and annihilates."""
        x = TropicalPathValue(4, frozenset({("a", "b")}))
        assert self.s.mul(PATH_ONE, x) == x
        assert self.s.mul(x, PATH_ZERO) == PATH_ZERO
        assert self.s.add(x, PATH_ZERO) == x

    def test_guard(self):
        """Path sets larger than the guard raise."""
        s = tropical_path_semiring(guard=1)
        x = TropicalPathValue(1, frozenset({("a",)}))
        y = TropicalPathValue(1, frozenset({("b",)}))
        with pytest.raises(PathCapacityError):
            s.add(x, y)

    def test_guard_must_be_positive(self):
        """A guard below one is rejected."""
        with pytest.raises(DomainValueError):
            tropical_path_semiring(guard=0)


class TestOptimalPaths:
    """Tests for least-weight n-hop paths."""

    def test_diamond_ties(self, diamond_graph):
        """Both 2-hop routes through the diamond are kept."""
        result = optimal_nhop_paths(diamond_graph, 2)
        assert result.get(1, 4) == TropicalPathValue(2, frozenset({(1, 2, 4), (1, 3, 4)}))

    def test_single_hop(self, chain_graph):
        """n = 1 returns the edges themselves."""
        result = optimal_nhop_paths(chain_graph, 1)
        assert result.to_dict() == {
            (1, 2): TropicalPathValue(1, frozenset({(1, 2)})),
            (2, 3): TropicalPathValue(1, frozenset({(2, 3)})),
        }

    def test_unreachable_pair(self, chain_graph):
        """No 2-hop path from 3 back to 1."""
        result = optimal_nhop_paths(chain_graph, 2)
        assert result.get(3, 1) == PATH_ZERO
        assert result.to_dict() == {(1, 3): TropicalPathValue(2, frozenset({(1, 2, 3)}))}

    def test_hop_count_is_exact(self, triangle_graph):
        """The shortcut wins at one hop, the detour at two."""
        assert optimal_nhop_paths(triangle_graph, 1).get(1, 3).paths == frozenset({(1, 3)})
        assert optimal_nhop_paths(triangle_graph, 2).get(1, 3) == \
            TropicalPathValue(2, frozenset({(1, 2, 3)}))

    def test_guard_overflow(self, diamond_graph):
        """Ties beyond the guard raise instead of truncating."""
        with pytest.raises(PathCapacityError):
            optimal_nhop_paths(diamond_graph, 2, guard=1)

    def test_zero_hops(self, chain_graph):
        """n must be at least one."""
        with pytest.raises(DomainValueError):
            optimal_nhop_paths(chain_graph, 0)

    def test_weights_match_min_plus_power(self, random_digraph, rng):
        """Path weights equal the min-plus power of the adjacency."""
        g = random_digraph(rng, 7)
        power = g.adjacency
        for n in range(1, 4):
            if n > 1:
                power = array_mul(power, g.adjacency)
            result = optimal_nhop_paths(g, n)
            assert {k: v.weight for k, v in result.to_dict().items()} == power.to_dict()

    @pytest.mark.parametrize("P", [2, 3, 8])
    def test_partitioned_matches_sequential(self, random_digraph, rng, P):
        """Row-block products give the same paths."""
        g = random_digraph(rng, 8)
        assert optimal_nhop_paths(g, 3, partitions=P, seed=5) == optimal_nhop_paths(g, 3)

    @pytest.mark.slow
    def test_enumeration_oracle(self, random_digraph):
        """Every pair and every n in 1..4 agrees with walk enumeration on 100 graphs."""
        rng = random.Random(2024)
        for _ in range(100):
            g = random_digraph(rng, rng.randint(1, 7), 0.4)
            for n in range(1, 5):
                result = optimal_nhop_paths(g, n)
                for u in g.vertices:
                    for v in g.vertices:
                        value = result.get(u, v)
                        assert value == brute_force_paths(g, u, v, n)
                        for path in value.paths:
                            assert len(path) == n + 1
                            assert (path[0], path[-1]) == (u, v)
                            assert path_weight(g, path) == value.weight

    @pytest.mark.slow
    def test_all_pairs_oracle(self, random_digraph):
        """The all-pairs enumeration matches the product array."""
        rng = random.Random(7)
        for _ in range(20):
            g = random_digraph(rng, rng.randint(1, 7), 0.4)
            n = rng.randint(1, 4)
            assert optimal_nhop_paths(g, n).to_dict() == brute_force_all_paths(g, n)


class TestBruteForce:
    """Tests for the enumeration oracle."""

    def test_diamond(self, diamond_graph):
        """Both tied routes are found."""
        value = brute_force_paths(diamond_graph, 1, 4, 2)
        assert value.sorted_paths() == [(1, 2, 4), (1, 3, 4)]

    def test_no_path(self, chain_graph):
        """Unreachable pairs give (∞, ∅)."""
        assert brute_force_paths(chain_graph, 3, 1, 2) == PATH_ZERO

    def test_unknown_vertex(self, chain_graph):
        """Vertices must exist in the graph."""
        with pytest.raises(UnknownVertexError):
            brute_force_paths(chain_graph, 1, 99, 2)

    def test_budget(self, diamond_graph):
        """Enumeration stops once the step budget is spent."""
        with pytest.raises(EnumerationBudgetError):
            brute_force_paths(diamond_graph, 1, 4, 2, budget=1)

    def test_path_weight(self, triangle_graph):
        """Sum of edge weights along a path."""
        assert path_weight(triangle_graph, (1, 2, 3)) == 2.0
        with pytest.raises(DomainValueError):
            path_weight(triangle_graph, (3, 1))

    def test_all_pairs_connected_only(self, diamond_graph):
        """Only connected pairs appear."""
        assert set(brute_force_all_paths(diamond_graph, 2)) == {(1, 4)}
