"""Tests for src.partition.dnn."""

import numpy as np
import pytest

from src.errors import ConformabilityError, PartitionError
from src.partition.dnn import dense_relu, make_column_partition, relu_layer


pytestmark = pytest.mark.unit


class TestColumnPartition:
    """Tests for splitting a layer by output columns."""

    def test_selectors_sum_to_identity(self):
        """Disjoint blocks cover every column once."""
        layer = make_column_partition(np.ones((3, 7)), np.zeros(7), 3)
        total = sum(sel.dense(7) for sel in layer.selectors)
        np.testing.assert_array_equal(total, np.eye(7, dtype=np.int64))

    def test_contiguous_blocks(self):
        """Columns are split into contiguous blocks."""
        layer = make_column_partition(np.ones((2, 4)), np.zeros(4), 2)
        assert [sel.columns for sel in layer.selectors] == [(0, 1), (2, 3)]

    def test_one_column_per_part(self):
        """P = N gives singleton selectors."""
        layer = make_column_partition(np.ones((2, 5)), np.zeros(5), 5)
        assert [sel.columns for sel in layer.selectors] == [(j,) for j in range(5)]

    def test_weight_blocks_masked(self):
        """W_p keeps only its own columns."""
        W = np.arange(12, dtype=float).reshape(3, 4)
        layer = make_column_partition(W, np.zeros(4), 2)
        np.testing.assert_array_equal(layer.weight_parts[1][:, :2], np.zeros((3, 2)))
        np.testing.assert_array_equal(layer.weight_parts[1][:, 2:], W[:, 2:])

    @pytest.mark.parametrize("P", [0, 5])
    def test_bad_count(self, P):
        """1 <= P <= N."""
        with pytest.raises(PartitionError):
            make_column_partition(np.ones((2, 4)), np.zeros(4), P)

    def test_bias_shape(self):
        """The bias must have one entry per output column."""
        with pytest.raises(ConformabilityError):
            make_column_partition(np.ones((2, 4)), np.zeros(3), 2)


class TestReluLayer:
    """Tests for partitioned ReLU evaluation."""

    def test_matches_dense(self):
        """Σ_p max(x W_p + b_p, 0) equals max(x W + b, 0)."""
        rng = np.random.default_rng(0)
        W = rng.normal(size=(6, 9))
        b = rng.normal(size=9)
        x = rng.normal(size=6)
        layer = make_column_partition(W, b, 4)
        np.testing.assert_allclose(relu_layer(x, layer), dense_relu(x, W, b))

    def test_negative_preactivation_clamped(self):
        """Every output is clamped at zero."""
        layer = make_column_partition(-np.ones((2, 3)), -np.ones(3), 3)
        np.testing.assert_array_equal(relu_layer(np.ones(2), layer), np.zeros(3))

    def test_input_shape(self):
        """x must have M entries."""
        layer = make_column_partition(np.ones((2, 3)), np.zeros(3), 1)
        with pytest.raises(ConformabilityError):
            relu_layer(np.ones(3), layer)

    @pytest.mark.slow
    def test_fifty_random_layers(self):
        """Integer-valued layers agree exactly for every P."""
        rng = np.random.default_rng(7)
        for _ in range(50):
            m, n = rng.integers(1, 12, size=2)
            W = rng.integers(-5, 6, size=(m, n))
            b = rng.integers(-5, 6, size=n)
            x = rng.integers(-5, 6, size=m)
            expected = dense_relu(x, W, b)
            for P in range(1, n + 1):
                layer = make_column_partition(W, b, P)
                np.testing.assert_array_equal(relu_layer(x, layer, max_workers=2), expected)
