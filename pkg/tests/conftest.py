"""
Shared pytest fixtures.

Provides:
- Infrastructure (no log files, fixture directory)
- Small hand-checkable arrays and graphs
- Factories for random hypersparse arrays, digraphs and event streams
"""

import random
from pathlib import Path

import pytest

from src.algebra.core import ARITH_NAT, MIN_PLUS
from src.arrays.assoc_array import from_triples
from src.arrays.graph import build_graph_arrays
from src.config import config
from src.stream.engine import StreamEvent

FIXTURES_DIR = Path(__file__).parent.parent / "fixtures"


# =============================================================================
# INFRASTRUCTURE FIXTURES
# =============================================================================

@pytest.fixture(autouse=True)
def no_log_files(monkeypatch):
    """Keep tests from writing rotating log files."""
    monkeypatch.setattr(config, "LOG_DIR", "")


@pytest.fixture
def fixtures_dir():
    """Directory holding the shipped TSV fixtures."""
    return FIXTURES_DIR


# =============================================================================
# DATA FIXTURES - ARRAYS AND GRAPHS
# =============================================================================

@pytest.fixture
def prov_a():
    """2 × 2 arith-nat A = {(1,1)=1, (1,2)=2, (2,2)=3}."""
    return from_triples([(1, 1, 1), (1, 2, 2), (2, 2, 3)], ARITH_NAT, [1, 2], [1, 2])


@pytest.fixture
def prov_b():
    """2 × 2 arith-nat B = {(1,1)=4, (2,1)=5, (2,2)=6}."""
    return from_triples([(1, 1, 4), (2, 1, 5), (2, 2, 6)], ARITH_NAT, [1, 2], [1, 2])


@pytest.fixture
def chain_graph():
    """1 → 2 → 3, unit weights."""
    return build_graph_arrays([(1, 2, 1), (2, 3, 1)], MIN_PLUS)


@pytest.fixture
def diamond_graph():
    """1 → {2, 3} → 4, unit weights: two tied 2-hop paths."""
    return build_graph_arrays([(1, 2, 1), (1, 3, 1), (2, 4, 1), (3, 4, 1)], MIN_PLUS)


@pytest.fixture
def triangle_graph():
    """1 → 2 → 3 (weight 2 total) next to the shortcut 1 → 3 (weight 3)."""
    return build_graph_arrays([(1, 2, 1), (2, 3, 1), (1, 3, 3)], MIN_PLUS)


# =============================================================================
# DATA FIXTURES - RANDOM FACTORIES
# =============================================================================

@pytest.fixture
def random_array():
    """
    Factory for random hypersparse arrays.

    Keys are drawn from range(key_space) on both axes; the key sets are the
    full key space so partitions and products stay conformable.
    """
    def make(rng, s, nnz, key_space, values=None):
        values = values or (lambda r: r.randint(1, 9))
        keys = range(key_space)
        triples = [
            (rng.randrange(key_space), rng.randrange(key_space), values(rng))
            for _ in range(nnz)
        ]
        return from_triples(triples, s, keys, keys)
    return make


@pytest.fixture
def random_digraph():
    """Factory for random digraphs with integer weights in 1..5."""
    def make(rng, n_vertices, edge_prob=0.4, s=MIN_PLUS):
        vertices = list(range(n_vertices))
        edges = [
            (u, v, rng.randint(1, 5))
            for u in vertices
            for v in vertices
            if rng.random() < edge_prob
        ]
        return build_graph_arrays(edges, s, vertices)
    return make


@pytest.fixture
def random_events():
    """Factory for synthetic event streams over a small vertex set."""
    def make(rng, count, vertices=8, max_count=3):
        return [
            StreamEvent(
                f"v{rng.randrange(vertices)}",
                f"v{rng.randrange(vertices)}",
                rng.randint(1, max_count),
                float(i),
            )
            for i in range(count)
        ]
    return make


@pytest.fixture
def rng():
    """Seeded generator for one test."""
    return random.Random(1234)
