"""Tests for src.partition.traffic."""

import pytest

from src.algebra.core import ARITH_NAT, MIN_PLUS
from src.arrays.assoc_array import from_triples
from src.errors import ModeMismatchError, SemiringMismatchError
from src.partition.sum_partition import partition
from src.partition.traffic import summarize_traffic, traffic_stats
from src.schemas import TrafficStats
from src.utils import read_triples_tsv

pytestmark = pytest.mark.unit


WHOLE_20 = TrafficStats(
    total_packets=20,
    unique_sources=5,
    unique_destinations=4,
    unique_links=12,
    max_link_packets=4,
)


@pytest.fixture
def traffic_20(fixtures_dir):
    """5 sources, 4 destinations, 12 links, 20 packets."""
    return read_triples_tsv(str(fixtures_dir / "traffic_20.tsv"), ARITH_NAT)


class TestSummarizeTraffic:
    """Tests for whole-matrix statistics."""

    def test_traffic_20(self, traffic_20):
        """Totals of the shipped matrix."""
        assert summarize_traffic(traffic_20) == WHOLE_20

    def test_single_link(self):
        """One packet on one link."""
        stats = summarize_traffic(from_triples([("a", "b", 1)], ARITH_NAT))
        assert stats.model_dump() == {
            "total_packets": 1,
            "unique_sources": 1,
            "unique_destinations": 1,
            "unique_links": 1,
            "max_link_packets": 1,
        }

    def test_empty(self):
        """An empty matrix has all-zero statistics."""
        assert summarize_traffic(from_triples([], ARITH_NAT)) == TrafficStats()

    def test_requires_counts(self):
        """Statistics are defined over arith-nat only."""
        with pytest.raises(SemiringMismatchError):
            summarize_traffic(from_triples([("a", "b", 1.0)], MIN_PLUS))


class TestTrafficStats:
    """Tests for statistics combined from partitions."""

    @pytest.mark.parametrize("strategy", ["row-block", "row-cyclic", "row-block-cyclic"])
    @pytest.mark.parametrize("P", [1, 2, 3, 5, 8])
    def test_source_mode(self, traffic_20, strategy, P):
        """Source partitions reproduce the whole-matrix statistics."""
        report = traffic_stats(partition(traffic_20, P, strategy, 0), "source")
        assert report.whole == WHOLE_20
        assert report.combined == WHOLE_20
        assert report.consistent
        assert len(report.per_part) == P

    @pytest.mark.parametrize("P", [1, 2, 4])
    def test_destination_mode(self, traffic_20, P):
        """Destination partitions reproduce the whole-matrix statistics."""
        report = traffic_stats(partition(traffic_20, P, "col-block", 0), "destination")
        assert report.combined == WHOLE_20
        assert report.consistent

    def test_per_part_source_counts(self, traffic_20):
        """With one source per part each part sees one unique source."""
        report = traffic_stats(partition(traffic_20, 5, "row-block", 0), "source")
        assert [s.unique_sources for s in report.per_part] == [1] * 5
        assert [s.total_packets for s in report.per_part] == [5, 4, 4, 3, 4]

    @pytest.mark.parametrize("strategy,mode", [
        ("random", "source"),
        ("col-block", "source"),
        ("row-block", "destination"),
        ("overlap", "destination"),
    ])
    def test_mode_mismatch(self, traffic_20, strategy, mode):
        """The strategy must split along the chosen axis."""
        with pytest.raises(ModeMismatchError):
            traffic_stats(partition(traffic_20, 2, strategy, 0), mode)

    def test_unknown_mode(self, traffic_20):
        """Only source and destination modes exist."""
        with pytest.raises(ModeMismatchError, match="source"):
            traffic_stats(partition(traffic_20, 2, "row-block", 0), "link")


@pytest.mark.slow
class TestRandomTrafficMatrices:
    """Combined statistics on random traffic matrices."""

    @staticmethod
    def brute_force(cells):
        """Statistics straight from a {(src, dst): packets} map."""
        return TrafficStats(
            total_packets=sum(cells.values()),
            unique_sources=len({src for src, _ in cells}),
            unique_destinations=len({dst for _, dst in cells}),
            unique_links=len(cells),
            max_link_packets=max(cells.values(), default=0),
        )

    @pytest.mark.parametrize("strategy,mode", [
        ("row-block", "source"),
        ("row-cyclic", "source"),
        ("row-block-cyclic", "source"),
        ("col-block", "destination"),
    ])
    def test_fifty_matrices(self, rng, strategy, mode):
        """P = 5 parts reproduce the brute-force statistics."""
        for _ in range(50):
            cells = {}
            for _ in range(rng.randint(0, 60)):
                link = (f"10.0.0.{rng.randrange(20)}", f"10.0.1.{rng.randrange(20)}")
                cells[link] = cells.get(link, 0) + rng.randint(1, 50)
            a = from_triples([(src, dst, n) for (src, dst), n in cells.items()], ARITH_NAT)

            report = traffic_stats(partition(a, 5, strategy, 0), mode)

            expected = self.brute_force(cells)
            assert report.whole == expected
            assert report.combined == expected
            assert report.consistent
