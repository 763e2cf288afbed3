#!/usr/bin/env python3
"""
Re-derive the expected outputs of the shipped fixtures.

Every expected record is computed by brute force from the raw TSV lines:
path sets by walk enumeration, provenance by looping over inner keys, stream
windows by rebuilding each window from its raw event slice. None of the
pipelines under test are used.

Usage:
    python scripts/generate_fixtures.py            # rewrite fixtures/expected
    python scripts/generate_fixtures.py --check    # exit 1 if anything differs
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Tuple

# Add the repository root to the path so src can be imported
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.algebra.core import ARITH_NAT, MIN_PLUS, render_scalar
from src.algebra.paths import brute_force_paths
from src.arrays.graph import build_graph_arrays
from src.partition.traffic import summarize_traffic
from src.stream.engine import batch_matrix
from src.utils import read_edges_tsv, read_events_tsv, read_triples_tsv

FIXTURES = Path(__file__).parent.parent / "fixtures"
EXPECTED = FIXTURES / "expected"


def _lines(name: str) -> List[List[str]]:
    text = (FIXTURES / name).read_text(encoding="utf-8")
    return [line.split("\t") for line in text.splitlines() if line.strip()]


# =============================================================================
# CASES
# =============================================================================

def stats_case(name: str, partitions: int) -> Dict[str, Any]:
    """Source-mode statistics; parts are contiguous blocks of sorted sources."""
    traffic = read_triples_tsv(str(FIXTURES / name), ARITH_NAT)
    whole = summarize_traffic(traffic).model_dump()

    sources = list(traffic.row_keys)
    per_part = []
    for p in range(partitions):
        block = {k for i, k in enumerate(sources) if i * partitions // len(sources) == p}
        links = [(k1, k2, int(v)) for k1, k2, v in _lines(name) if k1 in block]
        values = [v for _, _, v in links]
        per_part.append({
            "total_packets": sum(values),
            "unique_sources": len({k1 for k1, _, _ in links}),
            "unique_destinations": len({k2 for _, k2, _ in links}),
            "unique_links": len({(k1, k2) for k1, k2, _ in links}),
            "max_link_packets": max(values, default=0),
        })

    return {
        "command": "stats",
        "inputs": [name],
        "flags": ["--partitions", str(partitions), "--mode", "source"],
        "exit": 0,
        "records": [{
            "mode": "source",
            "partitions": partitions,
            "whole": whole,
            "combined": whole,
            "per_part": per_part,
        }],
    }


def paths_case(name: str, hops: int, src: str, dst: str) -> Dict[str, Any]:
    g = build_graph_arrays(read_edges_tsv(str(FIXTURES / name)), MIN_PLUS)
    value = brute_force_paths(g, src, dst, hops)
    return {
        "command": "paths",
        "inputs": [name],
        "flags": ["--hops", str(hops), "--src", src, "--dst", dst],
        "exit": 0,
        "records": [{
            "src": src,
            "dst": dst,
            "hops": hops,
            "weight": render_scalar(value.weight),
            "paths": [list(p) for p in value.sorted_paths()],
        }],
    }


def provenance_case(name_a: str, name_b: str) -> Dict[str, Any]:
    a = {(r, c): int(v) for r, c, v in _lines(name_a)}
    b = {(r, c): int(v) for r, c, v in _lines(name_b)}
    cells: Dict[Tuple[str, str], List[Tuple[str, int, int, int]]] = {}
    for (u, w), x in a.items():
        for (w2, v), y in b.items():
            if w == w2 and x * y != 0:
                cells.setdefault((u, v), []).append((w, x, y, x * y))

    records = []
    for (u, v) in sorted(cells):
        terms = sorted(cells[(u, v)])
        records.append({
            "row": u,
            "col": v,
            "contributors": [{"keys": w, "a": x, "b": y, "prod": z} for w, x, y, z in terms],
            "recovered": sum(z for *_, z in terms),
        })
    return {
        "command": "provenance",
        "inputs": [name_a, name_b],
        "flags": [],
        "exit": 0,
        "records": records,
    }


def stream_case(name: str, m: int, levels: int) -> Dict[str, Any]:
    """fixed-m windows in emission order, each rebuilt from its raw events."""
    events = read_events_tsv(str(FIXTURES / name), ARITH_NAT)
    records = []

    def emit(level: int, index: int, first: int, last: int, partial: bool = False) -> None:
        matrix = batch_matrix(events[first:last])
        records.append({
            "level": level,
            "index": index,
            "nnz": matrix.nnz,
            "stats": summarize_traffic(matrix).model_dump(),
            "partial": partial,
        })

    complete = len(events) // m
    for j in range(complete):
        emit(0, j, j * m, (j + 1) * m)
        # Window j closes every level-s window whose last child it is.
        level = 1
        while level < levels and (j + 1) % (2 ** level) == 0:
            k = (j + 1) // (2 ** level) - 1
            span = m * 2 ** level
            emit(level, k, k * span, (k + 1) * span)
            level += 1
    if len(events) % m:
        emit(0, complete, complete * m, len(events), partial=True)

    return {
        "command": "stream",
        "inputs": [name],
        "flags": ["--mode", "fixed-m", "--window-m", str(m), "--levels", str(levels)],
        "exit": 0,
        "records": records,
    }


def build_cases() -> Dict[str, Dict[str, Any]]:
    return {
        "stats_traffic_20": stats_case("traffic_20.tsv", 5),
        "stats_traffic_single": stats_case("traffic_single.tsv", 1),
        "paths_diamond": paths_case("diamond.tsv", 2, "1", "4"),
        "paths_single_edge": paths_case("single_edge.tsv", 1, "u", "v"),
        "paths_chain": paths_case("chain.tsv", 2, "1", "3"),
        "paths_chain_unreachable": paths_case("chain.tsv", 2, "3", "1"),
        "paths_triangle_one_hop": paths_case("triangle_shortcut.tsv", 1, "1", "3"),
        "paths_triangle_two_hop": paths_case("triangle_shortcut.tsv", 2, "1", "3"),
        "provenance_2x2": provenance_case("prov_a.tsv", "prov_b.tsv"),
        "provenance_identity": provenance_case("prov_a.tsv", "identity_b.tsv"),
        "provenance_empty": provenance_case("empty.tsv", "prov_b.tsv"),
        "stream_events_4": stream_case("events_4.tsv", 1, 3),
        "stream_duplicate": stream_case("events_duplicate.tsv", 2, 4),
        "stream_empty": stream_case("empty.tsv", 1, 3),
    }


def main() -> int:
    parser = argparse.ArgumentParser(description="Re-derive fixture expectations")
    parser.add_argument("--check", action="store_true",
                        help="Compare against the stored files instead of writing")
    args = parser.parse_args()

    EXPECTED.mkdir(parents=True, exist_ok=True)
    stale = []
    for case, payload in build_cases().items():
        path = EXPECTED / f"{case}.json"
        text = json.dumps(payload, indent=2) + "\n"
        if args.check:
            if not path.exists() or json.loads(path.read_text(encoding="utf-8")) != payload:
                stale.append(case)
        else:
            path.write_text(text, encoding="utf-8")
            print(f"✅ {path.relative_to(FIXTURES.parent)}")

    if stale:
        print(f"❌ Out of date: {', '.join(stale)}")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
