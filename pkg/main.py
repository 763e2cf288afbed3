"""
Hypersparse Semiring Engine - Main Entry Point

Semiring-generic hypersparse associative arrays with sum-partitioned
parallel linear algebra, multi-timescale graph streaming, and dual
semiring constructions for path and provenance tracking.

Usage:
    python main.py check min-plus 1000 1
    python main.py paths --input fixtures/diamond.tsv --hops 2 --src 1 --dst 4
"""

import sys

from src.cli import main

if __name__ == "__main__":
    sys.exit(main())
