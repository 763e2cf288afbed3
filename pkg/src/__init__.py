"""
Hypersparse Semiring Engine - Source Package

Associative arrays over arbitrary semirings, sum-partitioned linear algebra,
hierarchical stream windows, and tropical path and provenance semirings.
"""

__version__ = "1.0.0"
