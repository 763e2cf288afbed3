"""
Pydantic records for everything that crosses the program boundary.

These schemas describe JSON emitted on stdout and the configuration objects
validated before any computation starts. Algebraic values are plain frozen
dataclasses and live with their semirings.
"""

from typing import Any, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


# =============================================================================
# SCHEMAS FOR AXIOM CHECKS
# =============================================================================

class AxiomFailure(BaseModel):
    """One violated law instance."""
    law: str = Field(..., description="Name of the violated law")
    operands: List[str] = Field(..., description="Sampled (x, y, z), as repr strings")
    left: str = Field(..., description="Left-hand side of the law")
    right: str = Field(..., description="Right-hand side of the law")


class AxiomReport(BaseModel):
    """
    Outcome of a randomized semiring law check.

    `failures` is empty iff every sampled instance of every law held.
    """
    semiring: str = Field(..., description="Name of the checked semiring")
    trials: int = Field(..., ge=1, description="Number of sampled triples")
    seed: int = Field(..., description="Seed of the sampler")
    failures: List[AxiomFailure] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "semiring": "min-plus",
                "trials": 1000,
                "seed": 1,
                "failures": []
            }
        }
    )


# =============================================================================
# SCHEMAS FOR TRAFFIC STATISTICS
# =============================================================================

class TrafficStats(BaseModel):
    """Aggregate statistics of a traffic matrix (values are packet counts)."""
    total_packets: int = Field(0, ge=0, description="Sum of all packet counts")
    unique_sources: int = Field(0, ge=0, description="Rows with at least one packet")
    unique_destinations: int = Field(0, ge=0, description="Columns with at least one packet")
    unique_links: int = Field(0, ge=0, description="Stored (source, destination) pairs")
    max_link_packets: int = Field(0, ge=0, description="Largest count on a single link")

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {
                "total_packets": 20,
                "unique_sources": 5,
                "unique_destinations": 4,
                "unique_links": 12,
                "max_link_packets": 4
            }
        }
    )


class TrafficReport(BaseModel):
    """Whole-matrix statistics next to the statistics combined from parts."""
    mode: Literal["source", "destination"]
    partitions: int = Field(..., ge=1)
    whole: TrafficStats = Field(..., description="Computed on the reduced matrix")
    combined: TrafficStats = Field(..., description="Combined from per-part statistics")
    per_part: List[TrafficStats] = Field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return self.whole == self.combined


# =============================================================================
# SCHEMAS FOR STREAMING
# =============================================================================

class StreamConfig(BaseModel):
    """
    Windowing configuration for the stream engine.

    In fixed-t mode a missing `t` is derived from m = t/dt.
    """
    mode: Literal["fixed-m", "fixed-t"] = "fixed-m"
    m: Optional[int] = Field(64, ge=1, description="Edges per window (fixed-m)")
    t: Optional[float] = Field(None, gt=0, description="Seconds per window (fixed-t)")
    dt: float = Field(1.0, gt=0, description="Sampling interval in seconds")
    levels: int = Field(4, ge=1, description="Hierarchy depth L (levels 0..L-1)")
    buffer_capacity: int = Field(8, ge=1, description="Windows retained per level")

    @model_validator(mode="after")
    def _check_mode(self) -> "StreamConfig":
        if self.mode == "fixed-m" and self.m is None:
            raise ValueError("fixed-m mode requires m")
        if self.mode == "fixed-t" and self.t is None:
            if self.m is None:
                raise ValueError("fixed-t mode requires t, or m and dt")
            self.t = self.m * self.dt
        return self

    @property
    def frequency(self) -> float:
        return 1.0 / self.dt

    model_config = ConfigDict(
        json_schema_extra={
            "example": {"mode": "fixed-m", "m": 64, "levels": 4, "buffer_capacity": 8}
        }
    )


class WindowRecord(BaseModel):
    """One completed window as emitted by the `stream` command."""
    level: int = Field(..., ge=0)
    index: int = Field(..., ge=0)
    nnz: int = Field(..., ge=0)
    stats: Optional[TrafficStats] = Field(None, description="Packet-count windows only")
    partial: bool = False


# =============================================================================
# SCHEMAS FOR PATHS AND PROVENANCE
# =============================================================================

class PathRecord(BaseModel):
    """Least-weight n-hop paths between two vertices."""
    src: str
    dst: str
    hops: int = Field(..., ge=1)
    weight: Any = Field(..., description="Least weight, or 'inf' when unreachable")
    paths: List[List[str]] = Field(default_factory=list)


class ContributorRecord(BaseModel):
    """One nonzero term A(u, w) ⊗ B(w, v) of a product entry."""
    keys: str = Field(..., description="Inner key w")
    a: Any
    b: Any
    prod: Any


class ProvenanceRecord(BaseModel):
    """Contributors of one entry of A ⊕.⊗ B and the recovered value."""
    row: str
    col: str
    contributors: List[ContributorRecord] = Field(default_factory=list)
    recovered: Any = None


class BenchRow(BaseModel):
    """Timing and balance of one partition count in the `bench` command."""
    partitions: int = Field(..., ge=1)
    whole_seconds: float = Field(..., ge=0)
    partitioned_seconds: float = Field(..., ge=0)
    part_nnz: List[int] = Field(default_factory=list)
    balance: float = Field(..., ge=0, description="max part nnz / mean part nnz")
    exact: bool


# =============================================================================
# SCHEMAS FOR THE COMMAND LINE
# =============================================================================

class CliConfig(BaseModel):
    """Validated arguments of one CLI invocation."""
    command: Literal["check", "stats", "paths", "provenance", "stream", "bench"]
    inputs: List[str] = Field(default_factory=list)
    semiring: Optional[str] = None
    trials: int = Field(1000, ge=1)
    partitions: List[int] = Field(default_factory=lambda: [4])
    strategy: Optional[str] = None
    seed: int = 1
    hops: Optional[int] = Field(None, ge=1)
    src: Optional[str] = None
    dst: Optional[str] = None
    mode: Optional[str] = None
    window_m: Optional[int] = Field(None, ge=1)
    window_t: Optional[float] = Field(None, gt=0)
    levels: Optional[int] = Field(None, ge=1)
    verify: bool = False
    output: Optional[str] = None

    @model_validator(mode="after")
    def _check_required(self) -> "CliConfig":
        needs_one_input = {"stats", "paths", "stream", "bench"}
        if self.command in needs_one_input and len(self.inputs) != 1:
            raise ValueError(f"'{self.command}' requires exactly one --input")
        if self.command == "provenance" and len(self.inputs) != 2:
            raise ValueError("'provenance' requires two --input files (A then B)")
        if self.command == "check" and not self.semiring:
            raise ValueError("'check' requires a semiring name")
        if self.command == "paths" and self.hops is None:
            raise ValueError("'paths' requires --hops")
        if self.command == "paths" and (self.src is None) != (self.dst is None):
            raise ValueError("'paths' takes both --src and --dst, or neither")
        if any(p < 1 for p in self.partitions):
            raise ValueError("--partitions values must be >= 1")
        if self.command == "stats" and self.mode not in (None, "source", "destination"):
            raise ValueError("--mode must be 'source' or 'destination' for 'stats'")
        if self.command == "stream" and self.mode not in (None, "fixed-m", "fixed-t"):
            raise ValueError("--mode must be 'fixed-m' or 'fixed-t' for 'stream'")
        return self
