"""
Exception hierarchy for the engine.

Input errors describe bad data or bad usage (the CLI exits with status 2);
verification errors mean a computed identity did not hold (exit status 1).
"""

from typing import Any, Iterable


class EngineError(Exception):
    """Base class for every error raised by the engine."""

    exit_code = 2


# =============================================================================
# INPUT ERRORS
# =============================================================================

class UnknownSemiringError(EngineError, KeyError):
    """Raised when a semiring name cannot be resolved."""

    def __init__(self, name: str, valid: Iterable[str]):
        self.name = name
        self.valid = sorted(valid)
        super().__init__(
            f"Unknown semiring '{name}'. Valid names: {', '.join(self.valid)}"
        )

    def __str__(self) -> str:
        return self.args[0]


class DomainValueError(EngineError, ValueError):
    """A value lies outside the semiring's domain (negative weight, NaN, ...)."""


class SemiringMismatchError(EngineError, ValueError):
    """Two arrays combined by an operation are over different semirings."""

    def __init__(self, left: str, right: str):
        super().__init__(f"Semiring mismatch: '{left}' vs '{right}'")


class ConformabilityError(EngineError, ValueError):
    """Key sets of the operands do not line up for the requested product."""


class GraphConstructionError(EngineError, ValueError):
    """Invalid edge list (nonpositive weight or duplicate edge)."""


class UnknownVertexError(EngineError, KeyError):
    """A vertex named by the caller is not in the graph."""

    def __str__(self) -> str:
        return self.args[0]


class PartitionError(EngineError, ValueError):
    """Invalid partition request or mismatched parts."""


class ModeMismatchError(EngineError, ValueError):
    """Traffic mode does not match the partition strategy."""


class PathCapacityError(EngineError, OverflowError):
    """A path set grew beyond the configured guard."""

    def __init__(self, size: int, guard: int, left: Any, right: Any):
        self.size = size
        self.guard = guard
        self.operands = (left, right)
        super().__init__(
            f"Path set of size {size} exceeds guard {guard} "
            f"(operands: {left!r}, {right!r})"
        )


class EnumerationBudgetError(EngineError, OverflowError):
    """Brute-force enumeration would exceed its budget."""


class OutOfOrderEventError(EngineError, ValueError):
    """A fixed-t stream received a timestamp earlier than the previous one."""

    def __init__(self, event: Any, previous: float):
        self.event = event
        self.previous = previous
        super().__init__(
            f"Event {event!r} has timestamp earlier than previous {previous}"
        )


class InvalidLevelError(EngineError, ValueError):
    """Requested hierarchy level does not exist."""


class WindowUnavailableError(EngineError, LookupError):
    """A window requested from the ring buffers is not available."""

    def __init__(self, level: int, index: int, reason: str):
        self.level = level
        self.index = index
        super().__init__(f"Window level={level} index={index} {reason}")


class WindowEvictedError(WindowUnavailableError):
    """The window existed but has aged off its ring buffer."""

    def __init__(self, level: int, index: int):
        super().__init__(level, index, "was evicted from the ring buffer")


class WindowPendingError(WindowUnavailableError):
    """The window has not been completed yet."""

    def __init__(self, level: int, index: int):
        super().__init__(level, index, "is not complete yet")


class StreamClosedError(EngineError, RuntimeError):
    """An event arrived after the stream was flushed."""


class TsvParseError(EngineError, ValueError):
    """A TSV input line could not be parsed."""

    def __init__(self, path: str, line_no: int, message: str):
        self.path = path
        self.line_no = line_no
        super().__init__(f"{path}:{line_no}: {message}")


# =============================================================================
# VERIFICATION ERRORS
# =============================================================================

class VerificationError(EngineError, AssertionError):
    """A computed identity failed to hold."""

    exit_code = 1


class FactorizationError(VerificationError):
    """Adjacency differs from E_out ⊕.⊗ D_w ⊕.⊗ E_inᵀ."""


class RecoveryMismatchError(VerificationError):
    """The two product-recovery forms of a provenance array disagree."""
