"""
Strict semiring abstraction.

A `SemiringDef` bundles a value domain with ⊕, ⊗, their identities and an
exact equality predicate. Every generic operation in the engine receives the
semiring explicitly; nothing is looked up globally.

Stock semirings:
    arith-nat   natural numbers    (+, ×, 0, 1)
    min-plus    [0, ∞]             (min, +, ∞, 0)
    max-min     [0, ∞]             (max, min, 0, ∞)
"""

import logging
import math
import operator
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

from ..errors import DomainValueError, UnknownSemiringError
from ..schemas import AxiomFailure, AxiomReport

logger = logging.getLogger(__name__)

INF = math.inf

# Small magnitudes keep overflow and float rounding out of the law checks.
NAT_SAMPLE_MAX = 20
TROPICAL_SAMPLE_POOL: Tuple[float, ...] = tuple(float(k) for k in range(11)) + (INF,)


def render_scalar(value: Any) -> Any:
    """JSON-friendly form of a scalar: `inf` as a string, whole floats as ints."""
    if isinstance(value, float):
        if math.isinf(value):
            return "inf"
        if value.is_integer():
            return int(value)
    return value


@dataclass(frozen=True, eq=False)
class SemiringDef:
    """
    A strict semiring (S, ⊕, ⊗, 0, 1) plus exact equality and a sampler.

    Instances are immutable and safe to share between worker threads.
    Two definitions are interchangeable iff their names match.
    """

    name: str
    add: Callable[[Any, Any], Any]
    mul: Callable[[Any, Any], Any]
    zero: Any
    one: Any
    eq: Callable[[Any, Any], bool] = operator.eq
    sample: Optional[Callable[[random.Random], Any]] = None
    parse: Optional[Callable[[str], Any]] = None
    render: Callable[[Any], Any] = field(default=render_scalar)

    def is_zero(self, value: Any) -> bool:
        return self.eq(value, self.zero)

    def compatible(self, other: "SemiringDef") -> bool:
        return self.name == other.name

    def sum(self, values) -> Any:
        """⊕-fold of an iterable, starting from zero."""
        total = self.zero
        for value in values:
            total = self.add(total, value)
        return total

    def __repr__(self) -> str:
        return f"<SemiringDef {self.name}>"


# =============================================================================
# DOMAIN VALIDATION
# =============================================================================

def natural(value: Any) -> int:
    """Validate a natural number (bools are rejected)."""
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise DomainValueError(f"Not a natural number: {value!r}")
    return value


def tropical_weight(value: Any) -> float:
    """Validate and coerce a weight in [0, ∞]; negatives and NaN are rejected."""
    try:
        weight = float(value)
    except (TypeError, ValueError):
        raise DomainValueError(f"Not a weight in [0, inf]: {value!r}") from None
    if math.isnan(weight) or weight < 0:
        raise DomainValueError(f"Not a weight in [0, inf]: {value!r}")
    return weight


def parse_natural(token: str) -> int:
    try:
        return natural(int(token))
    except ValueError:
        raise DomainValueError(f"Not a natural number: {token!r}") from None


def parse_weight(token: str) -> float:
    token = token.strip()
    if token.lower() == "inf":
        return INF
    return tropical_weight(token)


# =============================================================================
# STOCK SEMIRINGS
# =============================================================================

def _sample_natural(rng: random.Random) -> int:
    return rng.randint(0, NAT_SAMPLE_MAX)


def _sample_tropical(rng: random.Random) -> float:
    return rng.choice(TROPICAL_SAMPLE_POOL)


ARITH_NAT = SemiringDef(
    name="arith-nat",
    add=operator.add,
    mul=operator.mul,
    zero=0,
    one=1,
    sample=_sample_natural,
    parse=parse_natural,
)

MIN_PLUS = SemiringDef(
    name="min-plus",
    add=min,
    mul=operator.add,
    zero=INF,
    one=0.0,
    sample=_sample_tropical,
    parse=parse_weight,
)

MAX_MIN = SemiringDef(
    name="max-min",
    add=max,
    mul=min,
    zero=0.0,
    one=INF,
    sample=_sample_tropical,
    parse=parse_weight,
)

STOCK_SEMIRINGS: Dict[str, SemiringDef] = {
    s.name: s for s in (ARITH_NAT, MIN_PLUS, MAX_MIN)
}


def stock_semiring(name: str) -> SemiringDef:
    """
    Return one of the built-in semirings by name.

    Raises:
        UnknownSemiringError: If the name is not arith-nat, min-plus or max-min
    """
    try:
        return STOCK_SEMIRINGS[name]
    except KeyError:
        raise UnknownSemiringError(name, STOCK_SEMIRINGS) from None


def broken_semiring() -> SemiringDef:
    """
    Natural numbers with ⊗ replaced by clamped subtraction.

    Not a semiring: distributivity and associativity of ⊗ fail. Exists so the
    law checker can be shown to catch violations.
    """
    return SemiringDef(
        name="broken-demo",
        add=operator.add,
        mul=lambda x, y: max(x - y, 0),
        zero=0,
        one=1,
        sample=_sample_natural,
        parse=parse_natural,
    )


def combine_add(s: SemiringDef, x: Any, y: Any) -> Any:
    """x ⊕ y in semiring s."""
    return s.add(x, y)


def combine_mul(s: SemiringDef, x: Any, y: Any) -> Any:
    """x ⊗ y in semiring s."""
    return s.mul(x, y)


# =============================================================================
# AXIOM CHECKER
# =============================================================================

def _laws(s: SemiringDef) -> List[Tuple[str, Callable[[Any, Any, Any], Tuple[Any, Any]]]]:
    """Each law maps a sampled (x, y, z) to the two sides that must be equal."""
    add, mul, zero, one = s.add, s.mul, s.zero, s.one
    return [
        ("add_commutativity", lambda x, y, z: (add(x, y), add(y, x))),
        ("add_associativity", lambda x, y, z: (add(add(x, y), z), add(x, add(y, z)))),
        ("add_identity", lambda x, y, z: (add(x, zero), x)),
        ("mul_associativity", lambda x, y, z: (mul(mul(x, y), z), mul(x, mul(y, z)))),
        ("mul_identity_left", lambda x, y, z: (mul(one, x), x)),
        ("mul_identity_right", lambda x, y, z: (mul(x, one), x)),
        ("annihilation_left", lambda x, y, z: (mul(zero, x), zero)),
        ("annihilation_right", lambda x, y, z: (mul(x, zero), zero)),
        ("distributivity_left",
         lambda x, y, z: (mul(x, add(y, z)), add(mul(x, y), mul(x, z)))),
        ("distributivity_right",
         lambda x, y, z: (mul(add(y, z), x), add(mul(y, x), mul(z, x)))),
    ]


LAW_NAMES = [name for name, _ in _laws(ARITH_NAT)]


def axiom_check(s: SemiringDef, trials: int, seed: int) -> AxiomReport:
    """
    Check every semiring law on `trials` random (x, y, z) triples.

    Violations are reported, never raised. The report depends only on
    (s, trials, seed).

    Args:
        s: Semiring under test; must provide a sampler
        trials: Number of sampled triples (>= 1)
        seed: Seed of the private random generator

    Returns:
        AxiomReport listing every violated instance
    """
    if trials < 1:
        raise DomainValueError(f"trials must be >= 1, got {trials}")
    if s.sample is None:
        raise DomainValueError(f"Semiring '{s.name}' has no sampler")

    rng = random.Random(seed)
    laws = _laws(s)
    failures: List[AxiomFailure] = []

    for _ in range(trials):
        x, y, z = s.sample(rng), s.sample(rng), s.sample(rng)
        for name, sides in laws:
            left, right = sides(x, y, z)
            if not s.eq(left, right):
                failures.append(AxiomFailure(
                    law=name,
                    operands=[repr(x), repr(y), repr(z)],
                    left=repr(left),
                    right=repr(right),
                ))

    if failures:
        logger.warning(
            f"{s.name}: {len(failures)} law violations in {trials} trials (seed {seed})"
        )
    else:
        logger.info(f"{s.name}: all laws held over {trials} trials (seed {seed})")

    return AxiomReport(semiring=s.name, trials=trials, seed=seed, failures=failures)
