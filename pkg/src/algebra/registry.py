"""
Name resolution for semirings selectable from the command line.

    arith-nat | min-plus | max-min     stock semirings
    dual:<name>                        S × S over any resolvable name
    tropical-path                      weight + path-set semiring
    provenance:<stock>                 provenance sets over a stock semiring
    broken-demo                        intentionally lawless algebra
"""

import logging

from ..errors import UnknownSemiringError
from .core import STOCK_SEMIRINGS, SemiringDef, broken_semiring, stock_semiring
from .dual import dual_semiring
from .paths import tropical_path_semiring
from .provenance import provenance_semiring

logger = logging.getLogger(__name__)

# Key set V behind provenance:<stock>.
PROVENANCE_SAMPLE_VERTICES = ("a", "b", "c")

KNOWN_NAMES = (
    *STOCK_SEMIRINGS,
    *(f"dual:{name}" for name in STOCK_SEMIRINGS),
    "tropical-path",
    *(f"provenance:{name}" for name in STOCK_SEMIRINGS),
    "broken-demo",
)


def resolve_semiring(name: str) -> SemiringDef:
    """
    Look up a semiring by its command-line name.

    Raises:
        UnknownSemiringError: If the name matches no known semiring
    """
    if name in STOCK_SEMIRINGS:
        return stock_semiring(name)
    if name == "broken-demo":
        return broken_semiring()
    if name == "tropical-path":
        return tropical_path_semiring()

    prefix, sep, inner = name.partition(":")
    if sep and prefix == "dual":
        try:
            return dual_semiring(resolve_semiring(inner))
        except UnknownSemiringError:
            raise UnknownSemiringError(name, KNOWN_NAMES) from None
    if sep and prefix == "provenance" and inner in STOCK_SEMIRINGS:
        return provenance_semiring(stock_semiring(inner), PROVENANCE_SAMPLE_VERTICES)

    raise UnknownSemiringError(name, KNOWN_NAMES)
