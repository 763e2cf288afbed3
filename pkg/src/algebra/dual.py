"""
Complex-index (dual) semiring S × S.

Values are written x + i y with the single rule i ⊗ i = 0:
    (x1, x2) ⊕ (y1, y2) = (x1 ⊕ y1, x2 ⊕ y2)
    (x1, x2) ⊗ (y1, y2) = (x1 ⊗ y1, (x1 ⊗ y2) ⊕ (x2 ⊗ y1))
zero is (0, 0) and one is (1, 0).
"""

import logging
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Optional

from ..arrays.assoc_array import AssocArray, project
from ..errors import DomainValueError
from .core import SemiringDef

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DualValue:
    """x + i y over some base semiring."""

    re: Any
    im: Any

    def __repr__(self) -> str:
        return f"({self.re!r} + i{self.im!r})"


@dataclass(frozen=True, eq=False)
class DualSemiringDef(SemiringDef):
    """S × S together with the base semiring S it was built from."""

    base: Optional[SemiringDef] = None


@lru_cache(maxsize=None)
def dual_semiring(base: SemiringDef) -> DualSemiringDef:
    """
    Build S × S over `base`.

    Cached per base definition, so repeated calls share one instance.
    """
    add, mul, eq = base.add, base.mul, base.eq

    def dual_add(x: DualValue, y: DualValue) -> DualValue:
        return DualValue(add(x.re, y.re), add(x.im, y.im))

    def dual_mul(x: DualValue, y: DualValue) -> DualValue:
        return DualValue(mul(x.re, y.re), add(mul(x.re, y.im), mul(x.im, y.re)))

    def dual_eq(x: DualValue, y: DualValue) -> bool:
        return eq(x.re, y.re) and eq(x.im, y.im)

    sample = None
    if base.sample is not None:
        def sample(rng: random.Random) -> DualValue:
            return DualValue(base.sample(rng), base.sample(rng))

    parse = None
    if base.parse is not None:
        def parse(token: str) -> DualValue:
            re_token, sep, im_token = token.partition("|")
            if not sep:
                raise DomainValueError(f"Dual value must be written 're|im': {token!r}")
            return DualValue(base.parse(re_token), base.parse(im_token))

    def render(value: DualValue) -> str:
        return f"{base.render(value.re)}|{base.render(value.im)}"

    return DualSemiringDef(
        name=f"dual:{base.name}",
        add=dual_add,
        mul=dual_mul,
        zero=DualValue(base.zero, base.zero),
        one=DualValue(base.one, base.zero),
        eq=dual_eq,
        sample=sample,
        parse=parse,
        render=render,
        base=base,
    )


def embed(base: SemiringDef, x: Any) -> DualValue:
    """x ↦ x + i0, the homomorphism S → S × S."""
    return DualValue(x, base.zero)


def imaginary_unit(base: SemiringDef) -> DualValue:
    """i = 0 + i1."""
    return DualValue(base.zero, base.one)


def _base_of(a: AssocArray) -> SemiringDef:
    base = getattr(a.semiring, "base", None)
    if base is None:
        raise DomainValueError(f"Array over '{a.semiring.name}' is not a dual array")
    return base


def embed_array(a: AssocArray) -> AssocArray:
    """Lift a base array entrywise into the dual semiring."""
    base = a.semiring
    return project(a, lambda x: DualValue(x, base.zero), dual_semiring(base))


def re_part(a: AssocArray) -> AssocArray:
    """Re(A)(u, v) = Re(A(u, v)), with zeros dropped."""
    return project(a, lambda d: d.re, _base_of(a))


def im_part(a: AssocArray) -> AssocArray:
    """Im(A)(u, v) = Im(A(u, v)), with zeros dropped."""
    return project(a, lambda d: d.im, _base_of(a))
