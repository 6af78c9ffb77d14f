"""Structure-agnostic 2-cocycle and 2-coboundary checkers.

One reusable test form covers every coboundary/cocycle identity in the
package: digit carries, the universal carry polynomial, the Beta unit, and
the Gauss-sum coboundary are all instances over different abelian groups.
Maps are wrapped with a flavor tag; additive values combine with + and
multiplicative values with *, in which case every evaluated value must be
a unit of its ring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

ADDITIVE = "additive"
MULTIPLICATIVE = "multiplicative"


def _default_combine(a, b):
    return a + b


@dataclass(frozen=True)
class GroupValuedMap:
    """A 1- or 2-argument map into a commutative monoid of values.

    combine is the group law on *arguments* (defaults to +); invert is the
    inverse on *values* and is only needed in multiplicative flavor, where
    it defaults to the value's own unit_inverse/inverse method.
    """

    fn: Callable
    flavor: str
    name: str = "f"
    combine: Callable = field(default=_default_combine)
    invert: Callable | None = None

    def __post_init__(self):
        if self.flavor not in (ADDITIVE, MULTIPLICATIVE):
            raise ValueError("flavor must be additive or multiplicative")

    def value(self, *args):
        v = self.fn(*args)
        if self.flavor == MULTIPLICATIVE and not _is_unit(v):
            raise ValueError("not a unit")
        return v

    def invert_value(self, v):
        if self.invert is not None:
            return self.invert(v)
        for attr in ("unit_inverse", "inverse"):
            method = getattr(v, attr, None)
            if method is not None:
                return method()
        raise TypeError(f"no inverse available for {type(v).__name__}")


def _is_unit(v) -> bool:
    probe = getattr(v, "is_unit", None)
    if probe is not None:
        return probe()
    return v != 0  # plain numbers


@dataclass(frozen=True)
class CocycleReport:
    name: str
    inputs: tuple
    lhs: Any
    rhs: Any
    residual: Any
    passed: bool


def coboundary2(f: GroupValuedMap, a, b):
    """(df)(a, b): f(a) + f(b) - f(a+b), or f(a) f(b) f(a+b)^(-1)."""
    fa = f.value(a)
    fb = f.value(b)
    fab = f.value(f.combine(a, b))
    if f.flavor == ADDITIVE:
        return fa + fb - fab
    return fa * fb * f.invert_value(fab)


def cocycle2_check(F: GroupValuedMap, a, b, c) -> CocycleReport:
    """F(a,b) o F(a+b,c) against F(b,c) o F(a,b+c), in F's flavor."""
    ab = F.combine(a, b)
    bc = F.combine(b, c)
    if F.flavor == ADDITIVE:
        lhs = F.value(a, b) + F.value(ab, c)
        rhs = F.value(b, c) + F.value(a, bc)
        residual = lhs - rhs
    else:
        lhs = F.value(a, b) * F.value(ab, c)
        rhs = F.value(b, c) * F.value(a, bc)
        residual = lhs * F.invert_value(rhs)
    return CocycleReport(F.name, (a, b, c), lhs, rhs, residual, lhs == rhs)


def coboundary_of_coboundary_is_trivial(f: GroupValuedMap, a, b, c) -> CocycleReport:
    """d(df) evaluated at (a, b, c) must be the neutral value."""
    def df(x, y):
        return coboundary2(f, x, y)

    ab = f.combine(a, b)
    bc = f.combine(b, c)
    if f.flavor == ADDITIVE:
        residual = df(b, c) - df(ab, c) + df(a, bc) - df(a, b)
        neutral = residual - residual
    else:
        residual = df(b, c) * f.invert_value(df(ab, c)) \
            * df(a, bc) * f.invert_value(df(a, b))
        neutral = residual * f.invert_value(residual)
    return CocycleReport(f"d(d {f.name})", (a, b, c), residual, neutral,
                         residual, residual == neutral)
