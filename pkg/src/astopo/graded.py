"""Truncated pi/sigma classes: monotone families A_0 .. A_L over a carrier.

A PI class is the intersection of a descending family, a SIGMA class the
union of an ascending one.  Truncated at L, both are represented by the
whole family and their "limit" is the last member.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import Continuum, InputError
from .figures import closure


class Kind(enum.Enum):
    PI = "pi"
    SIGMA = "sigma"

    @property
    def dual(self):
        return Kind.SIGMA if self is Kind.PI else Kind.PI


@dataclass(frozen=True)
class GradedClass:
    kind: Kind
    family: tuple
    carrier: frozenset

    def __post_init__(self):
        family = tuple(frozenset(a) for a in self.family)
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "carrier", frozenset(self.carrier))
        if not family:
            raise InputError("graded class needs at least one level")
        for n, a in enumerate(family):
            if not a <= self.carrier:
                raise InputError(f"level {n} leaves the carrier")
        for n in range(len(family) - 1):
            lo, hi = family[n], family[n + 1]
            if self.kind is Kind.PI and not hi <= lo:
                raise InputError(f"PI family not descending at level {n + 1}")
            if self.kind is Kind.SIGMA and not lo <= hi:
                raise InputError(f"SIGMA family not ascending at level {n + 1}")

    @property
    def depth(self):
        return len(self.family) - 1


def _same_shape(a, b):
    if a.kind is not b.kind:
        raise InputError(f"kind mismatch: {a.kind.value} vs {b.kind.value}")
    if len(a.family) != len(b.family):
        raise InputError("graded classes have different depths")


def union(a: GradedClass, b: GradedClass) -> GradedClass:
    _same_shape(a, b)
    if a.carrier != b.carrier:
        raise InputError("graded classes live on different carriers")
    return GradedClass(a.kind, [x | y for x, y in zip(a.family, b.family)], a.carrier)


def intersect(a: GradedClass, b: GradedClass) -> GradedClass:
    _same_shape(a, b)
    if a.carrier != b.carrier:
        raise InputError("graded classes live on different carriers")
    return GradedClass(a.kind, [x & y for x, y in zip(a.family, b.family)], a.carrier)


def complement(a: GradedClass) -> GradedClass:
    return GradedClass(a.kind.dual, [a.carrier - x for x in a.family], a.carrier)


def product(a: GradedClass, b: GradedClass) -> GradedClass:
    _same_shape(a, b)
    carrier = frozenset((u, v) for u in a.carrier for v in b.carrier)
    family = [frozenset((u, v) for u in x for v in y) for x, y in zip(a.family, b.family)]
    return GradedClass(a.kind, family, carrier)


def domain(a: GradedClass) -> GradedClass:
    """Pointwise projection {u : (u, v) in A_n} of a family over pairs."""
    for p in a.carrier:
        if not (isinstance(p, tuple) and len(p) == 2):
            raise InputError(f"domain needs a pair carrier, found {p!r}")
    carrier = frozenset(u for u, _ in a.carrier)
    return GradedClass(a.kind, [frozenset(u for u, _ in x) for x in a.family], carrier)


def eval_at(a: GradedClass, n: int) -> frozenset:
    if not isinstance(n, int) or not 0 <= n <= a.depth:
        raise InputError(f"level {n!r} outside 0..{a.depth}")
    return a.family[n]


def limit(a: GradedClass) -> frozenset:
    # descending: intersection is the last member; ascending: so is the union
    return a.family[-1]


def closure_family(c: Continuum, X) -> GradedClass:
    """(closure(X, n))_n, a PI class since the levels descend."""
    return GradedClass(Kind.PI, [closure(c, X, n) for n in range(c.depth + 1)], c.carrier)


def image_family(c: Continuum, x) -> GradedClass:
    return closure_family(c, {x})


__all__ = [
    "GradedClass", "Kind", "closure_family", "complement", "domain", "eval_at",
    "image_family", "intersect", "limit", "product", "union",
]
