"""Figures, separability, level-indexed closure/interior and the induced topology.

``closure(c, X, n)`` is the level-n image of X.  It is *not* idempotent at a
fixed level; what survives of idempotence is the graded containment
``closure(closure(X, n), n) <= closure(X, n - 1)``.  A class is closed at
level n when the level image leaves it fixed, i.e. when it is a union of
connected components of the R_n graph.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import Continuum, InputError

MAX_ENUMERATION = 20


@dataclass(frozen=True)
class SeparabilityAnswer:
    separable: bool
    level: int | None = None

    def __bool__(self):
        return self.separable


def figure_of(c: Continuum, X) -> frozenset:
    """Saturate X under the limit partition (union of the monads it meets)."""
    return c.members(c.saturate_mask(c.mask(X)))


def is_figure(c: Continuum, X) -> bool:
    m = c.mask(X)
    return c.saturate_mask(m) == m


def _separation_level(c, mx, my):
    for n in range(c.depth + 1):
        if not c.figure_mask(mx, n) & c.figure_mask(my, n):
            return n
    return None


def separable(c: Continuum, X, Y) -> SeparabilityAnswer:
    """Least level at which the level images of X and Y are disjoint."""
    n = _separation_level(c, c.mask(X), c.mask(Y))
    return SeparabilityAnswer(n is not None, n)


def closure(c: Continuum, X, n: int) -> frozenset:
    return c.members(c.figure_mask(c.mask(X), n))


def interior(c: Continuum, X, n: int) -> frozenset:
    full = c.full_mask
    return c.members(full & ~c.figure_mask(full & ~c.mask(X), n))


def closure_mask(c, mask, n):
    return c.figure_mask(mask, n)


def interior_mask(c, mask, n):
    full = c.full_mask
    return full & ~c.figure_mask(full & ~mask, n)


def is_closed(c: Continuum, X, n: int) -> bool:
    m = c.mask(X)
    return c.figure_mask(m, n) == m


def is_open(c: Continuum, X, n: int) -> bool:
    comp = c.full_mask & ~c.mask(X)
    return c.figure_mask(comp, n) == comp


def is_clopen(c: Continuum, X, n: int) -> bool:
    return is_closed(c, X, n) and is_open(c, X, n)


def hull_mask(c, mask, n):
    while True:
        grown = c.figure_mask(mask, n)
        if grown == mask:
            return mask
        mask = grown


def closed_hull(c: Continuum, X, n: int) -> frozenset:
    """Least class containing X that is closed at level n."""
    return c.members(hull_mask(c, c.mask(X), n))


def open_kernel(c: Continuum, X, n: int) -> frozenset:
    """Largest class inside X that is open at level n (interior iterated to a fixed point)."""
    full = c.full_mask
    return c.members(full & ~hull_mask(c, full & ~c.mask(X), n))


def is_neighborhood(c: Continuum, X, x, n: int) -> bool:
    i = c.idx(x)
    return bool(interior_mask(c, c.mask(X), n) >> i & 1)


def _component_masks(c, n):
    rest = c.full_mask
    out = []
    while rest:
        comp = hull_mask(c, rest & -rest, n)
        out.append(comp)
        rest &= ~comp
    return out


def open_family(c: Continuum, n: int) -> set:
    """Every class open at level n, i.e. the open kernels of all subsets.

    The kernels are exactly the unions of R_n components, which is how they
    are enumerated; the family is a topology on the carrier.
    """
    c.check_level(n)
    if len(c) > MAX_ENUMERATION:
        raise InputError(
            f"open_family enumerates all subsets; |C| = {len(c)} exceeds "
            f"{MAX_ENUMERATION}, test individual classes with is_open instead")
    comps = _component_masks(c, n)
    family = set()
    for r in range(len(comps) + 1):
        for pick in combinations(comps, r):
            m = 0
            for p in pick:
                m |= p
            family.add(c.members(m))
    return family


def monads_discernible(c: Continuum):
    """Check that every two monads are discernible strictly below the finest level.

    Returns ``(True, None)`` or ``(False, (block_a, block_b))``.  Blocks with
    no R_n pair across them for some n < L are separable at level n + 1 by
    the composition law.
    """
    masks = [c.mask(b) for b in c.limit]
    for a, b in combinations(range(len(masks)), 2):
        if not any(not c.figure_mask(masks[a], n) & masks[b] for n in range(c.depth)):
            return False, (c.limit[a], c.limit[b])
    return True, None


def clopen_level_classes(c: Continuum, n: int) -> list:
    """The R_n components as classes, in canonical order."""
    return [c.members(m) for m in _component_masks(c, n)]


__all__ = [
    "MAX_ENUMERATION", "SeparabilityAnswer", "clopen_level_classes", "closed_hull",
    "closure", "figure_of", "interior", "is_clopen", "is_closed", "is_figure",
    "is_neighborhood", "is_open", "monads_discernible", "open_family", "open_kernel",
    "separable",
]
