"""Small named continua used by the demos, the property suite and the tests."""
from __future__ import annotations

import random

from .core import (
    Continuum, GeneratingSequence, Relation, absdiff_relation, continuum, full_relation,
)


def e1(limit=None) -> Continuum:
    """C = {0..4}; R_1 = |x-y| <= 2, R_2 = |x-y| <= 1."""
    C = range(5)
    return continuum(C, [full_relation(C), absdiff_relation(C, 1, 2, strict=False),
                         absdiff_relation(C, 2, 1, strict=False)], limit=limit, name="E1")


def e1_blocks() -> Continuum:
    return e1(limit=[{0, 1}, {2}, {3, 4}])


def e2() -> Continuum:
    """Two clusters {0,1} and {10,11}: R_1 = |x-y| <= 5, R_2 = |x-y| <= 1."""
    C = (0, 1, 10, 11)
    return continuum(C, [full_relation(C), absdiff_relation(C, 1, 5, strict=False),
                         absdiff_relation(C, 2, 1, strict=False)], name="E2")


def path10() -> Continuum:
    """C = {0..9} with thresholds 4, 2, 1 at levels 1..3."""
    C = range(10)
    return continuum(C, [full_relation(C)] + [
        absdiff_relation(C, n, t, strict=False) for n, t in ((1, 4), (2, 2), (3, 1))],
        name="path10")


def nested8() -> Continuum:
    """Totally disconnected: halves, quarters, then pairs of {0..7}."""
    C = range(8)
    levels = [full_relation(C)]
    for n, width in ((1, 4), (2, 2), (3, 1)):
        levels.append(Relation(n, frozenset(
            (x, y) for x in C for y in C if x // width == y // width)))
    return continuum(C, levels, name="nested8")


def shipped() -> list:
    """The continua the property suite runs exhaustively."""
    return [e1(), e1_blocks(), e2(), path10(), nested8()]


def random_continuum(rng: random.Random, size: int, depth: int,
                     density: float = 0.3, name="") -> Continuum:
    """A random valid continuum on {0..size-1}.

    R_L is a random reflexive symmetric relation; each coarser level is the
    composite of the next finer one plus random extra edges, so the
    composition law holds by construction.
    """
    C = tuple(range(size))
    finest = {(x, x) for x in C}
    for x in C:
        for y in C:
            if x < y and rng.random() < density:
                finest |= {(x, y), (y, x)}
    rels = {depth: finest}
    for n in range(depth - 1, 0, -1):
        upper = rels[n + 1]
        step = {(x, z) for (x, y) in upper for (y2, z) in upper if y == y2}
        for x in C:
            for y in C:
                if x < y and rng.random() < density / 2:
                    step |= {(x, y), (y, x)}
        rels[n] = step
    levels = [full_relation(C)] + [Relation(n, frozenset(rels[n])) for n in range(1, depth + 1)]
    return Continuum(GeneratingSequence(C, tuple(levels)), name=name or f"random{size}")


def random_partition(rng: random.Random, c: Continuum, merge: float = 0.5) -> list:
    """A random limit partition whose blocks are cliques of the finest level."""
    blocks = []
    order = list(c.carrier)
    rng.shuffle(order)
    L = c.depth
    for x in order:
        fits = [b for b in blocks if all(c.related(x, y, L) for y in b)]
        if fits and rng.random() < merge:
            rng.choice(fits).add(x)
        else:
            blocks.append({x})
    return blocks
