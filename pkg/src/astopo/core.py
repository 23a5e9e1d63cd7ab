"""Carriers, level relations, generating sequences and level images.

A continuum is finite here: a tuple of hashable positions, relations
R_0 .. R_L over it, and an optional limit partition standing in for the
indiscernibility equivalence (default: singletons).  Classes are returned
as frozensets of positions; internally every class is an int bitmask over
the carrier order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Hashable, Iterable


class InputError(ValueError):
    """Malformed input, as opposed to a well-formed object failing a check."""


class PreconditionError(ValueError):
    """An operation was called outside its precondition; carries a witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class Relation:
    """A level relation: a set of ordered pairs over a carrier.

    Built either from pairs or from per-position bitmask rows; the other
    form is materialized on demand.
    """

    __slots__ = ("level", "_pairs", "_carrier", "_rows")

    def __init__(self, level: int, pairs=None):
        self.level = level
        self._pairs = frozenset(pairs) if pairs is not None else frozenset()
        self._carrier = None
        self._rows = None

    @classmethod
    def from_rows(cls, level, carrier, rows):
        rel = cls(level)
        rel._pairs = None
        rel._carrier = tuple(carrier)
        rel._rows = tuple(rows)
        return rel

    @property
    def pairs(self) -> frozenset:
        if self._pairs is None:
            C = self._carrier
            self._pairs = frozenset((C[i], C[j]) for i, row in enumerate(self._rows)
                                    for j in _bits(row))
        return self._pairs

    def rows(self, carrier, index) -> list:
        if self._rows is not None and self._carrier == carrier:
            return list(self._rows)
        out = [0] * len(carrier)
        for x, y in self.pairs:
            out[index[x]] |= 1 << index[y]
        return out

    def __contains__(self, pair):
        return pair in self.pairs

    def __eq__(self, other):
        return isinstance(other, Relation) and (self.level, self.pairs) == (other.level, other.pairs)

    def __hash__(self):
        return hash((self.level, self.pairs))

    def __repr__(self):
        return f"Relation(level={self.level}, pairs={len(self.pairs)})"


@dataclass(frozen=True)
class GeneratingSequence:
    carrier: tuple
    levels: tuple

    @property
    def depth(self) -> int:
        return len(self.levels) - 1


@dataclass(frozen=True)
class Violation:
    condition: str
    level: int
    witness: tuple


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def by_condition(self, condition):
        return [v for v in self.violations if v.condition == condition]


def value_of(x) -> Fraction:
    """Exact numeric value of a position id (ints and Fractions only)."""
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        raise InputError(f"position {x!r} has no rational value")
    return Fraction(x)


def _check_carrier(carrier):
    carrier = tuple(carrier)
    for x in carrier:
        if isinstance(x, float):
            raise InputError(f"floating point position {x!r}; use Fraction")
    if len(set(carrier)) != len(carrier):
        raise InputError("carrier ids are not unique")
    return carrier


def relation_from_pairs(carrier, level, pairs) -> Relation:
    known = set(carrier)
    pairs = frozenset((x, y) for x, y in pairs)
    for x, y in pairs:
        if x not in known or y not in known:
            raise InputError(f"level {level}: pair {(x, y)!r} references an unknown id")
    return Relation(level, pairs)


def relation_from_predicate(carrier, level, related: Callable) -> Relation:
    return Relation(level, frozenset(
        (x, y) for x in carrier for y in carrier if related(x, y)))


def full_relation(carrier, level=0) -> Relation:
    return relation_from_predicate(carrier, level, lambda x, y: True)


def absdiff_relation(carrier, level, threshold, strict=True) -> Relation:
    """Pairs with |x - y| < threshold (or <= when ``strict`` is false)."""
    t = Fraction(threshold)
    if strict:
        return relation_from_predicate(
            carrier, level, lambda x, y: abs(value_of(x) - value_of(y)) < t)
    return relation_from_predicate(
        carrier, level, lambda x, y: abs(value_of(x) - value_of(y)) <= t)


def generating_sequence(carrier, levels: Iterable) -> GeneratingSequence:
    """Assemble a sequence from relations or raw pair collections.

    Raises InputError for an empty or single-level list, mismatched level
    indices, or pairs naming ids outside the carrier.
    """
    carrier = _check_carrier(carrier)
    built = []
    for n, rel in enumerate(levels):
        if isinstance(rel, Relation):
            if rel.level != n:
                raise InputError(f"relation at position {n} declares level {rel.level}")
            if rel._carrier != carrier:
                rel = relation_from_pairs(carrier, n, rel.pairs)
        else:
            rel = relation_from_pairs(carrier, n, rel)
        built.append(rel)
    if not built:
        raise InputError("generating sequence has no levels")
    if len(built) < 2:
        raise InputError("generating sequence needs levels R_0..R_L with L >= 1")
    return GeneratingSequence(carrier, tuple(built))


def _masks(carrier, index, rel):
    return rel.rows(carrier, index)


def validate(gen: GeneratingSequence) -> ValidationReport:
    """Check reflexivity, symmetry, R_0 fullness, the composition law and nesting.

    One witness (the first in carrier order) is recorded per violated
    condition and level.  Composition witnesses are triples (x, y, z) with
    (x, y), (y, z) in R_{n+1} and (x, z) missing from R_n; the violation's
    level is n.
    """
    if not gen.levels:
        raise InputError("generating sequence has no levels")
    carrier = gen.carrier
    index = {x: i for i, x in enumerate(carrier)}
    for rel in gen.levels:
        if rel._carrier == carrier:
            continue
        for x, y in rel.pairs:
            if x not in index or y not in index:
                raise InputError(f"level {rel.level}: pair {(x, y)!r} references an unknown id")
    nbr = [_masks(carrier, index, rel) for rel in gen.levels]
    full = (1 << len(carrier)) - 1
    found = []

    for n, rows in enumerate(nbr):
        for i, x in enumerate(carrier):
            if not rows[i] >> i & 1:
                found.append(Violation("reflexive", n, (x, x)))
                break
        for i, x in enumerate(carrier):
            asym = [j for j in _bits(rows[i]) if not rows[j] >> i & 1]
            if asym:
                found.append(Violation("symmetric", n, (x, carrier[asym[0]])))
                break
    for i, x in enumerate(carrier):
        missing = full & ~nbr[0][i]
        if missing:
            found.append(Violation("full-base", 0, (x, carrier[_low(missing)])))
            break
    for n in range(len(nbr) - 1):
        upper, lower = nbr[n + 1], nbr[n]
        hit = _composition_witness(upper, lower)
        if hit is not None:
            i, j, k = hit
            found.append(Violation("composition", n, (carrier[i], carrier[j], carrier[k])))
        for i, x in enumerate(carrier):
            extra = upper[i] & ~lower[i]
            if extra:
                found.append(Violation("nested", n, (x, carrier[_low(extra)])))
                break
    return ValidationReport(tuple(found))


def _composition_witness(upper, lower):
    # first (x, y, z) in lexicographic carrier order with xRy, yRz in upper, not xRz in lower
    for i, row in enumerate(upper):
        for j in _bits(row):
            bad = upper[j] & ~lower[i]
            if bad:
                return i, j, _low(bad)
    return None


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _low(mask):
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True, eq=False)
class Continuum:
    """Finite support with a generating sequence and a limit partition.

    ``metric``, when present, is the table the levels were derived from and
    enables metric-only operations (epsilon-delta checks).
    """

    gen: GeneratingSequence
    limit: tuple = None
    metric: object = None
    name: str = ""
    _index: dict = field(init=False, repr=False)
    _nbr: tuple = field(init=False, repr=False)
    _block: tuple = field(init=False, repr=False)

    def __post_init__(self):
        carrier = self.gen.carrier
        index = {x: i for i, x in enumerate(carrier)}
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_nbr", tuple(
            tuple(_masks(carrier, index, rel)) for rel in self.gen.levels))
        blocks = self.limit
        if blocks is None:
            blocks = tuple(frozenset([x]) for x in carrier)
        else:
            blocks = tuple(frozenset(b) for b in blocks)
            _check_partition(carrier, index, blocks, self._nbr[-1])
        object.__setattr__(self, "limit", blocks)
        owner = [0] * len(carrier)
        for b in blocks:
            m = sum(1 << index[x] for x in b)
            for x in b:
                owner[index[x]] = m
        object.__setattr__(self, "_block", tuple(owner))

    @property
    def carrier(self) -> tuple:
        return self.gen.carrier

    @property
    def depth(self) -> int:
        """Finest level L."""
        return len(self.gen.levels) - 1

    @property
    def full_mask(self) -> int:
        return (1 << len(self.carrier)) - 1

    def __len__(self):
        return len(self.carrier)

    def __repr__(self):
        label = self.name or "Continuum"
        return f"<{label}: |C|={len(self.carrier)}, L={self.depth}>"

    # mask plumbing shared by the other modules
    def idx(self, x) -> int:
        try:
            return self._index[x]
        except (KeyError, TypeError):
            raise InputError(f"unknown position {x!r}") from None

    def mask(self, xs) -> int:
        m = 0
        for x in xs:
            m |= 1 << self.idx(x)
        return m

    def members(self, mask) -> frozenset:
        carrier = self.carrier
        return frozenset(carrier[i] for i in _bits(mask))

    def ordered(self, xs) -> list:
        """Members of ``xs`` in canonical carrier order."""
        return [self.carrier[i] for i in _bits(self.mask(xs))]

    def check_level(self, n):
        if not isinstance(n, int) or not 0 <= n <= self.depth:
            raise InputError(f"level {n!r} outside 0..{self.depth}")

    def nbr(self, n) -> tuple:
        self.check_level(n)
        return self._nbr[n]

    def related(self, x, y, n) -> bool:
        return bool(self.nbr(n)[self.idx(x)] >> self.idx(y) & 1)

    def figure_mask(self, mask, n) -> int:
        rows = self.nbr(n)
        out = 0
        for i in _bits(mask):
            out |= rows[i]
        return out

    def saturate_mask(self, mask) -> int:
        out = 0
        for i in _bits(mask):
            out |= self._block[i]
        return out


def _check_partition(carrier, index, blocks, finest):
    seen = set()
    for b in blocks:
        if not b:
            raise InputError("limit partition has an empty block")
        for x in b:
            if x not in index:
                raise InputError(f"limit partition names unknown id {x!r}")
            if x in seen:
                raise InputError(f"limit partition blocks overlap at {x!r}")
            seen.add(x)
        for x in b:
            for y in b:
                if not finest[index[x]] >> index[y] & 1:
                    raise InputError(
                        f"monad block pair {(x, y)!r} is not related at the finest level")
    if len(seen) != len(carrier):
        raise InputError("limit partition does not cover the carrier")


def continuum(carrier, levels, limit=None, metric=None, name="") -> Continuum:
    return Continuum(generating_sequence(carrier, levels), limit, metric, name)


def image(c: Continuum, x, n: int) -> frozenset:
    """Z_n(x): every position R_n-related to x."""
    return c.members(c.nbr(n)[c.idx(x)])


def level_figure(c: Continuum, X, n: int) -> frozenset:
    return c.members(c.figure_mask(c.mask(X), n))


def monad(c: Continuum, x) -> frozenset:
    return c.members(c._block[c.idx(x)])


def is_totally_disconnected(c: Continuum) -> bool:
    """True when every level relation is transitive (an equivalence)."""
    for rows in c._nbr:
        for i, row in enumerate(rows):
            for j in _bits(row):
                if rows[j] & ~row:
                    return False
    return True


def compose(c: Continuum, n: int) -> list:
    """Row masks of R_n o R_n."""
    rows = c.nbr(n)
    return [c.figure_mask(row, n) for row in rows]


def restrict(c: Continuum, X, name="") -> Continuum:
    """The subcontinuum on X with every relation and monad block cut down to X."""
    keep = set(X)
    carrier = tuple(x for x in c.carrier if x in keep)
    levels = [Relation(rel.level, frozenset(
        (x, y) for x, y in rel.pairs if x in keep and y in keep)) for rel in c.gen.levels]
    blocks = [b & keep for b in c.limit if b & keep]
    return Continuum(GeneratingSequence(carrier, tuple(levels)), tuple(blocks), c.metric, name)


__all__ = [
    "Continuum", "GeneratingSequence", "InputError", "PreconditionError", "Relation",
    "ValidationReport", "Violation", "absdiff_relation", "compose", "continuum",
    "full_relation", "generating_sequence", "image", "is_totally_disconnected",
    "level_figure", "monad", "relation_from_pairs", "relation_from_predicate",
    "restrict", "validate", "value_of",
]
