"""The rational real continuum on a finite dyadic grid.

Level relations (n >= 1):

    |a - b| < 2**-n   or   a, b > 2**n   or   a, b < -2**n

The far branch is split by sign: the unsplit "|a - b| > 2**n" variant
breaks the composition law and glues the two infinities to 0.  It is
still constructible via :func:`paper_literal_family` so the validator can
reject it.  All arithmetic is exact (:class:`fractions.Fraction`).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import floor

from .core import (
    Continuum, InputError, _bits, PreconditionError, continuum, full_relation,
    relation_from_predicate, value_of,
)
from .figures import closure_mask, interior_mask

Rational = Fraction


def parse_rational(text) -> Fraction:
    """Parse "p/q", "p" or an int; floats are rejected."""
    if isinstance(text, bool) or isinstance(text, float):
        raise InputError(f"not an exact rational: {text!r}")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    try:
        s = str(text).strip()
        if any(ch in s for ch in ".eE"):
            raise ValueError
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"not an exact rational: {text!r}") from None


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def near(a, b, n: int) -> bool:
    """(a, b) in R_n of the real continuum."""
    if n == 0:
        return True
    a, b = Fraction(a), Fraction(b)
    far = 2 ** n
    return abs(a - b) < Fraction(1, far) or (a > far and b > far) or (a < -far and b < -far)


def near_literal(a, b, n: int) -> bool:
    a, b = Fraction(a), Fraction(b)
    d = abs(a - b)
    return d < Fraction(1, 2 ** n) or d > 2 ** n


@dataclass(frozen=True)
class RealGrid:
    """Carrier {k / 2**G : |k| <= M * 2**G} with levels 0..L."""

    G: int
    M: int
    L: int

    def __post_init__(self):
        if self.L < 1:
            raise InputError("a real grid needs L >= 1")
        if self.G < self.L + 1:
            raise InputError(f"granularity G={self.G} must be at least L+1={self.L + 1}")
        if self.M < 1:
            raise InputError("bound M must be at least 1")

    @property
    def spacing(self) -> Fraction:
        return Fraction(1, 2 ** self.G)

    def points(self) -> tuple:
        span = self.M * 2 ** self.G
        return tuple(Fraction(k, 2 ** self.G) for k in range(-span, span + 1))

    def contains(self, q) -> bool:
        q = Fraction(q)
        return (q * 2 ** self.G).denominator == 1 and abs(q) <= self.M

    def snap(self, q) -> Fraction:
        """Nearest grid point, ties toward -infinity, clamped to [-M, M]."""
        scale = 2 ** self.G
        k = -floor(-(Fraction(q) * scale - Fraction(1, 2)))
        k = max(-self.M * scale, min(self.M * scale, k))
        return Fraction(k, scale)

    def refined(self) -> "RealGrid":
        return RealGrid(self.G + 1, self.M, self.L)


@lru_cache(maxsize=64)
def _real_continuum(G, M, L):
    from .core import GeneratingSequence, Relation
    from .metric import absdiff_metric
    grid = RealGrid(G, M, L)
    C = grid.points()
    size = len(C)
    span = M * 2 ** G
    full = (1 << size) - 1
    levels = [Relation.from_rows(0, C, [full] * size)]
    for n in range(1, L + 1):
        # index i holds k = i - span, value k / 2**G: near when |ki - kj| < 2**(G-n)
        reach = 2 ** (G - n) - 1
        far = 2 ** (n + G)
        hi = sum(1 << i for i in range(size) if i - span > far)
        lo = sum(1 << i for i in range(size) if i - span < -far)
        rows = []
        for i in range(size):
            start, stop = max(0, i - reach), min(size - 1, i + reach)
            row = ((1 << (stop - start + 1)) - 1) << start
            if hi >> i & 1:
                row |= hi
            if lo >> i & 1:
                row |= lo
            rows.append(row)
        levels.append(Relation.from_rows(n, C, rows))
    return Continuum(GeneratingSequence(C, tuple(levels)), metric=absdiff_metric(C),
                     name=f"real(G={G},M={M},L={L})")


def real_continuum(G: int, M: int, L: int) -> Continuum:
    """Grid continuum with R_0 full and the sign-split far branch from level 1 on."""
    RealGrid(G, M, L)
    return _real_continuum(G, M, L)


def grid_continuum(grid: RealGrid) -> Continuum:
    return real_continuum(grid.G, grid.M, grid.L)


def monad_partition(grid: RealGrid) -> list:
    """Cells [j/2**L - 2**-(L+1), j/2**L + 2**-(L+1)) of the grid, in order.

    Each cell has diameter below 2**-L, so it is an R_L clique and a valid
    limit block; the cell of 0 is the monad analog of 0.
    """
    half = Fraction(1, 2 ** (grid.L + 1))
    cells = {}
    for x in grid.points():
        cells.setdefault(floor((x + half) * 2 ** grid.L), []).append(x)
    return [frozenset(cells[j]) for j in sorted(cells)]


def paper_literal_family(carrier, L: int) -> Continuum:
    """Levels {|a - b| < 2**-n or |a - b| > 2**n} for n >= 1 (R_0 full).

    Kept for demonstration; it fails the composition law.
    """
    C = tuple(carrier)
    for x in C:
        value_of(x)
    levels = [full_relation(C)] + [
        relation_from_predicate(C, n, lambda a, b, n=n: near_literal(a, b, n))
        for n in range(1, L + 1)]
    return continuum(C, levels, name=f"paper-literal-real(L={L})")


@dataclass(frozen=True)
class RealPoint:
    """A monad of the real continuum named by an exact representative.

    Arithmetic acts on representatives and may leave the grid; use
    :meth:`regrid` to snap back onto it.
    """

    value: Fraction
    grid: RealGrid | None = None

    def __post_init__(self):
        object.__setattr__(self, "value", parse_rational(self.value))

    def __add__(self, other):
        return add(self, other)

    def __mul__(self, other):
        return mul(self, other)

    def __neg__(self):
        return neg(self)

    def __le__(self, other):
        return le(self, other)

    def __lt__(self, other):
        return self.value < _val(other)

    def on_grid(self) -> bool:
        return self.grid is None or self.grid.contains(self.value)

    def regrid(self) -> "RealPoint":
        if self.grid is None:
            return self
        return RealPoint(self.grid.snap(self.value), self.grid)

    def __str__(self):
        return f"mon({format_rational(self.value)})"


def _val(p):
    return p.value if isinstance(p, RealPoint) else parse_rational(p)


def _grid(*ps):
    for p in ps:
        if isinstance(p, RealPoint) and p.grid is not None:
            return p.grid
    return None


def mon(q, grid=None) -> RealPoint:
    return RealPoint(parse_rational(q), grid)


def add(p, q) -> RealPoint:
    return RealPoint(_val(p) + _val(q), _grid(p, q))


def mul(p, q) -> RealPoint:
    return RealPoint(_val(p) * _val(q), _grid(p, q))


def neg(p) -> RealPoint:
    return RealPoint(-_val(p), _grid(p))


def inv(p) -> RealPoint:
    q = _val(p)
    if q == 0:
        raise InputError("mon(0) has no multiplicative inverse")
    return RealPoint(1 / q, _grid(p))


def le(p, q) -> bool:
    return _val(p) <= _val(q)


def real_eq(p, q, n: int) -> bool:
    """Level-n equality of reals: representatives related by R_n."""
    return near(_val(p), _val(q), n)


def archimedean_witness(q) -> int:
    """Least natural number strictly above q."""
    return max(0, floor(parse_rational(q)) + 1)


class LubError(PreconditionError):
    pass


def lub(members, a, b, T: int) -> Fraction:
    """Bisect down from the upper bound b toward the non-bound a for T steps.

    c_0 = b and c_{i+1} = c_i + (a - b) / 2**(i+1) when that is still an
    upper bound of ``members``, else c_i.  The result is an upper bound
    within (b - a) / 2**T of max(members).
    """
    members = [parse_rational(m) for m in members]
    if not members:
        raise LubError("lub needs a nonempty member set")
    a, b = parse_rational(a), parse_rational(b)
    if not isinstance(T, int) or T < 0:
        raise LubError(f"iteration count must be a natural number, got {T!r}")
    top = max(members)
    if top > b:
        raise LubError("b is not an upper bound", (format_rational(top), format_rational(b)))
    if top <= a:
        raise LubError("a is an upper bound; it must not be", format_rational(a))
    c = b
    for i in range(T):
        trial = c + (a - b) / 2 ** (i + 1)
        if top <= trial:
            c = trial
    return c


INTERVAL_KINDS = ("open", "closed", "half-open-left", "half-open-right")


def _open_span(c, a, b):
    # grid continua list their points in increasing order
    lo, hi = c.idx(a), c.idx(b)
    return ((1 << (hi - lo - 1)) - 1) << (lo + 1) if hi > lo + 1 else 0


def _coarse(mask):
    # fine index 2i is coarse index i (both grids start at -M)
    out = 0
    for j in _bits(mask):
        if not j & 1:
            out |= 1 << (j >> 1)
    return out


@lru_cache(maxsize=8192)
def _raw_pair(grid, a, b, n):
    fine = grid_continuum(grid.refined())
    raw = _open_span(fine, a, b)
    return _coarse(closure_mask(fine, raw, n)), _coarse(interior_mask(fine, raw, n))


def raw_closure(grid: RealGrid, a, b, n: int) -> frozenset:
    """Grid points of the level-n closure of the dense class {q : a < q < b}.

    The dense class is evaluated on the once-refined grid: a rational
    witness strictly inside an open gap of grid width always exists at half
    the spacing, so the refined evaluation equals the dense one.
    """
    a, b = _endpoints(grid, a, b, n)
    return grid_continuum(grid).members(_raw_pair(grid, a, b, n)[0])


def raw_interior(grid: RealGrid, a, b, n: int) -> frozenset:
    a, b = _endpoints(grid, a, b, n)
    return grid_continuum(grid).members(_raw_pair(grid, a, b, n)[1])


def point_monad(grid: RealGrid, a, n: int) -> frozenset:
    """Level-n monad analog of a grid point: its R_n image."""
    c = grid_continuum(grid)
    return c.members(c.nbr(n)[c.idx(parse_rational(a))])


def _endpoints(grid, a, b, n):
    a, b = parse_rational(a), parse_rational(b)
    if not grid.contains(a) or not grid.contains(b):
        raise InputError("interval endpoints must lie on the grid")
    if not a < b:
        raise InputError("interval needs a < b")
    if not isinstance(n, int) or not 0 <= n <= grid.L:
        raise InputError(f"level {n!r} outside 0..{grid.L}")
    return a, b


def _monad_masks(grid, a, b, n):
    c = grid_continuum(grid)
    rows = c.nbr(n)
    return rows[c.idx(a)], rows[c.idx(b)]


def interval_mask(grid: RealGrid, a, b, kind: str, n: int) -> int:
    a, b = _endpoints(grid, a, b, n)
    cl, it = _raw_pair(grid, a, b, n)
    ma, mb = _monad_masks(grid, a, b, n)
    if kind == "open":
        return it
    if kind == "closed":
        return cl
    if kind == "half-open-left":
        return cl & ~ma
    if kind == "half-open-right":
        return cl & ~mb
    raise InputError(f"unknown interval kind {kind!r}; expected one of {INTERVAL_KINDS}")


def interval(grid: RealGrid, a, b, kind: str, n: int) -> frozenset:
    """Level-n real interval built from the open raw class {q : a < q < b}.

    open: interior; closed: closure; half-open-left (a, b]: closure minus
    the monad of a; half-open-right [a, b): closure minus the monad of b.
    """
    return grid_continuum(grid).members(interval_mask(grid, a, b, kind, n))


def half_open_masks(grid: RealGrid, a, b, kind: str, n: int):
    a, b = _endpoints(grid, a, b, n)
    cl, it = _raw_pair(grid, a, b, n)
    ma, mb = _monad_masks(grid, a, b, n)
    if kind == "half-open-left":
        return cl & ~ma, it | mb
    if kind == "half-open-right":
        return cl & ~mb, it | ma
    raise InputError(f"{kind!r} is not a half-open kind")


def half_open_forms(grid: RealGrid, a, b, kind: str, n: int):
    """Both defining expressions of a half-open interval, closure form first.

    (a, b] = cl(A) - mon(a) = int(A) + mon(b) and dually for [a, b).  They
    coincide exactly when the endpoints are separated at level n.
    """
    members = grid_continuum(grid).members
    via_closure, via_interior = half_open_masks(grid, a, b, kind, n)
    return members(via_closure), members(via_interior)


def endpoints_separated(grid: RealGrid, a, b, n: int) -> bool:
    """Level-n monads of a and b share no grid point."""
    ma, mb = _monad_masks(grid, parse_rational(a), parse_rational(b), n)
    return not ma & mb


__all__ = [
    "INTERVAL_KINDS", "LubError", "Rational", "RealGrid", "RealPoint", "add",
    "archimedean_witness", "endpoints_separated", "format_rational", "grid_continuum",
    "half_open_forms", "half_open_masks", "interval", "interval_mask", "inv", "le", "lub",
    "mon", "monad_partition", "mul", "near", "near_literal", "neg", "paper_literal_family", "parse_rational",
    "point_monad", "raw_closure", "raw_interior", "real_continuum", "real_eq",
]
