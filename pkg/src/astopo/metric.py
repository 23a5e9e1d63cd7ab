"""Rational metrics on finite carriers, balls, and metric-derived continua."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (
    Continuum, InputError, Relation, ValidationReport, Violation, continuum, full_relation,
    relation_from_predicate, value_of,
)


@dataclass(frozen=True, eq=False)
class MetricTable:
    """Distances on a finite carrier, as an explicit table or a rule.

    ``table`` maps every ordered pair to an exact rational; ``rule`` is a
    function of two positions used when no table is given (large grids).
    """

    carrier: tuple
    table: dict | None = None
    rule: object = None
    label: str = "table"

    def __post_init__(self):
        object.__setattr__(self, "carrier", tuple(self.carrier))
        object.__setattr__(self, "_rows", {})
        if (self.table is None) == (self.rule is None):
            raise InputError("metric needs exactly one of a table or a rule")
        if self.table is None:
            return
        for x in self.carrier:
            for y in self.carrier:
                if (x, y) not in self.table:
                    raise InputError(f"metric table has no entry for {(x, y)!r}")
                d = self.table[(x, y)]
                if isinstance(d, float) or not isinstance(d, (int, Fraction)):
                    raise InputError(f"distance {d!r} at {(x, y)!r} is not an exact rational")

    def d(self, x, y) -> Fraction:
        if self.table is not None:
            return Fraction(self.table[(x, y)])
        return Fraction(self.rule(x, y))

    __call__ = d

    def row(self, a) -> tuple:
        """Distances from ``a`` to every position, in carrier order (cached)."""
        got = self._rows.get(a)
        if got is None:
            got = self._rows[a] = tuple(self.d(a, x) for x in self.carrier)
        return got


def metric_from_function(carrier, fn) -> MetricTable:
    """Materialize ``fn`` into a full table."""
    carrier = tuple(carrier)
    return MetricTable(carrier, {(x, y): Fraction(fn(x, y)) for x in carrier for y in carrier})


def absdiff_metric(carrier) -> MetricTable:
    carrier = tuple(carrier)
    for x in carrier:
        value_of(x)
    return MetricTable(carrier, rule=lambda x, y: abs(value_of(x) - value_of(y)),
                       label="absdiff")


def validate_metric(m: MetricTable) -> ValidationReport:
    """Nonnegativity, identity of indiscernibles, symmetry, triangle inequality.

    One witness per violated axiom, first in carrier order.
    """
    C = m.carrier
    D = [m.row(x) for x in C]
    N = range(len(C))
    found = []

    def first(axiom, cases):
        for w in cases:
            found.append(Violation(axiom, 0, tuple(C[i] for i in w)))
            return

    first("nonnegative", ((i, j) for i in N for j in N if D[i][j] < 0))
    first("identity", ((i, j) for i in N for j in N if (D[i][j] == 0) != (C[i] == C[j])))
    first("symmetric", ((i, j) for i in N for j in N if D[i][j] != D[j][i]))
    first("triangle", ((i, j, k) for i in N for j in N for k in N
                       if D[i][k] > D[i][j] + D[j][k]))
    return ValidationReport(tuple(found))


def ball(m: MetricTable, a, e, depth: int) -> frozenset:
    """Union over i <= depth of {x : d(a, x) < e - 2**-i}.

    The terms ascend with i, so the union is the last term.
    """
    e = Fraction(e)
    if e <= 0:
        raise InputError(f"ball radius must be positive, got {e}")
    if a not in m.carrier:
        raise InputError(f"unknown centre {a!r}")
    if not isinstance(depth, int) or depth < 0:
        raise InputError(f"depth must be a natural number, got {depth!r}")
    cut = e - Fraction(1, 2 ** depth)
    return frozenset(x for x, d in zip(m.carrier, m.row(a)) if d < cut)


def open_ball(m: MetricTable, a, e) -> frozenset:
    e = Fraction(e)
    return frozenset(x for x, d in zip(m.carrier, m.row(a)) if d < e)


def sufficient_depth(m: MetricTable, a, e) -> int:
    """Least depth at which :func:`ball` equals the open ball {d(a, x) < e}."""
    e = Fraction(e)
    margins = [e - d for d in m.row(a) if d < e]
    if not margins:
        return 0
    margin = min(margins)
    i = 0
    while Fraction(1, 2 ** i) >= margin:
        i += 1
    return i


def continuum_from_metric(m: MetricTable, L: int, name="") -> Continuum:
    """R_0 full, R_n = {d < 2**-n} for n >= 1.

    The triangle inequality gives the composition law directly.
    """
    report = validate_metric(m)
    if not report.ok:
        raise InputError(f"invalid metric: {report.violations[0]}")
    C = m.carrier
    rows = []
    for n in range(1, L + 1):
        cut = Fraction(1, 2 ** n)
        rows.append([sum(1 << j for j, d in enumerate(m.row(x)) if d < cut) for x in C])
    levels = [full_relation(C)] + [Relation.from_rows(n, C, r) for n, r in enumerate(rows, 1)]
    return continuum(C, levels, metric=m, name=name or f"metric(L={L})")


def paper_literal_ball_family(m: MetricTable, e, L: int) -> Continuum:
    """Levels {d < e - 2**-n or d > 2**n} for n = 0..L, applied literally.

    Not reflexive whenever e - 2**-n <= 0, in particular at n = 0 for e < 1.
    """
    e = Fraction(e)
    C = m.carrier
    levels = [relation_from_predicate(
        C, n, lambda x, y, n=n: m.d(x, y) < e - Fraction(1, 2 ** n) or m.d(x, y) > 2 ** n)
        for n in range(L + 1)]
    return continuum(C, levels, metric=m, name=f"paper-literal-ball(e={e})")


__all__ = [
    "MetricTable", "absdiff_metric", "ball", "continuum_from_metric", "metric_from_function",
    "open_ball", "paper_literal_ball_family", "sufficient_depth", "validate_metric",
]
