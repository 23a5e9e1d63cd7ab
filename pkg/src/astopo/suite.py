"""Executable property suite: one check per acceptance criterion (1-9).

Every check compares library results against an independent oracle (naive
set evaluation, brute-force enumeration, or a closed-form value) with exact
arithmetic.  Randomized parts draw from ``random.Random(seed)``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import ceil

from . import connectivity as cn
from . import core, figures as fg, graded, metric as mt, morphism as mo, real as rl
from .samples import e1, e2, random_continuum, random_partition, shipped

DEFAULT_SEED = 20240611


@dataclass
class CheckResult:
    criterion: int
    title: str
    ok: bool = True
    cases: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def expect(self, cond, witness):
        self.cases += 1
        if not cond:
            self.ok = False
            if len(self.failures) < 5:
                self.failures.append(witness)
        return cond

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f"; first failures: {self.failures}" if self.failures else ""
        return f"criterion {self.criterion}: {status} ({self.cases} checks) {self.title}{extra}"


# -- independent oracles --------------------------------------------------

def naive_violations(c_or_gen) -> set:
    """Condition names violated, by literal loops over pair sets."""
    gen = c_or_gen.gen if isinstance(c_or_gen, core.Continuum) else c_or_gen
    C = gen.carrier
    rels = [r.pairs for r in gen.levels]
    bad = set()
    for R in rels:
        if any((x, x) not in R for x in C):
            bad.add("reflexive")
        if any((y, x) not in R for x, y in R):
            bad.add("symmetric")
    if any((x, y) not in rels[0] for x in C for y in C):
        bad.add("full-base")
    for n in range(len(rels) - 1):
        up, lo = rels[n + 1], rels[n]
        if any((x, z) not in lo for x, y in up for y2, z in up if y == y2):
            bad.add("composition")
        if not up <= lo:
            bad.add("nested")
    return bad


def _witness_holds(gen, v) -> bool:
    rels = [r.pairs for r in gen.levels]
    w, n = v.witness, v.level
    if v.condition == "reflexive":
        return w not in rels[n]
    if v.condition == "symmetric":
        return w in rels[n] and (w[1], w[0]) not in rels[n]
    if v.condition == "full-base":
        return w not in rels[0]
    if v.condition == "composition":
        x, y, z = w
        return (x, y) in rels[n + 1] and (y, z) in rels[n + 1] and (x, z) not in rels[n]
    if v.condition == "nested":
        return w in rels[n + 1] and w not in rels[n]
    return False


def _image_oracle(c, X, n):
    R = c.gen.levels[n].pairs
    return frozenset(y for x in X for y in c.carrier if (x, y) in R)


def _saturate_oracle(c, X):
    return frozenset(y for b in c.limit if b & set(X) for y in b)


def _subsets(c):
    C = c.carrier
    for m in range(1 << len(C)):
        yield m


def _pool(rng, count, sizes, depths, partitions=False):
    out = []
    for _ in range(count):
        c = random_continuum(rng, rng.choice(sizes), rng.choice(depths))
        if partitions:
            c = core.Continuum(c.gen, tuple(map(frozenset, random_partition(rng, c))))
        out.append(c)
    return out


# -- criterion 1 ----------------------------------------------------------

def criterion_1(seed=DEFAULT_SEED) -> CheckResult:
    r = CheckResult(1, "validator soundness")
    grid_metric = mt.absdiff_metric(rl.RealGrid(4, 1, 3).points())
    accepted = [e1(), e2(), rl.real_continuum(4, 2, 3), mt.continuum_from_metric(grid_metric, 4)]
    for c in accepted:
        rep = core.validate(c.gen)
        r.expect(rep.ok, (c.name, rep.violations[:1]))
        r.expect(not naive_violations(c), (c.name, "oracle"))
    lit = rl.paper_literal_family((0, 8, 48), 4)
    rep = core.validate(lit.gen)
    r.expect(core.Violation("composition", 3, (0, 48, 8)) in rep.violations,
             ("paper-literal real", rep.violations))
    r.expect({v.condition for v in rep.violations} == naive_violations(lit),
             ("paper-literal real oracle", rep.violations))
    for e in (Fraction(1, 2), Fraction(3, 4), Fraction(1, 8)):
        ball_lit = mt.paper_literal_ball_family(mt.absdiff_metric(range(5)), e, 3)
        rep = core.validate(ball_lit.gen)
        r.expect(rep.by_condition("reflexive"), ("paper-literal ball", e))
        r.expect(all(_witness_holds(ball_lit.gen, v) for v in rep.violations),
                 ("ball witnesses", e))
    # random relation families: report agrees with the oracle, witnesses re-check
    rng = random.Random(seed)
    for _ in range(300):
        size = rng.randint(1, 5)
        C = tuple(range(size))
        levels = [core.Relation(n, frozenset(
            (x, y) for x in C for y in C if x == y and rng.random() < 0.95
            or rng.random() < 0.5)) for n in range(rng.randint(2, 4))]
        gen = core.generating_sequence(C, levels)
        rep = core.validate(gen)
        r.expect({v.condition for v in rep.violations} == naive_violations(gen), levels)
        r.expect(all(_witness_holds(gen, v) for v in rep.violations), rep.violations)
    return r


# -- criterion 2 ----------------------------------------------------------

def criterion_2(seed=DEFAULT_SEED) -> CheckResult:
    r = CheckResult(2, "figure and closure laws, duality, graded idempotence")
    for c in [x for x in shipped() if len(x) <= 10]:
        full = c.full_mask
        singles = [1 << i for i in range(len(c))]
        sat = c.saturate_mask
        figures = [m for m in _subsets(c) if sat(m) == m]
        pairwise = len(c) <= 8
        for X in _subsets(c):
            members = c.members(X)
            # monad figures, exact statements
            fx = sat(X)
            r.expect(sat(fx) == fx, (c.name, "basic1", members))
            r.expect(c.members(fx) == _saturate_oracle(c, members), (c.name, "fig oracle"))
            r.expect(all(fx & ~sat(X | s) == 0 for s in singles), (c.name, "basic2", members))
            r.expect(fx == _or(sat(s) for s in singles if X & s), (c.name, "basic4", members))
            if pairwise:
                for Y in figures:
                    if X & ~Y == 0:
                        r.expect(fx & ~Y == 0, (c.name, "basic3", members))
                    r.expect((fx & sat(Y) == 0) == (fx & Y == 0), (c.name, "basic5", members))
            for n in range(c.depth + 1):
                cl = c.figure_mask(X, n)
                r.expect(c.members(cl) == _image_oracle(c, members, n), (c.name, n, "image"))
                r.expect(X & ~cl == 0, (c.name, n, "clo3", members))
                r.expect(all(cl & ~c.figure_mask(X | s, n) == 0 for s in singles),
                         (c.name, n, "clo4", members))
                r.expect(cl == _or(c.figure_mask(s, n) for s in singles if X & s),
                         (c.name, n, "clo5", members))
                # graded form of "the closure is a figure"
                if n >= 1:
                    r.expect(sat(c.figure_mask(X, n)) & ~c.figure_mask(X, n - 1) == 0,
                             (c.name, n, "clo1 graded", members))
                    r.expect(c.figure_mask(cl, n) & ~c.figure_mask(X, n - 1) == 0,
                             (c.name, n, "graded idempotence", members))
                inner = full & ~c.figure_mask(full & ~X, n)
                r.expect(c.figure_mask(full & ~X, n) == full & ~inner, (c.name, n, "duality"))
                r.expect(cl == full & ~fg.interior_mask(c, full & ~X, n), (c.name, n, "duality2"))
                if pairwise:
                    for Y in _subsets(c):
                        cy = c.figure_mask(Y, n)
                        if X & ~Y == 0:
                            r.expect(cl & ~cy == 0, (c.name, n, "monotone pair"))
                        if cl & cy == 0:
                            r.expect(cl & Y == 0, (c.name, n, "basic5 level"))
                closed = c.figure_mask(X, n) == X
                r.expect(closed == fg.is_open(c, c.members(full & ~X), n),
                         (c.name, n, "closed iff complement open"))
        for x in c.carrier:
            r.expect(core.monad(c, x) == fg.figure_of(c, {x}), (c.name, "basic6", x))
            for n in range(c.depth + 1):
                r.expect(core.image(c, x, n) == core.level_figure(c, {x}, n), (c.name, "image6"))
        # closure family is a PI class, its complement SIGMA
        for x in c.carrier:
            fam = graded.closure_family(c, {x})
            r.expect(graded.complement(fam).kind is graded.Kind.SIGMA, (c.name, "sigma"))
    r.expect(_graded_laws(random.Random(seed), r), "graded laws")
    return r


def _or(masks):
    out = 0
    for m in masks:
        out |= m
    return out


def _graded_laws(rng, r) -> bool:
    """Union, intersection, product and domain keep kind and monotonicity."""
    ok = True
    for _ in range(500):
        size, L = rng.randint(1, 8), rng.randint(1, 4)
        C = frozenset(range(size))
        kind = rng.choice(list(graded.Kind))

        def family():
            sets = [frozenset(x for x in C if rng.random() < 0.6) for _ in range(L + 1)]
            acc, out = None, []
            for s in sets:
                acc = s if acc is None else (acc | s if kind is graded.Kind.SIGMA else acc & s)
                out.append(acc)
            return graded.GradedClass(kind, out, C)

        a, b = family(), family()
        for op in (graded.union, graded.intersect, graded.product):
            g = op(a, b)
            ok &= r.expect(g.kind is kind, ("kind", op.__name__))
        d = graded.domain(graded.product(a, b))
        for n in range(L + 1):
            want = a.family[n] if b.family[n] else frozenset()
            ok &= r.expect(d.family[n] == want, ("domain", n))
        ok &= r.expect(graded.complement(graded.complement(a)) == a, "complement involution")
    return ok


# -- criterion 3 ----------------------------------------------------------

def criterion_3(seed=DEFAULT_SEED) -> CheckResult:
    r = CheckResult(3, "open families are topologies")
    rng = random.Random(seed)
    pool = [e1(), e2()] + _pool(rng, 50, range(1, 11), (1, 2, 3))
    for c in pool:
        C = frozenset(c.carrier)
        for n in range(c.depth + 1):
            fam = fg.open_family(c, n)
            r.expect(frozenset() in fam and C in fam, (c.name, n, "empty/full"))
            # membership oracle: complement fixed by the level image
            r.expect(all(_image_oracle(c, C - U, n) == C - U for U in fam),
                     (c.name, n, "members are open"))
            listed = list(fam)
            bad = [(U, V) for U, V in combinations(listed, 2)
                   if U & V not in fam or U | V not in fam]
            r.expect(not bad, (c.name, n, bad[:1]))
            if len(c) <= 8:
                everything = {c.members(m) for m in _subsets(c)
                              if fg.is_open(c, c.members(m), n)}
                r.expect(everything == fam, (c.name, n, "family is complete"))
    return r


# -- criterion 4 ----------------------------------------------------------

def criterion_4(seed=DEFAULT_SEED) -> CheckResult:
    r = CheckResult(4, "distinct monads are separable under discernibility")
    rng = random.Random(seed)
    pool = shipped() + [rl.real_continuum(3, 1, 2)]
    for _ in range(300):
        c = random_continuum(rng, rng.randint(2, 8), rng.randint(1, 3), rng.uniform(0.05, 0.3))
        blocks = random_partition(rng, c, rng.uniform(0, 0.6))
        pool.append(core.Continuum(c.gen, tuple(map(frozenset, blocks))))
    qualifying = 0
    for c in pool:
        ok, _ = fg.monads_discernible(c)
        if not ok:
            continue
        qualifying += 1
        for A, B in combinations(c.limit, 2):
            ans = fg.separable(c, A, B)
            r.expect(ans.separable and ans.level <= c.depth, (c.name, A, B))
            if ans.separable:
                n = ans.level
                r.expect(not _image_oracle(c, A, n) & _image_oracle(c, B, n), (c.name, A, B, n))
                r.expect(all(_image_oracle(c, A, m) & _image_oracle(c, B, m) for m in range(n)),
                         (c.name, A, B, "least level"))
    r.notes.append(f"{qualifying} of {len(pool)} continua meet the side condition")
    r.expect(qualifying >= 50, ("too few qualifying continua", qualifying))
    return r


# -- criterion 5 ----------------------------------------------------------

def _naive_connected(c, u, n):
    """Literal definition: every nonempty proper v has an R_n edge to u - v."""
    u = list(u)
    R = c.gen.levels[n].pairs
    for k in range(1, len(u)):
        for v in combinations(u, k):
            rest = set(u) - set(v)
            if not any((x, y) in R for x in v for y in rest):
                return False
    return True


def _clopen(c, m, n):
    rest = c.full_mask & ~m
    return c.figure_mask(m, n) == m and c.figure_mask(rest, n) == rest


def criterion_5(seed=DEFAULT_SEED) -> CheckResult:
    r = CheckResult(5, "motions, connected sets, clopen splits")
    rng = random.Random(seed)
    # traces of random motions are connected
    walkers = _pool(rng, 40, range(1, 11), (1, 2, 3))
    for _ in range(1000):
        c = rng.choice(walkers)
        n = rng.randint(0, c.depth)
        x = rng.choice(c.carrier)
        steps = [x]
        for _ in range(rng.randint(0, 8)):
            steps.append(rng.choice(sorted(core.image(c, steps[-1], n), key=c.idx)))
        m = cn.motion(c, steps, n)
        r.expect(cn.is_connected_set(c, cn.trace(m), n), (c.name, steps, n))
    small = [x for x in shipped() if len(x) <= 8] + _pool(rng, 12, range(2, 9), (1, 2, 3))
    for c in small:
        full = c.full_mask
        for n in range(c.depth + 1):
            comps = cn.components(c, c.carrier, n)
            # connected u with |u| <= 6: motion_through covers exactly u
            for m in _subsets(c):
                u = c.members(m)
                if not u or len(u) > 6:
                    continue
                conn = cn.is_connected_set(c, u, n)
                r.expect(conn == _naive_connected(c, u, n), (c.name, n, u, "definition"))
                if conn:
                    mot = cn.motion_through(c, u, n)
                    r.expect(cn.is_motion(c, mot.steps, n) and cn.trace(mot) == u
                             and len(mot) <= 2 * len(u), (c.name, n, u))
            # a nontrivial clopen class exists iff more than one component
            nontrivial = any(_clopen(c, m, n) for m in range(1, full))
            r.expect(nontrivial == (len(comps) > 1), (c.name, n, "clopen vs components"))
            # connected iff no clopen split inside the subcontinuum
            for X in _subsets(c):
                if not X:
                    continue
                sub = core.restrict(c, c.members(X))
                split = any(_clopen(sub, Y, n) for Y in range(1, sub.full_mask))
                r.expect(cn.is_connected_set(c, c.members(X), n) == (not split),
                         (c.name, n, c.members(X), "split"))
            # closed X is connected iff no pair of closed classes splits it
            closed = [m for m in _subsets(c) if c.figure_mask(m, n) == m]
            for X in closed:
                if not X:
                    continue
                split = any(X & ~(Y1 | Y2) == 0 and not (Y1 & Y2 & X) and Y1 & X and Y2 & X
                            for Y1 in closed for Y2 in closed)
                r.expect(cn.is_connected_set(c, c.members(X), n) == (not split),
                         (c.name, n, c.members(X), "closed split"))
            # corollary: one component puts every pair in a connected set
            if len(comps) == 1:
                for a, b in combinations(c.carrier, 2):
                    mot = cn.motion_between(c, a, b, n)
                    r.expect(mot.steps[0] == a and mot.steps[-1] == b
                             and cn.is_connected_set(c, cn.trace(mot), n), (c.name, n, a, b))
    return r


# -- criterion 6 ----------------------------------------------------------

def criterion_6(seed=DEFAULT_SEED) -> CheckResult:
    r = CheckResult(6, "nets, cluster positions, closed-class limits")
    rng = random.Random(seed)
    for c in shipped():
        R = [lv.pairs for lv in c.gen.levels]
        for n in range(c.depth + 1):
            for X in _subsets(c):
                xs = c.members(X)
                net = cn.maximal_net(c, xs, n)
                r.expect(net.maximal, (c.name, n, xs, "maximal"))
                r.expect(net.members <= xs, (c.name, n, xs, "inside X"))
                r.expect(not any((a, b) in R[n] for a, b in combinations(net.members, 2)),
                         (c.name, n, xs, "independent"))
                r.expect(all(any((a, y) in R[n] for a in net.members) for y in xs),
                         (c.name, n, xs, "covers"))
    small = [x for x in shipped() if len(x) <= 8] + _pool(rng, 10, range(2, 9), (1, 2, 3))
    for c in small + [shipped()[3]]:
        for n in range(c.depth + 1):
            r.expect(cn.largest_net_size(c, n) <= cn.net_bound(c, n), (c.name, n, "net bound"))
            netsize = len(cn.maximal_net(c, c.carrier, n).members)
            for _ in range(30):
                seq = [rng.choice(c.carrier) for _ in range(rng.randint(1, 12))]
                pos, count = cn.cluster_position(c, seq, n)
                r.expect(count >= ceil(len(seq) / netsize), (c.name, n, seq))
                r.expect(count == sum(1 for a in seq if c.related(pos, a, n)), (c.name, n, seq))
    for c in small:
        for n in range(c.depth + 1):
            for A in _subsets(c):
                As = c.ordered(c.members(A))
                closed = fg.is_closed(c, As, n)
                prefixes = [(a,) for a in As] + list(product(As, repeat=2))
                if closed:
                    for seq in prefixes:
                        for x in c.carrier:
                            if cn.converges_to(c, seq, x) >= n:
                                r.expect(core.monad(c, x) <= set(As), (c.name, n, As, seq, x))
                    for seq in prefixes + list(product(As, repeat=3))[:64]:
                        pos, _ = cn.cluster_position(c, seq, n)
                        r.expect(core.monad(c, pos) <= fg.closure(c, As, n),
                                 (c.name, n, As, seq, "comclo"))
                elif As:
                    hit = any(cn.converges_to(c, (a,), x) >= n and x not in As
                              for a in As for x in c.carrier)
                    r.expect(hit, (c.name, n, As, "escape witness"))
    return r


# -- criterion 7 ----------------------------------------------------------

def _rand_q(rng, span=50):
    return Fraction(rng.randint(-span * 8, span * 8), rng.randint(1, 24))


def criterion_7(seed=DEFAULT_SEED) -> CheckResult:
    r = CheckResult(7, "real line: field, lub, half-open intervals, Archimedes")
    rng = random.Random(seed)
    zero, one = rl.mon(0), rl.mon(1)
    for _ in range(10 ** 4):
        a, b, c = (rl.mon(_rand_q(rng)) for _ in range(3))
        v = lambda p: p.value  # noqa: E731
        checks = [
            v(a + b) == v(b + a), v(a * b) == v(b * a),
            v((a + b) + c) == v(a + (b + c)), v((a * b) * c) == v(a * (b * c)),
            v(a * (b + c)) == v(a * b + a * c),
            v(a + zero) == v(a), v(a * one) == v(a), v(a + (-a)) == 0,
            a.value == 0 or v(a * rl.inv(a)) == 1,
            rl.le(a, b) or rl.le(b, a),
            not (rl.le(a, b) and rl.le(b, a)) or v(a) == v(b),
            not (rl.le(a, b) and rl.le(b, c)) or rl.le(a, c),
            not rl.le(a, b) or rl.le(a + c, b + c),
            not (rl.le(zero, a) and rl.le(zero, b)) or rl.le(zero, a * b),
        ]
        r.expect(all(checks), (a, b, c))
    got = rl.lub([Fraction(1, 3)], 0, 1, 8)
    r.expect(got == Fraction(43, 128), ("lub 1/3", got))
    r.expect(got - Fraction(1, 3) == Fraction(1, 384) <= Fraction(1, 256), "lub gap")
    r.expect(rl.lub([Fraction(1, 3), Fraction(1, 2)], 0, 1, 8) == Fraction(1, 2), "lub 1/2")
    for _ in range(100):
        members = [_rand_q(rng, 5) for _ in range(rng.randint(1, 6))]
        top = max(members)
        a = top - Fraction(rng.randint(1, 40), rng.randint(1, 8))
        b = top + Fraction(rng.randint(0, 40), rng.randint(1, 8))
        T = rng.randint(0, 30)
        c = rl.lub(members, a, b, T)
        r.expect(top <= c and c - top <= (b - a) / 2 ** T, (members, a, b, T, c))
    agreed = excluded = 0
    for G in range(2, 6):
        grid = rl.RealGrid(G, 1, G - 1)
        pts = grid.points()
        for i, a in enumerate(pts):
            for b in pts[i + 1:]:
                for n in range(grid.L + 1):
                    sep = rl.endpoints_separated(grid, a, b, n)
                    for kind in ("half-open-left", "half-open-right"):
                        x, y = rl.half_open_masks(grid, a, b, kind, n)
                        if sep:
                            agreed += r.expect(x == y, (G, a, b, n, kind))
                        else:
                            excluded += 1
                            r.expect(x != y, (G, a, b, n, kind, "overlap case"))
    r.notes.append(f"half-open forms agree on {agreed} separated cases; "
                   f"{excluded} overlapping-endpoint cases differ as predicted")
    for q, want in ((Fraction(5, 3), 2), (Fraction(-7), 0), (Fraction(1000001, 1000), 1001)):
        r.expect(rl.archimedean_witness(q) == want, (q, "example"))
    for _ in range(1000):
        q = _rand_q(rng, 1000)
        oracle = max(0, ceil(q) + (1 if q.denominator == 1 else 0))
        r.expect(rl.archimedean_witness(q) == oracle, q)
    return r


# -- criterion 8 ----------------------------------------------------------

def criterion_8(seed=DEFAULT_SEED) -> CheckResult:
    r = CheckResult(8, "metric balls: identity at sufficient depth, openness at n >= G")
    for G in range(1, 6):
        scale = 2 ** G
        pts = tuple(Fraction(k, scale) for k in range(-scale, scale + 1))
        m = mt.absdiff_metric(pts)
        L = G + 1
        c = mt.continuum_from_metric(m, L)
        r.expect(core.validate(c.gen).ok, (G, "metric continuum validates"))
        for ia, a in enumerate(pts):
            for j in range(1, 2 * scale + 1):
                e = Fraction(j, scale)
                # oracle on integer grid indices: |k - ka| < j
                lo, hi = max(0, ia - j + 1), min(len(pts), ia + j)
                direct = frozenset(pts[lo:hi])
                depth = mt.sufficient_depth(m, a, e)
                got = mt.ball(m, a, e, depth)
                r.expect(got == direct, (G, a, e, depth))
                if depth:
                    r.expect(mt.ball(m, a, e, depth - 1) != direct, (G, a, e, "least depth"))
                r.expect(len(mt.ball(m, a, e, depth + 2)) == len(direct), (G, a, e, "deeper"))
                mask = ((1 << (hi - lo)) - 1) << lo
                rest = c.full_mask & ~mask
                for n in range(G, L + 1):
                    r.expect(c.figure_mask(rest, n) == rest, (G, a, e, n))
    g4 = mt.absdiff_metric(rl.RealGrid(4, 1, 3).points())
    want = frozenset(Fraction(k, 16) for k in range(-7, 8))
    r.expect(mt.ball(g4, 0, Fraction(1, 2), 6) == want, "ball example")
    r.expect(fg.is_open(mt.continuum_from_metric(g4, 4), want, 4), "open at level 4")
    return r


# -- criterion 9 ----------------------------------------------------------

def _all_tables(A, B):
    for vals in product(B.carrier, repeat=len(A)):
        yield mo.MorphismTable(A, B, dict(zip(A.carrier, vals)))


def _naive_preserves_connected(F, n1, n2):
    """Literal form: every connected u maps onto a connected image."""
    c = F.source
    for m in _subsets(c):
        u = c.members(m)
        if u and cn.is_connected_set(c, u, n1):
            if not cn.is_connected_set(F.target, {F(x) for x in u}, n2):
                return False
    return True


def _motions(c, n, max_len):
    frontier = [(x,) for x in c.carrier]
    while frontier:
        yield from frontier
        frontier = [s + (y,) for s in frontier if len(s) < max_len
                    for y in c.ordered(core.image(c, s[-1], n))]


def _continuity_case(r, F, literal=False, motions=False):
    A, B = F.source, F.target
    for n1 in range(A.depth + 1):
        for n2 in range(B.depth + 1):
            o = bool(mo.preimage_open_check(F, n1, n2))
            cl = bool(mo.preimage_closed_check(F, n1, n2))
            pc = bool(mo.preserves_connected(F, n1, n2))
            r.expect(o == cl == pc, (F.mapping, n1, n2, o, cl, pc))
            if literal:
                r.expect(pc == _naive_preserves_connected(F, n1, n2), (F.mapping, n1, n2))
            if motions:
                pushed = all(mo.push_motion(F, cn.Motion(s, n1), n2)
                             for s in _motions(A, n1, 5))
                r.expect(pushed == pc, (F.mapping, n1, n2, "motions"))
    mod, uni = mo.modulus(F), mo.uniform_from_pointwise(F)
    r.expect(mod == uni and mod.monotone(), (F.mapping, mod, uni))


def criterion_9(seed=DEFAULT_SEED) -> CheckResult:
    r = CheckResult(9, "morphisms: continuity equivalences, moduli, step function")
    rng = random.Random(seed)
    pool = [e2(), random_continuum(rng, 3, 2), random_continuum(rng, 4, 1),
            random_continuum(rng, 4, 2)]
    tables = 0
    for A in pool:
        for B in pool:
            for i, F in enumerate(_all_tables(A, B)):
                tables += 1
                _continuity_case(r, F, literal=i % 17 == 0, motions=i % 41 == 0)
    r.notes.append(f"{tables} complete-enumeration tables")
    for _ in range(200):
        A = random_continuum(rng, rng.randint(5, 8), rng.randint(1, 3))
        B = random_continuum(rng, rng.randint(3, 8), rng.randint(1, 3))
        F = mo.MorphismTable(A, B, {x: rng.choice(B.carrier) for x in A.carrier})
        _continuity_case(r, F)
        # sequence form: a certified modulus carries convergence depth across
        mod = mo.modulus(F)
        for _ in range(5):
            seq = [rng.choice(A.carrier) for _ in range(rng.randint(1, 6))]
            a = rng.choice(A.carrier)
            depth = cn.converges_to(A, seq, a)
            for k, j in enumerate(mod.levels):
                if j is not None and depth >= j:
                    r.expect(cn.converges_to(B, [F(x) for x in seq], F(a)) >= k,
                             (F.mapping, seq, a, k))
    src, tgt = rl.real_continuum(6, 1, 5), rl.real_continuum(6, 2, 4)
    double = mo.affine(src, tgt, 2)
    mod = mo.modulus(double)
    r.expect(mod.levels == (0, 2, 3, 4, 5), ("doubling modulus", mod.levels))
    r.expect(mo.uniform_from_pointwise(double) == mod, "doubling pointwise")
    r.expect(mo.delta_for(double, Fraction(1, 4)) == Fraction(1, 8), "doubling delta")
    grid = rl.RealGrid(6, 1, 4)
    step = mo.step_morphism(grid)
    L = grid.L
    below = Fraction(2 ** (grid.G - L) - 1, 2 ** grid.G)
    above = Fraction(1, 2 ** L)
    w = mo.preserves_connected(step, L, L)
    r.expect(not w and step(below) == 1 and step(above) == 0
             and step.source.related(below, above, L), ("step edge", w))
    m = cn.motion(step.source, [below, above], L)
    r.expect(not mo.push_motion(step, m, L), "step push")
    r.expect(mo.modulus(step)[1] is None, "step modulus")
    r.expect(not mo.epsilon_delta_check(step, [Fraction(1, 2)]), "step epsilon-delta")
    small = mo.step_morphism(rl.RealGrid(3, 1, 2))
    r.expect(not mo.preimage_open_check(small, 2, 2), "step preimage open")
    r.expect(not mo.preimage_closed_check(small, 2, 2), "step preimage closed")
    block = [x for x in step.source.carrier if abs(x) < above]
    r.expect(step(0) == 1 and step(Fraction(1, 2 ** (L + 1))) == 1 and step(Fraction(1, 2)) == 0
             and all(step(x) == step(0) for x in block), "monad-granularity smoothing")
    return r


CRITERIA = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
    6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9,
}

# module name -> criteria exercising it
MODULES = {
    "core": (1,), "figures": (2, 3, 4), "graded": (2,), "connectivity": (5, 6),
    "real": (7,), "metric": (8,), "morphism": (9,),
}


def run(names, seed=DEFAULT_SEED) -> list:
    """Run criteria selected by number, module name, or "all"."""
    picked = []
    for name in names:
        name = str(name)
        if name == "all":
            picked.extend(CRITERIA)
        elif name in MODULES:
            picked.extend(MODULES[name])
        elif name.isdigit() and int(name) in CRITERIA:
            picked.append(int(name))
        else:
            raise core.InputError(f"unknown suite {name!r}")
    return [CRITERIA[k](seed) for k in dict.fromkeys(picked)]


__all__ = ["CRITERIA", "CheckResult", "DEFAULT_SEED", "MODULES", "naive_violations", "run"]
