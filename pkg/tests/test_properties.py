"""Randomized laws checked with hypothesis against small independent oracles."""
import random
from fractions import Fraction
from itertools import product

from hypothesis import given, settings, strategies as st

from astopo import connectivity as cn, core, figures as fg, metric as mt, morphism as mo
from astopo import real as rl, samples, spec_io

from conftest import image_oracle

seeds = st.integers(0, 10 ** 6)
fractions = st.fractions(min_value=-50, max_value=50, max_denominator=60)


def small_continuum(seed, size=None, depth=None):
    rng = random.Random(seed)
    size = size or rng.randint(1, 7)
    depth = depth or rng.randint(1, 3)
    return samples.random_continuum(rng, size, depth, density=rng.uniform(0.05, 0.5))


@st.composite
def continuum_and_class(draw):
    c = small_continuum(draw(seeds))
    X = draw(st.sets(st.sampled_from(c.carrier)))
    n = draw(st.integers(0, c.depth))
    return c, frozenset(X), n


def naive_ok(gen):
    C = gen.carrier
    R = [lv.pairs for lv in gen.levels]
    if any((x, x) not in r or any((y, x) not in r for x, y in r) for r in R for x in C):
        return False
    if any((x, y) not in R[0] for x in C for y in C):
        return False
    for n in range(len(R) - 1):
        if not R[n + 1] <= R[n]:
            return False
        for x, y, z in product(C, repeat=3):
            if (x, y) in R[n + 1] and (y, z) in R[n + 1] and (x, z) not in R[n]:
                return False
    return True


@given(seeds)
def test_validator_agrees_with_triple_scan(seed):
    rng = random.Random(seed)
    C = tuple(range(rng.randint(1, 5)))
    levels = [core.Relation(0, {(x, y) for x in C for y in C if rng.random() < 0.9})]
    for n in (1, 2):
        levels.append(core.Relation(n, {(x, y) for x in C for y in C if rng.random() < 0.5}))
    gen = core.generating_sequence(C, levels)
    assert core.validate(gen).ok == naive_ok(gen)


@given(seeds)
def test_random_continua_are_valid(seed):
    assert core.validate(small_continuum(seed).gen).ok


@given(continuum_and_class())
def test_closure_laws(args):
    c, X, n = args
    C = frozenset(c.carrier)
    cl = fg.closure(c, X, n)
    assert cl == image_oracle(c, X, n)
    assert X <= cl
    assert fg.interior(c, X, n) <= X
    assert fg.closure(c, C - X, n) == C - fg.interior(c, X, n)
    if n:
        assert fg.closure(c, cl, n) <= fg.closure(c, X, n - 1)
    hull = fg.closed_hull(c, X, n)
    assert fg.is_closed(c, hull, n) and X <= hull


@given(continuum_and_class(), st.data())
def test_closure_monotone_and_additive(args, data):
    c, X, n = args
    Y = frozenset(data.draw(st.sets(st.sampled_from(c.carrier))))
    assert fg.closure(c, X | Y, n) == fg.closure(c, X, n) | fg.closure(c, Y, n)
    if X <= Y:
        assert fg.closure(c, X, n) <= fg.closure(c, Y, n)


@settings(max_examples=40)
@given(seeds)
def test_open_family_is_a_topology(seed):
    c = small_continuum(seed)
    for n in range(c.depth + 1):
        fam = fg.open_family(c, n)
        assert frozenset() in fam and frozenset(c.carrier) in fam
        for U in fam:
            assert fg.is_open(c, U, n)
            for V in fam:
                assert U & V in fam and U | V in fam


@given(continuum_and_class())
def test_components_partition_and_connect(args):
    c, X, n = args
    comps = cn.components(c, X, n)
    assert frozenset().union(*comps) == X if comps else not X
    assert sum(map(len, comps)) == len(X)
    for u in comps:
        m = cn.motion_through(c, u, n)
        assert cn.is_motion(c, m.steps, n) and cn.trace(m) == u


@given(seeds, st.integers(0, 3))
def test_net_is_maximal_and_independent(seed, n):
    c = small_continuum(seed, depth=3)
    net = cn.maximal_net(c, c.carrier, n)
    assert net.maximal and cn.is_net(c, net.members, n)
    covered = fg.closure(c, net.members, n)
    assert covered == frozenset(c.carrier)


@given(fractions, fractions, fractions)
def test_field_axioms(a, b, c):
    p, q, r = rl.mon(a), rl.mon(b), rl.mon(c)
    assert rl.add(rl.add(p, q), r).value == rl.add(p, rl.add(q, r)).value
    assert rl.mul(p, rl.add(q, r)).value == rl.add(rl.mul(p, q), rl.mul(p, r)).value
    assert rl.add(p, rl.neg(p)).value == 0
    if a:
        assert rl.mul(p, rl.inv(p)).value == 1
    if rl.le(p, q):
        assert rl.le(rl.add(p, r), rl.add(q, r))


@given(st.lists(fractions, min_size=1, max_size=6), st.integers(0, 12),
       st.fractions(min_value=Fraction(1, 100), max_value=10))
def test_lub_bounds(members, T, spread):
    top = max(members)
    a, b = top - spread, top + spread
    c = rl.lub(members, a, b, T)
    assert all(m <= c for m in members)
    assert c - top <= (b - a) / 2 ** T


@settings(max_examples=30)
@given(st.lists(st.integers(-20, 20), min_size=1, max_size=8, unique=True), st.integers(1, 4))
def test_metric_continuum_composition(points, L):
    m = mt.absdiff_metric([Fraction(p, 8) for p in points])
    assert core.validate(mt.continuum_from_metric(m, L).gen).ok


@settings(max_examples=60)
@given(seeds, seeds)
def test_continuity_forms_agree(s1, s2):
    A, B = small_continuum(s1, size=3, depth=2), small_continuum(s2, size=3, depth=2)
    rng = random.Random(s1 ^ s2)
    Fm = mo.MorphismTable(A, B, {x: rng.choice(B.carrier) for x in A.carrier})
    for n1, n2 in product(range(3), repeat=2):
        verdicts = {bool(mo.preserves_connected(Fm, n1, n2)),
                    bool(mo.preimage_open_check(Fm, n1, n2)),
                    bool(mo.preimage_closed_check(Fm, n1, n2))}
        assert len(verdicts) == 1


@settings(max_examples=40)
@given(seeds)
def test_spec_round_trip_on_random_continua(seed):
    c = small_continuum(seed)
    levels = [("edges", c.gen.levels[n].pairs) for n in range(c.depth + 1)]
    spec = spec_io.SpaceSpec("random", c.carrier, depth=c.depth, levels=tuple(levels))
    again = spec_io.parse_text(spec_io.dumps(spec))
    built = spec_io.build(again)
    assert all(built.continuum.nbr(n) == c.nbr(n) for n in range(c.depth + 1))
