from fractions import Fraction
from itertools import product

import pytest

from astopo import connectivity as cn, morphism as mo, real as rl, samples
from astopo.core import InputError, PreconditionError

F = Fraction


@pytest.fixture(scope="module")
def doubling():
    return mo.affine(rl.real_continuum(6, 1, 4), rl.real_continuum(6, 2, 4), 2)


@pytest.fixture(scope="module")
def step():
    return mo.step_morphism(rl.RealGrid(6, 1, 4))


def naive_preserves(Fm, j, k):
    """Pair scan straight from the relation pair sets."""
    src, tgt = Fm.source.gen.levels[j].pairs, Fm.target.gen.levels[k].pairs
    return all((Fm(x), Fm(y)) in tgt for x, y in src)


def test_doubling_levels(doubling):
    for k in range(4):
        assert mo.preserves_at(doubling, k + 1, k)
    for k in range(1, 5):
        assert not mo.preserves_at(doubling, k, k)
        assert naive_preserves(doubling, k, k) is False


def test_modulus(doubling):
    mod = mo.modulus(doubling)
    # R_0 of the target is full, so level 0 needs nothing
    assert mod[0] == 0
    assert [mod[k] for k in range(1, 4)] == [2, 3, 4]
    assert mod[4] is None  # would need source level 5
    c = rl.real_continuum(6, 1, 5)
    wide = mo.affine(c, rl.real_continuum(6, 2, 4), 2)
    assert mo.modulus(wide).as_dict() == {0: 0, 1: 2, 2: 3, 3: 4, 4: 5}
    assert mo.modulus(wide) == mo.uniform_from_pointwise(wide)
    ident = mo.identity(rl.real_continuum(5, 1, 3))
    assert mo.modulus(ident).levels == (0, 1, 2, 3)


def test_step_table(step):
    assert step(0) == 1 and step(F(1, 2)) == 0
    assert step(F(1, 2 ** 5)) == 1
    assert mo.modulus(step)[1] is None


def test_step_breaks_every_form(step):
    L = 4
    verdict = mo.preserves_connected(step, L, L)
    assert not verdict
    x, y, fx, fy = verdict.witness
    assert step.source.related(x, y, L) and abs(fx - fy) == 1
    # the edge named by construction: largest point below 2**-L and its successor
    top = F(1, 2 ** L) - F(1, 2 ** 6)
    assert step.source.related(top, F(1, 2 ** L), L)
    assert (step(top), step(F(1, 2 ** L))) == (1, 0)
    m = cn.motion(step.source, (top, F(1, 2 ** L)), L)
    assert not mo.push_motion(step, m, L)
    assert not mo.epsilon_delta_check(step, [F(1, 2)])


def test_step_preimage_checks_fail_on_small_grid():
    s = mo.step_morphism(rl.RealGrid(3, 1, 2))
    for check in (mo.preimage_open_check, mo.preimage_closed_check):
        v = check(s, 2, 2)
        assert not v and v.witness is not None


def test_preimage_checks_on_identity_and_doubling():
    c = rl.real_continuum(3, 1, 2)
    ident = mo.identity(c)
    assert mo.preimage_open_check(ident, 2, 2) and mo.preimage_closed_check(ident, 2, 2)
    src = rl.real_continuum(3, 1, 2)
    dbl = mo.affine(src, rl.real_continuum(2, 2, 1), 2)
    assert mo.preimage_open_check(dbl, 2, 1) and mo.preimage_closed_check(dbl, 2, 1)
    with pytest.raises(InputError):
        mo.preimage_open_check(mo.identity(rl.real_continuum(4, 1, 3)), 1, 1)


def test_push_motion(doubling):
    src = doubling.source
    m = cn.motion_between(src, F(-1, 2), F(1, 2), 3)
    pushed = mo.push_motion(doubling, m, 2)
    assert cn.is_motion(doubling.target, pushed.steps, 2)
    const = mo.constant(src, src, 0)
    assert mo.push_motion(const, m, 4).steps == (0,) * len(m)
    with pytest.raises(PreconditionError):
        mo.push_motion(doubling, cn.Motion((F(0), F(1)), 4), 1)


def test_constant_and_edge_equivalence():
    for c in samples.shipped():
        const = mo.constant(c, c, c.carrier[0])
        for n in range(c.depth + 1):
            assert mo.preserves_connected(const, n, c.depth)


def test_edgewise_matches_pair_scan():
    E1 = samples.e1()
    tables = product(E1.carrier, repeat=len(E1.carrier))
    for values in list(tables)[::7]:
        Fm = mo.MorphismTable(E1, E1, dict(zip(E1.carrier, values)))
        for j, k in product(range(3), repeat=2):
            assert bool(mo.preserves_connected(Fm, j, k)) == naive_preserves(Fm, j, k)


def test_functions_equal_at():
    src = rl.real_continuum(6, 1, 4)
    tgt = rl.real_continuum(6, 2, 4)
    ident = mo.affine(src, tgt, 1)
    for k in range(4):
        shifted = mo.affine(src, tgt, 1, F(1, 2 ** (k + 1)))
        assert mo.functions_equal_at(ident, ident, k)
        assert mo.functions_equal_at(ident, shifted, k)
        assert not mo.functions_equal_at(ident, shifted, k + 2)
    s = mo.step_morphism(rl.RealGrid(6, 1, 4))
    zero = mo.constant(s.source, s.target, 0)
    assert all(not mo.functions_equal_at(s, zero, k) for k in range(1, 5))


def test_epsilon_delta(doubling):
    assert mo.delta_for(doubling, F(1, 4)) == F(1, 8)
    ident = mo.identity(rl.real_continuum(6, 1, 4))
    for j in range(5):
        assert mo.delta_for(ident, F(1, 2 ** j)) == F(1, 2 ** j)
    with pytest.raises(InputError):
        mo.delta_for(doubling, 0)


def test_table_must_be_total():
    E1 = samples.e1()
    with pytest.raises(InputError):
        mo.MorphismTable(E1, E1, {0: 0})
    with pytest.raises(InputError):
        mo.MorphismTable(E1, E1, {x: 9 for x in E1.carrier})


@pytest.mark.parametrize("text,ab", [("2*x+1/2", (2, F(1, 2))), ("x", (1, 0)), ("-x", (-1, 0)),
                                     ("3", (0, 3)), ("1/2*x-1", (F(1, 2), -1))])
def test_parse_affine(text, ab):
    assert mo.parse_affine(text) == ab


def test_parse_affine_rejects_garbage():
    for bad in ("2x", "x*x", "2*x1"):
        with pytest.raises(InputError):
            mo.parse_affine(bad)
