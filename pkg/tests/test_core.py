import pytest

from astopo import core, real as rl, samples
from astopo.core import InputError, Relation

from conftest import image_oracle


def test_e1_is_valid(E1):
    assert core.validate(E1.gen).ok


def test_missing_reverse_pair_reports_symmetry():
    C = (0, 1, 2)
    gen = core.generating_sequence(C, [core.full_relation(C),
                                       Relation(1, {(0, 0), (1, 1), (2, 2), (0, 1)})])
    rep = core.validate(gen)
    assert [(v.condition, v.level, v.witness) for v in rep.violations] == [("symmetric", 1, (0, 1))]


def test_paper_literal_real_family_breaks_composition():
    c = rl.paper_literal_family([0, 8, 48], 4)
    comp = core.validate(c.gen).by_condition("composition")
    assert (3, (0, 48, 8)) in [(v.level, v.witness) for v in comp]
    # the triple really is a counterexample
    assert rl.near_literal(0, 48, 4) and rl.near_literal(48, 8, 4)
    assert not rl.near_literal(0, 8, 3)


def test_nested_and_full_base_checks():
    C = (0, 1)
    gen = core.generating_sequence(C, [Relation(0, {(0, 0), (1, 1)}),
                                       core.full_relation(C, 1)])
    conds = {v.condition for v in core.validate(gen).violations}
    assert {"full-base", "nested"} <= conds


@pytest.mark.parametrize("x,n,expected", [(1, 2, {0, 1, 2}), (0, 0, set(range(5))),
                                          (4, 1, {2, 3, 4})])
def test_image_examples(E1, x, n, expected):
    assert core.image(E1, x, n) == expected == image_oracle(E1, {x}, n)


def test_level_figure_examples(E1):
    assert core.level_figure(E1, {0}, 2) == {0, 1}
    assert core.level_figure(E1, set(), 1) == frozenset()
    assert core.level_figure(E1, {0, 4}, 1) == set(range(5))


def test_monad_examples(E1, E1B):
    assert core.monad(E1, 2) == {2}
    assert core.monad(E1B, 0) == {0, 1}


def test_monad_on_real_grid():
    g = rl.RealGrid(4, 1, 3)
    c = rl.grid_continuum(g)
    c = core.Continuum(c.gen, rl.monad_partition(g), c.metric, "grid")
    # oracle: the cell [-1/16, 1/16) of the G=4 grid
    assert core.monad(c, 0) == {x for x in g.points() if -rl.Fraction(1, 16) <= x < rl.Fraction(1, 16)}


def test_total_disconnectedness(E1, E2):
    assert not core.is_totally_disconnected(E1)
    assert core.is_totally_disconnected(E2)
    assert core.is_totally_disconnected(samples.nested8())


def test_partition_must_refine_finest_level():
    with pytest.raises(InputError):
        samples.e1(limit=[{0, 2}, {1}, {3}, {4}])
    with pytest.raises(InputError):
        samples.e1(limit=[{0}, {1}])


def test_unknown_id_and_bad_level(E1):
    with pytest.raises(InputError):
        core.image(E1, 9, 1)
    with pytest.raises(InputError):
        core.image(E1, 0, 3)
