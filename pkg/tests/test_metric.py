from fractions import Fraction

import pytest

from astopo import core, figures as fg, metric as mt, real as rl
from astopo.core import InputError

F = Fraction


def table(C, d):
    return mt.MetricTable(tuple(C), {(x, y): (0 if x == y else d.get((x, y), d.get((y, x))))
                                     for x in C for y in C})


def test_validate_metric_examples():
    assert mt.validate_metric(mt.metric_from_function(range(5), lambda x, y: abs(x - y))).ok
    bad = table((0, 1), {(0, 1): 0})
    assert [v.condition for v in mt.validate_metric(bad).violations] == ["identity"]
    tri = table((0, 1, 2), {(0, 2): 5, (0, 1): 1, (1, 2): 1})
    v = mt.validate_metric(tri).by_condition("triangle")
    assert v and v[0].witness == (0, 1, 2)


def test_ball_examples():
    m = mt.absdiff_metric(rl.RealGrid(4, 1, 3).points())
    assert mt.ball(m, 0, F(1, 2), 6) == {x for x in m.carrier if abs(x) <= F(7, 16)}
    assert mt.ball(m, 0, F(1, 2), 0) == frozenset()
    assert mt.ball(m, 0, 3, 0) == {x for x in m.carrier if abs(x) < 2}


def test_ball_reaches_open_ball():
    m = mt.absdiff_metric(rl.RealGrid(4, 1, 3).points())
    for a in m.carrier[::3]:
        for k in range(1, 17):
            e = F(k, 16)
            d = mt.sufficient_depth(m, a, e)
            assert mt.ball(m, a, e, d) == mt.open_ball(m, a, e)
            if d:
                assert mt.ball(m, a, e, d - 1) != mt.open_ball(m, a, e)


def test_metric_continuum():
    m = mt.absdiff_metric(rl.RealGrid(4, 1, 3).points())
    c = mt.continuum_from_metric(m, 4)
    assert core.validate(c.gen).ok
    assert c.nbr(0)[0] == c.full_mask
    assert fg.is_open(c, mt.open_ball(m, 0, F(1, 2)), 4)


def test_paper_literal_ball_family_not_reflexive():
    m = mt.absdiff_metric(range(4))
    rep = core.validate(mt.paper_literal_ball_family(m, F(1, 2), 2).gen)
    assert rep.by_condition("reflexive")[0].level == 0


def test_bad_ball_arguments():
    m = mt.absdiff_metric(range(3))
    with pytest.raises(InputError):
        mt.ball(m, 0, 0, 2)
    with pytest.raises(InputError):
        mt.ball(m, 7, 1, 2)
    with pytest.raises(InputError):
        mt.MetricTable((0, 1), {(0, 0): 0, (0, 1): 0.5, (1, 0): 0.5, (1, 1): 0})
