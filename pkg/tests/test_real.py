import random
from fractions import Fraction
from math import ceil

import pytest

from astopo import core, real as rl
from astopo.core import InputError

F = Fraction


def test_rationals_parse_exactly():
    assert rl.parse_rational("6/8") == F(3, 4)
    assert rl.format_rational(F(6, 8)) == "3/4"
    assert rl.format_rational(4) == "4"
    with pytest.raises(InputError):
        rl.parse_rational("0.5")
    with pytest.raises(InputError):
        rl.parse_rational(0.5)


def test_real_continuum_validates():
    assert core.validate(rl.real_continuum(4, 2, 3).gen).ok


def test_far_branch():
    c = rl.real_continuum(4, 2, 3)
    # |x| <= 2 never exceeds 2**n strictly for n >= 1
    for n in range(1, 4):
        for x in c.carrier:
            assert abs(x) <= 2 ** n or n == 0
    big = rl.real_continuum(5, 40, 4)
    far = [x for x in big.carrier if x > 16]
    assert far and all(big.related(x, y, 4) for x in far[::37] for y in far[::41])


def test_arithmetic_examples():
    assert rl.add(rl.mon("1/2"), rl.mon("1/3")).value == F(5, 6)
    assert rl.mul(rl.mon("2/3"), rl.mon("3/4")).value == F(1, 2)
    assert rl.le(rl.mon(1), rl.mon(2)) and not rl.le(rl.mon(2), rl.mon(1))
    for n in range(1, 6):
        assert rl.real_eq(0, F(1, 2 ** (n + 1)), n)
        assert not rl.real_eq(0, F(1, 2 ** n), n)
    with pytest.raises(InputError):
        rl.inv(rl.mon(0))
    assert rl.inv(rl.mon("2/3")).value == F(3, 2)


@pytest.mark.parametrize("q,k", [("5/3", 2), ("-7", 0), ("1000001/1000", 1001), ("3", 4)])
def test_archimedean_witness(q, k):
    assert rl.archimedean_witness(q) == k


def test_archimedean_against_ceiling():
    rng = random.Random(5)
    for _ in range(300):
        q = F(rng.randint(-500, 500), rng.randint(1, 40))
        k = rl.archimedean_witness(q)
        assert k > q and k >= 0 and (k == 0 or k - 1 <= q)
        assert k == max(0, ceil(q) + (q.denominator == 1))


def test_lub_examples():
    assert rl.lub(["1/3", "1/2"], 0, 1, 8) == F(1, 2)
    c = rl.lub(["1/3"], 0, 1, 8)
    assert c == F(43, 128) and c - F(1, 3) == F(1, 384) <= F(1, 256)
    for T in range(1, 10):
        c = rl.lub(["5/7"], F(5, 7) - 1, F(5, 7) + 1, T)
        assert F(5, 7) <= c <= F(5, 7) + F(2, 2 ** T)


def test_lub_preconditions():
    with pytest.raises(rl.LubError):
        rl.lub([], 0, 1, 3)
    with pytest.raises(rl.LubError):
        rl.lub(["2"], 0, 1, 3)
    with pytest.raises(rl.LubError):
        rl.lub(["1/2"], "1/2", 1, 3)


def test_interval_examples():
    g = rl.RealGrid(4, 2, 3)
    opened = rl.interval(g, 0, 1, "open", 3)
    assert opened == {x for x in g.points() if F(1, 8) <= x <= F(7, 8)}
    closed = rl.interval(g, 0, 1, "closed", 3)
    assert closed == {x for x in g.points() if F(-1, 16) <= x <= F(17, 16)}
    A, B = rl.half_open_forms(g, 0, 1, "half-open-right", 3)
    assert A == B


def test_interval_matches_dense_oracle():
    # the raw class {a < q < b} is dense: its level-n closure is the
    # 2**-n widening and its interior the 2**-n shrinking
    for G, M, L in ((3, 1, 2), (4, 1, 3), (5, 1, 3)):
        g = rl.RealGrid(G, M, L)
        pts = g.points()
        for a in pts[::3]:
            for b in pts[::5]:
                if not a < b:
                    continue
                for n in range(1, L + 1):
                    r = F(1, 2 ** n)
                    assert rl.raw_closure(g, a, b, n) == {x for x in pts if a - r < x < b + r}
                    assert rl.raw_interior(g, a, b, n) == {x for x in pts if a + r <= x <= b - r}


def test_half_open_forms_need_separated_endpoints():
    g = rl.RealGrid(3, 1, 2)
    assert not rl.endpoints_separated(g, 0, F(1, 8), 2)
    A, B = rl.half_open_forms(g, 0, F(1, 8), "half-open-left", 2)
    assert A != B


def test_grid_validation():
    with pytest.raises(InputError):
        rl.RealGrid(3, 1, 3)
    g = rl.RealGrid(4, 1, 3)
    assert g.snap(F(1, 33)) == F(0) and g.snap(5) == 1
    assert g.contains(F(3, 16)) and not g.contains(F(1, 32))
