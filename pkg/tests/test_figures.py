from itertools import combinations

import pytest

from astopo import core, figures as fg, samples
from astopo.core import InputError

from conftest import image_oracle


def test_figure_examples(E1, E1B):
    assert fg.figure_of(E1, {0, 3}) == {0, 3}
    assert fg.figure_of(E1B, {0}) == {0, 1}
    assert fg.figure_of(E1B, E1B.carrier) == set(E1B.carrier)
    assert fg.is_figure(E1B, E1B.carrier)
    assert not fg.is_figure(E1B, {0})
    assert fg.is_figure(E1B, {0, 1, 2})


def test_separable_examples(E1):
    ans = fg.separable(E1, {0}, {4})
    assert ans and ans.level == 2
    assert not fg.separable(E1, {0}, {2})
    assert not fg.separable(E1, {1, 3}, {1, 3})


def test_closure_and_interior_examples(E1, E2):
    assert fg.closure(E1, {0}, 2) == {0, 1}
    assert fg.closure(E1, {0}, 0) == set(E1.carrier)
    assert fg.closure(E2, {0, 1}, 2) == {0, 1}
    assert fg.interior(E1, {0, 1, 2}, 2) == {0, 1}
    assert fg.interior(E1, E1.carrier, 1) == set(E1.carrier)
    assert fg.interior(E1, {2}, 2) == frozenset()


def test_open_closed_examples(E1, E2):
    assert fg.is_clopen(E2, {0, 1}, 2)
    assert not fg.is_closed(E1, {0, 1}, 2)
    for c in (E1, E2):
        for n in range(c.depth + 1):
            assert fg.is_clopen(c, set(), n) and fg.is_clopen(c, c.carrier, n)


def test_hull_and_neighbourhood(E1, E2):
    assert fg.closed_hull(E1, {0}, 2) == set(E1.carrier)
    assert fg.closed_hull(E2, {0}, 2) == {0, 1}
    assert fg.closed_hull(E2, {10, 11}, 2) == {10, 11}
    assert fg.is_neighborhood(E1, {0, 1, 2}, 1, 2)
    assert not fg.is_neighborhood(E1, {0, 1, 2}, 2, 2)
    assert fg.is_neighborhood(E1, E1.carrier, 3, 2)


def test_open_family_examples(E1, E2):
    C = frozenset(E2.carrier)
    assert fg.open_family(E2, 2) == {frozenset(), frozenset({0, 1}), frozenset({10, 11}), C}
    assert fg.open_family(E1, 0) == {frozenset(), frozenset(E1.carrier)}


def test_open_family_of_totally_disconnected_has_all_block_unions():
    c = samples.nested8()
    blocks = [frozenset({2 * i, 2 * i + 1}) for i in range(4)]
    fam = fg.open_family(c, 3)
    for r in range(5):
        for pick in combinations(blocks, r):
            assert frozenset().union(*pick) in fam


def test_open_family_size_limit():
    c = samples.random_continuum(__import__("random").Random(1), 21, 1)
    with pytest.raises(InputError):
        fg.open_family(c, 1)


def test_duality_exhaustive_on_e1(E1):
    C = frozenset(E1.carrier)
    for r in range(6):
        for X in map(frozenset, combinations(E1.carrier, r)):
            for n in range(3):
                assert fg.closure(E1, C - X, n) == C - fg.interior(E1, X, n)
                assert fg.closure(E1, X, n) == image_oracle(E1, X, n)


def test_monads_discernible(E1B, E2):
    clusters = core.Continuum(E2.gen, [{0, 1}, {10, 11}])
    assert fg.monads_discernible(clusters) == (True, None)
    # {0,1} reaches 2 at level 1, so the blocks only part at L
    ok, pair = fg.monads_discernible(E1B)
    assert not ok and set(pair[0]) == {0, 1} and set(pair[1]) == {2}


def test_closure_is_figure_under_identity_partition():
    for c in samples.shipped():
        if c.limit is not None and any(len(b) > 1 for b in c.limit):
            continue
        for r in range(len(c) + 1):
            for X in combinations(c.carrier, min(r, 3)):
                for n in range(c.depth + 1):
                    assert fg.is_figure(c, fg.closure(c, X, n))


def test_closure_figure_fails_literally_with_blocks(E1B):
    # {1} reaches 3 at level 1 but not 4, which shares 3's block
    assert fg.closure(E1B, {1}, 1) == {0, 1, 2, 3}
    assert not fg.is_figure(E1B, fg.closure(E1B, {1}, 1))
    assert fg.figure_of(E1B, fg.closure(E1B, {1}, 2)) <= fg.closure(E1B, {1}, 1)


def test_literal_interior_family_is_not_union_closed(E1):
    # interiors of all classes, taken literally, miss some unions
    C = E1.carrier
    lit = {fg.interior(E1, X, 2) for r in range(6) for X in combinations(C, r)}
    assert any(U | V not in lit for U in lit for V in lit)
    fam = fg.open_family(E1, 2)
    assert all(U | V in fam for U in fam for V in fam)
