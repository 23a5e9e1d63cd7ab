import pytest

from astopo import core, graded as gr
from astopo.core import InputError


def pi_image(c, x):
    return gr.image_family(c, x)


def test_union_of_image_families(E1):
    u = gr.union(pi_image(E1, 0), pi_image(E1, 4))
    assert u.family == (frozenset(range(5)), frozenset({0, 1, 2, 3, 4}), frozenset({0, 1, 3, 4}))
    a = pi_image(E1, 0)
    assert gr.intersect(a, a) == a


def test_sigma_union_is_pointwise(E1):
    a, b = gr.complement(pi_image(E1, 0)), gr.complement(pi_image(E1, 4))
    u = gr.union(a, b)
    assert u.kind is gr.Kind.SIGMA
    assert u.family == tuple(x | y for x, y in zip(a.family, b.family))


def test_complement(E1):
    a = pi_image(E1, 0)
    comp = gr.complement(a)
    assert comp.kind is gr.Kind.SIGMA
    assert comp.family == (frozenset(), frozenset({3, 4}), frozenset({2, 3, 4}))
    assert gr.complement(comp) == a
    assert gr.limit(comp) == {2, 3, 4}


def test_eval_and_limit(E1):
    fam = gr.closure_family(E1, {0})
    assert gr.eval_at(fam, 0) == set(E1.carrier)
    assert gr.limit(pi_image(E1, 0)) == {0, 1}
    with pytest.raises(InputError):
        gr.eval_at(fam, 3)


def test_product_and_domain(E1):
    C = frozenset(E1.carrier)
    a = gr.GradedClass(gr.Kind.PI, [{1}, {1}, {1}], C)
    b = gr.GradedClass(gr.Kind.PI, [{2}, {2}, {2}], C)
    p = gr.product(a, b)
    assert p.family == (frozenset({(1, 2)}),) * 3
    d = gr.domain(gr.product(pi_image(E1, 0), pi_image(E1, 4)))
    assert d.family == pi_image(E1, 0).family
    empty = gr.GradedClass(gr.Kind.PI, [set(), set()], {(0, 0)})
    assert gr.domain(empty).family == (frozenset(), frozenset())


def test_shape_errors(E1):
    with pytest.raises(InputError):
        gr.GradedClass(gr.Kind.PI, [{0}, {0, 1}], set(E1.carrier))
    with pytest.raises(InputError):
        gr.union(pi_image(E1, 0), gr.complement(pi_image(E1, 0)))
    with pytest.raises(InputError):
        gr.domain(pi_image(E1, 0))


def test_graded_idempotence_on_e1(E1):
    for x in E1.carrier:
        for n in range(1, 3):
            once = core.level_figure(E1, {x}, n)
            assert core.level_figure(E1, once, n) <= core.level_figure(E1, {x}, n - 1)
