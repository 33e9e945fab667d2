from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from olie.algebra.errors import NotALieElementError, ZeroPolynomialError
from olie.algebra.lie import AssocPoly, LiePoly, bracket, expand, from_assoc, lie_sum
from olie.algebra.lyndon import enumerate_alsbw
from olie.algebra.order import MonomialOrder, OrderKind
from olie.algebra.scalar import Scalar
from olie.algebra.words import Word, parse_tree, parse_word


def lie(src, order):
    return LiePoly.parse(src, order)


def assoc(*terms):
    out = AssocPoly()
    for c, src in terms:
        out = out + AssocPoly.monomial(parse_word(src), c)
    return out


def test_expand():
    got = expand(parse_tree("(x (y z))"))
    assert got == assoc((1, "x y z"), (-1, "x z y"), (-1, "y z x"), (1, "z y x"))


def test_expand_operator():
    got = expand(parse_tree("(P((x y)) z)"))
    assert got == assoc((1, "P(x y) z"), (-1, "P(y x) z"), (-1, "z P(x y)"), (1, "z P(y x)"))


def test_from_assoc(dt):
    p = assoc((2, "x y x"), (-1, "y x x"), (-1, "x x y"))
    assert from_assoc(p, dt) == lie("-1 * (x (x y))", dt)


def test_from_assoc_rejects_non_lie(dt):
    with pytest.raises(NotALieElementError):
        from_assoc(assoc((1, "x y")), dt)


def test_bracket(dt):
    xy, x = lie("(x y)", dt), lie("x", dt)
    assert bracket(xy, x) == lie("-1 * (x (x y))", dt)
    assert xy.bracket(x) == -x.bracket(xy)
    assert bracket(x, x).is_zero


def test_jacobi(dl):
    x, y, z = lie("x", dl), lie("y", dl), lie("z", dl)
    total = x.bracket(y.bracket(z)) + y.bracket(z.bracket(x)) + z.bracket(x.bracket(y))
    assert total.is_zero


def test_bracket_with_operator(dt):
    got = lie("P(x)", dt).bracket(lie("y", dt))
    assert got == LiePoly.basis(parse_tree("(P(x) y)"), dt)
    assert got.leading() == (parse_word("P(x) y"), 1)


def test_parse_normalizes(dt):
    f = lie("2 * (x y) + (y x)", dt)
    assert f == lie("(x y)", dt)
    assert lie("0", dt).is_zero
    g = lie("1/2 * (x (y z)) + 1/2 * ((y z) x)", dt)
    assert g.is_zero


def test_leading_and_monic(dl):
    f = lie("3 * (x y) + -1 * (x (x y))", dl)
    assert f.leading() == (parse_word("x x y"), -1)
    g = f.make_monic()
    assert g.leading()[1] == 1
    assert g.coefficient(parse_tree("(x y)")) == -3


def test_zero_has_no_leading(dt):
    with pytest.raises(ZeroPolynomialError):
        LiePoly.zero(dt).leading()
    with pytest.raises(ZeroPolynomialError):
        LiePoly.zero(dt).make_monic()


def test_op_apply(dt):
    f = lie("(x y)", dt).op_apply()
    assert f.leading_word == parse_word("P(x y)")
    assert f.deg == 3


def test_basis_rejects_other_trees(dt):
    with pytest.raises(NotALieElementError):
        LiePoly.basis(parse_tree("(y x)"), dt)


def test_parametric_coefficients(dt):
    a = Scalar.parameter()
    f = lie("(x y)", dt) * (a + 1) + lie("(x (x y))", dt)
    assert not f.is_constant
    g = f.specialize(Fraction(-1))
    assert g == lie("(x (x y))", dt)
    assert g.is_constant


def test_orders_do_not_mix(dt, dl):
    with pytest.raises(ValueError):
        lie("x", dt) + lie("x", dl)


def test_str_lists_greatest_first(dt):
    f = lie("(x y) + 2 * (x (x y))", dt)
    assert str(f) == "2 * (x (x y)) + 1 * (x y)"


def test_of_word():
    order = MonomialOrder(OrderKind.DT)
    assert LiePoly.of_word(Word.of("x", "z", "y"), order) == lie("((x z) y)", order)


_WORDS = enumerate_alsbw(MonomialOrder(OrderKind.DT), 3, max_odeg=1)


def lie_polys(order):
    term = st.tuples(st.integers(-3, 3), st.sampled_from(_WORDS))
    return st.lists(term, min_size=1, max_size=3).map(
        lambda terms: lie_sum((LiePoly.of_word(w, order) * c for c, w in terms), order))


@settings(max_examples=50, deadline=None)
@given(lie_polys(MonomialOrder(OrderKind.DT)), lie_polys(MonomialOrder(OrderKind.DT)),
       lie_polys(MonomialOrder(OrderKind.DT)))
def test_lie_axioms(f, g, h):
    assert bracket(f, g) == -bracket(g, f)
    assert (bracket(f, bracket(g, h)) + bracket(g, bracket(h, f)) + bracket(h, bracket(f, g))).is_zero
    assert from_assoc(bracket(f, g).expand(), f.order) == bracket(f, g)
