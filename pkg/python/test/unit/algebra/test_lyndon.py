import pytest

from olie.algebra.errors import NotALyndonWordError
from olie.algebra.lyndon import (enumerate_alsbw, is_alsbw, is_alsw, is_nlsbw, is_nlsw, lyndon_factorization,
                                 nlsbw_of, standard_split)
from olie.algebra.order import MonomialOrder, OrderKind
from olie.algebra.words import Alphabet, Word, parse_tree, parse_word


@pytest.mark.parametrize("src, expected", [
    ("x", True),
    ("x y", True),
    ("y x", False),
    ("x x y", True),
    ("x y x", False),
    ("x y y", True),
    ("x z y", True),
    ("x y x y", False),
    ("P(x) y", True),
    ("y P(x)", False),
])
def test_is_alsw(dt, src, expected):
    assert is_alsw(parse_word(src).primes, dt.prime_key) is expected


def test_alsbw_checks_payloads(dt):
    assert is_alsbw(parse_word("P(x y) z"), dt)
    assert not is_alsbw(parse_word("P(y x) z"), dt)


def test_standard_split(dt):
    assert standard_split(parse_word("x z y").primes, dt.prime_key) == 2
    assert standard_split(parse_word("x x y").primes, dt.prime_key) == 1
    with pytest.raises(NotALyndonWordError):
        standard_split(parse_word("x").primes, dt.prime_key)


@pytest.mark.parametrize("src, tree", [
    ("x x y", "(x (x y))"),
    ("P(x) y", "(P(x) y)"),
    ("P(x z y)", "P(((x z) y))"),
    ("x y z", "(x (y z))"),
    ("x y x y y", "((x y) ((x y) y))"),
])
def test_nlsbw_of(dt, src, tree):
    assert str(nlsbw_of(parse_word(src), dt)) == tree


def test_nlsbw_of_rejects(dt):
    with pytest.raises(NotALyndonWordError):
        nlsbw_of(parse_word("y x"), dt)


@pytest.mark.parametrize("src, expected", [
    ("(y x)", False),
    ("((x y) z)", False),
    ("(x (y z))", True),
    ("((x z) y)", True),
    ("x", True),
])
def test_is_nlsw(dt, src, expected):
    assert is_nlsw(parse_tree(src), dt) is expected


def test_is_nlsbw_inspects_operators(dt):
    assert is_nlsbw(parse_tree("(P((x y)) z)"), dt)
    assert not is_nlsbw(parse_tree("(P((y x)) z)"), dt)


def test_lyndon_factorization(dt):
    factors = lyndon_factorization(parse_word("y x y z x").primes, dt.prime_key)
    assert [str(Word(f)) for f in factors] == ["y", "x y z", "x"]


def test_enumerate_letters_only():
    order = MonomialOrder(OrderKind.DT, Alphabet(("x", "y")))
    found = enumerate_alsbw(order, 3, max_odeg=0)
    assert {str(w) for w in found} == {"x", "y", "x y", "x x y", "x y y"}
    assert str(found[0]) == "x x y"


def test_enumerate_with_operator(dl):
    found = enumerate_alsbw(dl, 3, max_dep=1)
    names = {str(w) for w in found}
    assert {"P(x)", "P(x y)", "P(x) y", "x y z"} <= names
    assert "P(P(x))" not in names
    for w in found:
        assert is_alsbw(w, dl)
        assert w.deg <= 3 and w.dep <= 1
