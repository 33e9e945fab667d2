from fractions import Fraction

import pytest

from olie.algebra.errors import ScalarZeroDivisionError, SingularParameterError, WordSyntaxError
from olie.algebra.scalar import Scalar

a = Scalar.parameter()


def test_rational_arithmetic():
    assert Scalar(Fraction(1, 2)) + Scalar(Fraction(1, 3)) == Fraction(5, 6)
    assert Scalar(3) * Fraction(1, 3) == 1
    assert -Scalar(2) - 1 == -3
    assert Scalar(1) / 4 == Fraction(1, 4)


def test_parameter_promotes_and_demotes():
    inv = Scalar(1) / (a + 1)
    assert not inv.is_constant
    assert str(inv) == "(1)/(a + 1)"
    one = (a / (a + 1)) * ((a + 1) / a)
    assert one.is_constant
    assert one == 1
    assert (a - a).is_zero


def test_eval_at():
    assert (Scalar(1) / (a + 1)).eval_at(1) == Fraction(1, 2)
    assert a.eval_at(Fraction(3, 7)) == Fraction(3, 7)
    assert Scalar(5).eval_at(2) == 5


def test_eval_at_pole():
    with pytest.raises(SingularParameterError) as e:
        (a / (a + 1)).eval_at(-1)
    assert e.value.value == -1
    assert "-1" in str(e.value)


def test_division_by_zero():
    with pytest.raises(ScalarZeroDivisionError):
        Scalar(1) / 0
    with pytest.raises(ZeroDivisionError):
        a / (a - a)


def test_canonical_form_has_monic_denominator():
    s = Scalar.parse("(2*a + 2)/(4*a)")
    num, den = s.canonical()
    assert den == ((1, Fraction(1)), )
    assert num == ((1, Fraction(1, 2)), (0, Fraction(1, 2)))
    assert s == Scalar.parse("(a + 1)/(2*a)")
    assert hash(s) == hash(Scalar.parse("(a + 1)/(2*a)"))


@pytest.mark.parametrize("src", ["3/4", "-2", "a", "(a + 1)/(a - 2)", "-(a + 1)", "(1)/(a + 1)"])
def test_parse_format(src):
    s = Scalar.parse(src)
    assert Scalar.parse(str(s)) == s


def test_parse_rejects_other_symbols():
    with pytest.raises(WordSyntaxError):
        Scalar.parse("b + 1")
    with pytest.raises(WordSyntaxError):
        Scalar.parse("")


def test_constant_and_rational_function_differ():
    assert Scalar(1) != a
    assert a != 1
