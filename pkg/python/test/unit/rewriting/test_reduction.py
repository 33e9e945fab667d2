import pytest

from olie.algebra.lie import LiePoly
from olie.algebra.order import MonomialOrder, OrderKind
from olie.algebra.words import Alphabet, parse_word
from olie.identities.catalog import get
from olie.identities.ruleset import RuleSet
from olie.rewriting.errors import CompositionError
from olie.rewriting.reduction import NoRules, cd_dimension_check, reduce
from olie.runtime.errors import ResourceCapExceeded
from olie.testing import confluence_sample


def test_no_rules(dt):
    h = LiePoly.parse("(x y) + (x (x y))", dt)
    result = reduce(h, NoRules())
    assert result.remainder == h
    assert result.trace == []
    assert not result.is_zero


def test_reduces_to_zero(dl):
    h = LiePoly.parse("((P(x) P(z)) P(y))", dl)
    result = reduce(h, RuleSet(get("p5"), dl))
    assert result.is_zero
    assert len(result.trace) == 1
    step = result.trace[0]
    assert step.rule == "p5(x, z)"
    assert step.placement == "* P(y)"
    assert step.leading_before == "P(x) P(z) P(y)"
    assert step.leading_after == "0"
    assert step.to_dict()["step"] == 1


def test_stops_at_irreducible_leading_word(dt):
    h = LiePoly.parse("(x y) + P((x y))", dt)
    result = reduce(h, RuleSet(get("bracket"), dt))
    assert result.remainder == LiePoly.parse("(x y)", dt)


def test_step_cap(dl):
    h = LiePoly.parse("((P(x) P(z)) P(y))", dl)
    with pytest.raises(ResourceCapExceeded) as e:
        reduce(h, RuleSet(get("p5"), dl), max_steps=0)
    assert e.value.limit == 0


def test_bound(dl):
    h = LiePoly.parse("((P(x) P(z)) P(y))", dl)
    with pytest.raises(CompositionError):
        reduce(h, RuleSet(get("p5"), dl), bound=parse_word("P(x) P(z) P(y)"))


def test_confluence(dt):
    h = LiePoly.parse("P(((x y) z)) + (x (y z))", dt)
    rules = RuleSet(get("bracket"), dt)
    report = confluence_sample(h, rules, trials=5)
    assert report.passed, report.counterexamples
    assert reduce(h, rules).remainder == LiePoly.parse("(x (y z))", dt)


def test_cd_check_without_rules():
    order = MonomialOrder(OrderKind.DT, Alphabet(("x", "y")))
    report = cd_dimension_check(None, order, 3, max_odeg=0)
    assert report.dim == 5
    assert len(report.irreducible) == 5
    assert report.rank == 0
    assert report.balanced
    assert report.to_dict()["balanced"] is True


def test_cd_check_monomial_identity():
    order = MonomialOrder(OrderKind.DL, Alphabet(("x", "y")))
    report = cd_dimension_check(RuleSet(get("p5"), order), order, 4)
    assert parse_word("P(x) P(y)") not in report.irreducible
    assert report.rank == 1
    assert report.balanced
