from olie.algebra.lie import LiePoly
from olie.algebra.words import Leaf, parse_tree, parse_word
from olie.identities.catalog import get, instantiate
from olie.identities.ruleset import RuleSet
from olie.rewriting.compositions import (CompositionKind, compositions, including_compositions,
                                         intersection_compositions)
from olie.rewriting.reduction import is_trivial

X, Y, Z = Leaf("x"), Leaf("y"), Leaf("z")


def test_intersection(dl):
    p5 = get("p5")
    f, g = instantiate(p5, X, Y, dl), instantiate(p5, Y, Z, dl)
    found = intersection_compositions(f, g, "f", "g")
    assert len(found) == 1
    c = found[0]
    assert c.kind is CompositionKind.INTERSECTION
    assert c.w == parse_word("P(x) P(y) P(z)")
    assert c.value == LiePoly.parse("((P(x) P(z)) P(y))", dl)
    assert "intersection <f, g>" in c.describe()
    assert is_trivial(c, RuleSet(p5, dl))


def test_intersection_needs_overlap_in_order(dl):
    p5 = get("p5")
    f, g = instantiate(p5, X, Y, dl), instantiate(p5, Y, Z, dl)
    assert intersection_compositions(g, f) == []
    assert intersection_compositions(f, f) == []


def test_self_including_composition_is_zero(dl):
    f = instantiate(get("p5"), X, Y, dl)
    found = compositions(f, f)
    assert len(found) == 1
    c = found[0]
    assert c.kind is CompositionKind.INCLUDING
    assert c.witness == "q=*"
    assert c.w == f.leading_word
    assert not c.value
    assert is_trivial(c, RuleSet(get("p5"), dl))


def test_including(dt):
    phi = get("bracket")
    g = instantiate(phi, X, Y, dt)
    f = instantiate(phi, parse_tree("P((x y))"), Z, dt)
    assert f.leading_word == parse_word("P(P(x y) z)")
    found = including_compositions(f, g, "f", "g")
    assert len(found) == 1
    c = found[0]
    assert c.kind is CompositionKind.INCLUDING
    assert c.witness == "q=P(* z)"
    assert c.value.is_zero
    assert is_trivial(c, RuleSet(phi, dt))
