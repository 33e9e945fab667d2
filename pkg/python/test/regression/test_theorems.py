import json
import os
import random

import pytest

from olie.algebra.lie import LiePoly, bracket, expand
from olie.algebra.lyndon import enumerate_alsbw, is_alsw, is_nlsw, nlsbw_of
from olie.algebra.order import MonomialOrder, OrderKind
from olie.algebra.words import DEFAULT_ALPHABET, parse_tree, parse_word
from olie.identities.catalog import catalog, get
from olie.identities.ruleset import RuleSet
from olie.rewriting.reduction import cd_dimension_check
from olie.rewriting.sword import special_sword
from olie.runtime.checker import GS, NOT_GS, check_gs
from olie.runtime.config import Bounds, Config
from olie.testing import is_invariant_sample, is_monomial_sample, order_axioms_sample
from olie.tools.cli import EXIT_NONTRIVIAL, main

DT = MonomialOrder(OrderKind.DT, DEFAULT_ALPHABET)
DL = MonomialOrder(OrderKind.DL, DEFAULT_ALPHABET)

# the degree-two checks spread instance pairs over every core
WIDE = Config(parallelism=os.cpu_count() or 1)

#######################
# Word fixtures
#######################


@pytest.mark.parametrize("src, expected", [
    ("x y", True),
    ("x y z", True),
    ("x z y", True),
    ("y x", False),
    ("y x z", False),
    ("y z x", False),
    ("z x y", False),
    ("z y x", False),
])
def test_lyndon_verdicts(src, expected):
    assert is_alsw(parse_word(src).primes, DT.prime_key) is expected


@pytest.mark.parametrize("src, tree", [("x y", "(x y)"), ("x y z", "(x (y z))"), ("x z y", "((x z) y)")])
def test_standard_bracketings(src, tree):
    assert str(nlsbw_of(parse_word(src), DT)) == tree


@pytest.mark.parametrize("src, expected", [("(x (y z))", True), ("((x z) y)", True), ("(y x)", False),
                                           ("((x y) z)", False)])
def test_nlsw_verdicts(src, expected):
    assert is_nlsw(parse_tree(src), DT) is expected


def test_word_metrics():
    w = parse_word("P(x y P(z) y) x y")
    assert (w.breadth, w.dep, w.deg, w.odeg) == (3, 2, 8, 2)


#######################
# Orders and Lie structure
#######################


@pytest.mark.slow
@pytest.mark.parametrize("order", [DT, DL], ids=["dt", "Dl"])
def test_order_axioms_at_scale(order):
    for sample in (order_axioms_sample, is_monomial_sample, is_invariant_sample):
        report = sample(order, trials=10000, seed=1)
        assert report.passed, report.counterexamples[:3]


@pytest.mark.slow
@pytest.mark.parametrize("order", [DT, DL], ids=["dt", "Dl"])
def test_triangularity(order):
    for w in enumerate_alsbw(order, 5, max_odeg=2):
        assert expand(nlsbw_of(w, order)).leading(order) == (w, 1), str(w)


@pytest.mark.slow
def test_anticommutativity_and_jacobi():
    rng = random.Random(3)
    words = enumerate_alsbw(DL, 3, max_odeg=1)
    for _ in range(1000):
        f, g, h = (LiePoly.of_word(rng.choice(words), DL) * rng.randint(-3, 3) for _ in range(3))
        assert bracket(f, g) == -bracket(g, f)
        jacobi = bracket(f, bracket(g, h)) + bracket(g, bracket(h, f)) + bracket(h, bracket(f, g))
        assert jacobi.is_zero


@pytest.mark.slow
def test_swords_over_catalog():
    rng = random.Random(5)
    checked = 0
    for phi in catalog():
        order = MonomialOrder(phi.gs_order, DEFAULT_ALPHABET)
        rules = RuleSet(phi, order, phi.variant_names[-1] if len(phi.variants) > 1 else None)
        words = enumerate_alsbw(order, 6, max_odeg=2, max_dep=2)
        for w in rng.sample(words, min(len(words), 60)):
            for m in rules.match_leading(w):
                assert special_sword(m.placement, m.instance).value.leading() == (w, 1)
                checked += 1
    assert checked >= 200


#######################
# Gröbner-Shirshov checks
#######################

# degree-one identities are checked on arguments with at most one operator
DEGREE_ONE = ["bracket", "bracket-right", "bracket-left", "derivation", "left-annihilator", "right-annihilator"]
DEGREE_TWO = [phi.name for phi in catalog() if phi.operated_degree == 2]


def test_catalog_split():
    assert len(DEGREE_ONE) == 6
    assert len(DEGREE_TWO) == 20


@pytest.mark.slow
@pytest.mark.parametrize("name", DEGREE_ONE)
def test_degree_one_identities(name):
    report = check_gs(get(name), DT, Bounds(max_deg=3, max_odeg=1))
    assert report.verdict == GS, [c.to_dict() for c in report.failures[:2]]


@pytest.mark.slow
@pytest.mark.parametrize("name", DEGREE_TWO)
def test_degree_two_identities(name):
    phi = get(name)
    order = MonomialOrder(phi.gs_order, DEFAULT_ALPHABET)
    for variant in (phi.variant_names if len(phi.variants) > 1 else (None, )):
        report = check_gs(phi, order, Bounds(max_deg=3, max_odeg=2), WIDE, variant=variant)
        assert report.verdict == GS, [c.to_dict() for c in report.failures[:2]]


@pytest.mark.slow
@pytest.mark.parametrize("name", ["new-a-right", "new-a-left", "new-b-right", "new-b-left", "new-c"])
def test_not_a_basis_under_dt(name, tmp_path):
    target = tmp_path / "report.json"
    code = main(["check-gs", "-f", name, "-O", "dt", "--max-deg", "2", "--max-odeg", "0", "--no-cache", "-o",
                 str(target)])
    assert code == EXIT_NONTRIVIAL
    document = json.loads(target.read_text())
    assert document["verdict"] == NOT_GS
    failures = [c for r in document["reports"] for c in r["compositions"] if c["trivial"] is False]
    assert failures and all("remainder" in c or "error" in c for c in failures)


@pytest.mark.slow
def test_sampled_parameter_agrees_with_symbolic():
    phi = get("new-b-right")
    symbolic = check_gs(phi, DL, Bounds(max_deg=2, max_odeg=1), variant="case1")
    for value in (1, 2, -3):
        sampled = check_gs(phi, DL, Bounds(max_deg=2, max_odeg=1), variant="case1", sample=value)
        assert sampled.verdict == symbolic.verdict


@pytest.mark.slow
def test_dimension_count_for_average():
    report = cd_dimension_check(RuleSet(get("average"), DL), DL, 3)
    assert report.balanced, report.to_dict()


@pytest.mark.slow
def test_report_does_not_depend_on_parallelism():
    phi = get("bracket-right")
    serial = check_gs(phi, DT, Bounds(max_deg=3, max_odeg=1), Config(parallelism=1)).to_json()
    again = check_gs(phi, DT, Bounds(max_deg=3, max_odeg=1), Config(parallelism=1)).to_json()
    parallel = check_gs(phi, DT, Bounds(max_deg=3, max_odeg=1), Config(parallelism=4)).to_json()
    assert serial == again == parallel
