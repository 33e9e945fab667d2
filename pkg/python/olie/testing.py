import random
from dataclasses import dataclass, field
from typing import Callable, List, Optional

from .algebra.lie import LiePoly
from .algebra.order import Cmp, MonomialOrder
from .algebra.words import Alphabet, Letter, Op, Prime, StarWord, Word, occurrences
from .rewriting.reduction import Rules, reduce

Comparator = Callable[[Word, Word], Cmp]


@dataclass
class SampleReport:
    name: str
    trials: int
    counterexamples: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def __str__(self):
        status = "pass" if self.passed else f"{len(self.counterexamples)} counterexamples"
        return f"{self.name}: {self.trials} trials, {status}"


def random_prime(rng: random.Random, alphabet: Alphabet, budget: int, max_dep: int = 2,
                 op_probability: float = 0.3) -> Prime:
    if budget >= 2 and max_dep > 0 and rng.random() < op_probability:
        return Op(random_word(rng, alphabet, budget - 1, max_dep - 1, op_probability))
    return Letter(rng.choice(alphabet.letters))


def random_word(rng: random.Random, alphabet: Alphabet, max_deg: int = 5, max_dep: int = 2,
                op_probability: float = 0.3) -> Word:
    """
    Random bracketed word of degree at most ``max_deg``.

    :param rng: source of randomness
    :type rng: random.Random
    :param max_dep: maximal operator nesting
    :param op_probability: chance that a prime is operated when the budget allows it
    """
    budget = rng.randint(1, max_deg)
    primes = []
    while budget > 0:
        p = random_prime(rng, alphabet, budget, max_dep, op_probability)
        primes.append(p)
        budget -= Word((p, )).deg
    return Word(primes)


def random_star_word(rng: random.Random, alphabet: Alphabet, max_deg: int = 5, max_dep: int = 2) -> StarWord:
    """A random word with one of its primes, at any nesting level, replaced by the hole."""
    w = random_word(rng, alphabet, max_deg, max_dep)
    singles = [o for o in occurrences(w) if o.stop - o.start == 1]
    return rng.choice(singles).context(w)


def _compare(order: MonomialOrder, compare: Optional[Comparator]) -> Comparator:
    return compare if compare is not None else order.compare


def is_monomial_sample(order: MonomialOrder, trials: int = 1000, seed: int = 0, max_deg: int = 6,
                       compare: Optional[Comparator] = None) -> SampleReport:
    """Sample ``u > v`` and contexts ``q``; ``q<u> > q<v>`` must hold."""
    rng = random.Random(seed)
    cmp = _compare(order, compare)
    report = SampleReport(f"monomial[{order.name}]", trials)
    letters = order.alphabet
    for _ in range(trials):
        u, v = random_word(rng, letters, max_deg), random_word(rng, letters, max_deg)
        c = cmp(u, v)
        if c is Cmp.EQ:
            continue
        if c is Cmp.LT:
            u, v = v, u
        q = random_star_word(rng, letters, max_deg)
        qu, qv = q.substitute(u), q.substitute(v)
        if cmp(qu, qv) is not Cmp.GT:
            report.counterexamples.append(f"{u} > {v} but {qu} <= {qv} in context {q}")
    return report


def is_invariant_sample(order: MonomialOrder, trials: int = 1000, seed: int = 0, max_deg: int = 6,
                        compare: Optional[Comparator] = None) -> SampleReport:
    """Permuting the primes of a word compares exactly like the lexicographic order on primes."""
    rng = random.Random(seed)
    cmp = _compare(order, compare)
    report = SampleReport(f"invariant[{order.name}]", trials)
    for _ in range(trials):
        n = rng.randint(2, 4)
        primes = [random_prime(rng, order.alphabet, rng.randint(1, max(1, max_deg // n)), op_probability=0.5)
                  for _ in range(n)]
        permuted = list(primes)
        rng.shuffle(permuted)
        u, v = Word(primes), Word(permuted)
        full, lex = cmp(u, v), order.lex(u.primes, v.primes)
        if full != lex:
            report.counterexamples.append(f"{u} vs {v}: order says {full}, lex says {lex}")
    return report


def order_axioms_sample(order: MonomialOrder, trials: int = 1000, seed: int = 0, max_deg: int = 6,
                        compare: Optional[Comparator] = None) -> SampleReport:
    """Totality, antisymmetry and transitivity on random triples."""
    rng = random.Random(seed)
    cmp = _compare(order, compare)
    report = SampleReport(f"axioms[{order.name}]", trials)
    for _ in range(trials):
        u, v, w = (random_word(rng, order.alphabet, max_deg) for _ in range(3))
        uv, vu = cmp(u, v), cmp(v, u)
        if uv != -vu or (uv is Cmp.EQ) != (u == v):
            report.counterexamples.append(f"{u} vs {v}: {uv} but reversed {vu}")
        vw, uw = cmp(v, w), cmp(u, w)
        if uv >= 0 and vw >= 0 and uw < 0:
            report.counterexamples.append(f"{u} >= {v} >= {w} but {u} < {w}")
    return report


def confluence_sample(h: LiePoly, rules: Rules, trials: int = 20, seed: int = 0) -> SampleReport:
    """Reduce ``h`` under random rule choices; every run must end in the same remainder."""
    rng = random.Random(seed)
    report = SampleReport("confluence", trials)
    reference = reduce(h, rules).remainder
    for _ in range(trials):
        remainder = reduce(h, rules, choose=lambda matches: rng.randrange(len(matches))).remainder
        if remainder != reference:
            report.counterexamples.append(f"{h}: {remainder} != {reference}")
    return report


__all__ = [
    "SampleReport", "random_prime", "random_word", "random_star_word", "is_monomial_sample", "is_invariant_sample",
    "order_axioms_sample", "confluence_sample"
]
