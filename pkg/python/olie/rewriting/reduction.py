"""
Head reduction of Lie polynomials modulo a rule set, triviality of
compositions, and the dimension count behind the Composition-Diamond lemma.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Protocol, Sequence

from sympy.polys.matrices import DomainMatrix

from ..algebra.lie import LiePoly
from ..algebra.lyndon import enumerate_alsbw
from ..algebra.order import MonomialOrder
from ..algebra.scalar import domain_of, to_domain_element
from ..algebra.words import StarWord, Word, forget
from ..runtime.config import debug
from ..runtime.errors import ResourceCapExceeded
from .compositions import Composition
from .errors import CompositionError
from .sword import special_sword

DEFAULT_MAX_STEPS = 10000


@dataclass(frozen=True)
class RuleMatch:
    """A rule instance whose leading word sits at ``placement`` of the word being reduced."""
    label: str
    instance: LiePoly
    placement: StarWord

    def sort_key(self):
        return (self.label, str(self.placement))


class Rules(Protocol):

    def match_leading(self, w: Word) -> List[RuleMatch]:
        ...


class NoRules:
    """The empty rule set: every word is irreducible."""

    def match_leading(self, w: Word) -> List[RuleMatch]:
        return []


@dataclass(frozen=True)
class ReductionStep:
    step: int
    rule: str
    placement: str
    coefficient: str
    leading_before: str
    leading_after: str

    def to_dict(self) -> Dict[str, object]:
        return {
            "step": self.step,
            "rule": self.rule,
            "placement": self.placement,
            "coefficient": self.coefficient,
            "leading_before": self.leading_before,
            "leading_after": self.leading_after,
        }


@dataclass
class Reduction:
    remainder: LiePoly
    trace: List[ReductionStep] = field(default_factory=list)

    @property
    def is_zero(self) -> bool:
        return self.remainder.is_zero


def reduce(h: LiePoly, rules: Rules, max_steps: int = DEFAULT_MAX_STEPS,
           choose: Optional[Callable[[Sequence[RuleMatch]], int]] = None, bound: Optional[Word] = None) -> Reduction:
    """
    Cancel the leading term with special s-words until it is irreducible or
    the polynomial vanishes. ``choose`` picks among admissible matches
    (default: the first in rule/placement order). With ``bound`` every
    s-word used must lead with a word strictly below it.
    """
    order = h.order
    trace: List[ReductionStep] = []
    while h:
        w, c = h.leading()
        matches = rules.match_leading(w)
        if not matches:
            break
        if bound is not None and not order.greater(bound, w):
            raise CompositionError(str(bound), f"reduction reached {w}, which is not below the ambient word")
        if len(trace) >= max_steps:
            raise ResourceCapExceeded(len(trace) + 1, max_steps, "reduction steps")
        m = matches[0] if choose is None else matches[choose(matches)]
        sw = special_sword(m.placement, m.instance)
        reduced = h - sw.value * c
        if reduced and not order.greater(w, reduced.leading_word):
            raise CompositionError(str(w), f"rewriting with {m.label} at {m.placement} did not descend")
        step = ReductionStep(len(trace) + 1, m.label, str(m.placement), str(c), str(w),
                             str(reduced.leading_word) if reduced else "0")
        debug(f"step {step.step}: {step.rule} at {step.placement} coeff {step.coefficient}: "
              f"{step.leading_before} -> {step.leading_after}")
        trace.append(step)
        h = reduced
    return Reduction(h, trace)


def reduce_composition(c: Composition, rules: Rules, max_steps: int = DEFAULT_MAX_STEPS,
                       choose: Optional[Callable[[Sequence[RuleMatch]], int]] = None) -> Reduction:
    return reduce(c.value, rules, max_steps=max_steps, choose=choose, bound=c.w)


def is_trivial(c: Composition, rules: Rules, max_steps: int = DEFAULT_MAX_STEPS) -> bool:
    """Whether the composition reduces to zero through s-words below its ambient word."""
    return reduce_composition(c, rules, max_steps).is_zero


@dataclass
class CDReport:
    deg_bound: int
    dim: int
    irreducible: List[Word]
    rank: int

    @property
    def balanced(self) -> bool:
        return self.dim == len(self.irreducible) + self.rank

    def to_dict(self) -> Dict[str, object]:
        return {
            "deg_bound": self.deg_bound,
            "dim": self.dim,
            "irreducible": len(self.irreducible),
            "rank": self.rank,
            "balanced": self.balanced,
            "irreducible_words": [str(w) for w in self.irreducible],
        }


def cd_dimension_check(rules: Optional[Rules], order: MonomialOrder, deg_bound: int,
                       max_odeg: Optional[int] = None) -> CDReport:
    """
    On the basis words of degree at most ``deg_bound``: count the words no
    rule applies to and the rank of all s-words leading inside the slice.
    The two add up to the slice dimension exactly when the rules form a
    Gröbner-Shirshov basis in this range.
    """
    rules = rules or NoRules()
    words = enumerate_alsbw(order, deg_bound, max_odeg)
    index = {w: k for k, w in enumerate(words)}
    irreducible: List[Word] = []
    rows: List[LiePoly] = []
    for w in words:
        matches = rules.match_leading(w)
        if not matches:
            irreducible.append(w)
            continue
        for m in matches:
            rows.append(special_sword(m.placement, m.instance).value)
    rank = 0
    if rows:
        domain, symbolic = domain_of([c for f in rows for c in f.terms.values()])
        matrix = []
        for f in rows:
            row = [domain.zero] * len(words)
            for t, c in f.terms.items():
                k = index.get(forget(t))
                if k is None:
                    raise CompositionError(str(forget(t)), "s-word leaves the degree slice")
                row[k] = to_domain_element(c, symbolic)
            matrix.append(row)
        rank = DomainMatrix(matrix, (len(matrix), len(words)), domain).rank()
    return CDReport(deg_bound, len(words), irreducible, rank)
