"""
Compositions of two monic Lie polynomials.

* intersection: a proper suffix of ``f̄`` is a proper prefix of ``ḡ``,
  ``w = f̄ u = v ḡ`` is ALSBW; value ``[f u]_w - [v g]_w``.
* including: ``f̄ = q<ḡ>``; value ``f - [q g]_w``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import List

from ..algebra.lie import LiePoly
from ..algebra.lyndon import is_alsbw
from ..algebra.words import STAR, StarWord, Word, placements
from .errors import CompositionError
from .sword import special_sword


class CompositionKind(enum.Enum):
    INTERSECTION = "intersection"
    INCLUDING = "including"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Composition:
    kind: CompositionKind
    f_label: str
    g_label: str
    w: Word
    witness: str
    value: LiePoly

    def describe(self) -> str:
        return f"{self.kind} <{self.f_label}, {self.g_label}> at {self.w} [{self.witness}]"


def _checked(kind: CompositionKind, f_label: str, g_label: str, w: Word, witness: str,
             value: LiePoly) -> Composition:
    if value and not value.order.greater(w, value.leading_word):
        raise CompositionError(str(w), f"{kind} composition of {f_label} and {g_label} does not drop: "
                               f"leading word {value.leading_word}")
    return Composition(kind, f_label, g_label, w, witness, value)


def intersection_compositions(f: LiePoly, g: LiePoly, f_label: str = "f", g_label: str = "g") -> List[Composition]:
    order = f.order
    fb, gb = f.leading_word, g.leading_word
    m, n = fb.breadth, gb.breadth
    out = []
    for k in range(1, min(m, n)):
        if fb.primes[m - k:] != gb.primes[:k]:
            continue
        u, v = Word(gb.primes[k:]), Word(fb.primes[:m - k])
        w = fb + u
        if not is_alsbw(w, order):
            continue
        left = special_sword(StarWord(Word((STAR, ) + u.primes)), f)
        right = special_sword(StarWord(Word(v.primes + (STAR, ))), g)
        out.append(_checked(CompositionKind.INTERSECTION, f_label, g_label, w, f"u={u}; v={v}",
                            left.value - right.value))
    return out


def including_compositions(f: LiePoly, g: LiePoly, f_label: str = "f", g_label: str = "g") -> List[Composition]:
    fb, gb = f.leading_word, g.leading_word
    out = []
    for q in placements(fb, gb):
        sw = special_sword(q, g)
        out.append(_checked(CompositionKind.INCLUDING, f_label, g_label, fb, f"q={q}", f - sw.value))
    return out


def compositions(f: LiePoly, g: LiePoly, f_label: str = "f", g_label: str = "g") -> List[Composition]:
    """All compositions of ``f`` with ``g`` in this order; callers wanting both orders call twice."""
    return intersection_compositions(f, g, f_label, g_label) + including_compositions(f, g, f_label, g_label)
