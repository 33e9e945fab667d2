"""
Monomial orders on bracketed words.

Both orders are realised as sort keys: comparing two words is comparing two
tuples. The prime key of a letter is ``(0, rank)``; the prime key of an
operated prime is ``(1, key(payload))``, so operated primes sit above letters
and compare through their payloads.

* ``Dl``: ``(deg, breadth, *prime keys)``
* ``dt``: ``(number of letters, *prime keys)``
"""
from __future__ import annotations

import enum
from typing import Dict, Iterable, List, Sequence, Tuple

from .errors import IncomparablePrimeError
from .words import DEFAULT_ALPHABET, Alphabet, Letter, Prime, Word


class Cmp(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1

    def __str__(self):
        return self.name


class OrderKind(enum.Enum):
    DL = "Dl"
    DT = "dt"

    @staticmethod
    def parse(name: str) -> "OrderKind":
        for kind in OrderKind:
            if kind.value.lower() == name.strip().lower():
                return kind
        raise ValueError(f"unknown order {name!r}, expected one of Dl, dt")

    def __str__(self):
        return self.value


def lex_compare(u: Sequence[Prime], v: Sequence[Prime], prime_key) -> Cmp:
    """
    Lexicographic comparison where a proper prefix is *greater* than any of
    its extensions; in particular the empty word is the greatest.
    """
    for a, b in zip(u, v):
        ka, kb = prime_key(a), prime_key(b)
        if ka != kb:
            return Cmp.GT if ka > kb else Cmp.LT
    if len(u) == len(v):
        return Cmp.EQ
    return Cmp.GT if len(u) < len(v) else Cmp.LT


class MonomialOrder:

    def __init__(self, kind: OrderKind, alphabet: Alphabet = DEFAULT_ALPHABET):
        if isinstance(kind, str):
            kind = OrderKind.parse(kind)
        self.kind = kind
        self.alphabet = alphabet
        self._keys: Dict[Word, Tuple] = {}

    @property
    def name(self) -> str:
        return self.kind.value

    def prime_key(self, p: Prime) -> Tuple:
        if isinstance(p, Letter):
            r = self.alphabet.rank(p.symbol)
            if r is None:
                raise IncomparablePrimeError(f"letter {p.symbol!r} is not in the alphabet {self.alphabet}")
            return (0, r)
        return (1, self.key(p.payload))

    def key(self, w: Word) -> Tuple:
        k = self._keys.get(w)
        if k is None:
            primes = tuple(self.prime_key(p) for p in w.primes)
            if self.kind is OrderKind.DL:
                k = (w.deg, w.breadth) + primes
            else:
                k = (w.deg_x, ) + primes
            self._keys[w] = k
        return k

    def compare(self, u: Word, v: Word) -> Cmp:
        ku, kv = self.key(u), self.key(v)
        if ku == kv:
            return Cmp.EQ
        return Cmp.GT if ku > kv else Cmp.LT

    def lex(self, u: Sequence[Prime], v: Sequence[Prime]) -> Cmp:
        return lex_compare(u, v, self.prime_key)

    def greater(self, u: Word, v: Word) -> bool:
        return self.key(u) > self.key(v)

    def max(self, words: Iterable[Word]) -> Word:
        return max(words, key=self.key)

    def sorted(self, words: Iterable[Word], descending: bool = True) -> List[Word]:
        return sorted(words, key=self.key, reverse=descending)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and other.kind == self.kind and other.alphabet == self.alphabet

    def __hash__(self):
        return hash((self.kind, self.alphabet))

    def __getstate__(self):
        return {"kind": self.kind, "alphabet": self.alphabet}

    def __setstate__(self, state):
        self.__init__(state["kind"], state["alphabet"])

    def __repr__(self):
        return f"MonomialOrder({self.kind.value!r}, {str(self.alphabet)!r})"


def compare_dl(u: Word, v: Word, alphabet: Alphabet = DEFAULT_ALPHABET) -> Cmp:
    return MonomialOrder(OrderKind.DL, alphabet).compare(u, v)


def compare_dt(u: Word, v: Word, alphabet: Alphabet = DEFAULT_ALPHABET) -> Cmp:
    return MonomialOrder(OrderKind.DT, alphabet).compare(u, v)
