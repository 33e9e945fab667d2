"""
Bracketed words over an alphabet with one operator, and the trees that
bracket them.

A word is a sequence of *primes*; a prime is either a letter or an operated
word ``P(w)``. Trees are binary Lie bracketings whose leaves are letters or
operated subtrees. The hole of a star-word is the reserved letter ``*``.

Text syntax::

    word  := prime+                 e.g. "P(x y P(z) y) x y"
    prime := LETTER | "P(" word ")"
    tree  := LETTER | "P(" tree ")" | "(" tree tree ")"
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from .errors import StarWordError, WordSyntaxError

STAR_SYMBOL = "*"


class Letter:
    __slots__ = ("symbol", "_hash")

    def __init__(self, symbol: str):
        self.symbol = symbol
        self._hash = hash(("L", symbol))

    def __eq__(self, other):
        return isinstance(other, Letter) and other.symbol == self.symbol

    def __hash__(self):
        return self._hash

    def __str__(self):
        return self.symbol

    def __repr__(self):
        return f"Letter({self.symbol!r})"


class Op:
    """An operated prime ``P(payload)``."""
    __slots__ = ("payload", "_hash")

    def __init__(self, payload: "Word"):
        if not payload.primes:
            raise ValueError("the operator cannot be applied to the empty word")
        self.payload = payload
        self._hash = hash(("P", payload))

    def __eq__(self, other):
        return isinstance(other, Op) and other._hash == self._hash and other.payload == self.payload

    def __hash__(self):
        return self._hash

    def __str__(self):
        return f"P({self.payload})"

    def __repr__(self):
        return f"Op({str(self.payload)!r})"


Prime = Union[Letter, Op]
STAR = Letter(STAR_SYMBOL)


def _prime_deg(p: Prime) -> int:
    return 1 if isinstance(p, Letter) else p.payload.deg + 1


class Word:
    __slots__ = ("primes", "_hash", "_deg", "_odeg", "_dep", "_deg_x")

    def __init__(self, primes: Sequence[Prime] = ()):
        self.primes: Tuple[Prime, ...] = tuple(primes)
        self._hash = hash(self.primes)
        deg = odeg = dep = deg_x = 0
        for p in self.primes:
            if isinstance(p, Letter):
                deg += 1
                deg_x += 1
            else:
                w = p.payload
                deg += w._deg + 1
                odeg += w._odeg + 1
                dep = max(dep, w._dep + 1)
                deg_x += w._deg_x
        self._deg, self._odeg, self._dep, self._deg_x = deg, odeg, dep, deg_x

    @staticmethod
    def of(*symbols: str) -> "Word":
        return Word(Letter(s) for s in symbols)

    # metrics
    @property
    def breadth(self) -> int:
        return len(self.primes)

    @property
    def deg(self) -> int:
        return self._deg

    @property
    def odeg(self) -> int:
        return self._odeg

    @property
    def dep(self) -> int:
        return self._dep

    @property
    def deg_x(self) -> int:
        """Number of letters, operators not counted."""
        return self._deg_x

    def count(self, symbol: str) -> int:
        n = 0
        for p in self.primes:
            if isinstance(p, Letter):
                n += p.symbol == symbol
            else:
                n += p.payload.count(symbol)
        return n

    def __len__(self):
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes)

    def __getitem__(self, idx):
        if isinstance(idx, slice):
            return Word(self.primes[idx])
        return self.primes[idx]

    def __add__(self, other: "Word") -> "Word":
        return Word(self.primes + other.primes)

    def __eq__(self, other):
        return isinstance(other, Word) and other._hash == self._hash and other.primes == self.primes

    def __hash__(self):
        return self._hash

    def __str__(self):
        return " ".join(str(p) for p in self.primes)

    def __repr__(self):
        return f"Word({str(self)!r})"


def breadth(w: Word) -> int:
    return w.breadth


def deg(w: Word) -> int:
    return w.deg


def odeg(w: Word) -> int:
    return w.odeg


def dep(w: Word) -> int:
    return w.dep


class StarWord:
    """A word with exactly one occurrence of the hole."""
    __slots__ = ("word", )

    def __init__(self, word: Word):
        n = word.count(STAR_SYMBOL)
        if n != 1:
            raise StarWordError(f"a star-word needs exactly one hole, {word} has {n}")
        self.word = word

    def substitute(self, u: Word) -> Word:
        return Word(_substitute(self.word.primes, u))

    @property
    def is_trivial(self) -> bool:
        return self.word.primes == (STAR, )

    def __eq__(self, other):
        return isinstance(other, StarWord) and other.word == self.word

    def __hash__(self):
        return hash(("S", self.word))

    def __str__(self):
        return str(self.word)

    def __repr__(self):
        return f"StarWord({str(self.word)!r})"


TRIVIAL_STAR_WORD = StarWord(Word((STAR, )))


def _substitute(primes: Tuple[Prime, ...], u: Word) -> List[Prime]:
    out: List[Prime] = []
    for p in primes:
        if p == STAR:
            out.extend(u.primes)
        elif isinstance(p, Op) and p.payload.count(STAR_SYMBOL):
            out.append(Op(Word(_substitute(p.payload.primes, u))))
        else:
            out.append(p)
    return out


def substitute(q: StarWord, u: Word) -> Word:
    return q.substitute(u)


# -- occurrences of subwords --


@dataclass(frozen=True)
class Occurrence:
    """
    A prime-aligned subword: the primes ``start:stop`` of the word reached by
    following ``path`` (indices of operated primes) from the outside in.
    """
    path: Tuple[int, ...]
    start: int
    stop: int
    word: Word

    def context(self, w: Word) -> StarWord:
        return StarWord(_replace(w, self.path, self.start, self.stop, (STAR, )))

    def contains(self, other: "Occurrence") -> bool:
        n = len(self.path)
        if other.path[:n] != self.path:
            return False
        if len(other.path) == n:
            return self.start <= other.start and other.stop <= self.stop
        return self.start <= other.path[n] < self.stop

    def disjoint(self, other: "Occurrence") -> bool:
        if self.path == other.path:
            return self.stop <= other.start or other.stop <= self.start
        return not self.contains(other) and not other.contains(self)


def _replace(w: Word, path: Tuple[int, ...], start: int, stop: int, primes: Tuple[Prime, ...]) -> Word:
    if not path:
        return Word(w.primes[:start] + primes + w.primes[stop:])
    i = path[0]
    inner = _replace(w.primes[i].payload, path[1:], start, stop, primes)
    return Word(w.primes[:i] + (Op(inner), ) + w.primes[i + 1:])


def occurrences(w: Word, path: Tuple[int, ...] = ()) -> Iterator[Occurrence]:
    """All prime-aligned subwords at every nesting level, left to right and outside in."""
    primes = w.primes
    n = len(primes)
    for i in range(n):
        for j in range(i + 1, n + 1):
            yield Occurrence(path, i, j, Word(primes[i:j]))
        if isinstance(primes[i], Op):
            yield from occurrences(primes[i].payload, path + (i, ))


def placements(w: Word, p: Word) -> List[StarWord]:
    """Every star-word q with q<p> = w, in deterministic left-to-right, outside-in order."""
    return [occ.context(w) for occ in _matching(w, p, ())]


def _matching(w: Word, p: Word, path: Tuple[int, ...]) -> Iterator[Occurrence]:
    primes, k = w.primes, len(p.primes)
    for i in range(len(primes)):
        if primes[i:i + k] == p.primes:
            yield Occurrence(path, i, i + k, p)
        if isinstance(primes[i], Op) and primes[i].payload.deg >= p.deg:
            yield from _matching(primes[i].payload, p, path + (i, ))


# -- trees --


class Tree:
    __slots__ = ()

    @property
    def word(self) -> Word:
        return forget(self)


class Leaf(Tree):
    __slots__ = ("symbol", "_hash", "_word")

    def __init__(self, symbol: str):
        self.symbol = symbol
        self._hash = hash(("l", symbol))
        self._word = Word((Letter(symbol), ))

    def __eq__(self, other):
        return isinstance(other, Leaf) and other.symbol == self.symbol

    def __hash__(self):
        return self._hash

    def __str__(self):
        return self.symbol

    def __repr__(self):
        return f"Leaf({self.symbol!r})"


class OpNode(Tree):
    __slots__ = ("child", "_hash", "_word")

    def __init__(self, child: Tree):
        self.child = child
        self._hash = hash(("p", child))
        self._word = Word((Op(forget(child)), ))

    def __eq__(self, other):
        return isinstance(other, OpNode) and other._hash == self._hash and other.child == self.child

    def __hash__(self):
        return self._hash

    def __str__(self):
        return f"P({self.child})"

    def __repr__(self):
        return f"OpNode({str(self.child)!r})"


class Pair(Tree):
    __slots__ = ("left", "right", "_hash", "_word")

    def __init__(self, left: Tree, right: Tree):
        self.left = left
        self.right = right
        self._hash = hash(("b", left, right))
        self._word = forget(left) + forget(right)

    def __eq__(self, other):
        return (isinstance(other, Pair) and other._hash == self._hash and other.left == self.left
                and other.right == self.right)

    def __hash__(self):
        return self._hash

    def __str__(self):
        return f"({self.left} {self.right})"

    def __repr__(self):
        return f"Pair({str(self.left)!r}, {str(self.right)!r})"


HOLE = Leaf(STAR_SYMBOL)


def forget(t: Tree) -> Word:
    """The underlying word of a bracketing."""
    return t._word


def contains_hole(t: Tree) -> bool:
    return forget(t).count(STAR_SYMBOL) > 0


# -- alphabet --

_LETTER_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class Alphabet:
    """A finite alphabet listed from the greatest letter to the least."""

    def __init__(self, letters: Sequence[str]):
        letters = tuple(letters)
        if not letters:
            raise ValueError("empty alphabet")
        if len(set(letters)) != len(letters):
            raise ValueError(f"repeated letter in alphabet {letters}")
        for s in letters:
            if s == STAR_SYMBOL or s == "P" or not _LETTER_RE.fullmatch(s):
                raise ValueError(f"invalid letter {s!r}")
        self.letters = letters
        self._rank = {s: len(letters) - i for i, s in enumerate(letters)}

    @staticmethod
    def parse(text: str) -> "Alphabet":
        """Accepts ``x>y>z`` or ``x,y,z`` (greatest first)."""
        parts = [s.strip() for s in re.split(r"[>,]", text)]
        try:
            return Alphabet([s for s in parts if s])
        except ValueError as e:
            raise WordSyntaxError(text, 0, str(e))

    def rank(self, symbol: str) -> Optional[int]:
        return self._rank.get(symbol)

    def __contains__(self, symbol: str) -> bool:
        return symbol in self._rank

    def __iter__(self):
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and other.letters == self.letters

    def __hash__(self):
        return hash(self.letters)

    def __str__(self):
        return ">".join(self.letters)

    def __repr__(self):
        return f"Alphabet({str(self)!r})"


DEFAULT_ALPHABET = Alphabet(("x", "y", "z"))

# -- parsing --

_TOKEN_RE = re.compile(r"\s*(?:(P\()|(\()|(\))|(\*)|([A-Za-z_][A-Za-z0-9_]*))")


class _Parser:

    def __init__(self, src: str, alphabet: Optional[Alphabet], allow_star: bool):
        self.src = src
        self.alphabet = alphabet
        self.allow_star = allow_star
        self.tokens = []
        pos = 0
        while pos < len(src):
            if src[pos:].strip() == "":
                break
            m = _TOKEN_RE.match(src, pos)
            if m is None:
                col = len(src) - len(src[pos:].lstrip())
                raise WordSyntaxError(src, col, f"unexpected character {src[col]!r}")
            kind = m.lastindex
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def error(self, message: str):
        col = self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.src)
        raise WordSyntaxError(self.src, col, message)

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def take(self, kind: int):
        if self.peek() != kind:
            self.error(f"expected {_TOKEN_NAMES[kind]}")
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def letter(self) -> str:
        kind = self.peek()
        if kind == _STAR:
            if not self.allow_star:
                self.error("the hole '*' is not allowed here")
            self.i += 1
            return STAR_SYMBOL
        _, symbol, _ = self.take(_LETTER)
        if self.alphabet is not None and symbol not in self.alphabet:
            self.i -= 1
            self.error(f"letter {symbol!r} is not in the alphabet {self.alphabet}")
        return symbol

    def word(self) -> Word:
        primes = []
        while self.peek() in (_LETTER, _STAR, _OPEN_OP):
            if self.peek() == _OPEN_OP:
                self.i += 1
                payload = self.word()
                self.take(_CLOSE)
                primes.append(Op(payload))
            else:
                primes.append(Letter(self.letter()))
        if not primes:
            self.error("expected a word")
        return Word(primes)

    def tree(self) -> Tree:
        kind = self.peek()
        if kind == _OPEN_OP:
            self.i += 1
            child = self.tree()
            self.take(_CLOSE)
            return OpNode(child)
        if kind == _OPEN:
            self.i += 1
            left = self.tree()
            right = self.tree()
            self.take(_CLOSE)
            return Pair(left, right)
        if kind in (_LETTER, _STAR):
            return Leaf(self.letter())
        self.error("expected a tree")

    def finish(self):
        if self.i != len(self.tokens):
            self.error("unexpected trailing input")


_OPEN_OP, _OPEN, _CLOSE, _STAR, _LETTER = 1, 2, 3, 4, 5
_TOKEN_NAMES = {_OPEN_OP: "'P('", _OPEN: "'('", _CLOSE: "')'", _STAR: "'*'", _LETTER: "a letter"}


def parse_word(src: str, alphabet: Optional[Alphabet] = None, allow_star: bool = False) -> Word:
    p = _Parser(src, alphabet, allow_star)
    w = p.word()
    p.finish()
    return w


def parse_star_word(src: str, alphabet: Optional[Alphabet] = None) -> StarWord:
    w = parse_word(src, alphabet, allow_star=True)
    return StarWord(w)


def parse_tree(src: str, alphabet: Optional[Alphabet] = None, allow_star: bool = False) -> Tree:
    p = _Parser(src, alphabet, allow_star)
    t = p.tree()
    p.finish()
    return t
