"""
Special s-words: a rule instance ``s`` placed inside a context ``q`` and
bracketed so that the result has leading word ``q<s̄>`` with coefficient 1.

The bracketing is found on the context alone. Starting from the standard
bracketing of ``w = q<s̄>``, the smallest subtree around the occurrence of
``s̄`` is rebracketed as a left-normed chain (occurrence first, then the
Lyndon-Shirshov factors of what follows it). A candidate is accepted only
when its expansion with the hole kept symbolic contains ``q`` with
coefficient ±1 and every other term drops below ``w`` once ``s̄`` is put in.
Candidates that fail fall back to other factorizations, then to every
bracketing of the context.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from ..algebra.lie import LiePoly, bracket, expand, op_apply
from ..algebra.lyndon import (Shape, is_alsbw, is_alsw, lyndon_factorization, nlsbw_of, standard_shape)
from ..algebra.order import MonomialOrder
from ..algebra.words import (HOLE, STAR, STAR_SYMBOL, Leaf, Letter, OpNode, Pair, Prime, StarWord, Tree, Word,
                             contains_hole)
from .errors import SWordConstructionError

# bracketing search gives up beyond this many atoms
MAX_EXHAUSTIVE_ATOMS = 8


@dataclass(frozen=True)
class SWord:
    placement: StarWord
    instance: LiePoly
    tree: Tree
    value: LiePoly

    @property
    def word(self) -> Word:
        return self.placement.substitute(self.instance.leading_word)


@functools.lru_cache(maxsize=1 << 14)
def special_sword(q: StarWord, s: LiePoly) -> SWord:
    order = s.order
    sbar, lc = s.leading()
    if lc != 1:
        raise SWordConstructionError(str(sbar), "rule instance is not monic")
    w = q.substitute(sbar)
    if not is_alsbw(w, order):
        raise SWordConstructionError(str(w), f"placing the leading word in {q} does not give an ALSBW word")
    if q.is_trivial:
        return SWord(q, s, HOLE, s)
    tree, sign = special_bracketing(q, sbar, order)
    value = evaluate(tree, s)
    if sign < 0:
        value = -value
    if not value or value.leading() != (w, 1):
        raise SWordConstructionError(str(w), f"bracketing {tree} does not lead with {w}")
    return SWord(q, s, tree, value)


@functools.lru_cache(maxsize=1 << 14)
def special_bracketing(q: StarWord, sbar: Word, order: MonomialOrder) -> Tuple[Tree, int]:
    """A bracketing of ``q`` with the hole as a leaf, and the sign that makes it lead with +1."""
    w = q.substitute(sbar)
    for tree in _candidates(q.word.primes, sbar, order):
        sign = _shape_sign(tree, q, sbar, w, order)
        if sign is not None:
            return tree, sign
    message = f"no special bracketing of {q} around {sbar}"
    if _search_truncated(q.word.primes):
        message += f" (exhaustive search skipped: more than {MAX_EXHAUSTIVE_ATOMS} atoms)"
    raise SWordConstructionError(str(w), message)


def evaluate(tree: Tree, s: LiePoly) -> LiePoly:
    """Put ``s`` in the hole and normalize."""
    if not contains_hole(tree):
        return LiePoly.from_tree(tree, s.order)
    if tree == HOLE:
        return s
    if isinstance(tree, OpNode):
        return op_apply(evaluate(tree.child, s))
    return bracket(evaluate(tree.left, s), evaluate(tree.right, s))


def _shape_sign(tree: Tree, q: StarWord, sbar: Word, w: Word, order: MonomialOrder) -> Optional[int]:
    wkey = order.key(w)
    cq = None
    for word, c in expand(tree).terms.items():
        if word == q.word:
            cq = c
        elif order.key(StarWord(word).substitute(sbar)) >= wkey:
            return None
    if cq == 1:
        return 1
    if cq == -1:
        return -1
    return None


def _prime_tree(p: Prime, order: MonomialOrder) -> Tree:
    if isinstance(p, Letter):
        return Leaf(p.symbol)
    return OpNode(nlsbw_of(p.payload, order))


def _candidates(qprimes: Tuple[Prime, ...], sbar: Word, order: MonomialOrder) -> Iterator[Tree]:
    i = next(k for k, p in enumerate(qprimes) if Word((p, )).count(STAR_SYMBOL))
    wprimes = StarWord(Word(qprimes)).substitute(sbar).primes
    if qprimes[i] == STAR:
        yield from _top_candidates(wprimes, i, i + sbar.breadth, order)
        return
    # the hole sits inside the operated prime at i
    shape = standard_shape(wprimes, order.prime_key)
    for inner in _candidates(qprimes[i].payload.primes, sbar, order):
        yield _build(shape, wprimes, order, {(i, i + 1): OpNode(inner)})


def _search_truncated(qprimes: Tuple[Prime, ...]) -> bool:
    i = next(k for k, p in enumerate(qprimes) if Word((p, )).count(STAR_SYMBOL))
    if qprimes[i] == STAR:
        return len(qprimes) > MAX_EXHAUSTIVE_ATOMS
    return _search_truncated(qprimes[i].payload.primes)


def _span(shape: Shape) -> Tuple[int, int]:
    if isinstance(shape, int):
        return shape, shape + 1
    return _span(shape[0])[0], _span(shape[1])[1]


def _cover(shape: Shape, i: int, j: int) -> Shape:
    """Smallest node whose span contains ``i:j``."""
    while not isinstance(shape, int):
        for child in shape:
            lo, hi = _span(child)
            if lo <= i and j <= hi:
                shape = child
                break
        else:
            return shape
    return shape


def _build(shape: Shape, wprimes: Sequence[Prime], order: MonomialOrder, replace: dict) -> Tree:
    """Tree of ``shape`` where the nodes whose spans are keys of ``replace`` become the given trees."""
    span = _span(shape)
    if span in replace:
        return replace[span]
    if isinstance(shape, int):
        return _prime_tree(wprimes[shape], order)
    return Pair(_build(shape[0], wprimes, order, replace), _build(shape[1], wprimes, order, replace))


def _factor_tree(primes: Sequence[Prime], order: MonomialOrder) -> Tree:
    shape = standard_shape(primes, order.prime_key)
    return _build(shape, primes, order, {})


def _top_candidates(wprimes: Tuple[Prime, ...], i: int, j: int, order: MonomialOrder) -> Iterator[Tree]:
    shape = standard_shape(wprimes, order.prime_key)
    node = _cover(shape, i, j)
    lo, hi = _span(node)
    if (lo, hi) == (i, j):
        yield _build(shape, wprimes, order, {(i, j): HOLE})
    elif lo == i:
        for factors in _alsw_factorizations(wprimes[j:hi], order.prime_key):
            chain: Tree = HOLE
            for f in factors:
                chain = Pair(chain, _factor_tree(f, order))
            yield _build(shape, wprimes, order, {(lo, hi): chain})
    atoms: List[Tree] = [_prime_tree(p, order) for p in wprimes[:i]] + [HOLE] + \
        [_prime_tree(p, order) for p in wprimes[j:]]
    if len(atoms) <= MAX_EXHAUSTIVE_ATOMS:
        yield from _all_bracketings(tuple(atoms))


def _alsw_factorizations(primes: Tuple[Prime, ...], prime_key) -> Iterator[Tuple[Tuple[Prime, ...], ...]]:
    first = tuple(lyndon_factorization(primes, prime_key))
    yield first
    n = len(primes)
    for cuts in itertools.product((False, True), repeat=max(n - 1, 0)):
        parts, start = [], 0
        for k, cut in enumerate(cuts, 1):
            if cut:
                parts.append(primes[start:k])
                start = k
        parts.append(primes[start:])
        parts = tuple(parts)
        if parts != first and all(is_alsw(p, prime_key) for p in parts):
            yield parts


def _all_bracketings(atoms: Tuple[Tree, ...]) -> Iterator[Tree]:
    if len(atoms) == 1:
        yield atoms[0]
        return
    for k in range(1, len(atoms)):
        for left in _all_bracketings(atoms[:k]):
            for right in _all_bracketings(atoms[k:]):
                yield Pair(left, right)

