"""
Lyndon-Shirshov words and their standard bracketings, with the operator
treated as a prime former: ``P(w)`` behaves as one letter wherever it
occurs, and its payload is bracketed recursively.

A word is associative Lyndon-Shirshov (ALSW) when it is strictly greater,
in the prefix-greater lexicographic order, than each of its proper
suffixes. Adding the requirement that every operator payload be one as well
gives the ALSBW words; their standard bracketings (NLSBW) form a linear
basis of the free operated Lie algebra.
"""
from __future__ import annotations

import functools
from typing import Callable, List, Optional, Sequence, Tuple, Union

from .errors import NotALyndonWordError
from .order import Cmp, MonomialOrder, lex_compare
from .words import Leaf, Letter, Op, OpNode, Pair, Prime, Tree, Word, forget

Shape = Union[int, Tuple["Shape", "Shape"]]


def is_alsw(primes: Sequence[Prime], prime_key) -> bool:
    n = len(primes)
    if n == 0:
        return False
    for k in range(1, n):
        if lex_compare(primes, primes[k:], prime_key) is not Cmp.GT:
            return False
    return True


@functools.lru_cache(maxsize=None)
def is_alsbw(w: Word, order: MonomialOrder) -> bool:
    if not is_alsw(w.primes, order.prime_key):
        return False
    return all(is_alsbw(p.payload, order) for p in w.primes if isinstance(p, Op))


def standard_split(primes: Sequence[Prime], prime_key) -> int:
    """Index where the longest proper ALSW suffix starts."""
    for k in range(1, len(primes)):
        if is_alsw(primes[k:], prime_key):
            return k
    raise NotALyndonWordError(f"{Word(primes)} has no proper Lyndon-Shirshov suffix")


def standard_shape(primes: Sequence[Prime], prime_key, lo: int = 0) -> Shape:
    """Standard bracketing over prime positions ``lo .. lo+len(primes)``."""
    if len(primes) == 1:
        return lo
    k = standard_split(primes, prime_key)
    return (standard_shape(primes[:k], prime_key, lo), standard_shape(primes[k:], prime_key, lo + k))


def build_tree(shape: Shape, leaf: Callable[[int], Tree]) -> Tree:
    if isinstance(shape, int):
        return leaf(shape)
    return Pair(build_tree(shape[0], leaf), build_tree(shape[1], leaf))


def shirshov_bracketing(w: Word, order: MonomialOrder, bracket_prime: Optional[Callable[[Prime], Tree]] = None) -> Tree:
    """
    Standard bracketing of an ALSW word, primes treated as letters. By
    default operated primes are bracketed inside as NLSBW trees.
    """
    if not is_alsw(w.primes, order.prime_key):
        raise NotALyndonWordError(f"{w} is not a Lyndon-Shirshov word under {order.name}")
    if bracket_prime is None:
        bracket_prime = functools.partial(_bracket_prime, order=order)
    shape = standard_shape(w.primes, order.prime_key)
    return build_tree(shape, lambda i: bracket_prime(w.primes[i]))


def _bracket_prime(p: Prime, order: MonomialOrder) -> Tree:
    if isinstance(p, Letter):
        return Leaf(p.symbol)
    return OpNode(nlsbw_of(p.payload, order))


@functools.lru_cache(maxsize=None)
def nlsbw_of(w: Word, order: MonomialOrder) -> Tree:
    if not is_alsbw(w, order):
        raise NotALyndonWordError(f"{w} is not a Lyndon-Shirshov bracketed word under {order.name}")
    return shirshov_bracketing(w, order)


def is_nlsw(t: Tree, order: MonomialOrder) -> bool:
    """Top-level test; operated subtrees count as primes and are not inspected."""
    if not isinstance(t, Pair):
        return True
    if not is_alsw(forget(t).primes, order.prime_key):
        return False
    if not (is_nlsw(t.left, order) and is_nlsw(t.right, order)):
        return False
    if isinstance(t.left, Pair):
        if order.lex(forget(t.right).primes, forget(t.left.right).primes) is Cmp.LT:
            return False
    return True


def is_nlsbw(t: Tree, order: MonomialOrder) -> bool:
    if isinstance(t, Leaf):
        return order.alphabet.rank(t.symbol) is not None
    if isinstance(t, OpNode):
        return is_nlsbw(t.child, order)
    return is_nlsw(t, order) and is_nlsbw(t.left, order) and is_nlsbw(t.right, order)


def lyndon_factorization(primes: Sequence[Prime], prime_key) -> List[Tuple[Prime, ...]]:
    """Factor into ALSW words, nondecreasing; each factor is the longest ALSW prefix of what is left."""
    out = []
    rest = tuple(primes)
    while rest:
        for k in range(len(rest), 0, -1):
            if is_alsw(rest[:k], prime_key):
                out.append(rest[:k])
                rest = rest[k:]
                break
    return out


def enumerate_alsbw(order: MonomialOrder, max_deg: int, max_odeg: Optional[int] = None,
                    max_dep: Optional[int] = None) -> List[Word]:
    """All ALSBW words within the bounds, greatest first."""
    if max_odeg is None:
        max_odeg = max_deg
    if max_dep is None:
        max_dep = max_deg
    letters = [Letter(s) for s in order.alphabet]
    found: set = set()
    for _ in range(max_dep + 1):
        primes = letters + [Op(w) for w in found if w.deg + 1 <= max_deg and w.odeg + 1 <= max_odeg]
        primes.sort(key=order.prime_key, reverse=True)
        current = set(_alsw_sequences(primes, max_deg, max_odeg, order.prime_key))
        if current == found:
            break
        found = current
    return order.sorted(found)


def _alsw_sequences(primes: List[Prime], max_deg: int, max_odeg: int, prime_key):
    degs = [(p, Word((p, )).deg, Word((p, )).odeg, prime_key(p)) for p in primes]

    def extend(seq, head_key, d, o):
        if is_alsw(seq, prime_key):
            yield Word(seq)
        for p, pd, po, pk in degs:
            # the first prime of a Lyndon-Shirshov word dominates every later one
            if pk > head_key or d + pd > max_deg or o + po > max_odeg:
                continue
            yield from extend(seq + (p, ), head_key, d + pd, o + po)

    for p, pd, po, pk in degs:
        if pd <= max_deg and po <= max_odeg:
            yield from extend((p, ), pk, pd, po)
