"""Words, orders, Lyndon-Shirshov bases and Lie polynomials over Q(a)."""

from .scalar import Scalar, PARAMETER
from .words import (Alphabet, DEFAULT_ALPHABET, HOLE, Leaf, Letter, Occurrence, Op, OpNode, Pair, STAR, StarWord,
                    TRIVIAL_STAR_WORD, Tree, Word, forget, occurrences, parse_star_word, parse_tree, parse_word,
                    placements)
from .order import Cmp, MonomialOrder, OrderKind, compare_dl, compare_dt, lex_compare
from .lyndon import (enumerate_alsbw, is_alsbw, is_alsw, is_nlsbw, is_nlsw, lyndon_factorization, nlsbw_of,
                     shirshov_bracketing)
from .lie import AssocPoly, LiePoly, bracket, expand, from_assoc, make_monic, op_apply

__all__ = [
    "Scalar", "PARAMETER", "Alphabet", "DEFAULT_ALPHABET", "HOLE", "Leaf", "Letter", "Occurrence", "Op", "OpNode",
    "Pair", "STAR", "StarWord", "TRIVIAL_STAR_WORD", "Tree", "Word", "forget", "occurrences", "parse_star_word",
    "parse_tree", "parse_word", "placements", "Cmp", "MonomialOrder", "OrderKind", "compare_dl", "compare_dt",
    "lex_compare", "enumerate_alsbw", "is_alsbw", "is_alsw", "is_nlsbw", "is_nlsw", "lyndon_factorization",
    "nlsbw_of", "shirshov_bracketing", "AssocPoly", "LiePoly", "bracket", "expand", "from_assoc", "make_monic",
    "op_apply"
]
