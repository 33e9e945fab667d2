"""olie: Gröbner-Shirshov bases for operated Lie algebras"""
__version__ = '0.1.0'

# isort: off
from .errors import OlieError
from .algebra import (Alphabet, Cmp, LiePoly, MonomialOrder, OrderKind, Scalar, StarWord, Tree, Word, bracket,
                      enumerate_alsbw, is_alsbw, nlsbw_of, op_apply, parse_tree, parse_word)
from .rewriting import compositions, cd_dimension_check, is_trivial, reduce, special_sword
from .identities import OLPI, RuleSet, catalog, get, instantiate
from .runtime.checker import GSReport, check_gs
from .runtime.config import Bounds, Config
# isort: on

__all__ = [
    "OlieError",
    "Alphabet",
    "Cmp",
    "LiePoly",
    "MonomialOrder",
    "OrderKind",
    "Scalar",
    "StarWord",
    "Tree",
    "Word",
    "bracket",
    "enumerate_alsbw",
    "is_alsbw",
    "nlsbw_of",
    "op_apply",
    "parse_tree",
    "parse_word",
    "compositions",
    "cd_dimension_check",
    "is_trivial",
    "reduce",
    "special_sword",
    "OLPI",
    "RuleSet",
    "catalog",
    "get",
    "instantiate",
    "GSReport",
    "check_gs",
    "Bounds",
    "Config",
]
