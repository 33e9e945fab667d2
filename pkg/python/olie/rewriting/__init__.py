from .sword import SWord, special_sword
from .compositions import Composition, CompositionKind, compositions, including_compositions, intersection_compositions
from .reduction import (CDReport, NoRules, Reduction, ReductionStep, RuleMatch, cd_dimension_check, is_trivial, reduce,
                        reduce_composition)

__all__ = [
    "SWord", "special_sword", "Composition", "CompositionKind", "compositions", "including_compositions",
    "intersection_compositions", "CDReport", "NoRules", "Reduction", "ReductionStep", "RuleMatch",
    "cd_dimension_check", "is_trivial", "reduce", "reduce_composition"
]
