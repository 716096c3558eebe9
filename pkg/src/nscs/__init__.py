"""Factorization invariants of numerical semigroups generated by compound sequences."""

from nscs.compound import CompoundSequence, GeneratorList, detect, from_pairs, is_compound
from nscs.errors import (
    DomainNegative,
    InvalidInput,
    NotCompound,
    NotInSemigroup,
    NSCSError,
    Overflow,
    WorkBudgetExceeded,
)

__version__ = "0.1.0"

__all__ = [
    "CompoundSequence",
    "GeneratorList",
    "detect",
    "from_pairs",
    "is_compound",
    "NSCSError",
    "InvalidInput",
    "Overflow",
    "DomainNegative",
    "NotCompound",
    "NotInSemigroup",
    "WorkBudgetExceeded",
]
