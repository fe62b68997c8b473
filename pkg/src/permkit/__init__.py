"""Permutations, ranking and small permutation groups."""

from permkit.cycleparser import format, parse
from permkit.errors import (
    GroupTooLarge,
    MalformedCycle,
    NotABijection,
    ParseError,
    PermError,
    RankOutOfRange,
    SizeTooSmall,
)
from permkit.groups import Group, commutator_subgroup
from permkit.perms import Perm, compose, from_array, from_cycles, gcd, identity, lcm
from permkit.ranking import (
    inversion_vector,
    make_rng,
    random_perm,
    rank_lex,
    rank_mr,
    unrank_lex,
    unrank_mr,
)

__version__ = "0.1.0"
