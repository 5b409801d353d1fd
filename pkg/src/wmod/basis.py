"""Monomial bases indexed by semigroup elements.

Every selection below uses one rule: among the monomials of a given weight,
take the one whose ascending list of parts is lexicographically smallest.
Over the minimal generators this gives the shrunk basis used by the
unfolding; over the canonical generators ``0 = n_0 < ... < n_{g-1}`` with
degree padding by ``X0`` it gives the bases of the spaces Delta_n.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Dict, List, Optional, Tuple

from .errors import Hyperelliptic, NotAMember, NotSymmetric, OutOfRange
from .presentation import ExponentVector, factorization_tuples, minimal_presentation
from .semigroup import (NumericalSemigroup, canonical_generators, is_hyperelliptic,
                        is_symmetric)


def _parts_key(gens, exps):
    out = []
    for a, e in zip(gens, exps):
        out.extend([a] * e)
    return out


@lru_cache(maxsize=None)
def _shrunk(gens: Tuple[int, ...], m: int) -> Tuple[int, ...]:
    facts = factorization_tuples(gens, m)
    if not facts:
        raise NotAMember(f"{m} is not in the semigroup generated by {gens}")
    return min(facts, key=lambda f: _parts_key(gens, f))


def shrunk_representative(S: NumericalSemigroup, m: int) -> ExponentVector:
    """The basis monomial of weight ``m`` in the minimal-generator variables.

    >>> from wmod.semigroup import from_generators
    >>> str(shrunk_representative(from_generators([4, 7, 10]), 14))
    'X4*X10'
    """
    if m not in S:
        raise NotAMember(f"{m} is not a member of {S}")
    gens = S.minimal_generators
    return ExponentVector(_shrunk(gens, m), gens)


@dataclass(frozen=True)
class ShrunkBasis:
    semigroup: NumericalSemigroup
    bound: int
    table: Dict[int, ExponentVector]

    def __getitem__(self, m: int) -> ExponentVector:
        return self.table[m]


def shrunk_basis(S: NumericalSemigroup, bound: Optional[int] = None) -> ShrunkBasis:
    if bound is None:
        weights = minimal_presentation(S).weights()
        bound = max(weights) - 1 if weights else 0
    table = {m: shrunk_representative(S, m) for m in S.members(bound)}
    return ShrunkBasis(S, bound, table)


@dataclass(frozen=True)
class CanonicalDeltaBasis:
    degree: int
    elements: Dict[int, ExponentVector]

    def __len__(self):
        return len(self.elements)


def _require_canonical(S: NumericalSemigroup):
    if not is_symmetric(S):
        raise NotSymmetric(f"{S} is not symmetric")
    if is_hyperelliptic(S):
        raise Hyperelliptic(f"{S} is hyperelliptic")


def delta_basis(S: NumericalSemigroup, n: int) -> CanonicalDeltaBasis:
    """One degree-``n`` monomial in the canonical variables per member ``s <= n(2g-2)``."""
    _require_canonical(S)
    if n < 2:
        raise ValueError("degree must be at least 2")
    canon = tuple(canonical_generators(S))
    top = n * (2 * S.genus - 2)
    chosen: Dict[int, Tuple[int, ...]] = {}
    # combinations_with_replacement yields sorted tuples in lexicographic order,
    # so the first hit for each weight is the minimal one
    for parts in combinations_with_replacement(canon, n):
        w = sum(parts)
        if w <= top and w not in chosen:
            chosen[w] = parts
    elements = {}
    for w in sorted(chosen):
        exps = tuple(chosen[w].count(c) for c in canon)
        elements[w] = ExponentVector(exps, canon)
    return CanonicalDeltaBasis(n, elements)


def canonical_ideal_dimension(S: NumericalSemigroup, n: int) -> int:
    """``dim`` of the degree-``n`` forms vanishing on the canonical monomial curve."""
    return comb(n + S.genus - 1, n) - len(delta_basis(S, n))


def decompositions_two(S: NumericalSemigroup, s: int) -> List[Tuple[int, int]]:
    """Pairs ``a <= b`` of nongaps ``<= 2g-2`` with ``a + b = s``, by ``a``."""
    if not is_symmetric(S):
        raise NotSymmetric(f"{S} is not symmetric")
    top = 2 * S.genus - 2
    if s not in S or s > 2 * top:
        raise OutOfRange(f"{s} is not a member in [0, {2 * top}]")
    canon = canonical_generators(S) if S.genus else [0]
    canon_set = set(canon)
    return [(a, s - a) for a in canon if a <= s - a and s - a in canon_set]
