"""Factorizations, Betti elements and the binomial presentation of C_H.

The ideal of the monomial curve ``t -> (t^a_1, ..., t^a_r)`` is generated by
binomials ``X^alpha - X^beta`` of equal weight.  A minimal set of such
generators is read off the factorization graphs of the Betti elements.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, List, Sequence, Tuple

from .errors import NotPrime
from .poly import Poly, format_monomial
from .semigroup import NumericalSemigroup, apery_set


@dataclass(frozen=True)
class ExponentVector:
    exponents: Tuple[int, ...]
    generators: Tuple[int, ...]

    @cached_property
    def weight(self) -> int:
        return sum(a * e for a, e in zip(self.generators, self.exponents))

    @cached_property
    def degree(self) -> int:
        return sum(self.exponents)

    def parts(self) -> List[int]:
        """Ascending list of generators, each repeated by its exponent."""
        out = []
        for a, e in zip(self.generators, self.exponents):
            out.extend([a] * e)
        return sorted(out)

    def support(self):
        return {i for i, e in enumerate(self.exponents) if e}

    def divides(self, other: "ExponentVector") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __add__(self, other):
        return ExponentVector(tuple(a + b for a, b in zip(self.exponents, other.exponents)), self.generators)

    def __sub__(self, other):
        return ExponentVector(tuple(a - b for a, b in zip(self.exponents, other.exponents)), self.generators)

    def poly(self, coeff=1) -> Poly:
        return Poly.monomial(self.generators, self.exponents, coeff)

    def to_json(self) -> Dict[str, int]:
        return {str(a): e for a, e in zip(self.generators, self.exponents)}

    def __str__(self):
        return format_monomial(self.generators, self.exponents)


@dataclass(frozen=True)
class IsobaricBinomial:
    plus: ExponentVector
    minus: ExponentVector
    weight: int

    def poly(self) -> Poly:
        return self.plus.poly() - self.minus.poly()

    def exponents(self) -> List[int]:
        return [e for e in self.plus.exponents + self.minus.exponents if e]

    def to_json(self):
        return {"plus": self.plus.to_json(), "minus": self.minus.to_json(), "weight": self.weight}

    def __str__(self):
        return f"{self.plus} - {self.minus}"


@dataclass(frozen=True)
class ToricPresentation:
    semigroup: NumericalSemigroup
    generators: Tuple[IsobaricBinomial, ...]
    betti_weights: Tuple[int, ...]

    @property
    def variables(self) -> Tuple[int, ...]:
        return self.semigroup.minimal_generators

    @property
    def is_complete_intersection(self) -> bool:
        return len(self.generators) == len(self.variables) - 1

    def weights(self) -> List[int]:
        return [G.weight for G in self.generators]

    def to_json(self):
        return [G.to_json() for G in self.generators]


@lru_cache(maxsize=None)
def _factorizations(gens: Tuple[int, ...], m: int, k: int) -> Tuple[Tuple[int, ...], ...]:
    # factorizations of m over gens[0..k]; recursion peels off the largest generator first
    if k == 0:
        return ((m // gens[0],),) if m % gens[0] == 0 else ()
    a = gens[k]
    out = []
    for e in range(m // a + 1):
        for f in _factorizations(gens, m - e * a, k - 1):
            out.append(f + (e,))
    return tuple(out)


def factorization_tuples(gens: Tuple[int, ...], m: int) -> List[Tuple[int, ...]]:
    if m < 0:
        return []
    return sorted(_factorizations(tuple(gens), m, len(gens) - 1))


def factorizations(S: NumericalSemigroup, m: int) -> List[ExponentVector]:
    """All ``alpha >= 0`` with ``sum a_i alpha_i = m``, lexicographic by exponents."""
    gens = S.minimal_generators
    return [ExponentVector(f, gens) for f in factorization_tuples(gens, m)]


def _components(facts: Sequence[Tuple[int, ...]]) -> List[List[Tuple[int, ...]]]:
    """Connected components of the factorization graph (edges: shared support)."""
    if not facts:
        return []
    r = len(facts[0])
    parent = list(range(len(facts) + r))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    # factorization k joins generator node len(facts)+i for every i in its support
    for k, f in enumerate(facts):
        for i, e in enumerate(f):
            if e:
                parent[find(k)] = find(len(facts) + i)
    comps: Dict[int, list] = {}
    for k, f in enumerate(facts):
        comps.setdefault(find(k), []).append(f)
    return sorted((sorted(c) for c in comps.values()), key=lambda c: c[0])


def betti_search_bound(S: NumericalSemigroup) -> int:
    ap = apery_set(S, S.multiplicity)
    return S.minimal_generators[-1] + max(ap)


def factorization_components(S: NumericalSemigroup, m: int) -> List[List[ExponentVector]]:
    gens = S.minimal_generators
    return [[ExponentVector(f, gens) for f in comp] for comp in _components(factorization_tuples(gens, m))]


def betti_elements(S: NumericalSemigroup) -> List[int]:
    """Members whose factorization graph is disconnected, ascending."""
    if S.embedding_dimension < 2:
        return []
    gens = S.minimal_generators
    out = []
    for m in range(gens[1], betti_search_bound(S) + 1):
        if m in S and len(_components(factorization_tuples(gens, m))) > 1:
            out.append(m)
    return out


@lru_cache(maxsize=4096)
def minimal_presentation(S: NumericalSemigroup, reverse: bool = False) -> ToricPresentation:
    """A minimal binomial generating set of the ideal of C_H.

    For each Betti element, every component of its factorization graph other
    than the one holding the least factorization contributes one binomial
    ``X^least - X^rep`` where ``rep`` is the component's least factorization.
    ``reverse=True`` swaps "least" for "greatest" throughout; it only exists
    to check that downstream results do not depend on the choice.
    """
    gens = S.minimal_generators
    binomials = []
    betti = []
    for m in betti_elements(S):
        comps = _components(factorization_tuples(gens, m))
        reps = sorted((max(c) if reverse else c[0]) for c in comps)
        if reverse:
            reps.reverse()
        anchor = ExponentVector(reps[0], gens)
        for rep in reps[1:]:
            binomials.append(IsobaricBinomial(anchor, ExponentVector(rep, gens), m))
            betti.append(m)
    return ToricPresentation(S, tuple(binomials), tuple(betti))


def is_complete_intersection(S: NumericalSemigroup) -> bool:
    return minimal_presentation(S).is_complete_intersection


def _is_prime(p: int) -> bool:
    from sympy import isprime

    return isprime(p)


def check_characteristic(p: int) -> int:
    if p < 0 or (p and not _is_prime(p)):
        raise NotPrime(f"characteristic must be 0 or a prime, got {p}")
    return p


def char_is_admissible(P: ToricPresentation, p: int) -> bool:
    """True iff ``p == 0`` or ``p`` divides no exponent of any generator."""
    check_characteristic(p)
    if p == 0:
        return True
    return all(e % p for G in P.generators for e in G.exponents())
