"""Unfolded equations of C_H and their normal form.

Each relation ``G`` of weight ``s`` is perturbed by one coefficient
``c_{s,m}`` per member ``m < s``, attached to the shrunk basis monomial of
weight ``m``; ``c_{s,m}`` has weight ``s - m``.  Coordinate changes
``X_a -> X_a + (lower weight monomial)`` act on these coefficients, and the
slots they can clear are normalized to zero.  What is left spans the
moduli coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Dict, List, Tuple

from . import linalg
from .basis import shrunk_representative
from .cotangent import QQ, ScalarField, t1_report
from .errors import (DegenerateNormalization, Hyperelliptic, InadmissibleCharacteristic,
                     NotCompleteIntersection, NotSymmetric)
from .poly import Poly, format_monomial
from .presentation import ExponentVector, ToricPresentation, char_is_admissible, minimal_presentation
from .semigroup import NumericalSemigroup, is_hyperelliptic, is_symmetric

FREE = "free"
NORMALIZED = "normalized_to_zero"


@dataclass(frozen=True)
class UnfoldCoefficient:
    relation_weight: int
    monomial_weight: int
    monomial: ExponentVector
    status: str = FREE

    @property
    def weight(self) -> int:
        return self.relation_weight - self.monomial_weight

    @property
    def name(self) -> str:
        return f"c_{{{self.relation_weight},{self.monomial_weight}}}"

    def to_json(self):
        return {"s": self.relation_weight, "m": self.monomial_weight,
                "weight": self.weight, "status": self.status}


@dataclass(frozen=True)
class UnfoldedSystem:
    presentation: ToricPresentation
    coefficients: Tuple[Tuple[UnfoldCoefficient, ...], ...]
    complete_intersection: bool
    characteristic: int = 0

    @property
    def moduli_coordinates(self) -> List[UnfoldCoefficient]:
        return [c for group in self.coefficients for c in group if c.status == FREE]

    def all_coefficients(self) -> List[UnfoldCoefficient]:
        return [c for group in self.coefficients for c in group]

    def free_weights(self) -> List[int]:
        return sorted(c.weight for c in self.moduli_coordinates)

    def render(self, free_only: bool = True) -> List[str]:
        """One line per relation, e.g. ``X10^2 - X4^5 - c_{20,0} - c_{20,4}*X4 - ...``."""
        lines = []
        gens = self.presentation.variables
        for G, group in zip(self.presentation.generators, self.coefficients):
            text = f"{G.plus} - {G.minus}"
            for c in sorted(group, key=lambda c: -c.monomial_weight):
                if free_only and c.status != FREE:
                    continue
                mono = format_monomial(gens, c.monomial.exponents)
                text += f" - {c.name}" if mono == "1" else f" - {c.name}*{mono}"
            lines.append(text)
        return lines

    def to_json(self):
        return [c.to_json() for c in self.all_coefficients()]


def unfold(P: ToricPresentation) -> UnfoldedSystem:
    S = P.semigroup
    groups = []
    for G in P.generators:
        groups.append(tuple(UnfoldCoefficient(G.weight, m, shrunk_representative(S, m))
                            for m in S.members(G.weight - 1)))
    return UnfoldedSystem(P, tuple(groups), P.is_complete_intersection)


@dataclass(frozen=True)
class TrivialAction:
    degree: int
    rows: Tuple[int, ...]   # relation indices j: the slot c_{s_j, s_j + d}
    cols: Tuple[int, ...]   # generator indices i: the substitution X_{a_i} -> X_{a_i} + eps*Z_{a_i+d}
    matrix: Tuple[Tuple[int, ...], ...]
    characteristic: int = 0

    @property
    def rank(self) -> int:
        return linalg.rank(self.matrix, self.characteristic) if self.rows and self.cols else 0


def _reduce_to_basis(S: NumericalSemigroup, poly: Poly) -> Dict[int, int]:
    """Normal form modulo the toric ideal: every monomial collapses onto the
    basis monomial of its weight.  Returned as weight -> coefficient."""
    out: Dict[int, int] = {}
    for e, c in poly.terms.items():
        w = poly.weight_of(e)
        out[w] = out.get(w, 0) + c
    return {w: c for w, c in out.items() if c}


def trivial_action_matrix(P: ToricPresentation, d: int, F: ScalarField = QQ) -> TrivialAction:
    """First-order action of the degree-``d`` substitutions on the unfold slots."""
    if d >= 0:
        raise ValueError("only weight-lowering substitutions (d < 0) act on the unfolding")
    S = P.semigroup
    gens = P.variables
    rows = tuple(j for j, G in enumerate(P.generators) if G.weight + d in S)
    cols = tuple(i for i, a in enumerate(gens) if a + d in S)
    polys = [G.poly() for G in P.generators]
    matrix = []
    for j in rows:
        row = []
        for i in cols:
            Z = shrunk_representative(S, gens[i] + d).poly()
            image = _reduce_to_basis(S, polys[j].derivative(i) * Z)
            c = image.get(P.generators[j].weight + d, 0)
            row.append(c % F.characteristic if F.characteristic else c)
        matrix.append(tuple(row))
    return TrivialAction(d, rows, cols, tuple(matrix), F.characteristic)


def _pivot_slots(P: ToricPresentation, F: ScalarField):
    """(degree, relation index) of every slot cleared by some substitution."""
    slots = set()
    total_rank = 0
    lo = -max(P.weights()) if P.generators else 0
    for d in range(lo, 0):
        block = trivial_action_matrix(P, d, F)
        if not block.rows or not block.cols:
            continue
        # greedy rows in relation order: a slot is cleared iff its row is
        # independent of the rows of lower-index relations already cleared
        kept = linalg.independent_rows(block.matrix, F.characteristic)
        total_rank += len(kept)
        for k in kept:
            slots.add((d, block.rows[k]))
    return slots, total_rank


def trivial_action_rank(P: ToricPresentation, F: ScalarField = QQ) -> int:
    return _pivot_slots(P, F)[1]


def normalize(U: UnfoldedSystem, F: ScalarField = QQ) -> UnfoldedSystem:
    P = U.presentation
    if not char_is_admissible(P, F.characteristic):
        if _pivot_slots(P, F)[1] < _pivot_slots(P, QQ)[1]:
            raise DegenerateNormalization(
                f"characteristic {F.characteristic} divides an exponent and the trivial action loses rank")
    slots, _ = _pivot_slots(P, F)
    groups = []
    for j, group in enumerate(U.coefficients):
        groups.append(tuple(replace(c, status=NORMALIZED if (-c.weight, j) in slots else FREE)
                            for c in group))
    return UnfoldedSystem(P, tuple(groups), U.complete_intersection, F.characteristic)


@dataclass
class ModuliReport:
    semigroup: NumericalSemigroup
    weights: List[int]
    system: UnfoldedSystem

    @property
    def dimension(self) -> int:
        return len(self.weights) - 1

    def weighted_projective_space(self) -> str:
        return "P(" + ",".join(map(str, self.weights)) + ")"

    def equations(self) -> List[str]:
        return self.system.render()

    def to_json(self):
        return {"dimension": self.dimension, "weights": list(self.weights),
                "space": self.weighted_projective_space(), "equations": self.equations(),
                "coefficients": self.system.to_json()}


def moduli_guard(S: NumericalSemigroup, F: ScalarField = QQ) -> ToricPresentation:
    if not is_symmetric(S):
        raise NotSymmetric(f"{S} is not symmetric")
    if is_hyperelliptic(S):
        raise Hyperelliptic(f"{S} is hyperelliptic")
    P = minimal_presentation(S)
    if not P.is_complete_intersection:
        raise NotCompleteIntersection(f"{S} is not a complete intersection")
    if not char_is_admissible(P, F.characteristic):
        raise InadmissibleCharacteristic(
            f"characteristic {F.characteristic} divides an exponent of the presentation of {S}")
    return P


def moduli_report(S: NumericalSemigroup, F: ScalarField = QQ) -> ModuliReport:
    """The weighted projective space P(T^{1,-}) with its coordinate weights."""
    P = moduli_guard(S, F)
    system = normalize(unfold(P), F)
    return ModuliReport(S, system.free_weights(), system)


def consistency_check(S: NumericalSemigroup, F: ScalarField = QQ) -> bool:
    """Free unfold coefficients and T^{1,-} agree in count and weights."""
    system = normalize(unfold(minimal_presentation(S)), F)
    return system.free_weights() == t1_report(S, F).coordinate_weights
