"""Graded T^1 of a complete-intersection monomial curve.

For a complete intersection the normal module is free on the relations, so
in degree ``d`` the space T^1_d is the cokernel of

    k^{ {i : a_i + d in S} }  ->  k^{ {j : s_j + d in S} },

whose matrix holds the integer coefficients of dG_j/dX_i restricted to the
curve (each such restriction is a single power of ``t``).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, NamedTuple, Optional, Tuple

from . import linalg
from .errors import NonVanishingTail, NotCompleteIntersection
from .presentation import (ToricPresentation, char_is_admissible, check_characteristic,
                           minimal_presentation)
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class ScalarField:
    characteristic: int = 0

    def __post_init__(self):
        check_characteristic(self.characteristic)

    def rank(self, rows) -> int:
        return linalg.rank(rows, self.characteristic)

    def __str__(self):
        return "Q" if self.characteristic == 0 else f"F_{self.characteristic}"


QQ = ScalarField(0)


@dataclass(frozen=True)
class JacobianOnCurve:
    presentation: ToricPresentation
    # entries[j][i] = (coefficient, weight); weight is None when the coefficient is 0
    entries: Tuple[Tuple[Tuple[int, Optional[int]], ...], ...]

    def coefficients(self) -> List[List[int]]:
        return [[c for c, _ in row] for row in self.entries]


def jacobian_on_curve(P: ToricPresentation) -> JacobianOnCurve:
    if not P.is_complete_intersection:
        raise NotCompleteIntersection(f"{P.semigroup} needs {len(P.generators)} relations, "
                                      f"not {len(P.variables) - 1}")
    rows = []
    for G in P.generators:
        row = []
        for i, a in enumerate(P.variables):
            c = G.plus.exponents[i] - G.minus.exponents[i]
            row.append((c, G.weight - a) if c else (0, None))
        rows.append(tuple(row))
    return JacobianOnCurve(P, tuple(rows))


class GradedPiece(NamedTuple):
    ambient: int
    rank: int
    dim: int


def graded_block(J: JacobianOnCurve, d: int):
    """Row indices, column indices and integer matrix of the degree-``d`` map."""
    S = J.presentation.semigroup
    rows = [j for j, G in enumerate(J.presentation.generators) if G.weight + d in S]
    cols = [i for i, a in enumerate(J.presentation.variables) if a + d in S]
    coeffs = J.coefficients()
    return rows, cols, [[coeffs[j][i] for i in cols] for j in rows]


def t1_graded_piece(J: JacobianOnCurve, d: int, F: ScalarField = QQ) -> GradedPiece:
    rows, cols, M = graded_block(J, d)
    rk = F.rank(M) if rows and cols else 0
    return GradedPiece(len(rows), rk, len(rows) - rk)


@dataclass
class GradedT1Report:
    by_degree: Dict[int, int]
    negative_dim: int
    nonnegative_dim: int
    tjurina: int
    coordinate_weights: List[int]
    characteristic: int = 0
    warnings: List[str] = field(default_factory=list)

    def to_json(self):
        return {
            "by_degree": [[d, n] for d, n in sorted(self.by_degree.items())],
            "negative_dim": self.negative_dim,
            "nonnegative_dim": self.nonnegative_dim,
            "tjurina": self.tjurina,
            "coordinate_weights": list(self.coordinate_weights),
            "characteristic": self.characteristic,
            "warnings": list(self.warnings),
        }


def degree_window(P: ToricPresentation) -> Tuple[int, int]:
    top = max(P.weights())
    return -top, P.semigroup.conductor + top


def t1_report(S: NumericalSemigroup, F: ScalarField = QQ) -> GradedT1Report:
    """Dimensions of every graded piece of T^1 and their negative/nonnegative split."""
    P = minimal_presentation(S)
    J = jacobian_on_curve(P)
    warnings = []
    if not char_is_admissible(P, F.characteristic):
        warnings.append(f"characteristic {F.characteristic} divides an exponent of the presentation")
    if not P.generators:
        return GradedT1Report({}, 0, 0, 0, [], F.characteristic, warnings)
    lo, hi = degree_window(P)
    # past the conductor every slot is present, so the full matrix must have full row rank
    full = J.coefficients()
    if F.rank(full) != len(full):
        raise NonVanishingTail(f"Jacobian of {S} drops rank over {F}; T^1 is infinite-dimensional")
    by_degree = {}
    for d in range(lo, hi + 1):
        piece = t1_graded_piece(J, d, F)
        if piece.dim:
            by_degree[d] = piece.dim
    if by_degree and (min(by_degree) < lo or max(by_degree) >= hi):
        raise NonVanishingTail(f"T^1 of {S} reaches the edge of the scanned window")
    neg = sum(n for d, n in by_degree.items() if d < 0)
    nonneg = sum(n for d, n in by_degree.items() if d >= 0)
    weights = [-d for d in sorted(by_degree, reverse=True) if d < 0 for _ in range(by_degree[d])]
    return GradedT1Report(by_degree, neg, nonneg, neg + nonneg, weights, F.characteristic, warnings)
