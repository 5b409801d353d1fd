"""Exact computations for numerical semigroups, their monomial curves and
the moduli of pointed Gorenstein curves with a given Weierstrass semigroup."""
from .canonical import (CanonicalQuadric, SyzygyCertificate, canonical_curve, canonical_quadrics,
                        find_syzygy, shrink, syzygy_targets, verify_shrunk_syzygy)
from .cotangent import QQ, ScalarField, t1_report
from .errors import DomainError, GuardViolation, UsageError, WmodError
from .presentation import (betti_elements, char_is_admissible, factorizations, is_complete_intersection,
                           minimal_presentation)
from .basis import decompositions_two, delta_basis, shrunk_basis, shrunk_representative
from .report import AnalysisReport, analyze
from .semigroup import (NumericalSemigroup, apery_set, buchweitz_screen, canonical_generators,
                        enumerate_semigroups, from_gaps, from_generators, is_hyperelliptic,
                        is_ordinary, is_symmetric, parse)
from .unfolding import moduli_report, normalize, trivial_action_rank, unfold

__version__ = "0.1.0"
