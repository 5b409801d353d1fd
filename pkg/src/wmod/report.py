"""Assembling the per-semigroup analysis into one serializable report."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional

from .canonical import (canonical_quadrics, excluded_weights, find_syzygy, is_excluded,
                        syzygy_targets, verify_shrunk_syzygy)
from .cotangent import QQ, ScalarField, t1_report
from .errors import DomainError, GuardViolation
from .presentation import char_is_admissible, minimal_presentation
from .semigroup import NumericalSemigroup, is_hyperelliptic, is_ordinary, is_symmetric
from .unfolding import moduli_report

SCHEMA_VERSION = 1


def semigroup_block(S: NumericalSemigroup) -> Dict[str, Any]:
    return {
        "generators": list(S.minimal_generators),
        "genus": S.genus,
        "frobenius": S.frobenius,
        "symmetric": is_symmetric(S),
        "hyperelliptic": is_hyperelliptic(S),
        "ordinary": is_ordinary(S),
        "ci": minimal_presentation(S).is_complete_intersection,
    }


def presentation_block(S: NumericalSemigroup) -> List[Dict[str, Any]]:
    P = minimal_presentation(S)
    return [{"binomial": str(G), "weight": G.weight, **G.to_json()} for G in P.generators]


def canonical_block(S: NumericalSemigroup) -> Dict[str, Any]:
    """Quadrics, excluded targets and verified certificates (raises GuardViolation)."""
    quads = canonical_quadrics(S)
    certificates = []
    ci = minimal_presentation(S).is_complete_intersection
    for q in syzygy_targets(S):
        cert = find_syzygy(S, q)
        entry = {"target": q.label, "terms": cert.to_json(), "text": str(cert)}
        if ci:
            entry["trace"] = verify_shrunk_syzygy(S, cert).lines
        certificates.append(entry)
    return {
        "quadrics": [{"s": q.s, "i": q.i, "label": q.label, "binomial": str(q)} for q in quads],
        "excluded": [q.label for q in quads if is_excluded(S, q)],
        "excluded_weights": excluded_weights(S),
        "certificates": certificates,
    }


@dataclass
class AnalysisReport:
    semigroup: Dict[str, Any]
    presentation: List[Dict[str, Any]]
    t1: Optional[Dict[str, Any]] = None
    moduli: Optional[Dict[str, Any]] = None
    canonical: Optional[Dict[str, Any]] = None
    warnings: List[str] = field(default_factory=list)
    # why the moduli block is missing, as an error class name
    moduli_error: Optional[str] = None

    def to_json(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "AnalysisReport":
        return cls(**data)


def analyze(S: NumericalSemigroup, F: ScalarField = QQ, canonical: bool = False) -> AnalysisReport:
    report = AnalysisReport(semigroup_block(S), presentation_block(S))
    P = minimal_presentation(S)
    if P.is_complete_intersection:
        t1 = t1_report(S, F)
        report.t1 = t1.to_json()
        report.warnings.extend(t1.warnings)
    else:
        report.warnings.append("not a complete intersection: T^1 and moduli are not computed")
    if not P.is_complete_intersection:
        report.moduli_error = "NotCompleteIntersection"
    elif not char_is_admissible(P, F.characteristic):
        report.moduli_error = "InadmissibleCharacteristic"
        report.warnings.append("moduli omitted in this characteristic")
    else:
        try:
            report.moduli = moduli_report(S, F).to_json()
        except DomainError as exc:
            report.moduli_error = type(exc).__name__
    if canonical:
        try:
            report.canonical = canonical_block(S)
        except GuardViolation as exc:
            report.warnings.append(f"canonical model skipped: {exc}")
    return report


def render_text(report: AnalysisReport) -> str:
    sg = report.semigroup
    yn = {True: "yes", False: "no"}
    lines = [f"semigroup <{','.join(map(str, sg['generators']))}>",
             f"  genus {sg['genus']}  frobenius {sg['frobenius']}  symmetric {yn[sg['symmetric']]}  "
             f"hyperelliptic {yn[sg['hyperelliptic']]}  ordinary {yn[sg['ordinary']]}  ci {yn[sg['ci']]}",
             f"presentation ({len(report.presentation)} relations)"]
    for j, G in enumerate(report.presentation, 1):
        lines.append(f"  G{j}: {G['binomial']}   (weight {G['weight']})")
    if report.t1 is not None:
        t1 = report.t1
        field_name = "Q" if t1["characteristic"] == 0 else f"F_{t1['characteristic']}"
        lines.append(f"T^1 over {field_name}")
        lines.append("  " + "  ".join(f"{d}:{n}" for d, n in t1["by_degree"]))
        lines.append(f"  negative {t1['negative_dim']}  nonnegative {t1['nonnegative_dim']}  "
                     f"tjurina {t1['tjurina']}")
    if report.moduli is not None:
        m = report.moduli
        lines.append(f"moduli {m['space']}  dimension {m['dimension']}")
        lines.extend(f"  {eq}" for eq in m["equations"])
    elif report.moduli_error:
        lines.append(f"moduli unavailable ({report.moduli_error})")
    if report.canonical is not None:
        c = report.canonical
        lines.append(f"canonical quadrics ({len(c['quadrics'])})")
        lines.extend(f"  {q['label']} = {q['binomial']}" for q in c["quadrics"])
        lines.append("  excluded: " + ", ".join(c["excluded"]))
        for cert in c["certificates"]:
            lines.append(f"  {cert['text']}")
            lines.extend(f"    {t}" for t in cert.get("trace", []))
    for w in report.warnings:
        lines.append(f"warning: {w}")
    return "\n".join(lines)
