import pytest

from wmod.canonical import (canonical_curve, canonical_guard, canonical_quadrics, find_syzygy,
                            is_excluded, shrink, syzygy_targets, verify_shrunk_syzygy)
from wmod.errors import ExcludedTarget, GuardViolation, NotCompleteIntersection
from wmod.poly import Poly
from wmod.presentation import is_complete_intersection
from wmod.semigroup import enumerate_semigroups, from_generators

S7 = from_generators([4, 7, 10])
CANON = (0, 4, 7, 8, 10, 11, 12)


def _x(n):
    return Poly.monomial(CANON, [int(c == n) for c in CANON])


def test_curve_coordinates():
    C = canonical_curve(S7)
    assert C.nongaps == CANON
    assert C.exponent_pairs[0] == (0, 12) and C.exponent_pairs[-1] == (12, 0)
    assert all(a + b == 12 for a, b in C.exponent_pairs)


def test_quadrics_vanish_on_curve():
    C = canonical_curve(S7)
    assert all(C.vanishes(q.polynomial(CANON)) for q in canonical_quadrics(S7))
    assert not C.vanishes(_x(4) * _x(4))


@pytest.mark.parametrize("gens, reason", [((4, 5), "<4,5>"), ((3, 7), "n1=3"), ((2, 9), "hyperelliptic"),
                                          ((3, 4, 5), "not symmetric"), ((6, 7, 8, 9, 10), "n1=g")])
def test_guards(gens, reason):
    with pytest.raises(GuardViolation) as info:
        canonical_guard(from_generators(gens))
    assert info.value.reason == reason


def test_guard_6_7_8():
    S = from_generators([6, 7, 8])
    assert (S.genus, S.multiplicity) == (9, 6)
    canonical_guard(S)


def test_quadric_counts():
    for g in range(4, 10):
        for S in enumerate_semigroups(g, symmetric=True):
            try:
                canonical_guard(S)
            except GuardViolation:
                continue
            assert len(canonical_quadrics(S)) == (g - 2) * (g - 3) // 2
            assert len(syzygy_targets(S)) == (g - 2) * (g - 5) // 2


def test_excluded_target_raises():
    with pytest.raises(ExcludedTarget):
        find_syzygy(S7, (12, 2))


def test_certificates_expand_to_zero_and_use_signs_only():
    for q in syzygy_targets(S7):
        cert = find_syzygy(S7, q)
        assert cert.expand(CANON).is_zero()
        assert cert.terms[0].n == 12 and cert.terms[0].eps == 1 and cert.terms[0].quadric == q
        assert all(t.eps in (-1, 1) and t.n + t.quadric.s == q.s + 12 for t in cert.terms)


def test_shrink_images():
    assert str(shrink(S7, _x(8))) == "X4^2"
    assert str(shrink(S7, _x(12))) == "X4^3"
    assert str(shrink(S7, _x(11))) == "X4*X7"
    assert str(shrink(S7, Poly.constant(CANON, 5))) == "5"
    q14 = next(q for q in canonical_quadrics(S7) if q.label == "F_{14,1}")
    assert str(shrink(S7, q14.polynomial(CANON))) == "X7^2 - X4*X10"


def test_shrink_is_multiplicative_and_kills_certificates():
    qs = canonical_quadrics(S7)
    for a in qs[:4]:
        for b in qs[3:7]:
            f, g = a.polynomial(CANON), b.polynomial(CANON) + _x(7)
            assert shrink(S7, f * g) == shrink(S7, f) * shrink(S7, g)
    for q in syzygy_targets(S7):
        assert shrink(S7, find_syzygy(S7, q).expand(CANON)).is_zero()


def test_shrink_preserves_weight():
    for q in canonical_quadrics(S7):
        image = shrink(S7, q.polynomial(CANON))
        assert image.is_zero() or image.term_weights() == [q.s]


def test_trace_for_f14():
    cert = find_syzygy(S7, (14, 2))
    trace = verify_shrunk_syzygy(S7, cert)
    assert trace.coefficientwise_zero
    assert trace.lines[-1] == "G1: X4^3 - X4^3 = 0"


def test_all_zero_images_give_empty_trace():
    cert = find_syzygy(S7, (8, 2))
    assert verify_shrunk_syzygy(S7, cert).lines == []


def test_verification_requires_ci():
    for g in range(6, 10):
        for S in enumerate_semigroups(g, symmetric=True):
            try:
                canonical_guard(S)
            except GuardViolation:
                continue
            if not is_complete_intersection(S) and syzygy_targets(S):
                cert = find_syzygy(S, syzygy_targets(S)[0])
                with pytest.raises(NotCompleteIntersection):
                    verify_shrunk_syzygy(S, cert)
                return
    pytest.fail("no guarded non-CI symmetric semigroup found")
