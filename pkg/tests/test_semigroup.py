import pytest
from hypothesis import given, settings, strategies as st

from oracles import frobenius_by_formula, gaps_of, semigroups_by_gap_subsets, sumset_count
from wmod.errors import (BoundExceeded, EmptyInput, GenusZero, NegativeInput, NonCoprime,
                         NotAMember, ParseError)
from wmod.semigroup import (apery_set, brute_force_semigroups, buchweitz_screen, canonical_generators,
                            enumerate_semigroups, from_gaps, from_generators, is_hyperelliptic,
                            is_ordinary, is_symmetric, is_symmetric_by_pairing, parse, read_batch)

coprime_gens = st.lists(st.integers(2, 30), min_size=2, max_size=4).filter(
    lambda g: __import__("math").gcd(*g) == 1)


def test_basic_invariants_4_7_10():
    S = from_generators([4, 7, 10])
    assert S.gaps == (1, 2, 3, 5, 6, 9, 13)
    assert (S.genus, S.frobenius, S.conductor) == (7, 13, 14)
    assert is_symmetric(S) and not is_hyperelliptic(S) and not is_ordinary(S)


def test_redundant_generators_are_dropped():
    assert from_generators([4, 7, 10, 11]).minimal_generators == (4, 7, 10)
    assert from_generators([1]).minimal_generators == (1,)
    assert from_generators([1]).genus == 0


@pytest.mark.parametrize("bad, exc", [([], EmptyInput), ([2, 4], NonCoprime), ([-1, 3], NegativeInput)])
def test_invalid_generators(bad, exc):
    with pytest.raises(exc):
        from_generators(bad)


def test_parse_and_batch():
    assert parse("4, 7,10").minimal_generators == (4, 7, 10)
    with pytest.raises(ParseError):
        parse("4,x")
    with pytest.raises(EmptyInput):
        parse(" , ")
    batch = read_batch(["# header", "", "4,7,10  # genus 7", "3,5"])
    assert [S.text() for S in batch] == ["4,7,10", "3,5"]


def test_negative_membership_query():
    with pytest.raises(NegativeInput):
        from_generators([3, 5]).is_member(-1)


@given(st.integers(2, 25), st.integers(2, 25))
def test_two_generator_formulas(a, b):
    if __import__("math").gcd(a, b) != 1:
        return
    S = from_generators([a, b])
    F, g = frobenius_by_formula(a, b)
    assert (S.frobenius, S.genus) == (F, g)
    assert is_symmetric(S)


@settings(max_examples=60)
@given(coprime_gens)
def test_gaps_against_dp(gens):
    S = from_generators(gens)
    assert list(S.gaps) == gaps_of(gens)


@settings(max_examples=60)
@given(coprime_gens)
def test_apery_selmer(gens):
    # sum of the Apery set over m equals m*g + m(m-1)/2, and F = max(Ap) - m
    S = from_generators(gens)
    m = S.multiplicity
    ap = apery_set(S, m)
    assert all(w % m == i for i, w in enumerate(ap))
    assert sum(ap) == m * S.genus + m * (m - 1) // 2
    assert max(ap) - m == S.frobenius


def test_apery_rejects_non_member():
    with pytest.raises(NotAMember):
        apery_set(from_generators([4, 7, 10]), 5)


@settings(max_examples=60)
@given(coprime_gens)
def test_symmetric_characterizations_agree(gens):
    S = from_generators(gens)
    assert is_symmetric(S) == is_symmetric_by_pairing(S)


def test_canonical_generators():
    assert canonical_generators(from_generators([4, 7, 10])) == [0, 4, 7, 8, 10, 11, 12]
    with pytest.raises(GenusZero):
        canonical_generators(from_generators([1]))


def test_from_gaps_round_trip():
    S = from_gaps([1, 2, 3, 5, 6, 9, 13])
    assert S.minimal_generators == (4, 7, 10)
    with pytest.raises(ValueError):
        from_gaps([1, 4])  # 2 + 2 = 4 listed as a gap


def test_enumeration_counts_match_gap_subset_oracle():
    for g in range(10):
        tree = sorted(S.gaps for S in enumerate_semigroups(g))
        assert tree == sorted(semigroups_by_gap_subsets(g))
        assert len(tree) == [1, 1, 2, 4, 7, 12, 23, 39, 67, 118][g]


def test_brute_force_helper_agrees():
    for g in range(7):
        assert sorted(brute_force_semigroups(g)) == sorted(semigroups_by_gap_subsets(g))


def test_symmetric_enumeration_counts():
    # frozen after comparison with the gap-subset oracle
    expected = [1, 1, 2, 3, 3, 6, 8, 7, 15]
    for g in range(1, 10):
        oracle = sum(1 for gs in semigroups_by_gap_subsets(g) if gs[-1] == 2 * g - 1)
        assert oracle == expected[g - 1]
        assert len(list(enumerate_semigroups(g, symmetric=True))) == oracle


def test_enumeration_is_deterministic():
    a = [S.minimal_generators for S in enumerate_semigroups(6)]
    b = [S.minimal_generators for S in enumerate_semigroups(6)]
    assert a == b


def test_enumeration_bound(monkeypatch):
    monkeypatch.setenv("WMOD_MAX_GENUS", "5")
    with pytest.raises(BoundExceeded):
        list(enumerate_semigroups(6))
    with pytest.raises(NegativeInput):
        list(enumerate_semigroups(-1))
    assert len(list(enumerate_semigroups(5))) == 12


def test_ci_enumeration_contains_example():
    assert (4, 7, 10) in [S.minimal_generators for S in enumerate_semigroups(7, symmetric=True,
                                                                              complete_intersection=True)]


def test_buchweitz_screen_against_sumset_oracle():
    gaps = list(range(1, 13)) + [19, 21, 24, 25]
    S = from_gaps(gaps)
    verdict = buchweitz_screen(S, 4)
    for row in verdict.rows:
        assert row.count == sumset_count(gaps, row.n)
    assert verdict.first_obstruction == 2
    assert verdict.rows[0].count == 46 and verdict.rows[0].bound == 45


def test_buchweitz_unobstructed_and_trivial():
    assert not buchweitz_screen(from_generators([4, 7, 10])).obstructed
    assert buchweitz_screen(from_generators([1])).rows == ()
    assert buchweitz_screen(from_generators([2, 3])).rows == ()
    ordinary = buchweitz_screen(from_generators([4, 5, 6, 7]), 2)
    assert (ordinary.rows[0].count, ordinary.rows[0].bound) == (sumset_count([1, 2, 3], 2), 6)
    assert not ordinary.obstructed
