import pytest

from brute import closure_witness, naive_members
from numsgps import semigroup
from numsgps.errors import (FrobeniusTooLarge, GcdNotOne, NotAMember,
                            NotASemigroup, WholeMonoid)
from numsgps.semigroup import (WHOLE, AperySet, NumericalSemigroup, from_gaps,
                               from_generators, type_of)


def test_basic_invariants():
    s = NumericalSemigroup(5, 6, 8, 9)
    assert s.multiplicity == 5
    assert s.frobenius == 7
    assert s.genus == 5
    assert s.min_generators == (5, 6, 8, 9)
    assert s.small_elements == (0, 5, 6, 8)
    assert s.gaps == (1, 2, 3, 4, 7)


def test_generators_need_not_be_minimal():
    assert NumericalSemigroup(5, 6, 8, 9, 10, 11).min_generators == (5, 6, 8, 9)
    assert from_generators([3, 5, 8, 11]).min_generators == (3, 5)


def test_two_generator_frobenius():
    # F(<a,b>) = ab - a - b
    for a, b in [(2, 3), (3, 5), (5, 7), (31, 97)]:
        s = NumericalSemigroup(a, b)
        assert s.frobenius == a * b - a - b
        assert s.genus == (a - 1) * (b - 1) // 2


def test_whole_monoid():
    assert WHOLE.frobenius == -1
    assert WHOLE.genus == 0
    assert WHOLE.multiplicity == 1
    assert WHOLE.small_elements == (0, 1)
    assert WHOLE.gaps == ()
    assert WHOLE.is_whole and not WHOLE.is_ordinary
    assert str(WHOLE) == "<1>"
    assert NumericalSemigroup(1) == WHOLE
    assert NumericalSemigroup(1, 5) == WHOLE
    assert list(WHOLE.elements(3)) == [0, 1, 2, 3]


def test_constructor_rejects_bad_input():
    with pytest.raises(GcdNotOne):
        NumericalSemigroup(4, 6)
    with pytest.raises(GcdNotOne):
        NumericalSemigroup(10)
    with pytest.raises(ValueError):
        NumericalSemigroup.from_generators([])
    with pytest.raises(ValueError):
        NumericalSemigroup(0, 3)
    with pytest.raises(ValueError):
        NumericalSemigroup(-2, 3)


def test_membership():
    s = NumericalSemigroup(5, 6, 8, 9)
    assert 0 in s and 5 in s and 14 in s and 100 in s
    assert 7 not in s and 4 not in s and -1 not in s
    assert s.contains(11) and not s.contains(-5)
    assert list(s.elements(12)) == [0, 5, 6, 8, 9, 10, 11, 12]


def test_members_match_naive_generation(catalog8):
    for s in catalog8.semigroups:
        upto = max(s.frobenius + 1, 1)
        expected = naive_members(s.min_generators, upto)
        assert set(s.small_elements) == expected, s


def test_small_elements_are_closed(catalog8):
    for s in catalog8.semigroups:
        assert closure_witness(set(s.small_elements), s.frobenius) is None, s


def test_apery_set():
    s = NumericalSemigroup(5, 6, 8, 9)
    ap = s.apery_set(5)
    assert isinstance(ap, AperySet)
    assert ap.modulus == 5
    assert ap.elements == (0, 6, 12, 8, 9)
    assert ap.as_set() == {0, 6, 8, 9, 12}
    assert NumericalSemigroup(5, 7).apery_set(5).as_set() == {0, 7, 14, 21, 28}
    assert NumericalSemigroup(2, 3).apery_set(5).elements == (0, 6, 2, 3, 4)


def test_apery_set_requires_nonzero_member():
    s = NumericalSemigroup(5, 6, 8, 9)
    for bad in (0, 7, -5):
        with pytest.raises(NotAMember):
            s.apery_set(bad)


def test_apery_invariants(catalog8):
    for s in catalog8.semigroups:
        if s.is_whole:
            continue
        m = s.multiplicity
        ap = s.apery_set(m)
        assert len(ap.elements) == m
        assert ap.elements[0] == 0
        for i, w in enumerate(ap.elements):
            assert w % m == i
            assert w in s and (w - m) not in s
        assert max(ap.elements) == s.frobenius + m


def test_pseudo_frobenius():
    assert NumericalSemigroup(5, 6, 8, 9).pseudo_frobenius() == (3, 4, 7)
    assert NumericalSemigroup(4, 6, 9, 11).pseudo_frobenius() == (2, 5, 7)
    assert NumericalSemigroup(5, 7).pseudo_frobenius() == (23,)
    assert from_gaps(range(1, 6)).pseudo_frobenius() == (1, 2, 3, 4, 5)
    with pytest.raises(WholeMonoid):
        WHOLE.pseudo_frobenius()


def test_pf_invariants(catalog8):
    for s in catalog8.semigroups:
        if s.is_whole:
            continue
        pf = s.pseudo_frobenius()
        assert max(pf) == s.frobenius
        assert set(pf) <= set(s.gaps)
        assert 1 <= type_of(s) <= s.multiplicity - 1


def test_type_bound_is_tight_for_ordinary():
    for m in range(2, 8):
        assert type_of(from_gaps(range(1, m))) == m - 1


def test_leq_partial_order():
    s = NumericalSemigroup(5, 6, 8, 9)
    assert s.leq(6, 14) and not s.leq(6, 13)
    assert s.leq(0, 9) and s.leq(9, 9)
    assert not s.leq(9, 5)


def test_from_gaps():
    assert from_gaps({1, 2, 4}).min_generators == (3, 5, 7)
    assert from_gaps({1, 3}).min_generators == (2, 5)
    assert from_gaps(set()) is WHOLE
    assert from_gaps(range(1, 5)).min_generators == (5, 6, 7, 8, 9)


def test_from_gaps_round_trip(catalog8):
    for s in catalog8.semigroups:
        assert from_gaps(s.gaps) == s


def test_from_gaps_rejects_non_semigroup():
    with pytest.raises(NotASemigroup) as exc:
        from_gaps({2})
    assert exc.value.witness == (1, 1)
    with pytest.raises(NotASemigroup) as exc:
        from_gaps({1, 4})  # 2+2 = 4 would be missing
    assert exc.value.witness == (2, 2)
    with pytest.raises(ValueError):
        from_gaps({0})
    with pytest.raises(ValueError):
        from_gaps({-3})


def test_parse_and_str():
    s = NumericalSemigroup(5, 6, 8, 9)
    assert str(s) == "<5,6,8,9>"
    assert NumericalSemigroup.parse("<5,6,8,9>") == s
    assert NumericalSemigroup.parse(" 5 , 6 , 8 , 9 ") == s
    assert NumericalSemigroup.parse("[ 3, 5 ]") == NumericalSemigroup(3, 5)
    assert NumericalSemigroup.parse("<1>") == WHOLE
    for bad in ("", "<>", "bogus", "3,,5", "<3;5>"):
        with pytest.raises(ValueError):
            NumericalSemigroup.parse(bad)


def test_str_parse_round_trip(catalog8):
    for s in catalog8.semigroups:
        assert NumericalSemigroup.parse(str(s)) == s


def test_equality_and_hash():
    a = NumericalSemigroup(2, 3)
    b = from_gaps({1})
    assert a == b and hash(a) == hash(b)
    assert a != NumericalSemigroup(2, 5)
    assert len({a, b, NumericalSemigroup(2, 5)}) == 2
    assert a != "not a semigroup"


def test_adjoin():
    t = NumericalSemigroup(4, 6, 9, 11)
    assert t.adjoin({2, 5, 7}).min_generators == (2, 5)
    assert t.adjoin({7}).min_generators == (4, 6, 7, 9)
    assert t.adjoin(set()) == t
    assert t.adjoin({8}) == t  # adjoining members changes nothing
    with pytest.raises(NotASemigroup) as exc:
        t.adjoin({2, 5})
    assert exc.value.witness == (2, 5)
    with pytest.raises(ValueError):
        t.adjoin({-1})


def test_without():
    assert NumericalSemigroup(2, 3).without({3}).min_generators == (2, 5)
    s = NumericalSemigroup(3, 4, 5)
    assert s.without({4, 5}).min_generators == (3, 7, 8)
    assert s.without(set()) == s
    with pytest.raises(NotASemigroup):
        NumericalSemigroup(2, 3).without({4})
    with pytest.raises(ValueError):
        s.without({7})  # not a member
    with pytest.raises(ValueError):
        s.without({0})


def test_issubset(catalog8):
    s = NumericalSemigroup(5, 6, 8, 9)
    assert s.issubset(NumericalSemigroup(3, 5))
    assert not NumericalSemigroup(3, 5).issubset(s)
    for t in catalog8.semigroups:
        assert t.issubset(WHOLE)
        assert t.issubset(t)


def test_to_dict():
    t = NumericalSemigroup(4, 6, 9, 11)
    assert t.to_dict() == {
        "generators": [4, 6, 9, 11],
        "frobenius": 7,
        "genus": 5,
        "multiplicity": 4,
        "small_elements": [0, 4, 6, 8],
        "pf": [2, 5, 7],
    }
    assert WHOLE.to_dict()["pf"] is None


def test_immutability():
    s = NumericalSemigroup(3, 5)
    with pytest.raises(AttributeError):
        s.frobenius = 0


def test_frobenius_guard(monkeypatch):
    monkeypatch.setattr(semigroup, "MAX_FROBENIUS", 100)
    with pytest.raises(FrobeniusTooLarge):
        NumericalSemigroup(31, 97)  # F would be 2879
    assert NumericalSemigroup(5, 7).frobenius == 23  # still fine under the cap


def test_genus_counts_gaps(catalog8):
    for s in catalog8.semigroups:
        assert s.genus == len(s.gaps)


def test_min_generators_are_minimal(catalog8):
    for s in catalog8.semigroups:
        members = set(s.small_elements)
        f = s.frobenius
        nonzero = [x for x in range(1, f + s.multiplicity + 1)
                   if x > f or x in members]
        for g in s.min_generators:
            sums = {a + b for a in nonzero for b in nonzero if a + b == g}
            assert not sums, (s, g)
        assert NumericalSemigroup(s.min_generators) == s
