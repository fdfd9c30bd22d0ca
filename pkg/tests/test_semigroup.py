from math import gcd
from functools import reduce

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from src.errors import EmptyInput, NonCofinite, PreconditionError, ZeroWidth
from src.semigroup.enumeration import candidate_generator_sets, enumerate_by_width, enumerate_corpus
from src.semigroup.numerical import (
    apery_set,
    contains,
    from_generators,
    hilbert_samuel_gr,
    interval_completion,
    minimal_generators,
    order,
    shift,
)


class TestConstruction:
    def test_minimal_generators_drop_redundant(self):
        assert minimal_generators([4, 8, 5, 6, 7, 10]) == (4, 5, 6, 7)

    def test_invariants_of_three_four_five(self):
        S = from_generators([5, 3, 4])
        assert S.generators == (3, 4, 5)
        assert S.multiplicity == 3
        assert S.width == 2
        assert S.frobenius == 2
        assert S.genus == 2
        assert S.label == "<3,4,5>"

    def test_trivial_semigroup(self):
        S = from_generators([1])
        assert S.frobenius == -1
        assert S.width == 0
        assert S.nu == 0
        assert apery_set(S).values == [0]

    def test_non_cofinite(self):
        with pytest.raises(NonCofinite):
            from_generators([4, 6])

    def test_empty(self):
        with pytest.raises(EmptyInput):
            from_generators([])

    def test_non_positive(self):
        with pytest.raises(PreconditionError):
            from_generators([0, 3])


class TestApery:
    def test_five_seven_nine(self):
        S = from_generators([5, 7, 9])
        ap = apery_set(S)
        assert sorted(ap.values) == [0, 7, 9, 16, 18]
        assert S.frobenius == 13
        assert ap.order_of(7) == 1
        assert ap.order_of(16) == 2
        assert ap.order_of(18) == 2
        assert ap.order_profile() == [1, 2, 2]
        assert ap.stratum(2) == [16, 18]

    def test_hilbert_samuel(self, sharp_four):
        assert [hilbert_samuel_gr(sharp_four, d) for d in range(3)] == [1, 4, 4]

    def test_membership_and_order(self):
        S = from_generators([5, 7, 9])
        assert not contains(S, 13)
        assert contains(S, 14)
        assert contains(S, 10_000)
        assert order(S, 13) == -1
        assert order(S, 14) == 2
        assert order(S, 21) == 3


class TestDerived:
    def test_interval_completion(self):
        assert interval_completion(from_generators([5, 7, 9])).generators == (5, 6, 7, 8, 9)

    def test_interval_completion_of_n(self):
        with pytest.raises(ZeroWidth):
            interval_completion(from_generators([1]))

    def test_shift(self):
        assert shift(from_generators([2, 3]), 1).generators == (3, 4)

    def test_negative_shift(self):
        with pytest.raises(PreconditionError):
            shift(from_generators([2, 3]), -1)


class TestEnumeration:
    def test_width_one(self):
        assert candidate_generator_sets(1, 6) == [(6, 7)]

    def test_width_two_multiplicity_three(self):
        assert candidate_generator_sets(2, 3) == [(3, 4, 5), (3, 5)]

    def test_empty_stream(self):
        assert candidate_generator_sets(2, 2) == []

    def test_corpus_order(self):
        gens = [S.generators for S in enumerate_corpus(range(3, 4), range(4, 5))]
        assert gens == [(4, 5, 6, 7), (4, 5, 7), (4, 6, 7), (4, 7)]

    def test_every_enumerated_semigroup_has_its_width(self):
        for S in enumerate_by_width(3, 2, 9):
            assert S.width == 3


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(2, 25), min_size=2, max_size=5))
def test_frobenius_and_apery_properties(raw):
    assume(reduce(gcd, raw) == 1)
    S = from_generators(raw)
    ap = apery_set(S)
    assert not contains(S, S.frobenius)
    assert all(contains(S, S.frobenius + k) for k in range(1, S.multiplicity + 1))
    assert sum(ap.order_profile()) == S.multiplicity
    assert sorted(omega % S.multiplicity for omega in ap.values) == list(range(S.multiplicity))
    assert 2 * S.genus >= S.conductor


def test_shift_of_sharp_family(sharp_four):
    assert shift(sharp_four, 1).generators == (5, 6, 7, 8)
