import pytest
from hypothesis import given, settings

from src.bounds.hyperplane_estimate import check_lex_hyperplane, estimate_ideal, pure_power_targets
from src.errors import BadProfile, ConstraintViolated, InfiniteColength, NotMacaulay, NotStable, PreconditionError
from src.monomial.closed_forms import interval_closed_form, split_multiplicity, tangent_cone_envelope
from src.monomial.eliahou_kervaire import eliahou_kervaire_betti, hyperplane_decomposition, is_stable
from src.monomial.ideal import (
    MonomialIdeal,
    binomial,
    degrevlex_key,
    hilbert_function,
    maximal_ideal,
    maximal_power,
    monomials_of_degree,
)
from src.monomial.lex import (
    check_macaulay,
    hyperplane_section,
    lex_from_hilbert,
    macaulay_bound,
    macaulay_representation,
    two_var_lex,
    very_compressed,
)
from src.monomial.textio import IdealFormatError, dumps_ideal, loads_ideal, read_ideal, write_ideal

from conftest import hs_bounded_lex_ideals, lex_ideals, stable_ideals


class TestIdeal:
    def test_minimalized(self):
        J = MonomialIdeal(2, ((2, 0), (3, 1), (0, 2), (1, 1)))
        assert J.generators == ((2, 0), (1, 1), (0, 2))
        assert str(J) == "(x1^2, x1*x2, x2^2)"

    def test_monomials_in_decreasing_lex(self):
        assert monomials_of_degree(2, 2) == [(2, 0), (1, 1), (0, 2)]

    def test_degrevlex(self):
        ordered = sorted(monomials_of_degree(3, 2), key=degrevlex_key)
        assert ordered[0] == (0, 0, 2)
        assert ordered[-1] == (2, 0, 0)
        assert ordered.index((1, 0, 1)) < ordered.index((0, 2, 0))

    def test_hilbert_function_of_power(self):
        hf = hilbert_function(maximal_power(3, 2))
        assert hf.hf == (1, 3)
        assert hf.colength == 4
        assert hf.hs_profile() == [1, 4]

    def test_infinite_colength(self):
        J = MonomialIdeal(2, ((1, 0),))
        with pytest.raises(InfiniteColength):
            J.colength()
        data = hilbert_function(J, d_max=3)
        assert data.hf == (1, 1, 1, 1)
        assert data.infinite

    def test_binomial_conventions(self):
        assert binomial(3, 5) == 0
        assert binomial(3, -1) == 0
        assert binomial(0, 0) == 1


class TestLex:
    def test_macaulay_representation(self):
        assert macaulay_representation(5, 2) == [(3, 2), (2, 1)]
        assert macaulay_bound(5, 2) == 7
        assert macaulay_bound(3, 1) == 6

    def test_growth_violation(self):
        with pytest.raises(NotMacaulay):
            check_macaulay([1, 2, 4], 2)

    def test_lex_from_hilbert(self):
        L = lex_from_hilbert([1, 2, 1], 2)
        assert hilbert_function(L).hf == (1, 2, 1)
        assert L.generators == ((2, 0), (1, 1), (0, 3))

    def test_very_compressed(self):
        C = very_compressed(5, 2)
        assert hilbert_function(C).hf == (1, 2, 2)

    def test_hyperplane_section(self):
        L = lex_from_hilbert([1, 2, 1], 2)
        assert hyperplane_section(L) == MonomialIdeal(1, ((2,),))

    def test_two_var_lex(self):
        L = two_var_lex(2, 4, [1])
        assert L.generators == ((2, 0), (1, 2), (0, 4))

    @pytest.mark.parametrize(
        "alpha,beta,betas",
        [(1, 3, []), (3, 2, [0, 0]), (2, 4, [0, 0]), (3, 5, [2, 1]), (2, 4, [3])],
    )
    def test_two_var_lex_bad_profile(self, alpha, beta, betas):
        with pytest.raises(BadProfile):
            two_var_lex(alpha, beta, betas)


class TestEliahouKervaire:
    def test_power_of_maximal_ideal(self):
        table = eliahou_kervaire_betti(maximal_power(2, 2))
        assert table.total == (3, 2)

    def test_not_stable(self):
        J = MonomialIdeal(2, ((0, 1),))
        assert not is_stable(J)
        with pytest.raises(NotStable):
            eliahou_kervaire_betti(J)

    def test_residue_field(self):
        assert eliahou_kervaire_betti(maximal_ideal(3)).total == (3, 3, 1)


class TestClosedForms:
    def test_split(self):
        assert split_multiplicity(7, 3) == (2, 1)
        assert split_multiplicity(6, 3) == (1, 3)

    def test_interval_closed_form(self):
        J = interval_closed_form(5, 3)
        assert set(J.generators) == {(2, 0, 0), (1, 1, 0), (0, 2, 0), (0, 1, 1), (0, 0, 2)}
        assert J.colength() == 5

    def test_envelope_is_artinian(self):
        E = tangent_cone_envelope(7, 3, 2)
        assert E.generators == ((2, 0), (1, 2), (0, 3))


class TestTextFormat:
    def test_round_trip_file(self, tmp_path):
        J = interval_closed_form(7, 3)
        path = tmp_path / "j.txt"
        write_ideal(J, path)
        assert path.read_text().startswith("n=3\n")
        assert read_ideal(path) == J
        assert dumps_ideal(loads_ideal(dumps_ideal(J))) == dumps_ideal(J)

    @pytest.mark.parametrize("text", ["", "3\n1 0 0", "n=2\n1 0 0", "n=2\n1 x"])
    def test_malformed(self, text):
        with pytest.raises(IdealFormatError):
            loads_ideal(text)


@settings(max_examples=100, deadline=None)
@given(lex_ideals())
def test_lex_ideal_reproduces_its_hilbert_function(L):
    hf = hilbert_function(L)
    assert lex_from_hilbert(hf, L.n) == L
    assert is_stable(L)


@settings(max_examples=100, deadline=None)
@given(lex_ideals())
def test_hyperplane_identity(L):
    parts = hyperplane_decomposition(L)
    ideal, section = parts["ideal"], parts["section"]
    for i in range(len(ideal)):
        expected = (section[i] if i < len(section) else 0) + parts["section_colength"] * binomial(L.n - 1, i)
        assert ideal[i] == expected


@settings(max_examples=100, deadline=None)
@given(hs_bounded_lex_ideals())
def test_pure_powers_forced_by_hilbert_samuel_constraint(L):
    for _, i, k in pure_power_targets(L.n):
        exponents = tuple(k if j == i else 0 for j in range(L.n))
        assert L.contains(exponents)


@settings(max_examples=100, deadline=None)
@given(hs_bounded_lex_ideals())
def test_section_contains_estimate_ideal(L):
    section = hyperplane_section(L)
    I = estimate_ideal(L.n)
    assert all(section.contains(g) for g in I.generators)
    assert section.colength() <= I.colength()


@settings(max_examples=100, deadline=None)
@given(lex_ideals())
def test_quotient_betti_bounded_by_section_length(L):
    length = hyperplane_section(L).colength()
    quotient = eliahou_kervaire_betti(L).as_quotient().total
    assert all(b <= length * binomial(L.n, i) for i, b in enumerate(quotient))


@settings(max_examples=100, deadline=None)
@given(lex_ideals())
def test_section_betti_bounded_by_section_length(L):
    section = hyperplane_section(L)
    length = section.colength()
    betti = eliahou_kervaire_betti(section).as_quotient().total
    assert all(b <= length * binomial(L.n - 1, i) for i, b in enumerate(betti))


@settings(max_examples=50, deadline=None)
@given(hs_bounded_lex_ideals())
def test_check_lex_hyperplane_passes(L):
    report = check_lex_hyperplane(L)
    assert report.passed, report.to_dict()
    assert report.details["section_colength"] <= report.details["estimate_colength"]


class TestEstimateIdeal:
    def test_three_variables(self):
        I = estimate_ideal(3)
        assert I.generators == ((2, 0), (1, 3), (0, 4))
        assert I.colength() == 7

    def test_four_variables(self):
        assert estimate_ideal(4).colength() == 16

    def test_targets(self):
        assert pure_power_targets(3) == [("square", 0, 2), ("power_D", 0, 2), ("power_2w-2", 1, 4)]

    def test_needs_three_variables(self):
        with pytest.raises(PreconditionError):
            estimate_ideal(2)

    def test_constraint_violation(self):
        with pytest.raises(ConstraintViolated):
            check_lex_hyperplane(lex_from_hilbert([1, 3, 6], 3))

    def test_square_of_maximal_ideal(self):
        report = check_lex_hyperplane(maximal_power(3, 2))
        assert report.passed
        assert report.details == {"section_colength": 3, "estimate_colength": 7}


@settings(max_examples=50, deadline=None)
@given(stable_ideals())
def test_generated_ideals_are_stable(L):
    assert is_stable(L)
    assert L.is_artinian


def test_two_var_lex_attains_length_estimate():
    L = two_var_lex(2, 3, [1])
    assert L.generators == ((2, 0), (1, 2), (0, 3))
    assert L.colength() == binomial(3, 2) + 2
