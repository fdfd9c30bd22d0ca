import pytest
from hypothesis import given, settings

from src.errors import InconsistentHomology, InfiniteColength, NonCommutingActions, PreconditionError, ZeroWidth
from src.linalg.field import FieldConfig
from src.linalg.matrix import SparseMatrix
from src.monomial.closed_forms import interval_closed_form, tangent_cone_envelope
from src.monomial.eliahou_kervaire import eliahou_kervaire_betti
from src.monomial.ideal import MonomialIdeal, binomial, hilbert_function, maximal_ideal, maximal_power
from src.resolution import koszul
from src.resolution.betti_table import BettiTable
from src.resolution.koszul import MonomialModule, koszul_betti, koszul_homology
from src.resolution.quotient import betti_monomial_quotient
from src.resolution.semigroup_betti import (
    apery_module,
    betti_semigroup,
    divisor_complex_betti,
    reduced_homology_dims,
)
from src.resolution.tangent_cone import tangent_cone_initial_ideal
from src.semigroup.numerical import apery_set, from_generators

from conftest import stable_ideals


def _squares_module() -> MonomialModule:
    """k[x, y]/(x^2, y^2) with basis 1, x, y, xy."""
    return MonomialModule.build(basis=["1", "x", "y", "xy"], actions=[[1, None, 3, None], [2, 3, None, None]])


class TestBettiTable:
    def test_from_graded_merges(self):
        table = BettiTable.from_graded([(0, 0, 1), (1, 4, 2), (1, 4, 1), (1, 5, 0)], "q", "internal")
        assert table.total == (1, 3)
        assert table.graded == ((0, 0, 1), (1, 4, 3))
        assert table.b(7) == 0

    def test_as_quotient(self):
        ideal = BettiTable.from_graded([(0, 2, 3), (1, 3, 2)], "q", "internal")
        quotient = ideal.as_quotient()
        assert quotient.total == (1, 3, 2)
        assert quotient.graded_dict()[(2, 3)] == 2


class TestKoszul:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_residue_field(self, n):
        M = MonomialModule.build(basis=["1"], actions=[[None]] * n)
        assert koszul_betti(M).total == tuple(binomial(n, i) for i in range(n + 1))

    def test_hypersurface(self):
        M = MonomialModule.build(basis=[0, 3], actions=[[1, None]], degrees=[(0,), (3,)],
                                 variable_degrees=[(3,)], grading="semigroup")
        table = koszul_betti(M)
        assert table.total == (1, 1)
        assert table.graded_dict() == {(0, 0): 1, (1, 6): 1}

    def test_non_commuting(self):
        # x maps a -> b, y maps a -> c; x(y a) = x c = 0 but y(x a) = y b = c
        M = MonomialModule.build(basis=["a", "b", "c"], actions=[[1, None, None], [2, 2, None]])
        with pytest.raises(NonCommutingActions):
            koszul_homology(M)

    def test_action_out_of_basis(self):
        with pytest.raises(PreconditionError):
            koszul_homology(MonomialModule.build(basis=["a"], actions=[[3]]))

    def test_complete_intersection(self):
        assert koszul_betti(_squares_module()).total == (1, 2, 1)

    def test_unsigned_differential_is_rejected(self, monkeypatch):
        signed = koszul._differential

        def unsigned(M, source, target):
            d = signed(M, source, target)
            return SparseMatrix(d.rows, d.cols, tuple((r, c, abs(v)) for r, c, v in d.entries))

        monkeypatch.setattr(koszul, "_differential", unsigned)
        with pytest.raises(InconsistentHomology, match="nonzero"):
            koszul_homology(_squares_module())

    def test_missing_cells_are_rejected(self, monkeypatch):
        full = koszul._koszul_cells

        def truncated(M):
            cells = full(M)
            cells[1] = {deg: basis[1:] for deg, basis in cells[1].items()}
            return cells

        monkeypatch.setattr(koszul, "_koszul_cells", truncated)
        with pytest.raises(InconsistentHomology, match="cells"):
            koszul_homology(_squares_module())

    @pytest.mark.parametrize("gens", [(3, 4, 5), (5, 7, 9), (6, 7, 8, 10)])
    def test_euler_characteristic_vanishes(self, gens):
        betti = betti_semigroup(from_generators(gens)).total
        assert sum((-1) ** i * b for i, b in enumerate(betti)) == 0


class TestSemigroupBetti:
    def test_three_four_five(self):
        assert betti_semigroup(from_generators([3, 4, 5])).total == (1, 3, 2)

    @pytest.mark.parametrize("m", range(2, 9))
    def test_sharp_family(self, m):
        table = betti_semigroup(from_generators(range(m, 2 * m)))
        assert table.total == (1,) + tuple(i * binomial(m, i + 1) for i in range(1, m))

    def test_trivial(self):
        assert betti_semigroup(from_generators([1])).total == (1,)

    def test_apery_module(self, sharp_four):
        M = apery_module(sharp_four)
        assert M.basis == (0, 5, 6, 7)
        assert M.n == 3
        assert all(target is None for action in M.actions for target in action[1:])

    def test_prime_field_tag(self):
        table = betti_semigroup(from_generators([5, 7, 9]), FieldConfig("prime", 32003))
        assert table.field == "gf:32003"
        assert sum(dim for i, _, dim in table.graded if i == 1) == table.b(1)

    def test_divisor_complex_degree_six(self):
        S = from_generators([2, 3])
        assert reduced_homology_dims(S, 6) == [0, 1]
        assert reduced_homology_dims(S, 0) == [1]
        assert reduced_homology_dims(S, 1) == []

    @pytest.mark.parametrize("gens", [(2, 3), (3, 4, 5), (4, 5, 6, 7), (5, 7, 9), (6, 7, 8, 10), (7, 9, 10)])
    def test_routes_agree(self, gens):
        S = from_generators(gens)
        via_koszul = betti_semigroup(S)
        divisor = divisor_complex_betti(S)
        assert via_koszul.total == divisor.total
        assert via_koszul.graded == divisor.graded


class TestTangentCone:
    def test_two_three(self):
        J = tangent_cone_initial_ideal(from_generators([2, 3]))
        assert J == MonomialIdeal(1, ((2,),))

    def test_interval_semigroup(self):
        J = tangent_cone_initial_ideal(from_generators([7, 8, 9, 10]))
        assert J == interval_closed_form(7, 3)

    def test_seven_nine_ten(self):
        S = from_generators([7, 9, 10])
        J = tangent_cone_initial_ideal(S)
        hf = hilbert_function(J)
        assert hf.colength == 7
        assert list(hf.hf) == apery_set(S).order_profile()
        envelope = tangent_cone_envelope(7, 3, 2)
        assert all(envelope.contains(g) for g in J.generators)

    def test_no_variables(self):
        with pytest.raises(ZeroWidth):
            tangent_cone_initial_ideal(from_generators([1]))

    def test_field_independent_for_monomial_images(self):
        S = from_generators([6, 7, 8, 10])
        assert tangent_cone_initial_ideal(S) == tangent_cone_initial_ideal(S, FieldConfig("prime", 2))


class TestMonomialQuotient:
    def test_square_of_maximal_ideal(self):
        assert betti_monomial_quotient(maximal_power(2, 2)).total == (1, 3, 2)

    def test_stable_two_variable(self):
        J = MonomialIdeal(2, ((2, 0), (1, 1), (0, 3)))
        assert betti_monomial_quotient(J).total == (1, 3, 2)

    def test_residue_field(self):
        assert betti_monomial_quotient(maximal_ideal(3)).total == (1, 3, 3, 1)

    def test_infinite_colength(self):
        with pytest.raises(InfiniteColength):
            betti_monomial_quotient(MonomialIdeal(2, ((1, 0),)))


@settings(max_examples=200, deadline=None)
@given(stable_ideals())
def test_eliahou_kervaire_matches_koszul(L):
    expected = eliahou_kervaire_betti(L).as_quotient()
    computed = betti_monomial_quotient(L)
    assert computed.total == expected.total
    assert computed.graded == expected.graded
