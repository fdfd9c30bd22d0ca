"""Full-size acceptance runs over the enumerated corpus (pytest -m slow)."""

import pytest

import main
from src.bounds.completion_check import herzog_three_generated, verify_completion_family
from src.bounds.periodicity import shift_scan
from src.bounds.semigroup_check import check_hs_constraint
from src.linalg.field import RATIONALS
from src.monomial.closed_forms import tangent_cone_envelope
from src.monomial.ideal import binomial, hilbert_function
from src.resolution.quotient import betti_monomial_quotient
from src.resolution.semigroup_betti import betti_semigroup, divisor_complex_betti
from src.resolution.tangent_cone import tangent_cone_initial_ideal
from src.semigroup.enumeration import enumerate_corpus
from src.semigroup.numerical import apery_set, from_generators, hilbert_samuel_gr, interval_completion

pytestmark = pytest.mark.slow


@pytest.fixture(scope="module")
def corpus():
    return list(enumerate_corpus(range(1, 6), range(2, 31)))


@pytest.fixture(scope="module")
def narrow(corpus):
    return [S for S in corpus if S.width >= 1 and S.is_narrow]


@pytest.mark.parametrize("m", range(2, 9))
def test_sharp_family(m):
    betti = betti_semigroup(from_generators(range(m, 2 * m)))
    assert betti.total == (1,) + tuple(i * binomial(m, i + 1) for i in range(1, m))


def test_three_generated_bound():
    report = herzog_three_generated(m_max=30)
    assert report.passed, [r.to_dict() for r in report.violations][:5]


def test_interval_closed_form():
    report = verify_completion_family(m_max=25)
    assert report.passed
    assert report.details["pairs"] == 231


def test_tangent_cone_constraints(narrow):
    for S in narrow:
        J = tangent_cone_initial_ideal(S)
        m, w = S.multiplicity, S.width
        envelope = tangent_cone_envelope(m, w, S.nu)
        assert all(envelope.contains(g) for g in J.generators), S
        check_hs_constraint(J, w)
        assert hilbert_function(J).colength == m, S


def test_hilbert_samuel_below_completion(narrow):
    for S in narrow:
        completion = interval_completion(S)
        top = apery_set(S).max_order
        for d in range(top + 1):
            assert hilbert_samuel_gr(S, d) <= hilbert_samuel_gr(completion, d), (S, d)


def test_chain_inequality(narrow):
    for S in narrow:
        betti = betti_semigroup(S)
        quotient = betti_monomial_quotient(tangent_cone_initial_ideal(S))
        assert all(betti.b(i) <= quotient.b(i) for i in range(betti.length)), S


def test_conjectured_bounds(corpus):
    families = list(main.ALL_BOUNDS.values())
    failures = []
    for S in corpus:
        result = main.analyze_semigroup(S, RATIONALS, families)
        if not result["pass"]:
            failures.append((S.label, result["failures"]))
    assert not failures, failures[:5]


def test_route_equivalence(corpus):
    for S in corpus:
        if S.multiplicity > 25:
            continue
        koszul, divisor = betti_semigroup(S), divisor_complex_betti(S)
        assert koszul.total == divisor.total, S
        assert koszul.graded == divisor.graded, S


@pytest.mark.parametrize("gens", [(2, 3), (4, 5, 6, 7), (5, 7, 9)])
def test_shift_periodicity(gens, caplog):
    report = shift_scan(from_generators(gens), 40)
    if report.onset is None:
        assert "no periodicity observed" in caplog.text
        return
    assert report.onset <= 20
    assert report.width % report.period == 0
