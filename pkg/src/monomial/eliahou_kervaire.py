"""
Eliahou-Kervaire Betti numbers of stable monomial ideals.

A monomial ideal L is stable when x_i * u / x_max(u) lies in L for every minimal
generator u and every i < max(u). Its minimal resolution is then explicit and

    b_{i, deg(u) + i}(L) += C(max(u) - 1, i)    for each minimal generator u.
"""

from src.errors import NotStable
from src.linalg.field import RATIONALS, FieldConfig
from src.resolution.betti_table import BettiTable

from .ideal import MonomialIdeal, Monomial, binomial
from .lex import hyperplane_section


def stability_witness(L: MonomialIdeal):
    """First (generator, i) violating stability, or None."""
    for g in L.generators:
        u = Monomial(g)
        top = u.max_index
        if top <= 1:
            continue
        for i in range(top - 1):
            e = list(g)
            e[i] += 1
            e[top - 1] -= 1
            if not L.contains(tuple(e)):
                return g, i + 1
    return None


def is_stable(L: MonomialIdeal) -> bool:
    return stability_witness(L) is None


def eliahou_kervaire_betti(L: MonomialIdeal, field: FieldConfig = RATIONALS) -> BettiTable:
    """Betti table of the ideal L itself (b_0 = number of minimal generators).

    The resolution is characteristic-free; the field only tags the table.
    """
    witness = stability_witness(L)
    if witness is not None:
        g, i = witness
        raise NotStable(f"{L} is not stable: x_{i} * {Monomial(g)} / x_max not in the ideal")
    pieces = []
    for g in L.generators:
        top = Monomial(g).max_index
        deg = sum(g)
        for i in range(max(top, 1)):
            pieces.append((i, deg + i, binomial(max(top - 1, 0), i)))
    table = BettiTable.from_graded(pieces, field=field.tag, grading="internal")
    if not table.total:
        return BettiTable(total=(0,), field=field.tag, grading="internal")
    return table


def hyperplane_decomposition(L: MonomialIdeal) -> dict:
    """Ingredients of b_i(L) = b_i(L^) + len(S^/L^) * C(n-1, i), computed separately."""
    section = hyperplane_section(L)
    return {
        "ideal": eliahou_kervaire_betti(L).total,
        "section": eliahou_kervaire_betti(section).total,
        "section_colength": section.colength(),
        "n": L.n,
    }
