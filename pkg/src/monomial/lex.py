"""
Lexsegment ideals.

- lex_from_hilbert: the unique lexsegment ideal with a prescribed Hilbert function;
  each degree-d piece is the initial lex segment of size dim S_d - h_d. Growth is
  validated through the d-th Macaulay representation, never clamped.
- very_compressed: the lexsegment C(m, n) squeezed between m^(s+1) and m^s with
  colength m.
- hyperplane_section: image modulo the last variable.
- two_var_lex: the two-variable lexsegments x^(a-i) y^(b_i+i), y^b used by the
  4-generated analysis.
"""

import logging
from typing import Sequence, Union

from src.errors import BadProfile, NotMacaulay, PreconditionError

from .ideal import HilbertData, MonomialIdeal, binomial, monomials_of_degree

logger = logging.getLogger(__name__)


def macaulay_representation(h: int, d: int) -> list[tuple[int, int]]:
    """h = sum C(a_k, k) over the returned (a_k, k), a_d > a_{d-1} > ... >= k >= 1."""
    if d < 1:
        raise PreconditionError("Macaulay representation needs d >= 1")
    terms = []
    k = d
    while h > 0 and k >= 1:
        a = k
        while binomial(a + 1, k) <= h:
            a += 1
        terms.append((a, k))
        h -= binomial(a, k)
        k -= 1
    return terms


def macaulay_bound(h: int, d: int) -> int:
    """h^<d>: the largest value the Hilbert function may take in degree d+1."""
    if h <= 0:
        return 0
    return sum(binomial(a + 1, k + 1) for a, k in macaulay_representation(h, d))


def _values(hf: Union[HilbertData, Sequence[int]]) -> list[int]:
    values = list(hf.hf) if isinstance(hf, HilbertData) else [int(h) for h in hf]
    while len(values) > 1 and values[-1] == 0:
        values.pop()
    return values


def check_macaulay(hf: Union[HilbertData, Sequence[int]], n: int) -> list[int]:
    values = _values(hf)
    if not values or values[0] != 1:
        raise NotMacaulay(f"hf(0) must be 1, got {values[:1]}")
    for d in range(1, len(values)):
        h = values[d]
        if h < 0:
            raise NotMacaulay(f"negative value hf({d}) = {h}")
        dim = binomial(n + d - 1, d)
        if h > dim:
            raise NotMacaulay(f"hf({d}) = {h} exceeds dim S_{d} = {dim}")
        if d >= 2:
            bound = macaulay_bound(values[d - 1], d - 1)
            if h > bound:
                raise NotMacaulay(
                    f"hf({d}) = {h} exceeds Macaulay bound {bound} from hf({d - 1}) = {values[d - 1]}"
                )
    return values


def lex_from_hilbert(hf: Union[HilbertData, Sequence[int]], n: int) -> MonomialIdeal:
    values = check_macaulay(hf, n) + [0]
    gens = []
    previous: set = set()
    for d in range(1, len(values)):
        segment = monomials_of_degree(n, d)
        segment = segment[: len(segment) - values[d]]
        for e in segment:
            shadowed = any(
                e[i] and (e[:i] + (e[i] - 1,) + e[i + 1:]) in previous for i in range(n)
            )
            if not shadowed:
                gens.append(e)
        previous = set(segment)
    return MonomialIdeal(n, tuple(gens))


def very_compressed(m: int, n: int) -> MonomialIdeal:
    if m < 1 or n < 1:
        raise PreconditionError(f"very_compressed needs m, n >= 1, got m={m}, n={n}")
    s = 0
    while binomial(n + s, n) < m:
        s += 1
    hf = [binomial(n + d - 1, d) for d in range(s)]
    hf.append(m - binomial(n + s - 1, n) if s else 1)
    return lex_from_hilbert(hf, n)


def hyperplane_section(L: MonomialIdeal) -> MonomialIdeal:
    """(L + (x_n)) / (x_n) as an ideal of k[x_1, ..., x_{n-1}]."""
    if L.n < 2:
        raise PreconditionError("hyperplane section needs at least 2 variables")
    gens = tuple(g[:-1] for g in L.generators if g[-1] == 0)
    return MonomialIdeal(L.n - 1, gens)


def two_var_lex(alpha: int, beta: int, betas: Sequence[int]) -> MonomialIdeal:
    """(x^a, x^(a-1) y^(b_1+1), ..., x y^(b_(a-1)+a-1), y^b) in k[x, y]."""
    betas = list(betas)
    if not (2 <= alpha <= beta):
        raise BadProfile(f"need 2 <= alpha <= beta, got alpha={alpha}, beta={beta}")
    if len(betas) != alpha - 1:
        raise BadProfile(f"need {alpha - 1} betas, got {len(betas)}")
    if any(b < 0 or b > beta - alpha for b in betas):
        raise BadProfile(f"betas must lie in [0, {beta - alpha}], got {betas}")
    if any(b1 > b2 for b1, b2 in zip(betas, betas[1:])):
        raise BadProfile(f"betas must be nondecreasing, got {betas}")
    gens = [(alpha, 0), (0, beta)]
    gens.extend((alpha - i, betas[i - 1] + i) for i in range(1, alpha))
    return MonomialIdeal(2, tuple(gens))
