"""Shared fixtures and hypothesis strategies."""

from math import comb

import pytest
from hypothesis import strategies as st

from src.monomial.ideal import MonomialIdeal, monomials_of_degree
from src.monomial.lex import lex_from_hilbert, macaulay_bound
from src.semigroup.numerical import from_generators


@pytest.fixture
def sharp_four():
    """<4, 5, 6, 7>: attains the multiplicity bound."""
    return from_generators([4, 5, 6, 7])


def borel_closure(monomials, n: int) -> set:
    """Close a set of exponent vectors under x_j -> x_i moves with i < j."""
    closed = set(monomials)
    frontier = list(closed)
    while frontier:
        e = frontier.pop()
        for j in range(n):
            if not e[j]:
                continue
            for i in range(j):
                f = list(e)
                f[j] -= 1
                f[i] += 1
                f = tuple(f)
                if f not in closed:
                    closed.add(f)
                    frontier.append(f)
    return closed


@st.composite
def stable_ideals(draw, max_vars: int = 4, max_colength: int = 30):
    """Artinian strongly stable ideals: all of degree k plus a Borel-closed set below it."""
    n = draw(st.integers(1, max_vars))
    top = max(k for k in range(1, 12) if comb(n + k - 1, n) <= max_colength)
    k = draw(st.integers(1, top))
    lower = [e for d in range(1, k) for e in monomials_of_degree(n, d)]
    seeds = draw(st.lists(st.sampled_from(lower), max_size=4)) if lower else []
    gens = borel_closure(seeds, n) | set(monomials_of_degree(n, k))
    return MonomialIdeal(n, tuple(gens))


@st.composite
def lex_ideals(draw, min_vars: int = 2, max_vars: int = 4, max_colength: int = 40):
    """Artinian lexsegment ideals from a random Macaulay-admissible Hilbert function."""
    n = draw(st.integers(min_vars, max_vars))
    hf = [1]
    while True:
        d = len(hf)
        room = max_colength - sum(hf)
        cap = n if d == 1 else macaulay_bound(hf[-1], d - 1)
        h = draw(st.integers(0, max(0, min(cap, room))))
        if h == 0:
            break
        hf.append(h)
    return lex_from_hilbert(hf, n)


@st.composite
def hs_bounded_lex_ideals(draw, min_vars: int = 3, max_vars: int = 4, max_colength: int = 40):
    """Artinian lexsegment ideals in w variables with HS(S/L, d) <= 1 + d*w."""
    w = draw(st.integers(min_vars, max_vars))
    hf = [1]
    while True:
        d = len(hf)
        room = min(max_colength, 1 + d * w) - sum(hf)
        cap = w if d == 1 else macaulay_bound(hf[-1], d - 1)
        h = draw(st.integers(0, max(0, min(cap, room))))
        if h == 0:
            break
        hf.append(h)
    return lex_from_hilbert(hf, w)
