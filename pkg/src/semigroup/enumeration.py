"""
Enumeration of numerical semigroups by width.

For multiplicity m and width w every candidate has minimal generators inside
{m, m+1, ..., m+w} containing both m and m+w. We run over the subsets of the
interior {m+1, ..., m+w-1}, skip gcd > 1 silently, minimalize, and keep a
candidate only if m+w survived minimalization (otherwise its width is smaller
and it belongs to another stream). Output order: m, then lexicographic on the
minimal generators.
"""

import logging
from itertools import combinations
from math import gcd
from functools import reduce
from typing import Iterator

from .numerical import NumericalSemigroup, from_generators, minimal_generators

logger = logging.getLogger(__name__)


def _interior_subsets(m: int, w: int) -> Iterator[tuple[int, ...]]:
    interior = range(m + 1, m + w)
    for size in range(len(interior) + 1):
        yield from combinations(interior, size)


def candidate_generator_sets(w: int, m: int) -> list[tuple[int, ...]]:
    """Distinct minimal generating sets with multiplicity m and width w."""
    seen: set[tuple[int, ...]] = set()
    skipped = 0
    for subset in _interior_subsets(m, w):
        raw = (m, *subset, m + w)
        if reduce(gcd, raw) != 1:
            skipped += 1
            continue
        gens = minimal_generators(raw)
        if gens[0] != m or gens[-1] != m + w:
            continue
        seen.add(gens)
    if skipped:
        logger.debug("m=%d w=%d: skipped %d subsets with gcd > 1", m, w, skipped)
    return sorted(seen)


def enumerate_by_width(w: int, m_min: int, m_max: int) -> Iterator[NumericalSemigroup]:
    if w < 1:
        return
    for m in range(max(m_min, 2), m_max + 1):
        for gens in candidate_generator_sets(w, m):
            yield from_generators(gens)


def enumerate_corpus(widths: range, mults: range) -> Iterator[NumericalSemigroup]:
    """All semigroups with width in widths and multiplicity in mults, ordered (m, gens)."""
    found = []
    for w in widths:
        for m in mults:
            found.extend(candidate_generator_sets(w, m))
    for gens in sorted(found, key=lambda g: (g[0], g)):
        yield from_generators(gens)
