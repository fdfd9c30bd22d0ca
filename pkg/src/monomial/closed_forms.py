"""
Closed-form monomial ideals attached to a multiplicity m and a width w.

Write m = q*w + r with 1 <= r <= w.

- interval_closed_form: (y_1, ..., y_{w-1})^2 + y_w^q (y_r, ..., y_w) in w variables,
  the tangent-cone initial ideal of the interval semigroup <m, m+1, ..., m+w>.
- tangent_cone_envelope: (x_1, ..., x_{v-1})^2 + x_v^q' (x_1, ..., x_v) in v variables
  with q' = floor((m-1)/w); every tangent-cone initial ideal of a narrow semigroup of
  multiplicity m and width w sits inside it.
"""

from src.errors import PreconditionError

from .ideal import MonomialIdeal, maximal_power


def split_multiplicity(m: int, w: int) -> tuple[int, int]:
    """(q, r) with m = q*w + r and 1 <= r <= w."""
    if w < 1:
        raise PreconditionError(f"width must be positive, got {w}")
    q = (m - 1) // w
    return q, m - q * w


def _times_power(n: int, var: int, power: int, linear: range) -> list[tuple[int, ...]]:
    gens = []
    for i in linear:
        e = [0] * n
        e[var] += power
        e[i] += 1
        gens.append(tuple(e))
    return gens


def interval_closed_form(m: int, w: int) -> MonomialIdeal:
    q, r = split_multiplicity(m, w)
    square = maximal_power(w, 2, range(w - 1)).generators if w >= 2 else ()
    tail = _times_power(w, w - 1, q, range(r - 1, w))
    return MonomialIdeal(w, tuple(square) + tuple(tail))


def tangent_cone_envelope(m: int, w: int, nu: int) -> MonomialIdeal:
    if nu < 1:
        raise PreconditionError(f"envelope needs at least one variable, got {nu}")
    q = (m - 1) // w
    square = maximal_power(nu, 2, range(nu - 1)).generators if nu >= 2 else ()
    tail = _times_power(nu, nu - 1, q, range(nu))
    return MonomialIdeal(nu, tuple(square) + tuple(tail))
