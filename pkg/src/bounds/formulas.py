"""
Closed-form bounds on Betti numbers.

- bound_conjecture(w, i) = i * C(w+1, i+1)
- bound_valla(m, i)      = i * C(m, i+1)
- bound_thm14(w, i)      = C(w, i) * (3e)^sqrt(2w), an mpmath interval with outward
  rounding at PRECISION_BITS bits (e = exp(1))

Square roots that enter integer formulas go through math.isqrt, never floats.
"""

from contextlib import contextmanager
from math import isqrt

from mpmath import iv

from src.errors import PreconditionError
from src.monomial.ideal import binomial

PRECISION_BITS = 128


def configure(precision_bits: int) -> None:
    global PRECISION_BITS
    if precision_bits < 80:
        raise PreconditionError(f"interval precision must be at least 80 bits, got {precision_bits}")
    PRECISION_BITS = int(precision_bits)


@contextmanager
def interval_precision():
    saved = iv.prec
    iv.prec = PRECISION_BITS
    try:
        yield
    finally:
        iv.prec = saved


def ceil_sqrt(n: int) -> int:
    return 0 if n <= 0 else isqrt(n - 1) + 1


def sqrt_interval(n: int):
    return iv.sqrt(iv.mpf(n))


def three_e_power(exponent):
    """(3e)^exponent as an interval."""
    return iv.exp(exponent * (iv.log(iv.mpf(3)) + 1))


def bound_conjecture(w: int, i: int) -> int:
    if w < 1 or i < 1:
        raise PreconditionError(f"conjectured bound needs w, i >= 1, got w={w}, i={i}")
    return i * binomial(w + 1, i + 1)


def bound_valla(m: int, i: int) -> int:
    if m < 2 or i < 1:
        raise PreconditionError(f"multiplicity bound needs m >= 2, i >= 1, got m={m}, i={i}")
    return i * binomial(m, i + 1)


def bound_thm14(w: int, i: int):
    if w < 1 or i < 0:
        raise PreconditionError(f"exponential bound needs w >= 1, i >= 0, got w={w}, i={i}")
    with interval_precision():
        c = binomial(w, i)
        if c == 0:
            return iv.mpf(0)
        return c * three_e_power(sqrt_interval(2 * w))
