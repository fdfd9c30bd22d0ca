"""
Exception hierarchy shared by all packages.

Library code raises; main.py catches SyzygyError at the command boundary and
turns it into exit code 1.
"""


class SyzygyError(Exception):
    """Base class for every error raised by this project."""


class ConfigError(SyzygyError):
    """Invalid config.yaml value or command-line flag."""


class PreconditionError(SyzygyError):
    """An operation was called outside its documented domain."""


# --- semigroups -------------------------------------------------------------

class EmptyInput(SyzygyError):
    pass


class NonCofinite(SyzygyError):
    """The generators have gcd > 1, so they do not span a numerical semigroup."""


class ZeroWidth(SyzygyError):
    """The semigroup is N itself and has no interval completion / tangent cone ideal."""


# --- linear algebra ---------------------------------------------------------

class DimensionMismatch(SyzygyError):
    pass


# --- monomial ideals --------------------------------------------------------

class NotMacaulay(SyzygyError):
    """A Hilbert function violates Macaulay's growth bound."""


class NotStable(SyzygyError):
    pass


class BadProfile(SyzygyError):
    """Invalid (alpha, beta, betas) data for a two-variable lexsegment ideal."""


class InfiniteColength(SyzygyError):
    pass


# --- resolutions ------------------------------------------------------------

class NonCommutingActions(SyzygyError):
    pass


class InconsistentHomology(SyzygyError):
    """Koszul homology failed the cell-count, d o d = 0 or nonnegativity gate."""


# --- verification -----------------------------------------------------------

class RangeError(SyzygyError):
    pass


class ConstraintViolated(SyzygyError):
    """HS(S/I, d) <= 1 + d*w fails for some d."""

    def __init__(self, message: str, degree: int, value: int, limit: int):
        super().__init__(message)
        self.degree = degree
        self.value = value
        self.limit = limit
