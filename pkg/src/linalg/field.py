"""
Coefficient fields: the rationals (default) or a prime field GF(p), p < 2^31.
"""

from dataclasses import dataclass
from typing import Optional

from sympy import isprime

from src.errors import ConfigError

DEFAULT_PRIME = 32003


@dataclass(frozen=True)
class FieldConfig:
    kind: str = "rationals"        # 'rationals' | 'prime'
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind == "rationals":
            if self.p is not None:
                raise ConfigError("the rationals take no modulus")
        elif self.kind == "prime":
            if self.p is None or not (2 <= self.p < 2**31) or not isprime(self.p):
                raise ConfigError(f"GF(p) needs a prime p < 2^31, got {self.p}")
        else:
            raise ConfigError(f"unknown field kind: {self.kind}")

    @property
    def is_prime(self) -> bool:
        return self.kind == "prime"

    @property
    def tag(self) -> str:
        return f"gf:{self.p}" if self.is_prime else "q"

    def __str__(self) -> str:
        return self.tag


RATIONALS = FieldConfig()


def parse_field(text: str) -> FieldConfig:
    """'q' -> rationals, 'gf:p' -> GF(p), 'gf' -> GF(32003)."""
    text = str(text).strip().lower()
    if text in ("q", "qq", "rationals"):
        return RATIONALS
    if text == "gf":
        return FieldConfig("prime", DEFAULT_PRIME)
    if text.startswith("gf:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise ConfigError(f"unrecognised field: {text!r}") from None
        return FieldConfig("prime", p)
    raise ConfigError(f"unrecognised field: {text!r} (expected q or gf:p)")
