"""
Plain-text monomial ideal format.

    n=<int>
    <e_1> <e_2> ... <e_n>      one minimal generator per line

Generators are written in the ideal's canonical order, so dumps(loads(text)) is
byte-identical for any text produced by dumps.
"""

from pathlib import Path
from typing import Union

from src.errors import SyzygyError

from .ideal import MonomialIdeal


class IdealFormatError(SyzygyError):
    pass


def dumps_ideal(J: MonomialIdeal) -> str:
    lines = [f"n={J.n}"]
    lines.extend(" ".join(str(x) for x in g) for g in J.generators)
    return "\n".join(lines) + "\n"


def loads_ideal(text: str) -> MonomialIdeal:
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines or not lines[0].startswith("n="):
        raise IdealFormatError("missing header line 'n=<int>'")
    try:
        n = int(lines[0][2:])
        gens = [tuple(int(x) for x in line.split()) for line in lines[1:]]
    except ValueError as exc:
        raise IdealFormatError(f"malformed ideal text: {exc}") from None
    for g in gens:
        if len(g) != n:
            raise IdealFormatError(f"generator {g} does not have {n} exponents")
    return MonomialIdeal(n, tuple(gens))


def write_ideal(J: MonomialIdeal, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps_ideal(J), encoding="utf-8")


def read_ideal(path: Union[str, Path]) -> MonomialIdeal:
    return loads_ideal(Path(path).read_text(encoding="utf-8"))
