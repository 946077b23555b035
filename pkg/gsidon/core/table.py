"""
==========================
Year: 2026
==========================
This module contains the enumerations shared by the core modules.
"""

from enum import Enum


class ConvKind(Enum):
    SUM = 1
    DIFFERENCE = 2
    TRIPLE = 3


class Problem(Enum):
    R = 1           # largest subset of [n]
    C = 2           # largest subset of Z_n
    R_MIN_N = 3     # min{n : R(g,n) >= k}
    C_MIN_N = 4     # min{n : C(g,n) >= k}
    SHORTEST = 5    # shortest Sidon sets, up to translation and reflection


class Construction(Enum):
    RUZSA = 1
    BOSE = 2
    SINGER = 3
    CRT = 4
    INTERLEAVE = 5
    BLOCK = 6
    SINGER_LIFT = 7
    KOLOUNTZAKIS = 8
    DENSE = 9


class BoundSource(Enum):
    THM3_WITNESS = 1
    THM4_FORMULA = 2


class CellStatus(Enum):
    MATCH = 1
    MISMATCH = 2
    UNEXHAUSTED = 3     # budget ran out, value is only a bound
    NOT_COMPARED = 4    # embedded entry is itself only a bound


def enum_label(member: Enum) -> str:
    """The lower-case, dash-separated label used in JSON and CSV output."""
    return member.name.lower().replace("_", "-")
