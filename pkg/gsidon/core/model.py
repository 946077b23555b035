"""
==========================
Year: 2026
==========================
This module contains most of the model classes: the set types, convolution profiles,
search certificates, sigma bounds, run records, the configuration object and the
exception hierarchy.
"""

import math
from fractions import Fraction
from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple, Union

import numpy as np

from gsidon.core.table import ConvKind, Problem, enum_label


class SidonError(Exception):
    error_name = "sidon-error"


class InvalidInputError(SidonError):
    error_name = "invalid-input-error"


class ModulusError(SidonError):
    error_name = "modulus-error"


class PrimitivityError(SidonError):
    error_name = "primitivity-error"


class ContextError(SidonError):
    error_name = "context-error"


class InvalidIndexError(SidonError):
    error_name = "invalid-index-error"

    def __init__(self, message, offending=None):
        super().__init__(message)
        self.offending = list(offending) if offending is not None else []


class CoprimalityError(SidonError):
    error_name = "coprimality-error"


class WitnessError(SidonError):
    error_name = "witness-error"

    def __init__(self, message, constraint):
        super().__init__(message)
        self.constraint = constraint


def _sorted_distinct(values: Iterable[int]) -> Tuple[int, ...]:
    elements = tuple(sorted(int(v) for v in values))
    for a, b in zip(elements, elements[1:]):
        if a == b:
            raise InvalidInputError(f"Duplicate element {a}")
    return elements


class IntegerSet:
    """A finite set of nonnegative integers, stored as a strictly increasing tuple."""

    elements: Tuple[int, ...]

    def __init__(self, elements: Iterable[int] = ()):
        self.elements = _sorted_distinct(elements)
        if self.elements and self.elements[0] < 0:
            raise InvalidInputError(f"Negative element {self.elements[0]} in an integer set")

    @property
    def modulus(self) -> Optional[int]:
        return None

    @property
    def min(self) -> int:
        return self.elements[0]

    @property
    def max(self) -> int:
        return self.elements[-1]

    @property
    def span(self) -> int:
        return self.elements[-1] - self.elements[0] if self.elements else 0

    def array(self) -> np.ndarray:
        return np.array(self.elements, dtype=np.int64)

    def shifted(self, c: int) -> 'IntegerSet':
        return IntegerSet(s + c for s in self.elements)

    def fits(self, low: int, high: int) -> bool:
        """True if every element lies in the closed interval [low, high]."""
        return not self.elements or (self.elements[0] >= low and self.elements[-1] <= high)

    def __len__(self):
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, item):
        return item in self.elements

    def __eq__(self, other):
        return type(other) is IntegerSet and self.elements == other.elements

    def __lt__(self, other):
        return self.elements < other.elements

    def __hash__(self):
        return hash(("IntegerSet", self.elements))

    def __str__(self):
        return "{" + ",".join(str(s) for s in self.elements) + "}"

    def __repr__(self):
        return f"IntegerSet({str(self)})"

    def to_json(self):
        return {
            'elements': list(self.elements),
            'modulus': None
        }


class CyclicSet:
    """A set of residues modulo n, stored as a strictly increasing tuple in [0, n)."""

    modulus: int
    elements: Tuple[int, ...]

    def __init__(self, modulus: int, elements: Iterable[int] = ()):
        if modulus < 1:
            raise InvalidInputError(f"Modulus must be positive, got {modulus}")
        self.modulus = int(modulus)
        self.elements = _sorted_distinct(elements)
        if self.elements and (self.elements[0] < 0 or self.elements[-1] >= self.modulus):
            raise InvalidInputError(f"Elements of {self.elements} not all in [0, {self.modulus})")

    @staticmethod
    def from_residues(modulus: int, values: Iterable[int]) -> 'CyclicSet':
        return CyclicSet(modulus, {v % modulus for v in values})

    def array(self) -> np.ndarray:
        return np.array(self.elements, dtype=np.int64)

    def __len__(self):
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, item):
        return item in self.elements

    def __eq__(self, other):
        return type(other) is CyclicSet and self.modulus == other.modulus and self.elements == other.elements

    def __lt__(self, other):
        return (self.modulus, self.elements) < (other.modulus, other.elements)

    def __hash__(self):
        return hash(("CyclicSet", self.modulus, self.elements))

    def __str__(self):
        return "{" + ",".join(str(s) for s in self.elements) + "} mod " + str(self.modulus)

    def __repr__(self):
        return f"CyclicSet({str(self)})"

    def to_json(self):
        return {
            'elements': list(self.elements),
            'modulus': self.modulus
        }


AnySet = Union[IntegerSet, CyclicSet]


class ConvProfile:
    """
    The exact map value -> count of a sum convolution, difference correlation or triple
    convolution. Counts are held densely: counts[i] is the count of value offset + i (for cyclic
    profiles offset is 0 and there is one entry per residue).
    """

    kind: ConvKind
    modulus: Optional[int]
    offset: int
    counts: np.ndarray
    max_count: int

    def __init__(self, kind: ConvKind, counts: np.ndarray, offset: int = 0, modulus: Optional[int] = None):
        self.kind = kind
        self.modulus = modulus
        self.offset = offset
        self.counts = counts.astype(np.int64, copy=False)
        self.max_count = int(self.counts.max()) if len(self.counts) > 0 else 0

    @property
    def cyclic(self) -> bool:
        return self.modulus is not None

    def __getitem__(self, value: int) -> int:
        if self.cyclic:
            return int(self.counts[value % self.modulus])
        i = value - self.offset
        if i < 0 or i >= len(self.counts):
            return 0
        return int(self.counts[i])

    def __len__(self):
        return len(self.counts)

    def total(self) -> int:
        return int(self.counts.sum())

    def values(self) -> range:
        return range(self.offset, self.offset + len(self.counts))

    def as_dict(self) -> Dict[int, int]:
        return {v: int(c) for v, c in zip(self.values(), self.counts)}

    def argmax(self) -> List[int]:
        """All values attaining max_count."""
        if len(self.counts) == 0:
            return []
        return [int(i) + self.offset for i in np.flatnonzero(self.counts == self.max_count)]

    def to_json(self):
        return {
            'kind': enum_label(self.kind),
            'modulus': self.modulus,
            'offset': self.offset,
            'counts': [int(c) for c in self.counts],
            'max_count': self.max_count
        }


class SearchCertificate:
    """
    Result of an exhaustive search. When exhausted is False the value is only what was found
    before the budget ran out (a lower bound for R/C, an upper bound for min-n problems is not
    implied).
    """

    problem: Problem
    g: int
    parameter: int
    value: Optional[int]
    witnesses: List[AnySet]
    witness_count: int
    nodes_explored: int
    exhausted: bool
    budget: int

    def __init__(self, problem: Problem, g: int, parameter: int, value: Optional[int],
                 witnesses: List[AnySet], nodes_explored: int, exhausted: bool, budget: int,
                 witness_count: Optional[int] = None):
        self.problem = problem
        self.g = g
        self.parameter = parameter
        self.value = value
        self.witnesses = list(witnesses)
        self.witness_count = witness_count if witness_count is not None else len(self.witnesses)
        self.nodes_explored = nodes_explored
        self.exhausted = exhausted
        self.budget = budget

    @property
    def truncated(self) -> bool:
        return self.witness_count > len(self.witnesses)

    @property
    def witness(self) -> Optional[AnySet]:
        return self.witnesses[0] if self.witnesses else None

    def to_json(self):
        return {
            'problem': enum_label(self.problem),
            'g': self.g,
            'parameter': self.parameter,
            'value': self.value,
            'witnesses': [w.to_json() for w in self.witnesses],
            'witness_count': self.witness_count,
            'nodes_explored': self.nodes_explored,
            'exhausted': self.exhausted,
            'budget': self.budget
        }


class SigmaBound:
    """
    A lower bound sigma(g_target) >= sqrt(bound), where bound = R(g,x)^2 / (g x) is kept as an
    exact fraction. g_target is 2g; the same bound holds for 2g + 1.
    """

    g_target: int
    g: int
    x: int
    r_value: int
    bound: Fraction
    witness: Optional[IntegerSet]

    def __init__(self, g: int, x: int, r_value: int, witness: Optional[IntegerSet] = None):
        self.g = g
        self.g_target = 2 * g
        self.x = x
        self.r_value = r_value
        self.bound = Fraction(r_value * r_value, g * x)
        self.witness = witness

    @property
    def float_value(self) -> float:
        return math.sqrt(self.bound.numerator) / math.sqrt(self.bound.denominator)

    def __eq__(self, other):
        return isinstance(other, SigmaBound) and self.g_target == other.g_target and self.bound == other.bound

    def __repr__(self):
        return f"SigmaBound(sigma({self.g_target}) >= sqrt({self.bound}) ~ {self.float_value:.10f})"

    def to_json(self):
        return {
            'g_target': self.g_target,
            'x': self.x,
            'r_value': self.r_value,
            'bound': str(self.bound),
            'float_value': self.float_value,
            'witness': self.witness.to_json() if self.witness is not None else None
        }


class RunRecord:
    """What the command line tool prints: everything except elapsed_ms is reproducible."""

    command: str
    parameters: Dict[str, Any]
    result: Dict[str, Any]
    version: str
    elapsed_ms: float

    def __init__(self, command: str, parameters: Dict[str, Any], result: Dict[str, Any], version: str,
                 elapsed_ms: float = 0.0):
        self.command = command
        self.parameters = parameters
        self.result = result
        self.version = version
        self.elapsed_ms = elapsed_ms

    def comparable(self):
        return {
            'command': self.command,
            'parameters': self.parameters,
            'result': self.result,
            'version': self.version
        }

    def to_json(self):
        data = self.comparable()
        data['elapsed_ms'] = self.elapsed_ms
        return data

    @staticmethod
    def from_json(data) -> 'RunRecord':
        return RunRecord(data['command'], data['parameters'], data['result'], data['version'],
                         elapsed_ms=data.get('elapsed_ms', 0.0))


class RulerRow:
    """A row of the shortest Sidon set table: k marks, span, canonical witnesses."""

    k: int
    span: int
    witnesses: List[IntegerSet]

    def __init__(self, k: int, span: int, witnesses: List[IntegerSet]):
        self.k = k
        self.span = span
        self.witnesses = witnesses

    def to_json(self):
        return {
            'k': self.k,
            'span': self.span,
            'witnesses': [w.to_json() for w in self.witnesses]
        }


class TableEntry:
    """
    A printed min-n entry of the R or C table. Entries printed as "<= v" have is_bound set and are never
    compared.
    """

    problem: Problem
    g: int
    k: int
    value: int
    is_bound: bool

    def __init__(self, problem: Problem, g: int, k: int, value: int, is_bound: bool = False):
        self.problem = problem
        self.g = g
        self.k = k
        self.value = value
        self.is_bound = is_bound

    def __str__(self):
        return f"<={self.value}" if self.is_bound else str(self.value)

    def to_json(self):
        return {
            'problem': enum_label(self.problem),
            'g': self.g,
            'k': self.k,
            'value': self.value,
            'is_bound': self.is_bound
        }


class WitnessRow:
    """A row of the witness table: R(g, x) >= r, certified by witness, with the printed ratio r^2/(gx)."""

    g: int
    x: int
    r: int
    witness: IntegerSet
    ratio: Fraction

    def __init__(self, g: int, x: int, r: int, witness: IntegerSet, ratio: Fraction):
        self.g = g
        self.x = x
        self.r = r
        self.witness = witness
        self.ratio = ratio

    def to_json(self):
        return {
            'g': self.g,
            'x': self.x,
            'r': self.r,
            'witness': self.witness.to_json(),
            'ratio': str(self.ratio)
        }


class Theorem3Row:
    argument: int
    ratio: Fraction

    def __init__(self, argument: int, ratio: Fraction):
        self.argument = argument
        self.ratio = ratio


class TableCells:
    """Which cells of an embedded table are reproduced: inclusive g and k ranges."""

    g_range: Tuple[int, int]
    k_range: Tuple[int, int]

    def __init__(self, g_range=(2, 2), k_range=(2, 2)):
        self.g_range = tuple(g_range)
        self.k_range = tuple(k_range)

    def cells(self) -> List[Tuple[int, int]]:
        return [(g, k) for g in range(self.g_range[0], self.g_range[1] + 1)
                for k in range(self.k_range[0], self.k_range[1] + 1)]

    def to_json(self):
        return {
            'g': list(self.g_range),
            'k': list(self.k_range)
        }


class Configuration:
    name: str
    budget: int
    threads: int
    witness_limit: int
    full_witness_max_k: int
    tables: Dict[int, List[TableCells]]

    def __init__(self):
        self.name = "Default"
        self.budget = 200_000_000
        self.threads = 1
        self.witness_limit = 64
        self.full_witness_max_k = 7
        self.tables = {
            1: [TableCells(g_range=(2, 2), k_range=(2, 8))],
            2: [TableCells(g_range=(2, 6), k_range=(3, 9))],
            3: [TableCells(g_range=(2, 2), k_range=(3, 7)), TableCells(g_range=(3, 6), k_range=(3, 8))]
        }

    def cells(self, which: int) -> List[Tuple[int, int]]:
        cells = []
        for block in self.tables.get(which, []):
            for cell in block.cells():
                if cell not in cells:
                    cells.append(cell)
        return sorted(cells)
