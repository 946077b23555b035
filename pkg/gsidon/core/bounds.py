"""
==========================
Year: 2026
==========================
This module contains the closed-form bounds: upper bounds on C(g, n), lower bounds on sigma(g) from
explicit witnesses and from the block family, and the check of the embedded witness table.

Every sigma bound is an exact fraction under a square root; floats are for display only.
"""

import logging
import math
from fractions import Fraction
from typing import Dict, Iterable, List, Optional

import galois
from tabulate import tabulate

from gsidon.core.constructions import block_set
from gsidon.core.convolution import g_value
from gsidon.core.load import load_table4, load_theorem3
from gsidon.core.model import IntegerSet, InvalidInputError, SigmaBound, WitnessError
from gsidon.core.table import BoundSource, enum_label

logger = logging.getLogger(__name__)


def c_upper_bound_parts(g: int, n: int) -> Dict[str, int]:
    """Every applicable integer upper bound on C(g, n), keyed by the form it comes from."""
    if g < 2:
        raise InvalidInputError(f"Upper bounds on C(g, n) need g >= 2, got {g}")
    if n < 1:
        raise InvalidInputError(f"Upper bounds on C(g, n) need n >= 1, got {n}")
    half = n // 2
    parts = {'trivial': n}
    if g == 2:
        # c(c-1)/2 <= floor(n/2)
        parts['binomial'] = (1 + math.isqrt(8 * half + 1)) // 2
    elif g == 3:
        # c(c-1)/2 - c <= floor(n/2), and c <= sqrt(n + 9/2) + 3
        parts['binomial'] = (3 + math.isqrt(8 * half + 9)) // 2
        parts['closed-form'] = 3 + math.isqrt(n + 4)
    elif g % 2 == 0:
        parts['even'] = math.isqrt(g * n)
        if g == 4:
            # c <= sqrt(3n) + 7/6
            parts['closed-form'] = (7 + math.isqrt(108 * n)) // 6
    else:
        # c <= sqrt(1 - 1/g) sqrt(gn) + 1
        parts['odd'] = math.isqrt((g - 1) * n) + 1
    return parts


def c_upper_bound(g: int, n: int) -> int:
    return min(c_upper_bound_parts(g, n).values())


def sigma_lower_from_witness(g: int, x: int, witness: IntegerSet) -> SigmaBound:
    """sigma(2g) >= |witness| / sqrt(g x), for a witness inside [1, x] with g-value at most g."""
    if g < 1:
        raise InvalidInputError(f"g must be positive, got {g}")
    if not witness.fits(1, x):
        raise WitnessError(f"Witness {witness} is not contained in [1, {x}]", "container")
    value = g_value(witness)
    if value > g:
        raise WitnessError(f"Witness {witness} has g-value {value} > {g}", "g-value")
    return SigmaBound(g, x, len(witness), witness)


def thm4_parameters(g: int):
    """(x, |S|) for the block family: x = 3g - floor(g/3) + 1 and |S| = g + 2 floor(g/3) + floor(g/6)."""
    if g < 1:
        raise InvalidInputError(f"g must be positive, got {g}")
    return 3 * g - g // 3 + 1, g + 2 * (g // 3) + g // 6


def sigma_lower_thm4(g: int, constructive: bool = True) -> SigmaBound:
    """
    sigma(2g) >= (g + 2 floor(g/3) + floor(g/6)) / sqrt(3g^2 - g floor(g/3) + g). With constructive=True the
    bound is also derived from block_set(g) + 1 and the two routes must agree exactly.
    """
    x, size = thm4_parameters(g)
    formula = SigmaBound(g, x, size)
    if not constructive:
        return formula
    built = sigma_lower_from_witness(g, x, block_set(g).shifted(1))
    if built.bound != formula.bound:
        raise WitnessError(f"Block set for g={g} gives {built.bound}, formula gives {formula.bound}", "formula")
    return built


def sigma_limit() -> Fraction:
    """The limit of the block-family bound: sigma(g) >= sqrt(121/96) = 11/sqrt(96) asymptotically."""
    return Fraction(121, 96)


def sqrt_float(ratio: Fraction) -> float:
    return math.sqrt(ratio.numerator) / math.sqrt(ratio.denominator)


def theorem3_values() -> Dict[int, Fraction]:
    """sigma argument -> ratio under the root, as stated for sigma(4) ... sigma(22)."""
    return {row.argument: row.ratio for row in load_theorem3()}


def largest_prime_at_most(t: int) -> int:
    if t < 2:
        raise InvalidInputError(f"There is no prime <= {t}")
    return int(galois.prev_prime(t))


class WitnessCheck:
    g: int
    x: int
    r: int
    witness: IntegerSet
    printed_ratio: Fraction
    bound: Optional[SigmaBound]
    failures: List[str]

    def __init__(self, g, x, r, witness, printed_ratio):
        self.g = g
        self.x = x
        self.r = r
        self.witness = witness
        self.printed_ratio = printed_ratio
        self.bound = None
        self.failures = []

    @property
    def ok(self):
        return not self.failures

    def to_json(self):
        return {
            'g': self.g,
            'x': self.x,
            'r': self.r,
            'witness': self.witness.to_json(),
            'printed_ratio': str(self.printed_ratio),
            'bound': self.bound.to_json() if self.bound is not None else None,
            'failures': self.failures
        }


class WitnessTableReport:
    checks: List[WitnessCheck]

    def __init__(self, checks: List[WitnessCheck]):
        self.checks = checks

    @property
    def ok(self):
        return all(check.ok for check in self.checks)

    @property
    def failures(self) -> List[str]:
        return [f"g={check.g}: {failure}" for check in self.checks for failure in check.failures]

    def print(self):
        rows = [[check.g, check.x, check.r, str(check.witness), str(check.printed_ratio),
                 f"{sqrt_float(check.printed_ratio):.4f}", "ok" if check.ok else "; ".join(check.failures)]
                for check in self.checks]
        print(tabulate(rows, headers=["g", "x", "R(g,x)", "witness", "ratio", "sqrt", "status"]))

    def to_json(self):
        return {
            'ok': self.ok,
            'rows': [check.to_json() for check in self.checks]
        }


def verify_witness_table() -> WitnessTableReport:
    checks = []
    for row in load_table4():
        check = WitnessCheck(row.g, row.x, row.r, row.witness, row.ratio)
        if len(row.witness) != row.r:
            check.failures.append(f"|S| = {len(row.witness)} but R column is {row.r}")
        try:
            check.bound = sigma_lower_from_witness(row.g, row.x, row.witness)
            if check.bound.bound != row.ratio:
                check.failures.append(f"|S|^2/(gx) = {check.bound.bound} but the printed ratio is {row.ratio}")
        except WitnessError as e:
            check.failures.append(f"{e.constraint}: {e}")
        if not check.ok:
            logger.warning("Witness table row g=%d failed: %s", row.g, check.failures)
        checks.append(check)
    return WitnessTableReport(checks)


class SigmaRow:
    argument: int
    ratio: Fraction
    source: BoundSource

    def __init__(self, argument: int, ratio: Fraction, source: BoundSource):
        self.argument = argument
        self.ratio = ratio
        self.source = source

    @property
    def float_value(self) -> float:
        return sqrt_float(self.ratio)

    def csv_header(self) -> str:
        return "g,lower_bound_rational,lower_bound_float,source"

    def csv_row(self) -> str:
        return f"{self.argument},{self.ratio},{self.float_value:.10f},{enum_label(self.source)}"

    def to_json(self):
        return {
            'g': self.argument,
            'lower_bound_rational': str(self.ratio),
            'lower_bound_float': self.float_value,
            'source': enum_label(self.source)
        }


def sigma_table(arguments: Iterable[int]) -> List[SigmaRow]:
    """
    The best available lower bound on sigma(a) for each argument a >= 2: a witness-table row for
    floor(a/2) when there is one, else the block family. Odd arguments inherit sigma(2h + 1) >= sigma(2h).
    """
    witnesses = {row.g: row for row in load_table4()}
    rows = []
    for a in arguments:
        if a < 2:
            raise InvalidInputError(f"sigma bounds need an argument >= 2, got {a}")
        h = a // 2
        best = SigmaRow(a, sigma_lower_thm4(h, constructive=h <= 60).bound, BoundSource.THM4_FORMULA)
        if h in witnesses:
            row = witnesses[h]
            ratio = sigma_lower_from_witness(h, row.x, row.witness).bound
            if ratio >= best.ratio:
                best = SigmaRow(a, ratio, BoundSource.THM3_WITNESS)
        rows.append(best)
    return rows
