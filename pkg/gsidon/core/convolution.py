"""
==========================
Year: 2026
==========================
This module contains the exact convolution machinery: sum convolutions S*S, difference correlations
S o S, triple convolutions, g-values, and the translation / reflection / dilation symmetries with the
canonical forms used to de-duplicate witnesses.

All counts are ordered-pair counts, so a set is a Sidon set iff its g-value is at most 2.
"""

import math
from typing import List, Tuple

import numpy as np
from more_itertools import circular_shifts

from gsidon.core.model import AnySet, ConvProfile, CyclicSet, IntegerSet, InvalidInputError
from gsidon.core.table import ConvKind


def _empty(kind: ConvKind, S: AnySet) -> ConvProfile:
    if isinstance(S, CyclicSet):
        return ConvProfile(kind, np.zeros(S.modulus, dtype=np.int64), modulus=S.modulus)
    return ConvProfile(kind, np.zeros(0, dtype=np.int64))


def sum_convolution(S: AnySet) -> ConvProfile:
    """
    Counts ordered pairs (s1, s2) by s1 + s2. Cyclic sets reduce sums mod n; integer sets index the sums
    over [2 min S, 2 max S].
    """
    if len(S) == 0:
        return _empty(ConvKind.SUM, S)
    a = S.array()
    if isinstance(S, CyclicSet):
        sums = np.add.outer(a, a).ravel() % S.modulus
        return ConvProfile(ConvKind.SUM, np.bincount(sums, minlength=S.modulus), modulus=S.modulus)
    low = int(a[0])
    sums = np.add.outer(a, a).ravel() - 2 * low
    return ConvProfile(ConvKind.SUM, np.bincount(sums, minlength=2 * (int(a[-1]) - low) + 1), offset=2 * low)


def g_value(S: AnySet) -> int:
    return sum_convolution(S).max_count


def is_sidon(S: AnySet) -> bool:
    return g_value(S) <= 2


def diff_correlation(S: AnySet) -> ConvProfile:
    """Counts ordered pairs (s1, s2) by s1 - s2; the count at 0 is |S|."""
    if len(S) == 0:
        return _empty(ConvKind.DIFFERENCE, S)
    a = S.array()
    diffs = np.subtract.outer(a, a).ravel()
    if isinstance(S, CyclicSet):
        return ConvProfile(ConvKind.DIFFERENCE, np.bincount(diffs % S.modulus, minlength=S.modulus),
                           modulus=S.modulus)
    span = S.span
    return ConvProfile(ConvKind.DIFFERENCE, np.bincount(diffs + span, minlength=2 * span + 1), offset=-span)


def triple_convolution(S: AnySet) -> ConvProfile:
    """Counts ordered triples (s1, s2, s3) by s1 + s2 + s3 (mod n for cyclic sets)."""
    if len(S) == 0:
        return _empty(ConvKind.TRIPLE, S)
    pairs = sum_convolution(S).counts
    a = S.array()
    if isinstance(S, CyclicSet):
        n = S.modulus
        full = np.convolve(pairs, np.bincount(a, minlength=n))
        counts = full[:n].copy()
        counts[:len(full) - n] += full[n:]
        return ConvProfile(ConvKind.TRIPLE, counts, modulus=n)
    low = int(a[0])
    full = np.convolve(pairs, np.bincount(a - low))
    return ConvProfile(ConvKind.TRIPLE, full, offset=3 * low)


def triple_convolution_max(S: AnySet) -> int:
    return triple_convolution(S).max_count


def cross_convolution_max(S: AnySet, T: AnySet) -> int:
    """max_k of the number of pairs (s, t) in S x T with s + t = k."""
    if type(S) is not type(T):
        raise InvalidInputError("Cross convolution of an integer set with a cyclic set")
    if isinstance(S, CyclicSet) and S.modulus != T.modulus:
        raise InvalidInputError(f"Cross convolution of sets mod {S.modulus} and mod {T.modulus}")
    if len(S) == 0 or len(T) == 0:
        return 0
    sums = np.add.outer(S.array(), T.array()).ravel()
    if isinstance(S, CyclicSet):
        sums = sums % S.modulus
    else:
        sums = sums - sums.min()
    return int(np.bincount(sums).max())


def translate(S: AnySet, c: int) -> AnySet:
    if isinstance(S, CyclicSet):
        return CyclicSet.from_residues(S.modulus, (s + c for s in S))
    return S.shifted(c)


def reflect(S: AnySet) -> AnySet:
    """s -> -s for cyclic sets; s -> min S + max S - s for integer sets (same interval)."""
    if isinstance(S, CyclicSet):
        return CyclicSet.from_residues(S.modulus, (-s for s in S))
    if len(S) == 0:
        return S
    return IntegerSet(S.min + S.max - s for s in S)


def dilate(S: AnySet, c: int) -> AnySet:
    if isinstance(S, CyclicSet):
        if math.gcd(c, S.modulus) != 1:
            raise InvalidInputError(f"Dilation factor {c} is not a unit mod {S.modulus}")
        return CyclicSet.from_residues(S.modulus, (c * s for s in S))
    if c < 1:
        raise InvalidInputError(f"Dilation factor {c} must be positive for integer sets")
    return IntegerSet(c * s for s in S)


def canonicalize(S: IntegerSet) -> IntegerSet:
    """The lexicographically least of S - min S and its reflection, translated to start at 0."""
    if len(S) == 0:
        return S
    low, high = S.min, S.max
    forward = tuple(s - low for s in S)
    backward = tuple(sorted(high - s for s in S))
    return IntegerSet(min(forward, backward))


def cyclic_gaps(S: CyclicSet) -> List[Tuple[int, int]]:
    """(gap, element) pairs: the distance from the previous element (cyclically) to each element."""
    if len(S) == 0:
        raise InvalidInputError("The empty set has no gaps")
    elements = S.elements
    n = S.modulus
    return [((s - elements[i - 1]) % n or n, s) for i, s in enumerate(elements)]


def largest_cyclic_gap(S: CyclicSet) -> int:
    return max(gap for gap, _ in cyclic_gaps(S))


def _least_rotation(S: CyclicSet) -> Tuple[int, ...]:
    gaps = [gap for gap, _ in cyclic_gaps(S)]
    # gaps[i] precedes element i, so a rotation starting at element i is gaps[i+1:] + gaps[:i+1]
    best = min(circular_shifts(gaps[1:] + gaps[:1]))
    elements = [0]
    for gap in best[:-1]:
        elements.append(elements[-1] + gap)
    return tuple(elements)


def canonicalize_cyclic(S: CyclicSet) -> CyclicSet:
    """Least rotation of S, then the least of that and the least rotation of its reflection."""
    if len(S) == 0:
        return S
    forward = _least_rotation(S)
    backward = _least_rotation(reflect(S))
    return CyclicSet(S.modulus, min(forward, backward))
