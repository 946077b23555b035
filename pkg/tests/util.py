from gsidon.core import *

import itertools
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

naive_linear_cache: Dict[Tuple[int, int], int] = {}
naive_cyclic_cache: Dict[Tuple[int, int], int] = {}


def naive_g_value(elements: Sequence[int], modulus: Optional[int] = None) -> int:
    """Ordered-pair sum counts by double loop, independent of the numpy convolution."""
    counts: Dict[int, int] = {}
    for a in elements:
        for b in elements:
            s = a + b if modulus is None else (a + b) % modulus
            counts[s] = counts.get(s, 0) + 1
    return max(counts.values()) if counts else 0


def naive_max_linear(g: int, n: int) -> int:
    """R(g, n) by trying every subset of [1, n], largest sizes first."""
    key = (g, n)
    if key not in naive_linear_cache:
        naive_linear_cache[key] = 0
        for size in range(n, 0, -1):
            if any(naive_g_value(subset) <= g for subset in itertools.combinations(range(1, n + 1), size)):
                naive_linear_cache[key] = size
                break
    return naive_linear_cache[key]


def naive_max_cyclic(g: int, n: int) -> int:
    """C(g, n) by trying every subset of Z_n that contains 0 (any nonempty set has a translate that does)."""
    key = (g, n)
    if key not in naive_cyclic_cache:
        naive_cyclic_cache[key] = 0
        for size in range(n, 0, -1):
            if any(naive_g_value((0,) + rest, n) <= g for rest in itertools.combinations(range(1, n), size - 1)):
                naive_cyclic_cache[key] = size
                break
    return naive_cyclic_cache[key]


def naive_min_n_linear(g: int, k: int) -> int:
    n = k
    while naive_max_linear(g, n) < k:
        n += 1
    return n


def naive_min_n_cyclic(g: int, k: int) -> int:
    n = k
    while naive_max_cyclic(g, n) < k:
        n += 1
    return n


def random_integer_set(rnd: np.random.RandomState, high: int, size: int, low: int = 0) -> IntegerSet:
    return IntegerSet(int(v) for v in rnd.choice(np.arange(low, high + 1), size=size, replace=False))


def random_cyclic_set(rnd: np.random.RandomState, n: int, size: int) -> CyclicSet:
    return CyclicSet(n, (int(v) for v in rnd.choice(n, size=size, replace=False)))


def projective_pairs(q: int) -> List[Tuple[int, int]]:
    """One representative <k1, k2> of every nonzero pair up to F_q scalars: <1, b> for b in F_q and <0, 1>."""
    return [(1, b) for b in range(q)] + [(0, 1)]


def index_subsets(indices: Sequence, max_size: int):
    for size in range(1, max_size + 1):
        yield from itertools.combinations(indices, size)
