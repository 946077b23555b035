"""
==========================
Year: 2026
==========================
This module contains the exhaustive branch-and-bound searches for R(g, n), C(g, n), the table functions
min{n : R(g,n) >= k} and min{n : C(g,n) >= k}, and the enumeration of shortest Sidon sets.

Both engines add elements in increasing order while maintaining an ordered-pair sum count array, and
reject an element as soon as a count exceeds g. The budget counts node expansions (attempts to add an
element); when it runs out the certificate is returned with exhausted=False.

Linear searches sweep m = 1, 2, ...: R(g, m) is R(g, m-1) + 1 iff some (R(g, m-1) + 1)-subset of [1, m]
containing 1 and m exists, and the proven values R(g, m') for m' < m bound how many elements any window
of length m' can hold. Reflection s -> m + 1 - s is broken by requiring the gap after 1 to be no larger
than the gap before m.

Cyclic searches fix translation by putting 0 right after a largest cyclic gap, so every gap between
consecutive elements is at most the wrap-around gap n - max S. Closed-form upper bounds on C(g, n) discard
hopeless moduli without search.
"""

import logging
from typing import Dict, Iterable, List, Optional, Set, Tuple

from gsidon.core.bounds import c_upper_bound
from gsidon.core.convolution import canonicalize, canonicalize_cyclic
from gsidon.core.model import CyclicSet, IntegerSet, InvalidInputError, SearchCertificate
from gsidon.core.table import Problem

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 200_000_000
DEFAULT_WITNESS_LIMIT = 64


class BudgetExceeded(Exception):
    pass


class _Collector:
    """Keeps distinct canonical witnesses; stops the search after the first one unless collecting all."""

    def __init__(self, collect_all: bool):
        self.collect_all = collect_all
        self.found: Set = set()
        self.first = None

    def offer(self, witness) -> bool:
        """:return: True if the search should stop."""
        if self.first is None:
            self.first = witness
        if not self.collect_all:
            return True
        self.found.add(witness)
        return False


def _check_g(g: int):
    if g < 1:
        raise InvalidInputError(f"g must be at least 1, got {g}")


class LinearSweep:
    """
    Computes R(g, m) for m = 1, 2, ... in order. r[m] holds the proven value; jumps[k] = (m, witness, nodes)
    records the first m with R(g, m) >= k, a witness inside [1, m] and the node count at that point.
    """

    g: int
    budget: int
    nodes: int
    r: List[int]
    jumps: Dict[int, Tuple[int, Tuple[int, ...], int]]
    exhausted: bool

    def __init__(self, g: int, budget: int = DEFAULT_BUDGET):
        _check_g(g)
        self.g = g
        self.budget = budget
        self.nodes = 0
        self.r = [0, 1]
        self.jumps = {1: (1, (1,), 0)}
        self.exhausted = True

    @property
    def m(self) -> int:
        """The largest container size with a proven R value."""
        return len(self.r) - 1

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded()

    def _step(self) -> bool:
        m = self.m + 1
        target = self.r[-1] + 1
        collector = _Collector(collect_all=False)
        try:
            self._search(m, target, collector)
        except BudgetExceeded:
            logger.info("R(%d, %d): budget of %d nodes exhausted", self.g, m, self.budget)
            self.exhausted = False
            return False
        if collector.first is not None:
            self.r.append(target)
            self.jumps[target] = (m, collector.first, self.nodes)
            logger.info("R(%d, %d) = %d (%d nodes so far)", self.g, m, target, self.nodes)
        else:
            self.r.append(target - 1)
            logger.debug("R(%d, %d) = %d", self.g, m, target - 1)
        return True

    def extend_to(self, n: int) -> bool:
        """Proves R(g, m) for all m <= n. :return: False if the budget ran out first."""
        while self.m < n:
            if not self.exhausted or not self._step():
                return False
        return True

    def extend_until(self, k: int) -> bool:
        """Sweeps until R(g, m) >= k. :return: False if the budget ran out first."""
        if k >= 2 and self.g == 1:
            raise InvalidInputError(f"No set of {k} elements has g-value at most 1")
        while self.r[-1] < k:
            if not self.exhausted or not self._step():
                return False
        return True

    def enumerate(self, m: int, target: int, limit: Optional[int] = None) -> Tuple[List[IntegerSet], int, bool]:
        """
        All target-subsets of [1, m] containing 1 and m with g-value at most g, up to translation and
        reflection. R must be proven up to m - 1 first.
        :return: (canonical witnesses sorted and truncated to limit, distinct count, exhausted)
        """
        self.extend_to(m - 1)
        if not self.exhausted:
            return [], 0, False
        collector = _Collector(collect_all=True)
        exhausted = True
        try:
            self._search(m, target, collector)
        except BudgetExceeded:
            exhausted = False
        witnesses = sorted(canonicalize(IntegerSet(w)) for w in collector.found)
        distinct = sorted(set(witnesses))
        return distinct[:limit] if limit is not None else distinct, len(distinct), exhausted

    def _search(self, m: int, target: int, collector: _Collector):
        g = self.g
        if target > m:
            return
        if m == 1:
            collector.offer((1,))
            return
        counts = [0] * (2 * m + 2)
        counts[2] += 1
        counts[2 * m] += 1
        counts[m + 1] += 2
        if counts[m + 1] > g:
            return
        if target == 2:
            collector.offer((1, m))
            return
        r = self.r
        chosen = [1]

        def dfs(start: int) -> bool:
            depth = len(chosen)
            if depth == 1:
                high = (m + 1) // 2
            else:
                high = m - chosen[1] + 1
            high = min(high, m - 1)
            # elements inside [c, m]: c, the elements still to come and m
            need_right = target - depth
            for c in range(start, high + 1):
                self._tick()
                if need_right > r[m - c + 1]:
                    break
                if depth + 1 > r[c]:
                    continue
                # place c: pair sums with every chosen element and with m, plus 2c
                ok = True
                touched = 0
                for t in chosen:
                    counts[c + t] += 2
                    touched += 1
                    if counts[c + t] > g:
                        ok = False
                        break
                if ok:
                    counts[c + m] += 2
                    counts[2 * c] += 1
                    if counts[c + m] > g or counts[2 * c] > g:
                        counts[c + m] -= 2
                        counts[2 * c] -= 1
                        ok = False
                if not ok:
                    for t in chosen[:touched]:
                        counts[c + t] -= 2
                    continue
                chosen.append(c)
                if depth + 2 == target:
                    stop = collector.offer(tuple(chosen) + (m,))
                else:
                    stop = dfs(c + 1)
                chosen.pop()
                counts[c + m] -= 2
                counts[2 * c] -= 1
                for t in chosen:
                    counts[c + t] -= 2
                if stop:
                    return True
            return False

        dfs(2)


def max_size_linear(g: int, n: int, budget: int = DEFAULT_BUDGET, sweep: Optional[LinearSweep] = None) \
        -> SearchCertificate:
    """
    R(g, n), the size of a largest subset of [1, n] with g-value at most g. An unexhausted certificate
    carries the best proven lower bound.
    """
    _check_g(g)
    if n < 1:
        raise InvalidInputError(f"n must be at least 1, got {n}")
    sweep = LinearSweep(g, budget) if sweep is None else sweep
    sweep.extend_to(n)
    proven = min(n, sweep.m)
    value = sweep.r[proven]
    m, witness, _ = sweep.jumps[value]
    return SearchCertificate(Problem.R, g, n, value, [IntegerSet(witness)], sweep.nodes, sweep.exhausted,
                             sweep.budget)


def _min_n_linear_certificate(sweep: LinearSweep, k: int) -> SearchCertificate:
    if k in sweep.jumps:
        m, witness, nodes = sweep.jumps[k]
        return SearchCertificate(Problem.R_MIN_N, sweep.g, k, m, [IntegerSet(witness)], nodes, True,
                                 sweep.budget)
    # the answer exceeds the last proven container size
    return SearchCertificate(Problem.R_MIN_N, sweep.g, k, sweep.m, [], sweep.nodes, False, sweep.budget)


def min_n_linear(g: int, k: int, budget: int = DEFAULT_BUDGET) -> SearchCertificate:
    """
    min{n : R(g, n) >= k} with a k-element witness inside [1, n]. If the budget runs out the certificate is
    unexhausted and its value is the largest n proven infeasible.
    """
    _check_g(g)
    if k < 1:
        raise InvalidInputError(f"k must be at least 1, got {k}")
    sweep = LinearSweep(g, budget)
    sweep.extend_until(k)
    return _min_n_linear_certificate(sweep, k)


def min_n_linear_column(g: int, ks: Iterable[int], budget: int = DEFAULT_BUDGET) -> Dict[int, SearchCertificate]:
    """min{n : R(g, n) >= k} for several k from a single sweep."""
    ks = sorted(set(ks))
    if not ks:
        return {}
    if ks[0] < 1:
        raise InvalidInputError(f"k must be at least 1, got {ks[0]}")
    sweep = LinearSweep(g, budget)
    sweep.extend_until(ks[-1])
    return {k: _min_n_linear_certificate(sweep, k) for k in ks}


def enumerate_shortest_sidon(k: int, budget: int = DEFAULT_BUDGET, witness_limit: Optional[int] = None) \
        -> SearchCertificate:
    """
    The least span of a k-element Sidon set and all such sets up to translation and reflection, in
    canonical form (minimum 0), sorted.
    """
    if k < 2:
        raise InvalidInputError(f"Shortest Sidon sets need k >= 2, got {k}")
    sweep = LinearSweep(2, budget)
    if not sweep.extend_until(k):
        return SearchCertificate(Problem.SHORTEST, 2, k, None, [], sweep.nodes, False, budget)
    m, _, _ = sweep.jumps[k]
    witnesses, count, exhausted = sweep.enumerate(m, k, witness_limit)
    logger.info("Shortest Sidon sets with %d elements: span %d, %d witnesses", k, m - 1, count)
    return SearchCertificate(Problem.SHORTEST, 2, k, m - 1, witnesses, sweep.nodes, exhausted, budget,
                             witness_count=count)


class CyclicSearch:
    """Feasibility searches for subsets of Z_n with g-value at most g, sharing one node budget."""

    g: int
    budget: int
    nodes: int
    use_upper_bound: bool

    def __init__(self, g: int, budget: int = DEFAULT_BUDGET, use_upper_bound: bool = True):
        _check_g(g)
        self.g = g
        self.budget = budget
        self.nodes = 0
        self.use_upper_bound = use_upper_bound

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded()

    def capped(self, n: int, target: int) -> bool:
        """True if target elements are impossible mod n without searching."""
        if target > n:
            return True
        if target >= 2 and self.g == 1:
            return True
        return self.use_upper_bound and self.g >= 2 and c_upper_bound(self.g, n) < target

    def feasible(self, n: int, target: int) -> _Collector:
        """
        Searches target-subsets of Z_n containing 0 whose largest gap is the wrap-around gap. Raises
        BudgetExceeded when the budget runs out.
        """
        collector = _Collector(collect_all=False)
        if self.capped(n, target):
            return collector
        if target <= 1:
            collector.offer((0,) if target == 1 else ())
            return collector
        g = self.g
        counts = [0] * n
        counts[0] = 1
        chosen = [0]

        def dfs(max_gap: int) -> bool:
            depth = len(chosen)
            last = chosen[-1]
            remaining = target - depth - 1
            for c in range(last + 1, n):
                self._tick()
                gap = max(max_gap, c - last)
                # the last element must leave a wrap-around gap >= every gap, with room for the rest
                if c + remaining > n - gap:
                    break
                ok = True
                touched = 0
                for t in chosen:
                    s = (c + t) % n
                    counts[s] += 2
                    touched += 1
                    if counts[s] > g:
                        ok = False
                        break
                if ok:
                    s = 2 * c % n
                    counts[s] += 1
                    if counts[s] > g:
                        counts[s] -= 1
                        ok = False
                if not ok:
                    for t in chosen[:touched]:
                        counts[(c + t) % n] -= 2
                    continue
                chosen.append(c)
                if remaining == 0:
                    stop = collector.offer(tuple(chosen))
                else:
                    stop = dfs(gap)
                chosen.pop()
                counts[2 * c % n] -= 1
                for t in chosen:
                    counts[(c + t) % n] -= 2
                if stop:
                    return True
            return False

        dfs(0)
        return collector

    def max_size(self, n: int) -> SearchCertificate:
        if n < 1:
            raise InvalidInputError(f"n must be at least 1, got {n}")
        best = (0,)
        value = 1
        exhausted = True
        try:
            while True:
                collector = self.feasible(n, value + 1)
                if collector.first is None:
                    break
                value += 1
                best = collector.first
        except BudgetExceeded:
            logger.info("C(%d, %d): budget of %d nodes exhausted at size %d", self.g, n, self.budget, value + 1)
            exhausted = False
        return SearchCertificate(Problem.C, self.g, n, value, [canonicalize_cyclic(CyclicSet(n, best))], self.nodes,
                                 exhausted, self.budget)

    def min_n(self, k: int) -> SearchCertificate:
        if k < 1:
            raise InvalidInputError(f"k must be at least 1, got {k}")
        if k >= 2 and self.g == 1:
            raise InvalidInputError(f"No set of {k} elements has g-value at most 1")
        n = k
        try:
            while True:
                collector = self.feasible(n, k)
                if collector.first is not None:
                    logger.info("min{n : C(%d, n) >= %d} = %d (%d nodes)", self.g, k, n, self.nodes)
                    witness = canonicalize_cyclic(CyclicSet(n, collector.first))
                    return SearchCertificate(Problem.C_MIN_N, self.g, k, n, [witness], self.nodes, True, self.budget)
                n += 1
        except BudgetExceeded:
            logger.info("min{n : C(%d, n) >= %d}: budget exhausted at n = %d", self.g, k, n)
            return SearchCertificate(Problem.C_MIN_N, self.g, k, n - 1, [], self.nodes, False, self.budget)


def max_size_cyclic(g: int, n: int, budget: int = DEFAULT_BUDGET) -> SearchCertificate:
    """C(g, n), the size of a largest subset of Z_n with g-value at most g."""
    return CyclicSearch(g, budget).max_size(n)


def min_n_cyclic(g: int, k: int, budget: int = DEFAULT_BUDGET) -> SearchCertificate:
    """
    min{n : C(g, n) >= k} with a witness mod n. If the budget runs out the certificate is unexhausted and its
    value is the largest n proven infeasible.
    """
    return CyclicSearch(g, budget).min_n(k)
