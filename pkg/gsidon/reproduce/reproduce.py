"""
==========================
Year: 2026
==========================
This module contains the table reproduction runner: it recomputes the desk-scale cells of the
embedded tables and compares them with the printed values. Independent cells (a column for the
linear table, which shares one sweep per g) are fanned out to worker processes.
"""

import logging
import time
from multiprocessing import Pool
from typing import Callable, Dict, List, Optional, Tuple

from gsidon.core.load import load_config, load_table1, load_table2, load_table3
from gsidon.core.model import Configuration, SearchCertificate, TableEntry
from gsidon.core.search import enumerate_shortest_sidon, min_n_cyclic, min_n_linear_column
from gsidon.core.table import CellStatus, Problem
from gsidon.core.util import compare_iterable
from gsidon.reproduce.result_structures import CellResult, TableResults

logger = logging.getLogger(__name__)


def _shortest_cell(k: int, budget: int, witness_limit: int) -> List[SearchCertificate]:
    return [enumerate_shortest_sidon(k, budget, witness_limit)]


def _linear_column(g: int, ks: List[int], budget: int) -> List[SearchCertificate]:
    column = min_n_linear_column(g, ks, budget)
    return [column[k] for k in ks]


def _cyclic_cell(g: int, k: int, budget: int) -> List[SearchCertificate]:
    return [min_n_cyclic(g, k, budget)]


Job = Tuple[Callable[..., List[SearchCertificate]], tuple]


def _run_jobs(jobs: List[Job], threads: int) -> List[SearchCertificate]:
    if threads <= 1 or len(jobs) <= 1:
        results = [fn(*args) for fn, args in jobs]
    else:
        with Pool(min(threads, len(jobs))) as pool:
            pending = [pool.apply_async(fn, args) for fn, args in jobs]
            results = [result.get() for result in pending]
    return [certificate for certificates in results for certificate in certificates]


def search_cells(problem: Problem, g_values: List[int], k_values: List[int], budget: int, threads: int = 1) \
        -> List[CellResult]:
    """min{n : R(g,n) >= k} or min{n : C(g,n) >= k} over a grid of cells, ordered by (g, k)."""
    if problem == Problem.R_MIN_N:
        jobs = [(_linear_column, (g, list(k_values), budget)) for g in g_values]
        which = 2
    elif problem == Problem.C_MIN_N:
        jobs = [(_cyclic_cell, (g, k, budget)) for g in g_values for k in k_values]
        which = 3
    else:
        raise ValueError(f"Grid searches cover min-n problems only, got {problem.name}")
    certificates = _run_jobs(jobs, threads)
    return sorted((CellResult(which, certificate) for certificate in certificates), key=lambda cell: (cell.g, cell.k))


def _compare_shortest(certificate: SearchCertificate, expected: Dict, full_witness_max_k: int) -> CellResult:
    k = certificate.parameter
    row = expected.get(k)
    if not certificate.exhausted:
        return CellResult(1, certificate, str(row.span) if row else None, CellStatus.UNEXHAUSTED)
    if row is None:
        return CellResult(1, certificate, None, CellStatus.NOT_COMPARED)
    diff = []
    if certificate.value != row.span:
        diff.append(f"span: '{certificate.value}' _notEqual_ '{row.span}'")
    elif k <= full_witness_max_k:
        diff.extend(compare_iterable(certificate.witnesses, row.witnesses, path="witnesses"))
    status = CellStatus.MISMATCH if diff else CellStatus.MATCH
    return CellResult(1, certificate, str(row.span), status, diff)


def _compare_min_n(which: int, certificate: SearchCertificate, expected: Dict[Tuple[int, int], TableEntry]) \
        -> CellResult:
    entry = expected.get((certificate.g, certificate.parameter))
    printed = str(entry) if entry is not None else None
    if entry is None or entry.is_bound:
        return CellResult(which, certificate, printed, CellStatus.NOT_COMPARED)
    if not certificate.exhausted:
        return CellResult(which, certificate, printed, CellStatus.UNEXHAUSTED)
    if certificate.value != entry.value:
        return CellResult(which, certificate, printed, CellStatus.MISMATCH,
                          [f"value: '{certificate.value}' _notEqual_ '{entry.value}'"])
    return CellResult(which, certificate, printed, CellStatus.MATCH)


def reproduce_table(which: int, config: Optional[Configuration] = None, budget: Optional[int] = None,
                    threads: Optional[int] = None) -> TableResults:
    """
    Recomputes the cells of table 1 (shortest Sidon sets), 2 (min{n : R(g,n) >= k}) or 3
    (min{n : C(g,n) >= k}) listed in the configuration. budget and threads override the configuration.
    Cells that run out of budget are reported unexhausted, never as mismatches.
    """
    if which not in (1, 2, 3):
        raise ValueError(f"Only tables 1, 2 and 3 can be reproduced, got {which}")
    config = load_config("default") if config is None else config
    budget = config.budget if budget is None else budget
    threads = config.threads if threads is None else threads
    cells = config.cells(which)
    start = time.perf_counter()

    if which == 1:
        jobs = [(_shortest_cell, (k, budget, config.witness_limit)) for k in sorted({k for _, k in cells})]
    elif which == 2:
        columns: Dict[int, List[int]] = {}
        for g, k in cells:
            columns.setdefault(g, []).append(k)
        jobs = [(_linear_column, (g, ks, budget)) for g, ks in sorted(columns.items())]
    else:
        jobs = [(_cyclic_cell, (g, k, budget)) for g, k in cells]
    logger.info("Reproducing table %d: %d cells in %d jobs on %d workers", which, len(cells), len(jobs), threads)
    certificates = _run_jobs(jobs, threads)

    if which == 1:
        expected = {row.k: row for row in load_table1()}
        results = [_compare_shortest(certificate, expected, config.full_witness_max_k)
                   for certificate in certificates]
    else:
        entries = load_table2() if which == 2 else load_table3()
        expected = {(entry.g, entry.k): entry for entry in entries}
        results = [_compare_min_n(which, certificate, expected) for certificate in certificates]

    for result in results:
        if result.status == CellStatus.MISMATCH:
            logger.warning("Table %d cell g=%d, k=%d: %s", which, result.g, result.k, "; ".join(result.diff))
    logger.info("Table %d done in %.1f s", which, time.perf_counter() - start)
    return TableResults(which, config.name, budget, results)
