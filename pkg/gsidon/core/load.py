"""
==========================
Year: 2026
==========================
This module contains the functions used to load data in the /data/ folder: search configurations and
the embedded copies of the published tables.
"""

import csv
import json
import logging
import os
from fractions import Fraction
from typing import Dict, List

from gsidon.core.model import Configuration, RulerRow, TableCells, TableEntry, Theorem3Row, WitnessRow
from gsidon.core.table import Problem
from gsidon.core.util import get_data_path, parse_set

logger = logging.getLogger(__name__)


def load_config(name):
    """
    :param name: the filename to load, or a path to a JSON file.
    :return: The configuration in data/config/<name>
    """
    if os.path.isfile(name):
        path = name
    else:
        if not name.endswith(".json"):
            name += ".json"
        path = get_data_path('config/' + name)
    with open(path) as f:
        data = json.load(f)
    config = Configuration()
    config.name = data['name']
    config.budget = int(float(data.get('budget', config.budget)))
    config.threads = data.get('threads', config.threads)
    config.witness_limit = data.get('witness_limit', config.witness_limit)
    config.full_witness_max_k = data.get('full_witness_max_k', config.full_witness_max_k)
    if 'tables' in data:
        config.tables = {int(which): [TableCells(g_range=block['g'], k_range=block['k']) for block in blocks]
                         for which, blocks in data['tables'].items()}
    logger.debug("Loaded configuration '%s' from %s", config.name, path)
    return config


def _read_rows(name) -> List[Dict[str, str]]:
    path = get_data_path('tables/' + name + '.csv')
    with open(path, newline='') as f:
        return [row for row in csv.DictReader(f) if any(row.values())]


def load_table1() -> List[RulerRow]:
    """
    :return: The shortest Sidon sets per k, in increasing k, with their canonical witnesses.
    """
    rows: Dict[int, RulerRow] = {}
    for row in _read_rows('table1'):
        k = int(row['k'])
        if k not in rows:
            rows[k] = RulerRow(k, int(row['span']), [])
        rows[k].witnesses.append(parse_set(row['witness']))
    return [rows[k] for k in sorted(rows)]


def _load_min_n_table(name, problem) -> List[TableEntry]:
    entries = []
    for row in _read_rows(name):
        entries.append(TableEntry(problem, int(row['g']), int(row['k']), int(row['value']),
                                  is_bound=row.get('bound', '0') == '1'))
    return entries


def load_table2() -> List[TableEntry]:
    """
    :return: The printed entries of min{n : R(g,n) >= k}.
    """
    return _load_min_n_table('table2', Problem.R_MIN_N)


def load_table3() -> List[TableEntry]:
    """
    :return: The printed entries of min{n : C(g,n) >= k}.
    """
    return _load_min_n_table('table3', Problem.C_MIN_N)


def load_table4() -> List[WitnessRow]:
    return [WitnessRow(int(row['g']), int(row['x']), int(row['r']), parse_set(row['witness']), Fraction(row['ratio']))
            for row in _read_rows('table4')]


def load_theorem3() -> List[Theorem3Row]:
    return [Theorem3Row(int(row['argument']), Fraction(row['ratio'])) for row in _read_rows('theorem3')]


def load_table(which: int):
    loaders = {1: load_table1, 2: load_table2, 3: load_table3, 4: load_table4}
    if which not in loaders:
        raise ValueError(f"There is no table {which}")
    return loaders[which]()
