"""
==========================
Year: 2026
==========================
A few utilities used across the core modules: text formats for sets, index sets, ranges and budgets,
the data path resolver and a structural diff for JSON-like records.
"""

import os
import re
from collections.abc import Sized
from typing import List, Tuple

import gsidon
from gsidon.core.model import AnySet, CyclicSet, IntegerSet

_set_pattern = re.compile(r"^\{([^{}]*)\}(?:\s*mod\s*(\d+))?$")


def parse_set(text: str, modulus=None) -> AnySet:
    """
    Parses "{1,2,5,7}" or "{0,1,3} mod 7". Integers may be separated by commas and/or spaces. An explicit
    modulus argument makes the set cyclic (and must agree with a "mod n" suffix).
    """
    match = _set_pattern.match(text.strip())
    if match is None:
        raise ValueError(f"Malformed set '{text}'")
    body = match.group(1).strip()
    tokens = [token for token in re.split(r"[\s,]+", body) if token] if body else []
    if not all(re.fullmatch(r"-?\d+", token) for token in tokens):
        raise ValueError(f"Malformed set '{text}'")
    values = [int(token) for token in tokens]
    if len(set(values)) != len(values):
        raise ValueError(f"Repeated element in '{text}'")
    suffix = int(match.group(2)) if match.group(2) else None
    if modulus is not None and suffix is not None and modulus != suffix:
        raise ValueError(f"Set '{text}' is mod {suffix} but modulus {modulus} was given")
    n = suffix if suffix is not None else modulus
    if n is None:
        if any(v < 0 for v in values):
            raise ValueError(f"Negative element in '{text}'")
        return IntegerSet(values)
    if n < 1 or any(v < 0 or v >= n for v in values):
        raise ValueError(f"Elements of '{text}' are not residues in [0, {n})")
    return CyclicSet(n, values)


def parse_int_list(text: str) -> List[int]:
    """ "1,2" or "1 2" -> [1, 2] """
    tokens = [token for token in re.split(r"[\s,]+", text.strip().strip("{}")) if token]
    if not tokens:
        raise ValueError(f"Empty list '{text}'")
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise ValueError(f"Malformed integer list '{text}'")


def parse_index_pairs(text: str) -> List[Tuple[int, int]]:
    """ "(1,1);(1,2)" -> [(1, 1), (1, 2)]; angle brackets are accepted too. """
    pairs = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        match = re.fullmatch(r"[(<]\s*(\d+)\s*,\s*(\d+)\s*[)>]", chunk)
        if match is None:
            raise ValueError(f"Malformed index pair '{chunk}' in '{text}'")
        pairs.append((int(match.group(1)), int(match.group(2))))
    return pairs


def parse_range(text: str) -> List[int]:
    """ "2..6" -> [2, 3, 4, 5, 6]; a single integer is a one-element range. """
    match = re.fullmatch(r"\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?", text)
    if match is None:
        raise ValueError(f"Malformed range '{text}'")
    low = int(match.group(1))
    high = int(match.group(2)) if match.group(2) else low
    if high < low:
        raise ValueError(f"Empty range '{text}'")
    return list(range(low, high + 1))


def parse_budget(text: str) -> int:
    """Accepts plain integers and exponent notation such as "1e8"."""
    try:
        value = int(text)
    except ValueError:
        try:
            value = float(text)
        except ValueError:
            raise ValueError(f"Malformed budget '{text}'")
        if value != int(value):
            raise ValueError(f"Budget '{text}' is not an integer")
        value = int(value)
    if value < 1:
        raise ValueError(f"Budget must be positive, got {text}")
    return value


def get_data_path(rel_path):
    root_dir = gsidon.__file__.replace("__init__.py", "")
    filename = os.path.join(root_dir, "data/" + rel_path)
    return os.path.abspath(os.path.realpath(filename))


def compare_iterable(s1, s2, path=""):
    """Itemized differences between two JSON-like structures (objects with to_json are compared by it)."""
    diff = []

    if type(s1) != type(s2):
        diff.append(f"{path}: __class__: '{type(s1).__name__}' _notEqual_ '{type(s2).__name__}'")

    elif hasattr(s1, "to_json"):
        diff.extend(compare_iterable(s1.to_json(), s2.to_json(), path))

    elif isinstance(s1, dict):
        for key in sorted(set(s1.keys()) | set(s2.keys()), key=str):
            if key not in s2:
                diff.append(f"{path}.{key}: missing on the right")
            elif key not in s1:
                diff.append(f"{path}.{key}: missing on the left")
            else:
                diff.extend(compare_iterable(s1[key], s2[key], f"{path}.{key}"))

    elif isinstance(s1, Sized) and not isinstance(s1, str) and len(s1) != len(s2):
        diff.append(f"{path}: __len__: '{len(s1)}' _notEqual_ '{len(s2)}'")

    elif isinstance(s1, (list, tuple)):
        for i, (item1, item2) in enumerate(zip(s1, s2)):
            diff.extend(compare_iterable(item1, item2, f"{path}[{i}]"))

    else:
        if s1 != s2:
            diff.append(f"{path}: '{s1}' _notEqual_ '{s2}'")
    return diff
