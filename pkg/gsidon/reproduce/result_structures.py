import csv
import io
from typing import List, Optional, Tuple

from tabulate import tabulate

from gsidon.core.model import AnySet, SearchCertificate
from gsidon.core.table import CellStatus, enum_label


class CellResult:
    which: int
    g: int
    k: int
    value: Optional[int]
    exhausted: bool
    witness: Optional[AnySet]
    witness_count: int
    nodes: int
    expected: Optional[str]
    status: Optional[CellStatus]
    diff: List[str]

    def __init__(self, which: int, certificate: SearchCertificate, expected: Optional[str] = None,
                 status: Optional[CellStatus] = None, diff: Optional[List[str]] = None):
        self.which = which
        self.g = certificate.g
        self.k = certificate.parameter
        self.value = certificate.value
        self.exhausted = certificate.exhausted
        self.witness = certificate.witness
        self.witness_count = certificate.witness_count
        self.nodes = certificate.nodes_explored
        self.expected = expected
        self.status = status
        self.diff = list(diff) if diff is not None else []

    def _csv_header_and_row(self) -> Tuple[List[str], List[str]]:
        csv_header_and_value = [
            ("g", self.g),
            ("k_or_n", self.k),
            ("value", self.value if self.value is not None else ""),
            ("exhausted", str(self.exhausted).lower()),
            ("witness", str(self.witness) if self.witness is not None else ""),
            ("nodes", self.nodes),
        ]
        # plain search cells are not compared with anything
        if self.status is not None:
            csv_header_and_value.append(("expected", self.expected if self.expected is not None else ""))
            csv_header_and_value.append(("status", enum_label(self.status)))
        return tuple(zip(*csv_header_and_value))  # transpose

    def get_titles(self) -> List[str]:
        return list(self._csv_header_and_row()[0])

    def get_values(self) -> List[str]:
        return [str(value) for value in self._csv_header_and_row()[1]]

    def csv_header(self) -> str:
        return ",".join(self.get_titles())

    def csv_row(self) -> str:
        # witnesses contain commas
        buffer = io.StringIO()
        csv.writer(buffer, lineterminator="").writerow(self.get_values())
        return buffer.getvalue()

    def to_json(self):
        return {
            'table': self.which,
            'g': self.g,
            'k_or_n': self.k,
            'value': self.value,
            'exhausted': self.exhausted,
            'witness': self.witness.to_json() if self.witness is not None else None,
            'witness_count': self.witness_count,
            'nodes': self.nodes,
            'expected': self.expected,
            'status': enum_label(self.status) if self.status is not None else None,
            'diff': self.diff
        }


class TableResults:
    which: int
    config_name: str
    budget: int
    cells: List[CellResult]
    mismatches: int
    unexhausted: int

    def __init__(self, which: int, config_name: str, budget: int, cells: List[CellResult]):
        self.which = which
        self.config_name = config_name
        self.budget = budget
        self.cells = sorted(cells, key=lambda cell: (cell.g, cell.k))
        self.mismatches = len([cell for cell in self.cells if cell.status == CellStatus.MISMATCH])
        self.unexhausted = len([cell for cell in self.cells if cell.status == CellStatus.UNEXHAUSTED])

    @property
    def ok(self) -> bool:
        return self.mismatches == 0

    def csv_header(self) -> str:
        return self.cells[0].csv_header() if self.cells else \
            "g,k_or_n,value,exhausted,witness,nodes,expected,status"

    def csv_rows(self) -> List[str]:
        return [cell.csv_row() for cell in self.cells]

    def write_csv(self, path: str):
        with open(path, "w") as f:
            f.write(self.csv_header() + "\n")
            for row in self.csv_rows():
                f.write(row + "\n")

    def print(self):
        print(f"############ TABLE {self.which} ({self.config_name}, budget {self.budget}) ###########")
        rows = [[cell.g, cell.k, cell.value, cell.expected, "yes" if cell.exhausted else "no", cell.nodes,
                 enum_label(cell.status)] for cell in self.cells]
        print(tabulate(rows, headers=["g", "k", "value", "expected", "exhausted", "nodes", "status"]))
        for cell in self.cells:
            for line in cell.diff:
                print(f"- g={cell.g}, k={cell.k}: {line}")
        print(f"Mismatches: {self.mismatches}")
        print(f"Unexhausted: {self.unexhausted}")

    def to_json(self):
        return {
            'table': self.which,
            'config': self.config_name,
            'budget': self.budget,
            'mismatches': self.mismatches,
            'unexhausted': self.unexhausted,
            'cells': [cell.to_json() for cell in self.cells]
        }
