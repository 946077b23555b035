import json

import pytest
from tests.util import *
from gsidon.cli import EXIT_DOMAIN, EXIT_FAILED, EXIT_MALFORMED, EXIT_OK, run


def run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out else None


def test_verify(capsys):
    code, record = run_json(capsys, ["verify", "--set", "{1,2,5,7}", "--g", "2"])
    assert code == EXIT_OK
    assert record['command'] == "verify"
    assert record['parameters'] == {'g': 2, 'set': "{1,2,5,7}"}
    assert record['result']['g_value'] == 2
    assert record['result']['ok']

    code, record = run_json(capsys, ["verify", "--set", "{1,2,3}", "--g", "2"])
    assert code == EXIT_FAILED
    assert record['result']['g_value'] == 3
    assert record['result']['attained_at'] == [4]

    code, record = run_json(capsys, ["verify", "--set", "{0,1,3}", "--mod", "7", "--g", "2"])
    assert code == EXIT_OK
    assert record['result']['set'] == {'elements': [0, 1, 3], 'modulus': 7}


def test_construct_ruzsa(capsys):
    code, record = run_json(capsys, ["construct", "ruzsa", "--p", "11", "--theta", "2", "--K", "1,2"])
    assert code == EXIT_OK
    assert record['command'] == "construct ruzsa"
    result = record['result']
    assert result['construction'] == "ruzsa"
    assert result['modulus_n'] == 110
    assert result['cardinality'] == 20
    assert result['g_value'] == 8
    assert result['g_bound'] == 8


def test_construct_block_and_lift(capsys):
    code, record = run_json(capsys, ["construct", "block", "--g", "6"])
    assert code == EXIT_OK
    assert record['result']['elements'] == [0, 1, 4, 6, 7, 11, 12, 13, 14, 15, 16]
    assert record['result']['modulus_n'] is None

    code, record = run_json(capsys, ["construct", "lift", "--p", "3", "--K", "(1,0);(1,1);(1,2)"])
    assert code == EXIT_OK
    assert record['result']['modulus_n'] == 26
    assert record['result']['triple_max'] <= 81


def test_combine(capsys):
    code, record = run_json(capsys, ["combine", "--M", "{0,1} mod 2", "--S", "{0,1,3} mod 7"])
    assert code == EXIT_OK
    assert record['result']['construction'] == "crt"
    assert record['result']['elements'] == [0, 1, 2, 3, 6, 7]

    code, record = run_json(capsys, ["combine", "--M", "{0,1} mod 2", "--S", "{0,1,3}"])
    assert record['result']['construction'] == "interleave"
    assert record['result']['elements'] == [1, 2, 3, 4, 7, 8]


@pytest.mark.parametrize("argv", [
    [],
    ["verify", "--set", "1,2", "--g", "2"],
    ["verify", "--set", "{1,2}"],
    ["search", "r-max", "--g", "2", "--n", "7", "--budget", "1.5"],
    ["search", "r-max", "--g", "2"],
    ["tables", "show", "--which", "7"],
    ["combine", "--M", "{0,1,3}", "--S", "{0,1}"],
    ["verify", "--set", "{1,2}", "--g", "2", "--config", "no-such-config"],
])
def test_malformed_arguments(capsys, argv):
    assert run(argv) == EXIT_MALFORMED


def test_domain_errors(capsys):
    code, record = run_json(capsys, ["construct", "ruzsa", "--p", "11", "--theta", "3", "--K", "1"])
    assert code == EXIT_DOMAIN
    assert record['result']['error'] == "primitivity-error"

    code, record = run_json(capsys, ["construct", "singer", "--p", "11", "--modulus", "x^3+x^2+6x+4",
                                     "--K", "(1,0);(2,0)"])
    assert code == EXIT_DOMAIN
    assert record['result']['error'] == "invalid-index-error"
    assert record['result']['offending'] == [[1, 0], [2, 0]]

    code, record = run_json(capsys, ["combine", "--M", "{0} mod 4", "--S", "{0} mod 6"])
    assert code == EXIT_DOMAIN
    assert record['result']['error'] == "coprimality-error"

    code, record = run_json(capsys, ["bounds", "dense", "--g", "2", "--n", "1000", "--x", "6",
                                     "--witness", "{1,2,5,7}"])
    assert code == EXIT_DOMAIN
    assert record['result']['constraint'] == "container"


def test_search(capsys):
    code, record = run_json(capsys, ["search", "c-max", "--g", "2", "--n", "7"])
    assert code == EXIT_OK
    assert record['result']['value'] == 3
    assert record['result']['exhausted']

    code, record = run_json(capsys, ["search", "shortest", "--k", "5"])
    assert record['result']['value'] == 11
    assert record['result']['witness_count'] == 2

    code, record = run_json(capsys, ["search", "r-min-n", "--g", "2", "--k", "7", "--budget", "100"])
    assert code == EXIT_OK
    assert not record['result']['exhausted']
    assert record['parameters']['budget'] == 100


def test_search_table_csv(capsys, tmp_path):
    path = tmp_path / "table3.csv"
    code, record = run_json(capsys, ["search", "table", "--which", "C", "--g", "2", "--k", "3..4",
                                     "--out", str(path)])
    assert code == EXIT_OK
    assert [cell['value'] for cell in record['result']['cells']] == [6, 12]
    lines = path.read_text().splitlines()
    assert lines[0] == "g,k_or_n,value,exhausted,witness,nodes"
    assert len(lines) == 3
    assert lines[1].startswith("2,3,6,true,")


def test_out_json(capsys, tmp_path):
    path = tmp_path / "record.json"
    code, record = run_json(capsys, ["bounds", "c-upper", "--g", "4", "--n", "25", "--out", str(path)])
    assert code == EXIT_OK
    assert record['result']['bound'] == 9
    written = RunRecord.from_json(json.loads(path.read_text()))
    assert written.comparable() == RunRecord.from_json(record).comparable()


def test_out_csv_needs_tabular_output(capsys, tmp_path):
    assert run(["verify", "--set", "{1,2}", "--g", "2", "--out", str(tmp_path / "verify.csv")]) == EXIT_MALFORMED


def test_out_write_failure_keeps_failed_check(capsys, tmp_path):
    missing = str(tmp_path / "missing" / "verify.json")
    assert run(["verify", "--set", "{1,2,3}", "--g", "2", "--out", missing]) == EXIT_FAILED
    assert run(["verify", "--set", "{1,2,5,7}", "--g", "2", "--out", missing]) == EXIT_MALFORMED


def test_bounds(capsys, tmp_path):
    path = tmp_path / "sigma.csv"
    code, record = run_json(capsys, ["bounds", "sigma", "--g", "4..5", "--out", str(path)])
    assert code == EXIT_OK
    assert record['result']['limit']['rational'] == "121/96"
    assert path.read_text().splitlines()[1] == "4,8/7,1.0690449676,thm3-witness"

    code, record = run_json(capsys, ["bounds", "thm4", "--g", "6"])
    assert record['result']['bound'] == "121/102"
    assert record['result']['size'] == 11

    code, record = run_json(capsys, ["bounds", "dense", "--g", "2", "--n", "1000"])
    assert code == EXIT_OK
    assert record['result']['cardinality'] == 44


def test_witness_table(capsys):
    code = run(["bounds", "witness-table"])
    captured = capsys.readouterr()
    assert code == EXIT_OK
    record = json.loads(captured.out)
    assert record['result']['ok']
    assert record['result']['stated']['8'] == "8/7"
    assert "R(g,x)" in captured.err


def test_tables_show(capsys):
    code, record = run_json(capsys, ["tables", "show", "--which", "4"])
    assert code == EXIT_OK
    assert len(record['result']['rows']) == 10


def test_tables_reproduce(capsys):
    code, record = run_json(capsys, ["tables", "reproduce", "--which", "1", "--config", "smoke"])
    assert code == EXIT_OK
    assert record['result']['mismatches'] == 0
    assert record['result']['config'] == "Smoke"


def test_version(capsys):
    assert run(["--version"]) == EXIT_OK


def test_tables_reproduce_csv(capsys, tmp_path):
    path = tmp_path / "table1.csv"
    code, record = run_json(capsys, ["tables", "reproduce", "--which", "1", "--config", "smoke", "--out", str(path)])
    assert code == EXIT_OK
    lines = path.read_text().splitlines()
    assert lines[0] == "g,k_or_n,value,exhausted,witness,nodes,expected,status"
    assert len(lines) == len(record['result']['cells']) + 1
