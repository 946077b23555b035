"""
==========================
Year: 2026
==========================
The command line front end. Every command builds a RunRecord and prints it as JSON on standard output;
--out writes the record (.json) or the command's rows (.csv) to a file as well. Logging goes to stderr.

Exit codes: 0 success, 1 failed verification or table mismatch, 2 malformed arguments, 3 domain errors
(the error name is part of the payload).
"""

import argparse
import contextlib
import json
import logging
import sys
import time
from typing import Any, Callable, Dict, List, Optional

from tabulate import tabulate

import gsidon
from gsidon.core.bounds import (c_upper_bound, c_upper_bound_parts, sigma_limit, sigma_lower_from_witness,
                                sigma_lower_thm4, sigma_table, sqrt_float, theorem3_values, thm4_parameters,
                                verify_witness_table)
from gsidon.core.constructions import (block_set, bose, crt_combine, dense_set_construction, interleave_linear,
                                       kolountzakis_union, ruzsa, singer, singer_lift)
from gsidon.core.convolution import g_value, is_sidon, sum_convolution, triple_convolution_max
from gsidon.core.finite_field import FieldCtx, make_field, parse_poly
from gsidon.core.load import load_config, load_table, load_table4
from gsidon.core.model import (AnySet, Configuration, CyclicSet, IntegerSet, InvalidIndexError, RunRecord,
                               SidonError, WitnessError)
from gsidon.core.search import (enumerate_shortest_sidon, max_size_cyclic, max_size_linear, min_n_cyclic,
                                min_n_linear)
from gsidon.core.table import Construction, Problem, enum_label
from gsidon.core.util import parse_budget, parse_index_pairs, parse_int_list, parse_range, parse_set
from gsidon.reproduce import reproduce_table, search_cells

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_MALFORMED = 2
EXIT_DOMAIN = 3

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"

# parsed arguments that are not parameters of the computation
_HOUSEKEEPING = {'func', 'out', 'verbose', 'config', 'command', 'kind'}


class CommandResult:
    """What a command hands back: the JSON payload, whether it passed and how to write it as CSV, if at all."""

    result: Dict[str, Any]
    ok: bool
    csv_lines: Optional[List[str]]
    csv_writer: Optional[Callable[[str], None]]

    def __init__(self, result: Dict[str, Any], ok: bool = True, csv_lines: Optional[List[str]] = None,
                 csv_writer: Optional[Callable[[str], None]] = None):
        self.result = result
        self.ok = ok
        self.csv_lines = csv_lines
        self.csv_writer = csv_writer

    @property
    def has_csv(self) -> bool:
        return self.csv_lines is not None or self.csv_writer is not None

    def write_csv(self, path: str):
        if self.csv_writer is not None:
            self.csv_writer(path)
            return
        with open(path, "w") as f:
            f.write("\n".join(self.csv_lines) + "\n")


def _field(q: int, e: int, modulus: Optional[str]) -> FieldCtx:
    return make_field(q, e, parse_poly(modulus, q) if modulus else None)


def _construction_payload(construction: Construction, parameters: Dict[str, Any], S: AnySet,
                          g_bound: Optional[int]) -> CommandResult:
    value = g_value(S)
    payload = {
        'construction': enum_label(construction),
        'parameters': parameters,
        'modulus_n': S.modulus,
        'elements': list(S.elements),
        'cardinality': len(S),
        'g_value': value,
        'g_bound': g_bound
    }
    ok = g_bound is None or value <= g_bound
    if not ok:
        logger.error("%s set has g-value %d above its bound %d", construction.name, value, g_bound)
    return CommandResult(payload, ok)


def cmd_construct_ruzsa(args, config: Configuration) -> CommandResult:
    K = parse_int_list(args.K)
    S = ruzsa(args.p, args.theta, K)
    return _construction_payload(Construction.RUZSA, {'p': args.p, 'theta': args.theta, 'K': K}, S,
                                 2 * len(K) ** 2)


def cmd_construct_bose(args, config: Configuration) -> CommandResult:
    K = parse_int_list(args.K)
    ctx = _field(args.p, 2, args.modulus)
    S = bose(ctx, K)
    return _construction_payload(Construction.BOSE, {'field': ctx.to_json(), 'K': K}, S, 2 * len(K) ** 2)


def cmd_construct_singer(args, config: Configuration) -> CommandResult:
    K = parse_index_pairs(args.K)
    ctx = _field(args.p, 3, args.modulus)
    S = singer(ctx, K)
    return _construction_payload(Construction.SINGER, {'field': ctx.to_json(), 'K': [list(k) for k in K]}, S,
                                 2 * len(K) ** 2)


def cmd_construct_lift(args, config: Configuration) -> CommandResult:
    K = parse_index_pairs(args.K)
    ctx = _field(args.p, 3, args.modulus)
    S = singer_lift(ctx, K)
    command_result = _construction_payload(Construction.SINGER_LIFT,
                                           {'field': ctx.to_json(), 'K': [list(k) for k in K]}, S, None)
    command_result.result['triple_max'] = triple_convolution_max(S)
    return command_result


def cmd_construct_block(args, config: Configuration) -> CommandResult:
    S = block_set(args.g)
    return _construction_payload(Construction.BLOCK, {'g': args.g}, S, args.g)


def cmd_construct_kolountzakis(args, config: Configuration) -> CommandResult:
    S = parse_set(args.set)
    if not isinstance(S, IntegerSet):
        raise ValueError("--set must be a set of integers, not residues")
    union = kolountzakis_union(S)
    return _construction_payload(Construction.KOLOUNTZAKIS, {'set': str(S)}, union, 4 if is_sidon(S) else None)


def cmd_combine(args, config: Configuration) -> CommandResult:
    M = parse_set(args.M)
    S = parse_set(args.S)
    if not isinstance(M, CyclicSet):
        raise ValueError("--M must carry a 'mod y' suffix")
    if isinstance(S, CyclicSet):
        combined = crt_combine(M, S)
        construction = Construction.CRT
    else:
        combined = interleave_linear(M, S)
        construction = Construction.INTERLEAVE
    return _construction_payload(construction, {'M': str(M), 'S': str(S)}, combined, g_value(M) * g_value(S))


def cmd_verify(args, config: Configuration) -> CommandResult:
    S = parse_set(args.set, modulus=args.mod)
    profile = sum_convolution(S)
    ok = profile.max_count <= args.g
    payload = {
        'set': S.to_json(),
        'g': args.g,
        'g_value': profile.max_count,
        'attained_at': profile.argmax(),
        'ok': ok
    }
    if not ok:
        logger.info("%s has g-value %d > %d", S, profile.max_count, args.g)
    return CommandResult(payload, ok)


def cmd_search_single(args, config: Configuration) -> CommandResult:
    budget = _budget(args, config)
    if args.problem == "r-max":
        certificate = max_size_linear(args.g, _required(args.n, "--n"), budget)
    elif args.problem == "c-max":
        certificate = max_size_cyclic(args.g, _required(args.n, "--n"), budget)
    elif args.problem == "r-min-n":
        certificate = min_n_linear(args.g, _required(args.k, "--k"), budget)
    elif args.problem == "c-min-n":
        certificate = min_n_cyclic(args.g, _required(args.k, "--k"), budget)
    else:
        certificate = enumerate_shortest_sidon(_required(args.k, "--k"), budget, config.witness_limit)
    return CommandResult(certificate.to_json())


def cmd_search_table(args, config: Configuration) -> CommandResult:
    problems = {'R': Problem.R_MIN_N, 'C': Problem.C_MIN_N}
    cells = search_cells(problems[args.which], parse_range(args.g), parse_range(args.k), _budget(args, config),
                         _threads(args, config))
    csv_lines = [cells[0].csv_header()] + [cell.csv_row() for cell in cells] if cells else []
    return CommandResult({'cells': [cell.to_json() for cell in cells]}, True, csv_lines)


def cmd_bounds_c_upper(args, config: Configuration) -> CommandResult:
    return CommandResult({
        'g': args.g,
        'n': args.n,
        'bound': c_upper_bound(args.g, args.n),
        'parts': c_upper_bound_parts(args.g, args.n)
    })


def cmd_bounds_sigma(args, config: Configuration) -> CommandResult:
    rows = sigma_table(parse_range(args.g))
    limit = sigma_limit()
    payload = {
        'rows': [row.to_json() for row in rows],
        'limit': {'rational': str(limit), 'float': sqrt_float(limit)}
    }
    csv_lines = [rows[0].csv_header()] + [row.csv_row() for row in rows]
    return CommandResult(payload, True, csv_lines)


def cmd_bounds_thm4(args, config: Configuration) -> CommandResult:
    x, size = thm4_parameters(args.g)
    bound = sigma_lower_thm4(args.g, constructive=not args.formula_only)
    payload = bound.to_json()
    payload['size'] = size
    payload['constructive'] = not args.formula_only
    return CommandResult(payload)


def cmd_bounds_witness_table(args, config: Configuration) -> CommandResult:
    report = verify_witness_table()
    with contextlib.redirect_stdout(sys.stderr):
        report.print()
    payload = report.to_json()
    payload['stated'] = {str(argument): str(ratio) for argument, ratio in sorted(theorem3_values().items())}
    return CommandResult(payload, report.ok)


def cmd_bounds_dense(args, config: Configuration) -> CommandResult:
    if args.witness:
        witness = parse_set(args.witness)
        if not isinstance(witness, IntegerSet):
            raise ValueError("--witness must be a set of integers, not residues")
        x = _required(args.x, "--x")
    else:
        rows = {row.g: row for row in load_table4()}
        if args.g not in rows:
            raise ValueError(f"No embedded witness for g={args.g}; pass --witness and --x")
        witness = rows[args.g].witness
        x = args.x if args.x is not None else rows[args.g].x
    S = dense_set_construction(args.g, x, witness, args.n)
    value = g_value(S)
    bound = sigma_lower_from_witness(args.g, x, witness)
    payload = {
        'construction': enum_label(Construction.DENSE),
        'parameters': {'g': args.g, 'x': x, 'n': args.n, 'witness': str(witness)},
        'modulus_n': None,
        'elements': list(S.elements),
        'cardinality': len(S),
        'g_value': value,
        'g_bound': 2 * args.g,
        'sigma_bound': bound.to_json()
    }
    return CommandResult(payload, value <= 2 * args.g and S.fits(1, args.n))


def cmd_tables_reproduce(args, config: Configuration) -> CommandResult:
    results = reproduce_table(args.which, config, budget=args.budget, threads=args.threads)
    with contextlib.redirect_stdout(sys.stderr):
        results.print()
    return CommandResult(results.to_json(), results.ok, csv_writer=results.write_csv)


def cmd_tables_show(args, config: Configuration) -> CommandResult:
    rows = load_table(args.which)
    if args.which == 1:
        table = [[row.k, row.span, " ".join(str(w) for w in row.witnesses)] for row in rows]
        headers = ["k", "span", "witnesses"]
    elif args.which in (2, 3):
        table = [[entry.k, entry.g, str(entry)] for entry in rows]
        headers = ["k", "g", "min n"]
    else:
        table = [[row.g, row.x, row.r, str(row.witness), str(row.ratio)] for row in rows]
        headers = ["g", "x", "R(g,x)", "witness", "ratio"]
    with contextlib.redirect_stdout(sys.stderr):
        print(tabulate(table, headers=headers))
    return CommandResult({'table': args.which, 'rows': [row.to_json() for row in rows]})


def _required(value, flag: str):
    if value is None:
        raise ValueError(f"{flag} is required here")
    return value


def _budget(args, config: Configuration) -> int:
    return config.budget if args.budget is None else args.budget


def _threads(args, config: Configuration) -> int:
    return config.threads if args.threads is None else args.threads


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise ValueError(f"expected a positive integer, got {text}")
    return value


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", type=str, default=None, help="also write the result to FILE (.json or .csv)")
    common.add_argument("--threads", type=_positive_int, default=None, help="worker processes for table cells")
    common.add_argument("--budget", type=parse_budget, default=None, help="node expansions per search cell")
    common.add_argument("--config", type=str, default="default", help="configuration name or JSON path")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")

    parser = argparse.ArgumentParser(prog="gsidon", description="Generalized Sidon sets: constructions, "
                                                                "exact g-values, exhaustive search and bounds.")
    parser.add_argument("--version", action="version", version=f"gsidon {gsidon.__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    construct = commands.add_parser("construct", help="build a set from one of the constructions")
    kinds = construct.add_subparsers(dest="kind", required=True)
    sub = kinds.add_parser("ruzsa", parents=[common])
    sub.add_argument("--p", type=int, required=True)
    sub.add_argument("--theta", type=int, required=True)
    sub.add_argument("--K", type=str, required=True, help="indices in [1, p), e.g. 1,2")
    sub.set_defaults(func=cmd_construct_ruzsa)
    for name, func, k_help in [("bose", cmd_construct_bose, "nonzero scalars, e.g. 1,2"),
                               ("singer", cmd_construct_singer, "pairs, e.g. \"(1,1);(1,2)\""),
                               ("lift", cmd_construct_lift, "pairs, e.g. \"(1,0);(1,1);(1,2)\"")]:
        sub = kinds.add_parser(name, parents=[common])
        sub.add_argument("--p", type=int, required=True, help="order q of the base field")
        sub.add_argument("--modulus", type=str, default=None, help="monic irreducible modulus, e.g. \"x^2+3x+6\"")
        sub.add_argument("--K", type=str, required=True, help=k_help)
        sub.set_defaults(func=func)
    sub = kinds.add_parser("block", parents=[common])
    sub.add_argument("--g", type=int, required=True)
    sub.set_defaults(func=cmd_construct_block)
    sub = kinds.add_parser("kolountzakis", parents=[common])
    sub.add_argument("--set", type=str, required=True)
    sub.set_defaults(func=cmd_construct_kolountzakis)

    sub = commands.add_parser("combine", parents=[common], help="M + yS, or the gap-shifted interleaving")
    sub.add_argument("--M", type=str, required=True, help="a cyclic set, e.g. \"{0,1,3} mod 7\"")
    sub.add_argument("--S", type=str, required=True, help="a cyclic set (CRT) or a set of integers (interleave)")
    sub.set_defaults(func=cmd_combine)

    sub = commands.add_parser("verify", parents=[common], help="exit 0 iff the g-value is at most G")
    sub.add_argument("--set", type=str, required=True)
    sub.add_argument("--mod", type=int, default=None)
    sub.add_argument("--g", type=int, required=True)
    sub.set_defaults(func=cmd_verify)

    search = commands.add_parser("search", help="exhaustive searches")
    problems = search.add_subparsers(dest="problem", required=True)
    for name in ["r-max", "c-max", "r-min-n", "c-min-n", "shortest"]:
        sub = problems.add_parser(name, parents=[common])
        if name != "shortest":
            sub.add_argument("--g", type=int, required=True)
        sub.add_argument("--n", type=int, default=None)
        sub.add_argument("--k", type=int, default=None)
        sub.set_defaults(func=cmd_search_single)
    sub = problems.add_parser("table", parents=[common])
    sub.add_argument("--which", choices=["R", "C"], required=True)
    sub.add_argument("--g", type=str, required=True, help="a range, e.g. 2..6")
    sub.add_argument("--k", type=str, required=True, help="a range, e.g. 3..10")
    sub.set_defaults(func=cmd_search_table)

    bounds = commands.add_parser("bounds", help="bound formulas")
    kinds = bounds.add_subparsers(dest="kind", required=True)
    sub = kinds.add_parser("c-upper", parents=[common])
    sub.add_argument("--g", type=int, required=True)
    sub.add_argument("--n", type=int, required=True)
    sub.set_defaults(func=cmd_bounds_c_upper)
    sub = kinds.add_parser("sigma", parents=[common])
    sub.add_argument("--g", type=str, required=True, help="a range of sigma arguments, e.g. 2..22")
    sub.set_defaults(func=cmd_bounds_sigma)
    sub = kinds.add_parser("thm4", parents=[common])
    sub.add_argument("--g", type=int, required=True)
    sub.add_argument("--formula-only", action="store_true", help="skip building the block set")
    sub.set_defaults(func=cmd_bounds_thm4)
    sub = kinds.add_parser("witness-table", parents=[common])
    sub.set_defaults(func=cmd_bounds_witness_table)
    sub = kinds.add_parser("dense", parents=[common])
    sub.add_argument("--g", type=int, required=True)
    sub.add_argument("--x", type=int, default=None)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--witness", type=str, default=None, help="defaults to the embedded witness for g")
    sub.set_defaults(func=cmd_bounds_dense)

    tables = commands.add_parser("tables", help="embedded tables")
    kinds = tables.add_subparsers(dest="kind", required=True)
    sub = kinds.add_parser("reproduce", parents=[common])
    sub.add_argument("--which", type=int, choices=[1, 2, 3], required=True)
    sub.set_defaults(func=cmd_tables_reproduce)
    sub = kinds.add_parser("show", parents=[common])
    sub.add_argument("--which", type=int, choices=[1, 2, 3, 4], required=True)
    sub.set_defaults(func=cmd_tables_show)
    return parser


def _command_name(args) -> str:
    return " ".join(str(part) for part in [args.command, getattr(args, 'kind', None),
                                           getattr(args, 'problem', None)] if part is not None)


def _parameters(args) -> Dict[str, Any]:
    return {key: value for key, value in sorted(vars(args).items())
            if key not in _HOUSEKEEPING and key != 'problem' and value is not None}


def _error_payload(e: Exception) -> Dict[str, Any]:
    if isinstance(e, SidonError):
        payload = {'error': e.error_name, 'message': str(e)}
        if isinstance(e, InvalidIndexError):
            payload['offending'] = [list(k) if isinstance(k, tuple) else k for k in e.offending]
        if isinstance(e, WitnessError):
            payload['constraint'] = e.constraint
        return payload
    return {'error': 'malformed-argument', 'message': str(e)}


def _write_out(path: str, record: RunRecord, command_result: CommandResult):
    if path.endswith(".csv"):
        if not command_result.has_csv:
            raise ValueError(f"'{record.command}' has no tabular output for {path}")
        command_result.write_csv(path)
    else:
        with open(path, "w") as f:
            json.dump(record.to_json(), f, indent=2)
            f.write("\n")
    logger.info("Wrote %s", path)


def run(argv: Optional[List[str]] = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_MALFORMED if e.code else EXIT_OK

    level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level, format=LOG_FORMAT)

    command = _command_name(args)
    parameters = _parameters(args)
    start = time.perf_counter()
    code = EXIT_OK
    command_result = None
    try:
        config = load_config(args.config)
        command_result = args.func(args, config)
        result = command_result.result
        if not command_result.ok:
            code = EXIT_FAILED
    except SidonError as e:
        logger.error("%s: %s", e.error_name, e)
        result = _error_payload(e)
        code = EXIT_DOMAIN
    except (ValueError, OSError) as e:
        logger.error("Malformed arguments: %s", e)
        result = _error_payload(e)
        code = EXIT_MALFORMED

    elapsed_ms = (time.perf_counter() - start) * 1000.0
    record = RunRecord(command, parameters, result, gsidon.__version__, elapsed_ms)
    print(json.dumps(record.to_json(), indent=2))
    if args.out is not None and command_result is not None:
        try:
            _write_out(args.out, record, command_result)
        except (ValueError, OSError) as e:
            logger.error("Could not write %s: %s", args.out, e)
            # a failed check outranks a failed write
            return code if code != EXIT_OK else EXIT_MALFORMED
    return code


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
