"""Command-line entry point: construct, distance, verify, tables, info and errors."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Optional, Sequence, Union

import pandas as pd

from ad_errors import certify_t_code, gen_At
from catalog import (
    TABLES,
    builtin,
    qmds_outer_codes,
    reproduce_table,
    row_matches,
    rows_dataframe,
    table_rows,
)
from code_files import formatCode, loadCodeFile, loadParamsFile, saveCodeFile, saveErrorSetFile
from concat import BlockCode, ConcatSpec, concatenate, params_for_spec
from config import getLogLevel
from distance import METRICS, STRATEGIES, min_distance
from models import CodeValidationError, CommandResult
from stabilizer import StabilizerCode, validate

logger = logging.getLogger(__name__)

_VARIANTS = {"full": "full", "first-trivial": "first_block_trivial"}


def loadCode(source: str) -> Union[StabilizerCode, BlockCode]:
    """Resolve 'qr:<r>', 'builtin:<name>', a file path or a bare built-in name."""
    if source.startswith("qr:"):
        return builtin(source)
    if source.startswith("builtin:"):
        return builtin(source[len("builtin:"):])
    if os.path.exists(source):
        return loadCodeFile(source)
    try:
        return builtin(source)
    except KeyError:
        raise FileNotFoundError(f"Code file not found: {source}")


def _stabilizerOf(code: Union[StabilizerCode, BlockCode]) -> StabilizerCode:
    return code.code if isinstance(code, BlockCode) else code


def _asOuter(code: Union[StabilizerCode, BlockCode], args: argparse.Namespace) -> BlockCode:
    if isinstance(code, BlockCode):
        return code
    # a plain qubit code is an outer code with one-qubit blocks; delta is its distance
    report = min_distance(code, "hamming", cap=args.cap, threads=args.threads)
    return BlockCode(code.n, 1, code, report.value)


def _records(frame: pd.DataFrame) -> list:
    return json.loads(frame.to_json(orient="records"))


def cmd_construct(args: argparse.Namespace) -> CommandResult:
    inner = _stabilizerOf(loadCode(args.inner))
    outer = _asOuter(loadCode(args.outer), args)
    spec = ConcatSpec(inner, outer, _VARIANTS[args.variant])
    code = concatenate(spec)
    params = params_for_spec(spec, cap=args.cap, threads=args.threads)
    payload = {"code": code.describe(), "params": params.to_dict()}
    if args.out:
        saveCodeFile(args.out, code)
        payload["path"] = args.out
    else:
        payload["file"] = formatCode(code)
    return CommandResult("ok", payload, f"Constructed {code.describe()} with d_e >= {params.d_e_bound}")


def cmd_distance(args: argparse.Namespace) -> CommandResult:
    loaded = loadCode(args.code)
    code = _stabilizerOf(loaded)
    widths = None
    if args.metric == "block":
        if not isinstance(loaded, BlockCode):
            raise CodeValidationError("The block metric needs a code file with blocks= and blocksize= in its header")
        widths = [loaded.block_size] * loaded.n_blocks
    report = min_distance(
        code,
        args.metric,
        args.budget,
        strategy=args.strategy,
        cap=args.cap,
        threads=args.threads,
        block_widths=widths,
        pauli_type=args.type,
    )
    return CommandResult("ok", report.to_dict(), report.describe())


def cmd_verify(args: argparse.Namespace) -> CommandResult:
    code = _stabilizerOf(loadCode(args.code))
    options = {"cap": args.cap, "threads": args.threads} if args.mode == "by_distance" else {}
    cert = certify_t_code(code, args.t, args.mode, **options)
    if cert.certified:
        return CommandResult("ok", cert.to_dict(), f"{code.describe()} is a {args.t}-code ({args.mode})")
    return CommandResult("fail", cert.to_dict(), f"{code.describe()} misses {cert.counterexample}")


def cmd_tables(args: argparse.Namespace) -> CommandResult:
    if args.fixture:
        pairs = reproduce_table(args.fixture)
        frame = rows_dataframe(pairs)
        mismatches = [row.to_dict() for row, params in pairs if not row_matches(row, params)]
        payload = {"table": args.fixture, "rows": _records(frame), "mismatches": mismatches}
        status = "ok" if not mismatches else "fail"
        message = f"{args.fixture}: {len(pairs) - len(mismatches)}/{len(pairs)} rows reproduced"
        return CommandResult(status, payload, message)
    if args.outer:
        _, outers = loadParamsFile(args.outer)
        source = "user"
    else:
        outers = qmds_outer_codes(args.qmds, args.t, args.n_max)
        source = "qmds"
    computed = table_rows(outers, args.r, source=source)
    frame = rows_dataframe([(None, params) for params in computed], outers)
    return CommandResult("ok", {"rows": _records(frame)}, f"{len(computed)} rows")


def cmd_info(args: argparse.Namespace) -> CommandResult:
    loaded = loadCode(args.code)
    code = validate(_stabilizerOf(loaded))
    payload = {"name": code.name, "n": code.n, "k": code.k, "generators": len(code.generators), "valid": True,
               "logicals": code.has_logicals}
    if isinstance(loaded, BlockCode):
        payload.update(blocks=loaded.n_blocks, blocksize=loaded.block_size, delta=loaded.delta)
    return CommandResult("ok", payload, f"{code.describe()} is a valid stabilizer code")


def cmd_errors(args: argparse.Namespace) -> CommandResult:
    errors = gen_At(args.n, args.t)
    saveErrorSetFile(args.out, errors)
    return CommandResult("ok", {"label": errors.label, "size": len(errors), "path": args.out},
                         f"Wrote {len(errors)} elements of {errors.label}")


def buildParser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="adcodes", description="Concatenated codes for the amplitude damping channel")
    parser.add_argument("--json", action="store_true", help="print the result as JSON only")
    parser.add_argument("--threads", type=int, default=None, help="worker threads for distance searches")
    parser.add_argument("--cap", type=int, default=None, help="largest n + k for centralizer enumeration")
    # Repeated on every subcommand; SUPPRESS keeps a value given before the subcommand
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="print the result as JSON only")
    shared.add_argument("--threads", type=int, default=argparse.SUPPRESS, help="worker threads for distance searches")
    shared.add_argument("--cap", type=int, default=argparse.SUPPRESS, help="largest n + k for centralizer enumeration")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[shared], help="concatenate an inner and an outer code")
    p.add_argument("--inner", required=True, help="qr:<r>, builtin:<name> or a code file")
    p.add_argument("--outer", required=True, help="builtin:<name> or a code file")
    p.add_argument("--variant", choices=sorted(_VARIANTS), default="full")
    p.add_argument("--out", help="output code file")
    p.set_defaults(handler=cmd_construct)

    p = sub.add_parser("distance", parents=[shared], help="exact minimum distance with a witness")
    p.add_argument("code")
    p.add_argument("--metric", choices=METRICS, default="hamming")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--strategy", choices=STRATEGIES, default="auto")
    p.add_argument("--type", choices=("X", "Z"), default=None, help="restrict to X-only or Z-only operators")
    p.set_defaults(handler=cmd_distance)

    p = sub.add_parser("verify", parents=[shared], help="certify that a code detects A^t")
    p.add_argument("code")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--mode", choices=("direct", "by_distance"), default="direct")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("tables", parents=[shared], help="reproduce or compute parameter tables")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--fixture", choices=TABLES)
    group.add_argument("--outer", help="file of 'n k delta q' outer-code rows")
    group.add_argument("--qmds", type=int, metavar="Q", help="list QMDS outer codes of qudit dimension Q")
    p.add_argument("--r", type=int, default=None, help="inner Q_r; derived from q when omitted")
    p.add_argument("--t", type=int, default=1, help="with --qmds: errors corrected by the outer code")
    p.add_argument("--n-max", type=int, default=128, help="with --qmds: largest concatenated length")
    p.set_defaults(handler=cmd_tables)

    p = sub.add_parser("info", parents=[shared], help="parse and validate a code")
    p.add_argument("code")
    p.set_defaults(handler=cmd_info)

    p = sub.add_parser("errors", parents=[shared], help="write the error set A^t(n) to a file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(handler=cmd_errors)
    return parser


def runCommand(args: argparse.Namespace) -> CommandResult:
    try:
        return args.handler(args)
    except (ValueError, RuntimeError, KeyError, OSError) as e:
        logger.debug("Command %s failed", args.command, exc_info=True)
        message = e.args[0] if isinstance(e, KeyError) and e.args else str(e)
        return CommandResult("error", {"type": type(e).__name__}, str(message))


def _printHuman(result: CommandResult) -> None:
    rows = result.payload.get("rows")
    print(f"[{result.status}] {result.message}")
    if rows:
        print(pd.DataFrame.from_records(rows).to_string(index=False))
    elif "file" in result.payload:
        print(result.payload["file"], end="")
    else:
        for key, value in result.payload.items():
            print(f"  {key}: {json.dumps(value) if isinstance(value, (dict, list)) else value}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(
        level=getLogLevel(),
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    args = buildParser().parse_args(argv)
    result = runCommand(args)
    if args.json:
        print(json.dumps(result.to_dict(), indent=2))
    else:
        _printHuman(result)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
