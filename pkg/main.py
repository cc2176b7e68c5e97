# main.py
import argparse
import logging
import sys
from pathlib import Path

import anyio

from config import load_config
from environment import get_settings
from errors import SWRError
from jacobi.coefficients import jacobi_coeffs_col0, jacobi_coeffs_rows
from jacobi.series import cf_to_series
from oracle.paths import DEFAULT_PATH_GUARD
from paramspec import parse_param_spec
from positivity.roots import root_report
from positivity.stability import stability_check, turan_polynomial
from serialization.bfile import compare_with_triangle, fetch_bfile, load_bfile
from serialization.codec import FORMATS, emit_cf, emit_series, emit_triangle
from serialization.documents import cell_witness_to_document, root_report_to_document, stability_to_document
from suites.options import SuiteOptions
from suites.runner import ALL, SUITES, resolve_suites, run_suites
from triangle.build import build_triangle
from triangle.specializations import parse_specialization

# Default path for the fixture registry
DEFAULT_CONFIG_FILE = "swr_config.json"

EXIT_OK, EXIT_WITNESS, EXIT_USAGE = 0, 1, 2


def emit(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


async def cmd_gen(args) -> int:
    spec = parse_param_spec(args.params)
    emit(emit_triangle(build_triangle(spec.params, args.rows), args.format))
    return EXIT_OK


async def cmd_verify(args) -> int:
    names = resolve_suites(args.suite)
    options = SuiteOptions(
        spec=parse_param_spec(args.params) if args.params else None,
        rows=args.rows,
        order=args.order,
        shift=args.shift,
        matrix_size=args.matrix_size,
        symbolic=args.symbolic,
        guard=args.guard_override if args.guard_override is not None else get_settings().path_guard,
    )
    reports = await run_suites(names, options, skip_inapplicable=args.suite == ALL)

    status = EXIT_OK
    for report in reports:
        emit(report.model_dump_json(exclude_none=True))
        if not report.passed:
            status = EXIT_WITNESS
    return status


async def cmd_oeis(args) -> int:
    fixture = await load_config(args.config, args.sequence_id)
    name = f"{fixture.specialization}:{fixture.m}" if fixture.m else fixture.specialization
    params = parse_specialization(name)

    # fixture paths are relative to the registry file
    bfile_path = args.bfile or str(Path(args.config).parent / fixture.bfile)
    bfile = load_bfile(bfile_path, args.sequence_id)

    tri = build_triangle(params, fixture.first_row + args.rows - 1)
    witness = compare_with_triangle(bfile, fixture, tri, args.rows)
    if witness:
        emit(cell_witness_to_document(witness).model_dump_json())
        return EXIT_WITNESS
    logging.info(f"{args.sequence_id}: {args.rows} rows match {name}")
    return EXIT_OK


async def cmd_cf(args) -> int:
    spec = parse_param_spec(args.params)
    horizon = max(args.n, args.order or 0)
    if args.column0:
        cf = jacobi_coeffs_col0(spec.params, horizon)
    else:
        cf = jacobi_coeffs_rows(spec.params, horizon, q=None if spec.q_is_symbolic else spec.q)

    if args.order is not None:
        emit(emit_series(cf_to_series(cf, args.order)))
    else:
        emit(emit_cf(cf))
    return EXIT_OK


async def cmd_roots(args) -> int:
    spec = parse_param_spec(args.params)
    report = root_report(spec.params, args.n)
    emit(root_report_to_document(report).model_dump_json())
    return EXIT_OK if report.inside else EXIT_WITNESS


async def cmd_stability(args) -> int:
    spec = parse_param_spec(args.params)
    tri = build_triangle(spec.params, args.n + 1)
    polynomial = turan_polynomial(tri, args.n)
    report = stability_check(polynomial)
    emit(stability_to_document(args.n, polynomial, report).model_dump_json())
    return EXIT_OK if report.stable else EXIT_WITNESS


async def cmd_fetch_bfile(args) -> int:
    dest = args.dest or f"{args.sequence_id}.txt"
    path = fetch_bfile(args.sequence_id, dest, timeout=args.timeout)
    logging.info(f"Saved {args.sequence_id} to {path}")
    return EXIT_OK


COMMANDS = {
    "gen": cmd_gen,
    "verify": cmd_verify,
    "oeis": cmd_oeis,
    "cf": cmd_cf,
    "roots": cmd_roots,
    "stability": cmd_stability,
    "fetch-bfile": cmd_fetch_bfile,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Stirling-Whitney-Riordan triangle toolkit")
    parser.add_argument("--log-level", help="Logging level (defaults to SWR_LOG_LEVEL or WARNING).")
    sub = parser.add_subparsers(dest="command", required=True)

    # gen
    gen = sub.add_parser("gen", help="Generate rows 0..N of the triangle.")
    gen.add_argument("--params", required=True, help="a1=..,a2=..,b1=..,b2=..,lam=..[,q=..], a1,a2,b1,b2,lam or a family name.")
    gen.add_argument("--rows", type=int, default=5)
    gen.add_argument("--format", choices=FORMATS, default="json")

    # verify
    verify = sub.add_parser("verify", help="Run a verification suite.")
    verify.add_argument("--suite", required=True, choices=[*SUITES, ALL])
    verify.add_argument("--params", help="Parameters (default: the Stirling family, or all free with --symbolic).")
    verify.add_argument(
        "--rows", "--n", dest="rows", type=int, help="Rows to check (default 8, or 4 with symbolic parameters)."
    )
    verify.add_argument("--order", type=int, default=3)
    verify.add_argument("--shift", type=int, choices=[0, 1], default=0)
    verify.add_argument("--matrix-size", type=int, default=6)
    verify.add_argument("--symbolic", action="store_true", help="Leave all five parameters free.")
    verify.add_argument("--guard-override", type=int, help=f"Path enumeration length limit (default {DEFAULT_PATH_GUARD}).")

    # oeis
    oeis = sub.add_parser("oeis", help="Compare the triangle with an OEIS b-file.")
    oeis.add_argument("sequence_id")
    oeis.add_argument("--bfile", help="b-file path (default: the registry entry).")
    oeis.add_argument("--rows", type=int, default=12)
    oeis.add_argument("--config", default=DEFAULT_CONFIG_FILE, help="Fixture registry JSON file.")

    # cf
    cf = sub.add_parser("cf", help="Jacobi continued-fraction coefficients.")
    cf.add_argument("--params", required=True)
    cf.add_argument("--n", type=int, default=6, help="Number of s and r coefficients.")
    cf.add_argument("--order", type=int, help="Emit the series through t^order instead.")
    cf.add_argument("--column0", action="store_true", help="The first-column fraction.")

    # roots
    roots = sub.add_parser("roots", help="Isolate the real roots of T_n(q).")
    roots.add_argument("--params", required=True)
    roots.add_argument("--n", type=int, required=True)

    # stability
    stability = sub.add_parser("stability", help="Weak stability of T_{n+1}T_{n-1} - T_n^2.")
    stability.add_argument("--params", required=True)
    stability.add_argument("--n", type=int, required=True)

    # fetch-bfile
    fetch = sub.add_parser("fetch-bfile", help="Download a b-file from the OEIS.")
    fetch.add_argument("sequence_id")
    fetch.add_argument("--dest")
    fetch.add_argument("--timeout", type=float, default=30)

    return parser


async def main(args) -> int:
    """Run one subcommand and map its outcome to an exit code."""
    try:
        return await COMMANDS[args.command](args)
    except SWRError as e:
        logging.debug(f"{args.command} failed: {e!r}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def run(argv: list[str] | None = None) -> int:
    # Argument parser setup
    args = build_parser().parse_args(argv)

    try:
        level = (args.log_level or get_settings().log_level).upper()
    except SWRError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    # Configure logging
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format='%(asctime)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )

    return anyio.run(main, args)


if __name__ == "__main__":
    sys.exit(run())
