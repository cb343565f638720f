"""Command-line front end: ``ptspectrum analyze|check|oracle|sweep``.

Exit codes: 0 success, 1 I/O / parse / usage errors, 2 the method is
inapplicable to the input (vanishing minor, near-degenerate float sign,
non-real characteristic polynomial). ``oracle`` exits 2 when inconclusive
and 3 on a mismatch.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .charpoly import char_poly
from .errors import MatrixFileError, MethodInapplicable, NotRealCharPoly
from .inertia import qualitative_spectrum
from .matrix import SquareMatrix, check_pt_symmetry, pt_well, pt_well_n
from .matrixfile import load_family, load_matrix
from .oracle import cross_validate
from .report import (
    ReportDocument,
    digest,
    error_payload,
    oracle_payload,
    render_text,
    scalar_json,
    spectrum_payload,
    sweep_csv,
    sweep_payload,
)
from .scalars import DEFAULT_GUARD, SignGuard, parse_rational
from .sweep import FamilySpec, run_sweep

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INAPPLICABLE = 2
EXIT_MISMATCH = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _rational(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _param_range(text: str):
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected start:stop:step")
    return tuple(_rational(p) for p in parts)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", type=Path, help="matrix file (JSON)")
    common.add_argument("--generator", choices=["pt-well", "pt-well-n", "affine"])
    common.add_argument("--xi", type=_rational, default=None, help="generator parameter, e.g. 3/2")
    common.add_argument("--dim", type=int, default=None, help="dimension for pt-well-n")
    common.add_argument("--arith", choices=["exact", "float"], default="exact")
    common.add_argument("--no-exact-promotion", action="store_true",
                        help="read decimal literals as floats (forces float mode)")
    common.add_argument("--tol", type=float, default=None,
                        help="float sign guard eps_rel; for oracle, the imaginary-part threshold")
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--output", type=Path, help="write the report here instead of stdout")

    parser = _Parser(prog="ptspectrum", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("analyze", parents=[common], help="qualitative spectrum of a matrix")
    sub.add_parser("check", parents=[common], help="PT-symmetry and real-charpoly verdicts")
    sub.add_parser("oracle", parents=[common], help="cross-check against numerical roots")
    sw = sub.add_parser("sweep", parents=[common], help="scan a one-parameter family")
    sw.add_argument("--param-range", type=_param_range, required=True, metavar="START:STOP:STEP")
    sw.add_argument("--refine", type=_rational, default=None, metavar="WIDTH",
                    help="bisect each transition bracket to this width")
    sw.add_argument("--workers", type=int, default=None)
    return parser


def _guard(args) -> SignGuard:
    if args.tol is None or args.command == "oracle":
        return DEFAULT_GUARD
    return SignGuard(DEFAULT_GUARD.eps_abs, args.tol)


def _generator_matrix(args) -> SquareMatrix:
    if args.xi is None:
        raise UsageError("--xi is required with --generator")
    xi = float(args.xi) if args.arith == "float" else args.xi
    if args.generator == "pt-well":
        return pt_well(xi)
    if args.generator == "pt-well-n":
        if args.dim is None or args.dim < 1:
            raise UsageError("--dim >= 1 is required with pt-well-n")
        return pt_well_n(args.dim, xi)
    raise UsageError("the affine generator is only available for sweep")


def _load_input(args) -> tuple[SquareMatrix, str]:
    if args.input is not None:
        data = args.input.read_bytes()
        M = load_matrix(args.input, promote=not args.no_exact_promotion)
        source = digest(data)
    elif args.generator is not None:
        M = _generator_matrix(args)
        desc = f"generator={args.generator};xi={args.xi};dim={args.dim};arith={args.arith}"
        source = digest(desc)
    else:
        raise UsageError("one of --input or --generator is required")
    if args.arith == "float" and M.exact:
        M = M.to_float()
    return M, source


def cmd_analyze(args) -> tuple[ReportDocument, int]:
    M, source = _load_input(args)
    try:
        q = qualitative_spectrum(M, _guard(args))
    except MethodInapplicable as exc:
        doc = ReportDocument("analyze", exc.tag, error_payload(exc), input_digest=source)
        return doc, EXIT_INAPPLICABLE
    return ReportDocument("analyze", "ok", spectrum_payload(q), input_digest=source), EXIT_OK


def cmd_check(args) -> tuple[ReportDocument, int]:
    M, source = _load_input(args)
    guard = _guard(args)
    payload = {"pt_symmetric": check_pt_symmetry(M, guard), "dimension": M.n}
    try:
        p = char_poly(M, guard)
    except NotRealCharPoly as exc:
        payload.update(charpoly_real=False, charpoly=None, nonreal_index=exc.index)
    else:
        payload.update(charpoly_real=True, charpoly=[scalar_json(h) for h in p.coeffs])
    return ReportDocument("check", "ok", payload, input_digest=source), EXIT_OK


def cmd_oracle(args) -> tuple[ReportDocument, int]:
    M, source = _load_input(args)
    threshold = args.tol if args.tol is not None else 1e-8
    try:
        cv = cross_validate(M, imag_threshold=threshold)
    except MethodInapplicable as exc:
        doc = ReportDocument("oracle", exc.tag, error_payload(exc), input_digest=source)
        return doc, EXIT_INAPPLICABLE
    code = {"match": EXIT_OK, "inconclusive": EXIT_INAPPLICABLE, "mismatch": EXIT_MISMATCH}[cv.status]
    return ReportDocument("oracle", cv.status, oracle_payload(cv), input_digest=source), code


def cmd_sweep(args):
    if args.generator is None:
        raise UsageError("--generator is required for sweep")
    start, stop, step = args.param_range
    base = slope = None
    desc = f"generator={args.generator};dim={args.dim};range={start}:{stop}:{step};" \
           f"refine={args.refine};arith={args.arith}"
    if args.generator == "affine":
        if args.input is None:
            raise UsageError("the affine generator needs --input with base and slope")
        base, slope = load_family(args.input, promote=not args.no_exact_promotion)
        desc += ";" + digest(args.input.read_bytes())
    try:
        spec = FamilySpec(args.generator, start, stop, step, dim=args.dim, base=base,
                          slope=slope, arith=args.arith, guard=_guard(args))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.refine is not None and args.refine <= 0:
        raise UsageError("--refine width must be positive")
    report = run_sweep(spec, refine_width=args.refine, workers=args.workers)
    doc = ReportDocument("sweep", "ok", sweep_payload(report), input_digest=digest(desc))
    return doc, EXIT_OK, report


_VALUE_FLAGS = {"--xi", "--param-range", "--refine", "--tol"}


def _join_negative_values(argv: list[str]) -> list[str]:
    # argparse reads "-3:3:1/4" or "-3/2" as an option; glue such values to their flag
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else ""
        if tok in _VALUE_FLAGS and len(nxt) > 1 and nxt[0] == "-" and (nxt[1].isdigit() or nxt[1] == "."):
            out.append(f"{tok}={nxt}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_join_negative_values(argv))
    try:
        if args.command == "sweep":
            doc, code, report = cmd_sweep(args)
        else:
            if args.format == "csv":
                raise UsageError("csv output is only available for sweep")
            doc, code = {"analyze": cmd_analyze, "check": cmd_check, "oracle": cmd_oracle}[
                args.command
            ](args)
            report = None
    except (UsageError, MatrixFileError, OSError) as exc:
        print(f"ptspectrum: error: {exc}", file=sys.stderr)
        return EXIT_ERROR

    if args.format == "json":
        text = doc.to_json()
    elif args.format == "csv":
        text = sweep_csv(report)
    else:
        text = render_text(doc)
    if args.output is not None:
        try:
            args.output.write_text(text, encoding="utf-8")
        except OSError as exc:
            print(f"ptspectrum: error: {exc}", file=sys.stderr)
            return EXIT_ERROR
    else:
        sys.stdout.write(text)
    if code == EXIT_INAPPLICABLE and doc.mode == "analyze":
        print(f"ptspectrum: method inapplicable: {doc.payload.get('message', doc.status)}",
              file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
