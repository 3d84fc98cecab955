"""Command-line interface.

Exit codes: 0 success, 1 verification or criterion failure, 2 bad usage or
malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import census, fileformat
from .construct import ParameterError, Theorem4Params, Theorem123Params, construct
from .duality import DEFAULT_BUDGET, verify_code
from .fileformat import CodeFile, FormatError
from .gf import FieldError
from .grs import generator_matrix

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def _write_text(path: Optional[str], text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def cmd_construct(args) -> int:
    if args.theorem in (1, 2, 3):
        missing = [f"--{k}" for k in ("r", "m", "t") if getattr(args, k) is None]
        if missing:
            _err(f"theorem {args.theorem} needs {', '.join(missing)}")
            return EXIT_USAGE
        params = Theorem123Params(args.r, args.m, args.t, args.theorem)
    else:
        missing = [f"--{k}" for k in ("p", "mdeg", "t", "e") if getattr(args, k) is None]
        if missing:
            _err(f"theorem 4 needs {', '.join(missing)}")
            return EXIT_USAGE
        params = Theorem4Params(args.p, args.mdeg, args.t, args.e)
    try:
        built = construct(params)
    except (ParameterError, FieldError) as exc:
        _err(str(exc))
        return EXIT_USAGE
    except ArithmeticError as exc:
        _err(f"internal criterion failure: {exc}")
        return EXIT_FAIL
    provenance = {"theorem": args.theorem, "params": params.as_dict(), "lambda": built.lam}
    text = fileformat.serialize(CodeFile.from_code(built.ctx, built.code, provenance))
    code = built.code
    lam = "none" if built.lam is None else built.lam
    summary = f"n={code.n} k={code.k} q={built.ctx.q} lambda={lam}"
    if args.out:
        _write_text(args.out, text)
        print(summary)
    else:
        sys.stdout.write(text)
        print(summary, file=sys.stderr)
    return EXIT_OK


def _load(path: str):
    cf = fileformat.read(path)
    return cf, cf.context()


def cmd_verify(args) -> int:
    try:
        cf, ctx = _load(args.inp)
    except FormatError as exc:
        _err(str(exc))
        return EXIT_USAGE
    try:
        report = verify_code(ctx, cf.code, mode=args.mds, budget=args.budget)
    except ValueError as exc:
        _err(str(exc))
        return EXIT_USAGE
    print(json.dumps(report.as_dict(), indent=2))
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_matrix(args) -> int:
    try:
        cf, ctx = _load(args.inp)
    except FormatError as exc:
        _err(str(exc))
        return EXIT_USAGE
    sep = "," if args.format == "csv" else " "
    for row in generator_matrix(ctx, cf.code):
        print(sep.join(str(x) for x in row))
    return EXIT_OK


def cmd_census(args) -> int:
    try:
        if args.sweep:
            rows = census.sweep_conventions(args.q)
            print("include_e0 include_n2 length_cap count_new count_known")
            for rep in rows:
                o = rep.options
                print(f"{o.include_e0!s:<10} {o.include_n2!s:<10} {o.length_cap:<10} "
                      f"{rep.count_new:<9} {rep.count_known}")
            return EXIT_OK
        opts = census.CensusOptions(
            include_e0=args.include_e0, include_n2=not args.exclude_n2, length_cap=args.length_cap
        )
        report = census.compare(args.q, opts, source=args.source)
    except census.CensusError as exc:
        _err(str(exc))
        return EXIT_USAGE
    _write_text(args.out, report.to_json())
    if args.out:
        print(f"q={report.q} count_new={report.count_new} count_known={report.count_known}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="grsdual", description="MDS self-dual codes from (extended) GRS codes")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="build a self-dual code from one of the four families")
    p.add_argument("--theorem", type=int, choices=(1, 2, 3, 4), required=True)
    for name in ("r", "m", "t", "p", "mdeg", "e"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--out", help="code file to write (default: stdout)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check self-duality and the MDS property of a code file")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--mds", choices=("exhaustive", "minors", "structural", "auto"), default="auto")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", help="count admissible even lengths for a field size")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--source", choices=("new", "known", "both"), default="both")
    p.add_argument("--include-e0", action="store_true", help="allow e = 0 in family 4")
    p.add_argument("--exclude-n2", action="store_true", help="do not count length 2")
    p.add_argument("--length-cap", choices=census.LENGTH_CAPS, default="q+1")
    p.add_argument("--sweep", action="store_true", help="tabulate counts for every flag combination")
    p.add_argument("--out")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("matrix", help="print the generator matrix of a code file")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--format", choices=("rows", "csv"), default="rows")
    p.set_defaults(func=cmd_matrix)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
