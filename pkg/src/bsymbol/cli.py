"""Command-line front end.

Exit codes: 0 success, 2 malformed input, 3 enumeration cap exceeded,
4 a theorem check or cross-check failed.  A "no" verdict is not an error.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path

from bsymbol import limits, mds
from bsymbol.bweight import check_bound_theorems, d_matrix
from bsymbol.codes import LinearCode, ZeroCodeError, format_code, parse_code
from bsymbol.families import hamming_code, simplex_code
from bsymbol.gf import field_new, gf
from bsymbol.isometry import NotAnIsomorphism, preserves_b_weight, preserves_b_weight_brute
from bsymbol.linalg import ParseError, parse_matrix

EXIT_OK, EXIT_PARSE, EXIT_CAP, EXIT_INVARIANT = 0, 2, 3, 4


class InvariantFailure(RuntimeError):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc.strerror}", 0) from None


def _load_code(path: str) -> LinearCode:
    try:
        return parse_code(_read(path))
    except ParseError as exc:
        exc.path = path
        raise


def _field_spec(text: str):
    """``p^m`` or a plain prime power."""
    try:
        if "^" in text:
            p, m = (int(t) for t in text.split("^"))
            return field_new(p, m)
        return gf(int(text))
    except ValueError as exc:
        raise ParseError(f"bad field {text!r}: {exc}", 0) from None


# -- subcommands ---------------------------------------------------------------


def cmd_analyze(args, out) -> int:
    C = _load_code(args.code)
    if not 1 <= args.b <= C.n:
        raise ParseError(f"--b must lie in 1..{C.n}", 0)
    D = d_matrix(C)
    out.write(f"n {C.n}\nk {C.k}\nq {C.q}\nb {args.b}\n")
    out.write(" ".join(map(str, D.row(args.b))) + "\n")
    return EXIT_OK


def cmd_dmatrix(args, out) -> int:
    C = _load_code(args.code)
    D = d_matrix(C, engine=args.engine)
    out.write(D.to_text())
    if args.check:
        report = check_bound_theorems(C, D)
        if not report.passed:
            raise InvariantFailure(str(report))
    if args.provenance:
        for row in D.provenance:
            out.write("# " + " ".join(row) + "\n")
    return EXIT_OK


def cmd_mds(args, out) -> int:
    C = _load_code(args.code)
    if not 1 <= args.b <= C.n:
        raise ParseError(f"--b must lie in 1..{C.n}", 0)
    names = list(mds.CRITERIA) if args.criterion == "all" else [args.criterion]
    verdicts = [mds.CRITERIA[name](C, args.b) for name in names]
    for v in verdicts:
        out.write(f"{v} ({v.criterion})\n")
    if len({v.is_mds for v in verdicts}) > 1:
        raise InvariantFailure("criteria disagree")
    return EXIT_OK


def cmd_isometry(args, out) -> int:
    C = _load_code(args.code_a)
    C_tilde = _load_code(args.code_b)
    try:
        phi = parse_matrix(_read(args.phi).splitlines())
    except ParseError as exc:
        exc.path = args.phi
        raise
    if not 1 <= args.b <= C.n:
        raise ParseError(f"--b must lie in 1..{C.n}", 0)
    try:
        report = preserves_b_weight(C, C_tilde, phi, args.b)
    except NotAnIsomorphism as exc:
        raise ParseError(str(exc), 0) from None
    for line in report.lines():
        out.write(line + "\n")
    if report.fast_path_applies and report.fast_shift != 0:
        raise InvariantFailure("fast omega formula disagrees with the definition")
    if C.q**C.k <= limits.current().codewords:
        brute = preserves_b_weight_brute(C, phi, args.b)
        out.write(f"brute force: {'yes' if brute else 'no'}\n")
        if brute != report.preserves:
            raise InvariantFailure("brute force disagrees")
    return EXIT_OK


def cmd_tower(args, out) -> int:
    from bsymbol import towers

    C = _load_code(args.code)
    if args.ext is not None and _field_spec(args.ext) is not C.field:
        raise ParseError(f"code is over {C.field}, not {args.ext}", 0)
    m = args.m
    if args.base is not None:
        base = _field_spec(args.base)
        if base.p != C.field.p:
            raise ParseError(f"{base} is not a subfield of {C.field}", 0)
        m = base.e
    try:
        if args.op == "ess":
            out.write(f"{towers.essential_number(C)}\n")
        elif args.op == "subcode":
            m = 1 if m is None else m
            try:
                out.write(format_code(towers.subfield_subcode(C, m)))
            except ZeroCodeError:
                out.write("dim 0\n")
        elif args.op == "extend":
            out.write(format_code(towers.extend_code(C, 2 if m is None else m)))
        else:
            base = field_new(C.field.p, 1 if m is None else m)
            out.write(format_code(towers.trace_code(C, base)))
    except ValueError as exc:
        raise ParseError(str(exc), 0) from None
    return EXIT_OK


def cmd_family(args, out) -> int:
    try:
        F = gf(args.q)
    except ValueError as exc:
        raise ParseError(str(exc), 0) from None
    if args.k < 1:
        raise ParseError("k must be at least 1", 0)
    build = simplex_code if args.name == "simplex" else hamming_code
    try:
        C = build(F, args.k)
    except ZeroCodeError:
        raise ParseError(f"{args.name} code with k={args.k} is the zero code", 0) from None
    out.write(format_code(C))
    return EXIT_OK


def cmd_selfcheck(args, out) -> int:
    from bsymbol.harness import selfcheck

    report = selfcheck()
    for line in report.lines:
        out.write(line + "\n")
    out.write(f"{report.failures} failures\n")
    return EXIT_INVARIANT if report.failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bsymbol", description="Linear codes under the b-symbol metric.")
    default = limits.Limits()
    ap.add_argument("--cap-codewords", type=int, default=default.codewords)
    ap.add_argument("--cap-subspaces", type=int, default=default.subspaces)
    ap.add_argument("--cap-subsets", type=int, default=default.subsets)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="print n, k, q and the b-th row of D(C)")
    p.add_argument("code")
    p.add_argument("--b", type=int, required=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("dmatrix", help="print the generalized b-weight matrix")
    p.add_argument("code")
    p.add_argument("--engine", choices=("auto", "pg", "support"), default="auto")
    p.add_argument("--check", action="store_true", help="also run the bound theorems")
    p.add_argument("--provenance", action="store_true", help="append how each entry was obtained")
    p.set_defaults(func=cmd_dmatrix)

    p = sub.add_parser("mds", help="decide b-MDS")
    p.add_argument("code")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--criterion", choices=("direct", "generator", "parity", "all"), default="direct")
    p.set_defaults(func=cmd_mds)

    p = sub.add_parser("isometry", help="does a linear isomorphism keep b-weights")
    p.add_argument("code_a")
    p.add_argument("code_b")
    p.add_argument("phi", help="matrix file: images of the generator rows of code_a")
    p.add_argument("--b", type=int, required=True)
    p.set_defaults(func=cmd_isometry)

    p = sub.add_parser("tower", help="subfield subcode, essential number, extension or trace code")
    p.add_argument("code")
    p.add_argument("--op", choices=("subcode", "ess", "extend", "trace"), required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--base", help="subfield as p^m")
    p.add_argument("--ext", help="field of the code as p^e (checked)")
    p.set_defaults(func=cmd_tower)

    p = sub.add_parser("family", help="emit a simplex or Hamming code")
    p.add_argument("name", choices=("simplex", "hamming"))
    p.add_argument("q", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("selfcheck", help="run the theorem harness on the built-in corpus")
    p.set_defaults(func=cmd_selfcheck)
    return ap


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        with limits.use_limits(
            codewords=args.cap_codewords, subspaces=args.cap_subspaces, subsets=args.cap_subsets
        ):
            return args.func(args, out)
    except ParseError as exc:
        where = getattr(exc, "path", None)
        if exc.line:
            loc = f"{where or '<input>'}:{exc.line}:{exc.col}: "
        else:
            loc = f"{where}: " if where else ""
        err.write(f"error: {loc}{exc.message}\n")
        return EXIT_PARSE
    except limits.EnumerationTooLarge as exc:
        err.write(f"error: {exc}\n")
        return EXIT_CAP
    except InvariantFailure as exc:
        err.write(f"invariant failure: {exc}\n")
        return EXIT_INVARIANT


def main() -> None:
    sys.exit(run())
