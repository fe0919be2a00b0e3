"""Command-line interface: ``waringsym <subcommand> ...``.

Exit codes: 0 success, 1 failed verification or expectation, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, List, Optional

from . import apolar, decomp, witness
from .kernels import BACKEND
from .linalg import exact_rank
from .poly import DomainError, elementary_symmetric, monomial_text

FORMATS = ("text", "json", "csv", "bitmap")


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _only(args, allowed):
    if args.format not in allowed:
        raise UsageError(f"{args.command}: format {args.format!r} not supported (use {', '.join(allowed)})")


# ---------------------------------------------------------------------------
# subcommands; each returns (output text, exit code)

def cmd_sigma(args):
    _only(args, ("text", "json"))
    p = elementary_symmetric(args.d, args.n)
    if args.format == "json":
        return _dumps({"d": args.d, "n": args.n, "terms": len(p), "polynomial": p.to_text()}), 0
    return p.to_text() + "\n", 0


def cmd_decompose(args):
    _only(args, ("text", "json"))
    if args.monomial:
        if args.d != args.n:
            raise DomainError("--monomial needs d == n")
        dec = decomp.decompose_monomial(args.n)
    elif args.d % 2:
        dec = decomp.decompose_odd(args.d, args.n)
    else:
        dec = decomp.decompose_even(args.d, args.n, method=args.method)
    if args.format == "text":
        return dec.to_text() + "\n", 0
    return dec.to_json() + "\n", 0


def cmd_verify(args):
    _only(args, ("text", "json"))
    if args.file == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from exc
    dec = decomp.Decomposition.from_json(text)
    rep = decomp.verify(dec)
    code = 0 if rep.ok else 1
    if args.format == "json":
        return _dumps(rep.to_dict()), code
    if rep.ok:
        return f"OK: {dec.scale}*sigma({dec.d},{dec.n}) verified with {rep.summand_count} summands\n", 0
    if rep.problems:
        return "FAIL: " + "; ".join(rep.problems) + "\n", 1
    mono = monomial_text(rep.residual_monomial)
    return f"FAIL: residual {rep.residual_coefficient} at monomial {mono}\n", 1


def cmd_catalecticant(args):
    M = apolar.catalecticant(elementary_symmetric(args.d, args.n), args.r)
    if args.refine:
        M = apolar.squarefree_refine(M)
    rank = exact_rank(M)
    label = apolar.monomial_index_label
    if args.format == "csv":
        return M.to_csv(label), 0
    if args.format == "bitmap":
        return M.to_bitmap(), 0
    if args.format == "json":
        out = {"d": args.d, "n": args.n, "r": args.r, "refined": args.refine,
               "shape": list(M.shape), "rank": rank}
        out.update(M.to_dict(label))
        return _dumps(out), 0
    head = f"# catalecticant r={args.r} of sigma({args.d},{args.n}){' refined' if args.refine else ''}: " \
           f"{M.shape[0]}x{M.shape[1]}, rank {rank}\n"
    return head + apolar.matrix_text(M, label), 0


def cmd_hilbert(args):
    _only(args, ("text", "json", "csv"))
    values = apolar.hilbert_table(args.d, args.n, check=args.check)
    if args.format == "json":
        out = {"d": args.d, "n": args.n, "hilbert": [str(v) for v in values],
               "length": str(sum(values)), "checked": args.check}
        return _dumps(out), 0
    if args.format == "csv":
        return "r,hilbert\n" + "".join(f"{r},{v}\n" for r, v in enumerate(values)), 0
    lines = [f"# Hilbert function of the apolar quotient of sigma({args.d},{args.n})"]
    lines += [f"r={r}: {v}" for r, v in enumerate(values)]
    lines.append(f"total: {sum(values)}")
    return "\n".join(lines) + "\n", 0


def cmd_bounds(args):
    _only(args, ("text", "json"))
    b = apolar.bounds(args.d, args.n)
    if args.format == "json":
        return _dumps(b.to_dict()), 0
    exact = "unknown" if b.exact is None else str(b.exact)
    lines = [f"sigma({b.d},{b.n}): {b.lower} <= rank <= {b.upper}; exact rank: {exact}",
             f"real rank equal: {'yes' if b.real_rank_equal else 'not established'}"]
    lines += [f"  {note}" for note in b.notes]
    return "\n".join(lines) + "\n", 0


def cmd_identity(args):
    _only(args, ("text", "json"))
    rep = witness.identity_check(args.k, args.n)
    code = 0 if rep.ok else 1
    if args.format == "json":
        return _dumps(rep.to_dict()), code
    verdict = "holds" if rep.ok else "FAILS"
    return f"k={rep.k} n={rep.n}: lhs={rep.lhs} rhs={rep.rhs} identity {verdict}\n", code


def cmd_witness(args):
    _only(args, ("text", "json"))
    rep = witness.proposition_search(args.d, args.n, args.subset_size)
    code = 0
    if args.expect is not None:
        got = len(rep.members)
        want = {"none": 0, "all": rep.total_subsets}.get(args.expect)
        if (want is None and got == 0) or (want is not None and got != want):
            code = 1
    if args.format == "json":
        return _dumps(rep.to_dict(timing=args.timing, certificates=args.certificates)), code
    lines = [rep.summary]
    if rep.members:
        lines.append("members: " + " ".join("{" + ",".join(map(str, s)) + "}" for s in rep.members))
    if args.certificates:
        for s, m in rep.details:
            tag = "member" if m.member else "not member"
            vec = m.coefficients if m.member else m.separator
            lines.append("{" + ",".join(map(str, s)) + "}: " + tag + " [" + ", ".join(map(str, vec)) + "]")
    if args.timing:
        lines.append(f"elapsed: {rep.elapsed_ms:.1f} ms")
    return "\n".join(lines) + "\n", code


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="waringsym",
        description="Power-sum decompositions and rank bounds of elementary symmetric polynomials.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s (kernel: {BACKEND})")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def add(name, func: Callable, help_text: str, fmt: str):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func, default_format=fmt)
        p.add_argument("--format", choices=FORMATS, default=None,
                       help=f"output format (default: {fmt})")
        p.add_argument("-o", "--output", default="-", help="output path (default: stdout)")
        return p

    p = add("sigma", cmd_sigma, "print sigma_{d,n}", "text")
    p.add_argument("d", type=int)
    p.add_argument("n", type=int)

    p = add("decompose", cmd_decompose, "emit a power-sum decomposition of sigma_{d,n}", "json")
    p.add_argument("d", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--monomial", action="store_true", help="decompose the monomial sigma_{n,n}")
    p.add_argument("--method", choices=("formula", "derivative"), default="formula",
                   help="construction for even d (default: formula)")

    p = add("verify", cmd_verify, "verify a decomposition JSON file ('-' for stdin)", "text")
    p.add_argument("file")

    p = add("catalecticant", cmd_catalecticant, "catalecticant matrix of sigma_{d,n} and its rank", "text")
    p.add_argument("d", type=int)
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.add_argument("--refine", action="store_true", help="drop zero rows and columns")

    p = add("hilbert", cmd_hilbert, "Hilbert function table of the apolar quotient", "text")
    p.add_argument("d", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--check", action="store_true", help="cross-check against catalecticant ranks")

    p = add("bounds", cmd_bounds, "rank bounds report", "json")
    p.add_argument("d", type=int)
    p.add_argument("n", type=int)

    p = add("identity", cmd_identity, "check the binomial summation identity", "text")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)

    p = add("witness", cmd_witness, "sign-point span-membership search", "text")
    p.add_argument("d", type=int)
    p.add_argument("n", type=int)
    p.add_argument("subset_size", type=int)
    p.add_argument("--certificates", action="store_true", help="include the per-subset certificate table")
    p.add_argument("--timing", action="store_true", help="report elapsed time (output is then not reproducible)")
    p.add_argument("--expect", choices=("none", "some", "all"), default=None,
                   help="exit 1 unless the number of member subsets matches")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    if args.format is None:
        args.format = args.default_format
    try:
        text, code = args.func(args)
    except (UsageError, DomainError) as exc:
        print(f"waringsym {args.command}: error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2
    except ValueError as exc:
        print(f"waringsym {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if args.output == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return code


def run(argv: Optional[List[str]] = None) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
