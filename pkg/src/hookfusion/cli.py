"""
Command-line interface.

    hookfusion shapes --n 3
    hookfusion tableaux --shape '[[2,2],[2]]' [--hook-only]
    hookfusion idempotent --shape '[[2,1],[]]' --tableau 0 --normalization E
    hookfusion verify --n 3 --suite all --seed 0

Every command prints one JSON document.  Exit codes: 0 success, 1 failed
verification, 2 bad input, 3 a fusion product with a pole.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Optional, Sequence

from . import algebra, bitableaux, fusion
from .bitableaux import BiPartition
from .errors import PoleError
from .verify import TheoremViolation, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_THEOREM = 0, 1, 2, 3
MAX_SHAPES_N = 8
MAX_IDEMPOTENT_N = 5


class UsageError(Exception):
    pass


def _parse_shape(text: str) -> BiPartition:
    try:
        return BiPartition.from_json(json.loads(text))
    except (ValueError, TypeError) as exc:
        raise UsageError(f"malformed shape {text!r}: {exc}") from exc


def cmd_shapes(n: int) -> list:
    if not 1 <= n <= MAX_SHAPES_N:
        raise UsageError(f"--n must be between 1 and {MAX_SHAPES_N}")
    return [
        {"shape": sh.to_json(), "dimension": bitableaux.dimension(sh),
         "f_lambda": algebra.format_fraction(bitableaux.f_lambda(sh))}
        for sh in bitableaux.bipartitions(n)
    ]


def cmd_tableaux(shape: BiPartition, hook_only: bool = False) -> list:
    tabs = [bitableaux.hook_bitableau(shape)] if hook_only else bitableaux.standard_bitableaux(shape)
    return [T.to_json() for T in tabs]


def cmd_idempotent(shape: BiPartition, tableau: int, normalization: str = "phi") -> dict:
    if shape.n > MAX_IDEMPOTENT_N:
        raise UsageError(f"idempotents are limited to n <= {MAX_IDEMPOTENT_N}")
    tabs = bitableaux.standard_bitableaux(shape)
    if not 0 <= tableau < len(tabs):
        raise UsageError(f"--tableau must be in 0..{len(tabs) - 1}")
    T = tabs[tableau]
    result = fusion.hook_fusion(T)
    scalar = {"phi": 1, "E": bitableaux.f_lambda(shape), "F": 2**shape.n}[normalization]
    element = algebra.scale(result.phi, scalar)
    return {
        "shape": shape.to_json(),
        "tableau": T.to_json(),
        "tableau_index": tableau,
        "normalization": normalization,
        "num_order": None if result.num_order == math.inf else result.num_order,
        "den_order": result.den_order,
        "element": algebra.to_json(element),
    }


def _dump(doc, out: Optional[str]):
    text = json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hookfusion", description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", help="write JSON here instead of stdout")
        return p

    p = common(sub.add_parser("shapes", help="bi-partitions of n with dimensions and f_lambda"))
    p.add_argument("--n", type=int, required=True)

    p = common(sub.add_parser("tableaux", help="standard bi-tableaux of a shape"))
    p.add_argument("--shape", required=True, help='JSON pair of partitions, e.g. "[[2,1],[1]]"')
    p.add_argument("--hook-only", action="store_true", help="only the hook bi-tableau")

    p = common(sub.add_parser("idempotent", help="exact fusion output for one tableau"))
    p.add_argument("--shape", required=True)
    p.add_argument("--tableau", type=int, default=0, help="index into the tableaux listing")
    p.add_argument("--normalization", choices=("phi", "E", "F"), default="phi")

    p = common(sub.add_parser("verify", help="run a verification suite"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--suite", choices=("exact", "oracle", "all"), default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--timings", action="store_true", help="include per-check wall time (breaks byte stability)")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "shapes":
            _dump(cmd_shapes(args.n), args.out)
        elif args.command == "tableaux":
            _dump(cmd_tableaux(_parse_shape(args.shape), args.hook_only), args.out)
        elif args.command == "idempotent":
            _dump(cmd_idempotent(_parse_shape(args.shape), args.tableau, args.normalization), args.out)
        elif args.command == "verify":
            try:
                report = run_suite(args.n, args.suite, args.seed, args.tol)
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
            doc = report.to_json(args.timings)
            if not report.passed:
                doc["violations"] = [
                    {"invariant": c.name, "shape": c.shape, "tableau": c.tableau, "detail": c.detail}
                    for c in report.failures()
                ]
            _dump(doc, args.out)
            return EXIT_OK if report.passed else EXIT_FAIL
    except UsageError as exc:
        _dump({"error": "usage", "detail": str(exc)}, None)
        return EXIT_USAGE
    except TheoremViolation as exc:
        rec = exc.record
        _dump({"error": "theorem_violation", "invariant": rec.name, "shape": rec.shape,
               "tableau": rec.tableau, "detail": rec.detail}, None)
        return EXIT_THEOREM
    except PoleError as exc:
        _dump({"error": "theorem_violation", "invariant": "regularity", "detail": str(exc),
               "num_order": exc.num_order, "den_order": exc.den_order}, None)
        return EXIT_THEOREM
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
