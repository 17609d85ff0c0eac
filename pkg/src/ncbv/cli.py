"""Command-line surface: moments, oracle, verify, otft, mc, hz.

Every command is deterministic given its full flag set; JSON output is
emitted with sorted keys and no environment-dependent fields, so equal
invocations produce byte-identical reports.  Exit codes: 0 success,
1 verification failure, 2 usage error.
"""

import argparse
import json
import random
import sys

from . import verify as verify_mod
from .frobenius import matrix_frobenius, otft_mu
from .harer_zagier import (
    catalan_leading_check,
    harer_zagier_closed,
    hz_closed_form_check,
    hz_recurrence_check,
)
from .reduction import canonical_index, default_reducer
from .sampling import DEFAULT_CHUNK, monte_carlo_moment, thread_count
from .scalar import Scalar, format_scalar
from .wick import DEFAULT_CAP, wick_oracle

USAGE_ERROR = 2
CHECK_FAILED = 1


def _parse_index(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(piece) for piece in text.split(",") if piece.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad multi-index {text!r}; expected i1,i2,...")
    if any(i < 0 for i in parts):
        raise argparse.ArgumentTypeError("multi-index entries are nonnegative")
    return parts


def _emit(text: str, out_path) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out_path:
        with open(out_path, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _format_json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def cmd_moments(args) -> int:
    reducer = default_reducer()
    poly = reducer.reduce(args.idx)
    payload = {"idx": list(canonical_index(args.idx)), "polynomial": poly.to_json()}
    if args.N is not None:
        payload["N"] = args.N
        payload["value_at_N"] = format_scalar(poly(args.N))
    if args.output == "json":
        _emit(_format_json(payload), args.out)
    elif args.output == "csv":
        _emit(poly.to_csv(), args.out)
    else:
        line = f"p_{canonical_index(args.idx)} = {poly}"
        if args.N is not None:
            line += f"\np({args.N}) = {format_scalar(poly(args.N))}"
        _emit(line + "\n", args.out)
    return 0


def cmd_oracle(args) -> int:
    poly = wick_oracle(args.idx, cap=args.cap)
    payload = {"idx": list(canonical_index(args.idx)), "polynomial": poly.to_json(),
               "cap": args.cap}
    if args.output == "json":
        _emit(_format_json(payload), args.out)
    elif args.output == "csv":
        _emit(poly.to_csv(), args.out)
    else:
        _emit(f"wick_{canonical_index(args.idx)} = {poly}\n", args.out)
    return 0


def cmd_verify(args) -> int:
    reports = verify_mod.run_all(
        degree_cap=args.degree_cap,
        cases=args.cases,
        hz_k=args.hz_k,
        include_confluence=not args.skip_confluence,
    )
    all_passed = all(r.passed for r in reports)
    payload = {
        "all_passed": all_passed,
        "checks": [r.to_json() for r in reports],
    }
    if args.output == "json":
        _emit(_format_json(payload), args.out)
    else:
        lines = []
        for r in reports:
            line = f"{'PASS' if r.passed else 'FAIL'}  {r.name} [{r.scale}]"
            if not r.passed and r.counterexample:
                line += f"  counterexample: {r.counterexample}"
            lines.append(line)
        lines.append(f"{'all checks passed' if all_passed else 'SOME CHECKS FAILED'}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if all_passed else CHECK_FAILED


def cmd_mc(args) -> int:
    result = monte_carlo_moment(
        args.idx, args.N, args.samples, args.seed,
        chunk=args.chunk, threads=thread_count(),
    )
    target = default_reducer().reduce(args.idx)(args.N)
    z = result.z_score(float(target))
    payload = {
        "idx": list(canonical_index(args.idx)),
        "N": args.N,
        "samples": args.samples,
        "seed": args.seed,
        "chunk": args.chunk,
        "estimate": result.estimate,
        "std_error": result.std_error,
        "target": format_scalar(target),
        "target_float": float(target),
        "z_score": z,
        "within_5_sigma": bool(abs(result.estimate - float(target)) <= 5 * result.std_error),
    }
    if args.output == "json":
        _emit(_format_json(payload), args.out)
    else:
        _emit(
            f"estimate = {result.estimate:.6f} +- {result.std_error:.6f} "
            f"(target {format_scalar(target)}, z = {z:+.3f})\n",
            args.out,
        )
    return 0


def cmd_hz(args) -> int:
    if args.k is not None:
        if args.N is None:
            print("hz: --k requires --N", file=sys.stderr)
            return USAGE_ERROR
        value = harer_zagier_closed(args.k, args.N)
        payload = {"k": args.k, "N": args.N, "moment": format_scalar(value)}
        if args.output == "json":
            _emit(_format_json(payload), args.out)
        else:
            _emit(f"I^{args.N}_{2 * args.k} = {format_scalar(value)}\n", args.out)
        return 0
    k_max = args.kmax
    reports = [
        hz_recurrence_check(k_max),
        hz_closed_form_check(min(k_max, 10), 6),
        catalan_leading_check(k_max),
    ]
    all_passed = all(r.passed for r in reports)
    payload = {
        "k_max": k_max,
        "all_passed": all_passed,
        "checks": [r.to_json() for r in reports],
    }
    if args.output == "json":
        _emit(_format_json(payload), args.out)
    else:
        lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.name} [{r.scale}]" for r in reports]
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if all_passed else CHECK_FAILED


def cmd_otft(args) -> int:
    size = args.N
    frob = matrix_frobenius(size)
    rng = random.Random(args.seed)
    boundaries_mats = [
        [
            [[rng.randint(-2, 2) for _ in range(size)] for _ in range(size)]
            for _ in range(k)
        ]
        for k in args.boundaries
    ]
    boundaries = [
        [tuple(Scalar(mat[p][q]) for p in range(size) for q in range(size)) for mat in bd]
        for bd in boundaries_mats
    ]
    value = otft_mu(frob, args.genus, args.free, boundaries)
    expected = Scalar(size) ** args.free
    for bd in boundaries_mats:
        prod = [[Scalar(int(p == q)) for q in range(size)] for p in range(size)]
        for mat in bd:
            prod = [
                [sum((prod[p][t] * mat[t][q] for t in range(size)), Scalar(0))
                 for q in range(size)]
                for p in range(size)
            ]
        expected *= sum((prod[p][p] for p in range(size)), Scalar(0))
    payload = {
        "N": size,
        "genus": args.genus,
        "free_boundaries": args.free,
        "boundary_sizes": list(args.boundaries),
        "seed": args.seed,
        "value": format_scalar(value),
        "trace_product": format_scalar(expected),
        "match": value == expected,
    }
    if args.output == "json":
        _emit(_format_json(payload), args.out)
    else:
        _emit(
            f"mu^{{{args.genus},{args.free}}} = {format_scalar(value)} "
            f"(N^b trace product {format_scalar(expected)}, match={value == expected})\n",
            args.out,
        )
    return 0 if value == expected else CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncbv",
        description="Exact GUE multi-trace moments via the cyclic-word BV calculus",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p, csv_ok=False):
        choices = ["json", "csv", "plain"] if csv_ok else ["json", "plain"]
        p.add_argument("--output", choices=choices, default="plain")
        p.add_argument("--out", metavar="PATH", default=None, help="write output to a file")

    p = sub.add_parser("moments", help="reduce an observable to its moment polynomial")
    p.add_argument("--idx", type=_parse_index, required=True, metavar="i1,i2,...")
    p.add_argument("--N", type=int, default=None, help="also evaluate p(N) exactly")
    add_output(p, csv_ok=True)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("oracle", help="Wick pairing oracle for the same observable")
    p.add_argument("--idx", type=_parse_index, required=True, metavar="i1,i2,...")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    add_output(p, csv_ok=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="run the full verification battery")
    p.add_argument("--degree-cap", type=int, default=12, dest="degree_cap")
    p.add_argument("--cases", type=int, default=200)
    p.add_argument("--hz-k", type=int, default=15, dest="hz_k")
    p.add_argument("--skip-confluence", action="store_true")
    add_output(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("mc", help="Monte Carlo estimate of a multi-trace moment")
    p.add_argument("--idx", type=_parse_index, required=True, metavar="i1,i2,...")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--chunk", type=int, default=DEFAULT_CHUNK)
    add_output(p)
    p.set_defaults(func=cmd_mc)

    p = sub.add_parser("hz", help="Harer-Zagier closed form / recurrence report")
    p.add_argument("--k", type=int, default=None, help="half-degree for a single moment")
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--kmax", type=int, default=15)
    add_output(p)
    p.set_defaults(func=cmd_hz)

    p = sub.add_parser("otft", help="evaluate a surface tensor over matrices")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--genus", type=int, default=0)
    p.add_argument("--free", type=int, default=0, help="free boundary components")
    p.add_argument("--boundaries", type=_parse_index, required=True,
                   metavar="k1,k2,...", help="arguments per marked boundary")
    p.add_argument("--seed", type=int, default=0, help="seed for the random matrix entries")
    add_output(p)
    p.set_defaults(func=cmd_otft)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"ncbv: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
