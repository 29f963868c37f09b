"""Command-line front end.

Subcommands: ``classify``, ``enumerate``, ``verify``, ``residues``, ``bench``.

Exit codes are shared by every command: 0 success or an affirmative
verdict, 1 a negative verdict or a failed check, 2 bad input.

``--format json`` writes one JSON object per line with the keys
``schema_version``, ``command`` and ``payload`` in that order.
``enumerate`` also supports ``--format csv``.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence, TextIO

from .errors import FieldError
from .factor import euler_totient
from .modular import MAX_MODULUS, odd_primes, quadratic_residues, require_odd_prime, smallest_nonresidue
from .quadext import FieldContext, Fp2Element
from .theorem import benchmark_classification, classify, enumerate_generators, verify_theorem

SCHEMA_VERSION = "1"
INT_BOUND = 2**63 - 1

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def record(command: str, payload: dict) -> str:
    return json.dumps({"schema_version": SCHEMA_VERSION, "command": command, "payload": payload})


def bounded_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if abs(v) > INT_BOUND:
        raise argparse.ArgumentTypeError(f"{v} is outside the supported range |x| <= 2^63 - 1")
    return v


def _prime_arg(p: int) -> int:
    if p > MAX_MODULUS:
        raise UsageError(f"p = {p} exceeds the supported bound {MAX_MODULUS}")
    require_odd_prime(p)
    return p


def _context(args) -> FieldContext:
    p = _prime_arg(args.p)
    n = smallest_nonresidue(p) if args.n is None else args.n
    return FieldContext(p, n)


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _table(rows: list[tuple], out: TextIO) -> None:
    widths = [max(len(str(r[i])) for r in rows) for i in range(len(rows[0]))]
    for r in rows:
        cells = [str(r[0]).ljust(widths[0])] + [str(c).rjust(w) for c, w in zip(r[1:], widths[1:])]
        out.write("  ".join(cells).rstrip() + "\n")


def cmd_classify(args, out: TextIO) -> int:
    ctx = _context(args)
    u = ctx(args.a, args.b)
    if u.is_zero():
        raise UsageError("(a, b) is the zero element; it is not in F_{p^2}*")
    res = classify(u, ctx)
    verdict = "generator" if res.is_generator else "non-generator"
    if args.format == "json":
        out.write(record("classify", {"p": ctx.p, "n": ctx.n, **res.to_dict(), "verdict": verdict}) + "\n")
    else:
        _table(
            [
                ("field", str(ctx)),
                ("element", str(u)),
                ("norm", res.norm_value.value),
                ("norm_is_primitive", _yn(res.norm_is_primitive)),
                ("f_value", str(res.f_value)),
                ("f_order", res.f_order),
                ("f_generates_kernel", _yn(res.f_generates_kernel)),
                ("verdict", verdict),
            ],
            out,
        )
    return EXIT_OK if res.is_generator else EXIT_NEGATIVE


def cmd_enumerate(args, out: TextIO) -> int:
    ctx = _context(args)
    if args.limit is not None and args.limit < 0:
        raise UsageError("--limit must be >= 0")
    gens = enumerate_generators(ctx)
    phi = euler_totient(ctx.fact_units)
    shown: list[Fp2Element] = gens if args.limit is None else gens[: args.limit]
    if args.format == "json":
        payload = {
            "p": ctx.p,
            "n": ctx.n,
            "count": len(gens),
            "phi": phi,
            "limit": args.limit,
            "generators": [g.to_dict() for g in shown],
        }
        out.write(record("enumerate", payload) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["a", "b"])
        w.writerows(g.coords for g in shown)
        w.writerow(["#summary", f"count={len(gens)}", f"phi={phi}"])
    else:
        for g in shown:
            out.write(f"{g}\n")
        out.write(f"count={len(gens)} phi={phi}\n")
    return EXIT_OK


def _verify_contexts(max_p: int, include_minus_one: bool) -> list[FieldContext]:
    out = []
    for p in odd_primes(max_p):
        ctx = FieldContext.for_prime(p)
        out.append(ctx)
        if include_minus_one and p % 4 == 3 and ctx.n != p - 1:
            out.append(FieldContext(p, -1))
    return out


def cmd_verify(args, out: TextIO) -> int:
    if args.max_p < 3:
        raise UsageError("--max-p must be >= 3")
    if args.max_p > MAX_MODULUS:
        raise UsageError(f"--max-p exceeds the supported bound {MAX_MODULUS}")
    reports = [verify_theorem(ctx, threads=args.threads) for ctx in _verify_contexts(args.max_p, args.include_minus_one)]
    if args.format == "json":
        for r in reports:
            out.write(record("verify", r.to_dict()) + "\n")
    else:
        rows = [("p", "n", "oracle", "units", "gen_thm", "gen_oracle", "phi", "ker_N", "im_N", "im_f", "mismatches", "ms")]
        for r in reports:
            rows.append(
                (
                    r.p, r.n, r.oracle, r.total_units, r.generator_count_theorem, r.generator_count_oracle,
                    r.phi_p2_minus_1, r.kernel_size, r.norm_image_size, r.f_image_size, len(r.mismatches),
                    f"{r.elapsed_ms:.1f}",
                )
            )
        _table(rows, out)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_NEGATIVE


def cmd_residues(args, out: TextIO) -> int:
    p = _prime_arg(args.p)
    q = sorted(x.value for x in quadratic_residues(p))
    expected = (p - 1) // 2
    if args.format == "json":
        out.write(record("residues", {"p": p, "residues": q, "count": len(q), "expected": expected}) + "\n")
    else:
        out.write(f"Q({p}) = {{{', '.join(map(str, q))}}}\n")
        out.write(f"count={len(q)} expected={expected}\n")
    return EXIT_OK if len(q) == expected else EXIT_NEGATIVE


def cmd_bench(args, out: TextIO) -> int:
    if args.sample < 1:
        raise UsageError("--sample must be >= 1")
    ctx = _context(args)
    s = benchmark_classification(ctx, args.sample, seed=args.seed)
    if args.format == "json":
        out.write(record("bench", s.to_dict()) + "\n")
    else:
        out.write(f"{ctx}, {s.sample_size} sampled units, {s.generators_in_sample} generators\n")
        rows = [("method", "mean_us", "median_us")]
        rows += [(t.method, f"{t.mean_us:.2f}", f"{t.median_us:.2f}") for t in s.timings]
        _table(rows, out)
        out.write(f"agreement={str(s.agreement).lower()}\n")
    return EXIT_OK if s.agreement else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=bounded_int, default=1, help="worker processes for verify (default 1)")

    parser = argparse.ArgumentParser(prog="quadgen", description="Generators of F_{p^2}* via the norm map.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help, formats=("table", "json")):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.add_argument("--format", choices=formats, default="table")
        sp.set_defaults(func=fn)
        return sp

    sp = add("classify", cmd_classify, "classify one element a + b sqrt(n)")
    sp.add_argument("--p", type=bounded_int, required=True)
    sp.add_argument("--n", type=bounded_int, default=None, help="nonresidue (default: smallest)")
    sp.add_argument("--a", type=bounded_int, required=True)
    sp.add_argument("--b", type=bounded_int, required=True)

    sp = add("enumerate", cmd_enumerate, "list every generator", formats=("table", "json", "csv"))
    sp.add_argument("--p", type=bounded_int, required=True)
    sp.add_argument("--n", type=bounded_int, default=None)
    sp.add_argument("--limit", type=bounded_int, default=None)

    sp = add("verify", cmd_verify, "exhaustive check of the criterion for every odd prime up to --max-p")
    sp.add_argument("--max-p", type=bounded_int, required=True)
    sp.add_argument("--include-minus-one", action="store_true", help="also use n = -1 when p = 3 mod 4")

    sp = add("residues", cmd_residues, "list the quadratic residues mod p")
    sp.add_argument("--p", type=bounded_int, required=True)

    sp = add("bench", cmd_bench, "time the criterion against full-group and brute-force order tests")
    sp.add_argument("--p", type=bounded_int, required=True)
    sp.add_argument("--n", type=bounded_int, default=None)
    sp.add_argument("--sample", type=bounded_int, default=100)
    sp.add_argument("--seed", type=bounded_int, default=0)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    if args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except (FieldError, UsageError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
