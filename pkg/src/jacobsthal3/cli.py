"""Command line front end.

    jacobsthal3 compute --seq K3 --n 6
    jacobsthal3 range   --seq K3 --from 0 --to 6 --format csv
    jacobsthal3 gf      --seq K3 --terms 7
    jacobsthal3 verify  --all --n-max 300 --pair-budget 5000 --format json
    jacobsthal3 bench   --seq K3 --n 100000 --engines closed,matpow

Exit codes: 0 success / all identities pass, 1 verification or cross-check
failure, 2 usage error. Polynomial coefficients are printed constant term
first.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from .engines import Engine, SequenceId, term, term_range
from .genfun import coefficients, gf_for
from .identities import IdentityId, check

DEFAULT_N_MAX = 300
DEFAULT_PAIR_BUDGET = 5000
DEFAULT_ITER_CAP = 10**7

FORMATS = ("plain", "csv", "json")


class UsageError(Exception):
    pass


def _emit(text: str, out_path=None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _table_csv(seq: SequenceId, start: int, values) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["seq", "n", "value"])
    for k, v in enumerate(values):
        w.writerow([seq.value, start + k, v])
    return buf.getvalue()


def cmd_compute(args) -> int:
    seq = SequenceId(args.seq)
    if args.n < 0 and seq is not SequenceId.K3:
        raise UsageError(f"{seq.value} is only defined for n >= 0")
    print(term(seq, args.n, Engine(args.engine)))
    return 0


def cmd_range(args) -> int:
    seq = SequenceId(args.seq)
    if args.start < 0 or args.start > args.stop:
        raise UsageError(f"need 0 <= from <= to, got {args.start}..{args.stop}")
    values = term_range(seq, args.start, args.stop, Engine(args.engine))
    if args.format == "csv":
        text = _table_csv(seq, args.start, values)
    elif args.format == "json":
        doc = {"seq": seq.value, "from": args.start, "to": args.stop,
               "engine": args.engine, "values": values}
        text = json.dumps(doc) + "\n"
    else:
        text = " ".join(map(str, values)) + "\n"
    _emit(text, args.out)
    return 0


def cmd_gf(args) -> int:
    seq = SequenceId(args.seq)
    if args.terms < 1:
        raise UsageError("--terms must be at least 1")
    gf = gf_for(seq)
    values = coefficients(gf, args.terms)
    if args.format == "csv":
        text = _table_csv(seq, 0, values)
    elif args.format == "json":
        doc = {"seq": seq.value, "order": "constant-first", **gf.to_json(), "coefficients": values}
        text = json.dumps(doc) + "\n"
    else:
        text = " ".join(map(str, values)) + "\n"
    _emit(text, args.out)
    return 0


def cmd_verify(args) -> int:
    if args.all:
        ids = list(IdentityId)
    elif args.id:
        try:
            ids = [IdentityId(i.upper()) for i in args.id]
        except ValueError as exc:
            raise UsageError(f"unknown identity: {exc}") from None
    else:
        raise UsageError("give --all or at least one --id")
    if args.n_max < 0 or args.pair_budget < 1:
        raise UsageError("--n-max must be >= 0 and --pair-budget >= 1")

    reports = [check(i, args.n_max, args.pair_budget) for i in ids]
    ok = all(r.status == "pass" for r in reports)

    if args.format == "json":
        doc = {
            "n_max": args.n_max,
            "pair_budget": args.pair_budget,
            "status": "pass" if ok else "fail",
            "reports": [r.to_json() for r in reports],
        }
        text = json.dumps(doc, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["identity", "checked", "skipped", "vacuous", "failures", "status"])
        for r in reports:
            w.writerow([r.identity.value, r.checked, r.skipped, str(r.vacuous).lower(),
                        len(r.failures), r.status])
        text = buf.getvalue()
    else:
        lines = []
        for r in reports:
            tag = " (vacuous)" if r.vacuous else ""
            lines.append(f"{r.status.upper():4} {r.identity.value:9} checked={r.checked} skipped={r.skipped}{tag}")
            for f in r.failures[:5]:
                lines.append(f"     at {f.indices}: lhs={f.lhs} rhs={f.rhs}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0 if ok else 1


def cmd_bench(args) -> int:
    seq = SequenceId(args.seq)
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    try:
        engines = [Engine(e.strip()) for e in args.engines.split(",") if e.strip()]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not engines:
        raise UsageError("no engines given")
    if Engine.ITER in engines and args.n > args.iter_cap:
        raise UsageError(f"iter engine refused for n={args.n} > cap {args.iter_cap}")

    values = {}
    print(f"{'engine':8} {'seconds':>12} {'bits':>10}")
    for e in engines:
        t0 = time.perf_counter()
        values[e] = term(seq, args.n, e)
        dt = time.perf_counter() - t0
        print(f"{e.value:8} {dt:12.6f} {abs(values[e]).bit_length():10d}")
    distinct = set(values.values())
    if len(distinct) == 1:
        if args.show_value:
            print(next(iter(distinct)))
        print("values agree")
        return 0
    print("values DISAGREE")
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jacobsthal3", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    seqs = [s.value for s in SequenceId]
    engines = [e.value for e in Engine]

    p = sub.add_parser("compute", help="print a single term")
    p.add_argument("--seq", choices=seqs, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--engine", choices=engines, default=Engine.CLOSED.value)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("range", help="export terms from..to inclusive")
    p.add_argument("--seq", choices=seqs, required=True)
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="stop", type=int, required=True)
    p.add_argument("--engine", choices=engines, default=Engine.ITER.value)
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.add_argument("--out")
    p.set_defaults(func=cmd_range)

    p = sub.add_parser("gf", help="generating-function coefficients")
    p.add_argument("--seq", choices=seqs, required=True)
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("verify", help="check catalog identities exactly")
    p.add_argument("--all", action="store_true")
    p.add_argument("--id", action="append", metavar="ID")
    p.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    p.add_argument("--pair-budget", type=int, default=DEFAULT_PAIR_BUDGET)
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time engines on one term and cross-check")
    p.add_argument("--seq", choices=seqs, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--engines", default="closed,matpow")
    p.add_argument("--iter-cap", type=int, default=DEFAULT_ITER_CAP)
    p.add_argument("--show-value", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    # exact output of terms with far more than 4300 digits
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.exit(2, f"{parser.prog} {args.command}: error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
