"""Command-line interface: ``symcoef <subcommand> ...``.

Exit status 0 on success, 1 on domain errors (size mismatches, violated
preconditions), 2 on malformed arguments.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import _accel
from .characters import an_character, char_interval, character_table, memo_stats, mn_character, set_memo_limit
from .errors import ConsistencyError, DomainError, StabilizationError
from .kronecker import DEFAULT_NMAX, kronecker, stable_kronecker
from .partitions import Partition, encode, parse
from .schubert import (
    grassmannian_to_schur,
    parse_permutation,
    schubert_poly,
    schubert_product,
    schubert_structure_constant,
    skew_shape_of_321_avoiding,
    stanley_stabilization,
)
from .tableaux import SkewShape, kostka, list_lr_tableaux, list_ssyt, lr_coefficient
from .witnesses import FAMILIES, enumerate_value_class, witness


def _partition(text: str) -> Partition:
    try:
        return parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _permutation(text: str):
    try:
        return parse_permutation(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer")
    return value


def _emit(args, plain, machine=None) -> None:
    if args.json:
        print(json.dumps(machine if machine is not None else plain, sort_keys=True))
    else:
        print(plain)


def _expansion_json(expansion: dict) -> list:
    return [[encode(k), v] for k, v in expansion.items()]


def _expansion_text(expansion: dict) -> str:
    return "\n".join(f"{v} {encode(k)}" for k, v in expansion.items()) or "0"


# ------------------------------------------------------------------ handlers


def cmd_char(args):
    _emit(args, mn_character(args.lam, args.mu))


def cmd_table(args):
    table = character_table(args.n)
    if args.csv:
        sys.stdout.write(table.to_csv())
        return
    if args.json:
        _emit(args, None, {
            "n": table.n,
            "rows": [encode(p) for p in table.rows],
            "columns": [encode(p) for p in table.columns],
            "class_sizes": [c.class_size for c in table.classes],
            "values": [[int(v) for v in row] for row in table.values],
        })
        return
    width = max(len(str(int(v))) for v in table.values.flat) if table.values.size else 1
    label = max((len(encode(p)) for p in table.rows), default=1)
    for lam, row in zip(table.rows, table.values):
        print(encode(lam).ljust(label), " ".join(str(int(v)).rjust(width) for v in row))


def cmd_interval(args):
    report = char_interval(args.n)
    lo, hi = report.longest_run
    zero = report.run_through_zero
    plain = f"n={report.n} l_n={report.l_n} longest_run=[{lo},{hi}] run_through_zero=" + (
        f"[{zero[0]},{zero[1]}]" if zero else "none"
    )
    _emit(args, plain, report.to_json())


def cmd_an_char(args):
    _emit(args, an_character(args.lam, args.mu))


def cmd_kostka(args):
    if args.list:
        for t in list_ssyt(SkewShape(args.lam), args.mu, args.limit):
            print(t.encode())
        return
    _emit(args, kostka(args.lam, args.mu))


def cmd_lr(args):
    if args.list:
        for t in list_lr_tableaux(args.lam, args.mu, args.nu, args.limit):
            print(t.encode())
        return
    _emit(args, lr_coefficient(args.lam, args.mu, args.nu))


def cmd_kron(args):
    _emit(args, kronecker(args.lam, args.mu, args.nu))


def cmd_stable_kron(args):
    result = stable_kronecker(args.lam, args.mu, args.nu, nmax=args.nmax)
    print(f"stabilized at N={result.stabilized_at_N} (two consecutive agreeing values)", file=sys.stderr)
    _emit(args, result.value, result.to_json())


def cmd_schubert(args):
    poly = schubert_poly(args.w)
    _emit(args, str(poly), poly.to_json())


def cmd_schub_expand(args):
    expansion = schubert_product(args.u, args.v)
    plain = "\n".join(f"{c} {w.encode()}" for w, c in expansion.items()) or "0"
    _emit(args, plain, [[w.encode(), c] for w, c in expansion.items()])


def cmd_schub_c(args):
    _emit(args, schubert_structure_constant(args.u, args.v, args.w))


def cmd_grassmannian(args):
    d, lam = grassmannian_to_schur(args.w)
    _emit(args, f"{d} {encode(lam)}", {"descent": d, "shape": encode(lam)})


def cmd_stanley(args):
    expansion, m = stanley_stabilization(args.w)
    print(f"stabilized at m={m}", file=sys.stderr)
    _emit(args, _expansion_text(expansion), _expansion_json(expansion))


def cmd_skew_of(args):
    shape = skew_shape_of_321_avoiding(args.w)
    _emit(args, str(shape), {"outer": encode(shape.outer), "inner": encode(shape.inner)})


def cmd_witness(args):
    print(json.dumps(witness(args.family, args.value, args.index).to_json(), sort_keys=True))


def cmd_class(args):
    triples = enumerate_value_class(args.family, args.value, args.limit)
    rows = [[encode(p) for p in t] for t in triples]
    _emit(args, "\n".join(" ".join(r) for r in rows), rows)


# -------------------------------------------------------------------- parser


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--json", action="store_true", default=default if suppress else False,
                        help="machine-readable output")
    parser.add_argument("--threads", type=_nonneg, default=default, help="worker threads for table fills")
    parser.add_argument("--memo-limit", type=_nonneg, default=default,
                        help="entry budget of the character memo (LRU)")
    parser.add_argument("--nmax", type=_nonneg, default=default if suppress else DEFAULT_NMAX,
                        help="stabilization ceiling for stable Kronecker coefficients")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symcoef",
        description="Exact character, Kostka, Littlewood-Richardson, Kronecker and Schubert coefficients.",
    )
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, handler, help_text, **positionals):
        p = sub.add_parser(name, help=help_text)
        for arg, kind in positionals.items():
            p.add_argument(arg, type=kind)
        _global_flags(p, suppress=True)
        p.set_defaults(handler=handler)
        return p

    P, W = _partition, _permutation
    add("char", cmd_char, "character value chi^lam(mu)", lam=P, mu=P)
    t = add("table", cmd_table, "full character table of S_n", n=_nonneg)
    t.add_argument("--csv", action="store_true", help="CSV with partition headers")
    add("interval", cmd_interval, "consecutive runs of character values", n=_nonneg)
    add("an-char", cmd_an_char, "restricted A_n character value", lam=P, mu=P)
    k = add("kostka", cmd_kostka, "Kostka number K_{lam,mu}", lam=P, mu=P)
    lr = add("lr", cmd_lr, "Littlewood-Richardson coefficient c^nu_{lam,mu}", lam=P, mu=P, nu=P)
    for p in (k, lr):
        p.add_argument("--list", action="store_true", help="list the tableaux instead of counting")
        p.add_argument("--limit", type=_nonneg, default=None, help="maximum tableaux to list")
    add("kron", cmd_kron, "Kronecker coefficient g_{lam,mu,nu}", lam=P, mu=P, nu=P)
    add("stable-kron", cmd_stable_kron, "stable Kronecker coefficient", lam=P, mu=P, nu=P)
    add("schubert", cmd_schubert, "Schubert polynomial of w", w=W)
    add("schub-expand", cmd_schub_expand, "S_u * S_v in the Schubert basis", u=W, v=W)
    add("schub-c", cmd_schub_c, "Schubert structure constant C^w_{u,v}", u=W, v=W, w=W)
    add("grassmannian", cmd_grassmannian, "descent and shape of a Grassmannian permutation", w=W)
    add("stanley", cmd_stanley, "Schur expansion of the Stanley symmetric function", w=W)
    add("skew-of", cmd_skew_of, "skew shape of a 321-avoiding permutation", w=W)
    wt = add("witness", cmd_witness, "verified witness for a target value")
    wt.add_argument("--family", required=True, choices=FAMILIES)
    wt.add_argument("--value", required=True, type=int)
    wt.add_argument("--index", type=_nonneg, default=None)
    cl = add("class", cmd_class, "first members of LR_k or Kron_k")
    cl.add_argument("--family", required=True, choices=("lr", "kronecker"))
    cl.add_argument("--value", required=True, type=int)
    cl.add_argument("--limit", required=True, type=_nonneg)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads:
        _accel.set_threads(args.threads)
    if args.memo_limit:
        set_memo_limit(args.memo_limit)
    try:
        args.handler(args)
    except (DomainError, StabilizationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ConsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    if args.memo_limit:
        print(f"memo: {memo_stats()}", file=sys.stderr)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
