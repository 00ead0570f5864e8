"""Command line interface: ``hookset <command> ...``.

Exit codes: 0 success; for ``criterion`` 1 means NotConjugate and 2 means
HooksDiffer; ``search`` and ``identity-check`` return 1 when a check fails.
Malformed input always exits with 3.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from .criterion import (
    Status,
    decide_conjugacy,
    herman_chung_pair,
    is_conjugate_direct,
    proof_identity_residuals,
    step1_derived_sets,
)
from .multiset import PreconditionError, conjugate_beta, hooks_direct
from .partition import (
    DomainError,
    PartitionError,
    beta_set,
    conjugate,
    hook_grid,
    parse_beta_set,
    parse_partition,
    partition_from_beta,
)
from .search import validate_theorem

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_HOOKS_DIFFER = 2
EXIT_INPUT = 3

STATUS_EXIT = {
    Status.CONJUGATE: EXIT_OK,
    Status.IDENTICAL: EXIT_OK,
    Status.NOT_CONJUGATE: EXIT_FAIL,
    Status.HOOKS_DIFFER: EXIT_HOOKS_DIFFER,
}


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors, which would collide with HooksDiffer
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def render_diagram(grid) -> list[str]:
    return [" ".join(map(str, row)) for row in grid]


def _fmt_set(s) -> str:
    return "{" + ",".join(map(str, sorted(s))) + "}"


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def cmd_hooks(args) -> int:
    p = parse_partition(args.partition)
    grid = hook_grid(p)
    hooks = hooks_direct(p)
    if args.json:
        _emit({
            "partition": list(p),
            "beta_set": list(beta_set(p)) if p else None,
            "diagram": [list(r) for r in grid],
            "hooks": hooks.values(),
        })
    else:
        for line in render_diagram(grid):
            print(line)
        print(hooks.key())
    return EXIT_OK


def cmd_beta(args) -> int:
    if args.from_beta:
        a = parse_beta_set(args.value)
        p = partition_from_beta(a)
    else:
        p = parse_partition(args.value)
        a = beta_set(p)
    if args.json:
        _emit({"partition": list(p), "beta_set": list(a), "n": a.n})
    else:
        print(f"partition {p}")
        print(f"beta-set  {a}")
    return EXIT_OK


def cmd_conjugate(args) -> int:
    if args.beta:
        a = parse_beta_set(args.value)
        b = conjugate_beta(a)
        payload = {"beta_set": list(a), "conjugate": list(b)}
        text = f"{a} -> {b}"
    else:
        p = parse_partition(args.value)
        q = conjugate(p)
        payload = {"partition": list(p), "conjugate": list(q)}
        text = f"{p} -> {q}"
    if args.json:
        _emit(payload)
    else:
        print(text)
    return EXIT_OK


def cmd_criterion(args) -> int:
    a, b = parse_beta_set(args.a), parse_beta_set(args.b)
    verdict = decide_conjugacy(a, b)
    if args.json:
        _emit({"a": list(a), "b": list(b), **verdict.to_dict()})
    else:
        print(f"A = {a}  lambda_A = ({partition_from_beta(a)})")
        print(f"B = {b}  lambda_B = ({partition_from_beta(b)})")
        print(f"verdict: {verdict.status.value}")
        w = verdict.witness
        if w is not None:
            print(f"A\\B = {_fmt_set(w.a_minus_b)}  reflected {_fmt_set(w.a_minus_b_reflected)}  "
                  f"{w.n}-symmetric: {w.a_sym}")
            print(f"B\\A = {_fmt_set(w.b_minus_a)}  reflected {_fmt_set(w.b_minus_a_reflected)}  "
                  f"{w.n}-symmetric: {w.b_sym}")
        elif verdict.status is Status.IDENTICAL:
            print(f"self-conjugate: {is_conjugate_direct(a, a)}")
    return STATUS_EXIT[verdict.status]


def cmd_herman_chung(args) -> int:
    try:
        n = int(args.n)
    except ValueError:
        raise InputError(f"n must be an integer, got {args.n!r}") from None
    if n < 0:
        raise InputError(f"n must be nonnegative, got {n}")
    lam, mu = herman_chung_pair(n)
    h_lam, h_mu = hooks_direct(lam), hooks_direct(mu)
    equal = h_lam == h_mu
    non_conj = not is_conjugate_direct(beta_set(lam), beta_set(mu))
    if args.json:
        _emit({
            "n": n,
            "lambda": list(lam),
            "mu": list(mu),
            "hooks": h_lam.values() if equal else None,
            "equal_hooks": equal,
            "non_conjugate": non_conj,
        })
    else:
        print(f"lambda_{n} = ({lam})  beta {beta_set(lam)}")
        print(f"mu_{n}     = ({mu})  beta {beta_set(mu)}")
        print(f"hooks      {h_lam.key()}")
        if not equal:
            print(f"hooks (mu) {h_mu.key()}")
        print(f"equal hooks: {equal}")
        print(f"non-conjugate: {non_conj}")
    return EXIT_OK if equal and non_conj else EXIT_FAIL


def cmd_search(args) -> int:
    if args.n_max < 1:
        raise InputError(f"n_max must be positive, got {args.n_max}")

    def stream(rec):
        print(json.dumps(rec.to_dict()))

    report = validate_theorem(args.n_max, jobs=args.jobs, on_pair=stream if args.pairs else None)
    # with --pairs the output is JSON Lines, so keep the report on one line
    print(report.to_json(indent=None if args.pairs else 2))
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_identity_check(args) -> int:
    a, b = parse_beta_set(args.a), parse_beta_set(args.b)
    residuals = proof_identity_residuals(a, b)
    n = a.n
    if args.k is not None:
        if not 1 <= args.k <= n:
            raise InputError(f"k must lie in 1..{n}, got {args.k}")
        ks = [args.k]
    else:
        ks = list(range(1, n + 1))
    step1 = step1_derived_sets(a, b)
    picked = {k: residuals[k - 1] for k in ks}
    ok = not any(picked.values()) and step1.first_sym and step1.second_sym
    if args.json:
        _emit({
            "a": list(a),
            "b": list(b),
            "n": n,
            "residuals": {str(k): r for k, r in picked.items()},
            "step1": {
                "derived_minus_b": sorted(step1.derived_minus_b),
                "b_minus_derived": sorted(step1.b_minus_derived),
                "flags": [step1.first_sym, step1.second_sym],
            },
            "ok": ok,
        })
    else:
        print(f"step 1: (n-A')\\B = {_fmt_set(step1.derived_minus_b)} symmetric {step1.first_sym}; "
              f"B\\(n-A') = {_fmt_set(step1.b_minus_derived)} symmetric {step1.second_sym}")
        for k, r in picked.items():
            print(f"k={k:<3d} residual {r}")
        print("ok" if ok else "FAILED")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hookset", description="Hook multisets, beta-sets and conjugacy of partitions.")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("hooks", help="hook-length diagram and hook multiset of a partition")
    p.add_argument("partition", help="e.g. 4,2,2")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_hooks)

    p = sub.add_parser("beta", help="beta-set of a partition, or the partition of a beta-set")
    p.add_argument("value", help="partition 4,2,2 or, with --from-beta, beta-set {2,3,6}")
    p.add_argument("--from-beta", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_beta)

    p = sub.add_parser("conjugate", help="conjugate partition (or conjugate beta-set with --beta)")
    p.add_argument("value")
    p.add_argument("--beta", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_conjugate)

    p = sub.add_parser("criterion", help="decide whether two beta-sets give conjugate partitions")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_criterion)

    p = sub.add_parser("herman-chung", help="the Herman-Chung non-conjugate pair for n")
    p.add_argument("n")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_herman_chung)

    p = sub.add_parser("search", help="exhaustively validate the criterion up to n_max")
    p.add_argument("n_max", type=int)
    p.add_argument("--pairs", action="store_true", help="also emit each classified pair as a JSON line")
    p.add_argument("--jobs", type=int, default=None,
                   help="worker processes (default: CPU count, capped by HOOKSET_THREADS)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("identity-check", help="intermediate proof checks for a pair with symmetric differences")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_identity_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (InputError, PartitionError, DomainError, PreconditionError) as exc:
        print(f"hookset {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
