"""Command-line entry point: ``posmach crumble|eval|run|check|bench``."""
from __future__ import annotations

import argparse
import json
import sys

from .calculus import right_redex
from .crumble import crumble
from .harness.checks import check_run
from .harness.generators import church, tau3_loop
from .harness.scaling import scaling_experiment
from .harness.suite import run_suite
from .machines import MACHINES, metrics, run_machine, trace_lines
from .syntax import NameSupply, ParseError, PositiveTerm, parse_lambda, parse_positive, show

DEFAULT_BUDGET = 10000


class UsageError(Exception):
    pass


def _read(src: str) -> str:
    if src == "-":
        return sys.stdin.read()
    try:
        with open(src, encoding="utf-8") as f:
            return f.read()
    except OSError as exc:
        raise UsageError(f"cannot read {src}: {exc.strerror}") from None


def _looks_positive(text: str) -> bool:
    return "[" in text and "<-" in text


def _load(args) -> PositiveTerm:
    text = _read(args.input).strip()
    positive = args.positive or (not args.lambda_ and _looks_positive(text))
    if positive:
        return parse_positive(text)
    return crumble(parse_lambda(text))


def _budgets(s: str) -> list[int]:
    try:
        out = [int(x) for x in s.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of integers: {s}") from None
    if not out or any(b < 0 for b in out) or any(a >= b for a, b in zip(out, out[1:])):
        raise argparse.ArgumentTypeError("budgets must be non-negative and strictly increasing")
    return out


def _nat(s: str) -> int:
    try:
        n = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {s}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {s}")
    return n


def cmd_crumble(args) -> int:
    print(show(crumble(parse_lambda(_read(args.input).strip()))))
    return 0


def cmd_eval(args) -> int:
    t = _load(args)
    supply = NameSupply.above(t)
    print(f"  | {show(t)}")
    n = 0
    while True:
        r = right_redex(t)
        if r is None:
            print(f"normal in {n} steps")
            return 0
        if n >= args.max_steps:
            print(f"budget exhausted after {n} steps")
            return 0
        t = r.reduct(supply)
        n += 1
        print(f"{r.label} | {show(t)}")


def cmd_run(args) -> int:
    t = _load(args)
    machine = MACHINES[args.machine]
    if args.trace:
        for line in trace_lines(machine, t, args.max_steps):
            print(line)
    if args.check_invariants:
        if machine.name != "sliced":
            raise UsageError("--check-invariants needs --machine sliced")
        rc = check_run(t, args.max_steps)
        report = rc.report
        for v in rc.violations:
            print(f"violation: {v}", file=sys.stderr)
    else:
        rc = None
        report = run_machine(machine, t, args.max_steps)
    if args.metrics == "json":
        print(json.dumps(metrics(report)))
    elif not args.trace:
        print(show(machine.read_back(report.final)))
        print(f"{report.status} after {report.transitions} transitions", file=sys.stderr)
    if rc is not None and not rc.ok:
        return 1
    return 0


def cmd_check(args) -> int:
    failed = False
    for res in run_suite(args.seed, args.corpus):
        print(res.line())
        for f in res.failures[:5]:
            print(f"  {f}", file=sys.stderr)
        failed |= not res.ok
    return 1 if failed else 0


def cmd_bench(args) -> int:
    family = tau3_loop if args.family == "tau3" else lambda: church(args.n, args.m)
    rep = scaling_experiment(family, args.budgets)
    if args.metrics == "json":
        print(json.dumps(rep.as_records()))
    else:
        print(rep.table())
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="posmach", description="Positive lambda-calculus machines.")
    sub = p.add_subparsers(dest="cmd", required=True)

    def term_input(sp, lam_only: bool = False):
        sp.add_argument("input", help="file with the term, or - for stdin")
        if not lam_only:
            g = sp.add_mutually_exclusive_group()
            g.add_argument("--positive", action="store_true", help="input is a positive term")
            g.add_argument("--lambda", dest="lambda_", action="store_true", help="input is a lambda-term")

    sp = sub.add_parser("crumble", help="print the positive form of a lambda-term")
    term_input(sp, lam_only=True)
    sp.set_defaults(fn=cmd_crumble)

    sp = sub.add_parser("eval", help="evaluate with the right strategy")
    term_input(sp)
    sp.add_argument("--max-steps", type=_nat, default=DEFAULT_BUDGET)
    sp.set_defaults(fn=cmd_eval)

    sp = sub.add_parser("run", help="run a machine")
    term_input(sp)
    sp.add_argument("--machine", choices=sorted(MACHINES), default="sliced")
    sp.add_argument("--max-steps", type=_nat, default=DEFAULT_BUDGET, help="principal transition budget")
    sp.add_argument("--trace", action="store_true")
    sp.add_argument("--metrics", choices=["json"])
    sp.add_argument("--check-invariants", action="store_true")
    sp.set_defaults(fn=cmd_run)

    sp = sub.add_parser("check", help="run the property suite on a random corpus")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--corpus", type=_nat, default=500)
    sp.set_defaults(fn=cmd_check)

    sp = sub.add_parser("bench", help="natural vs sliced cost under doubling budgets")
    sp.add_argument("--family", choices=["tau3", "church"], default="tau3")
    sp.add_argument("--budgets", type=_budgets, default=[64, 128, 256, 512])
    sp.add_argument("-n", type=_nat, default=3, help="church: first numeral")
    sp.add_argument("-m", type=_nat, default=3, help="church: second numeral")
    sp.add_argument("--metrics", choices=["json"])
    sp.set_defaults(fn=cmd_bench)
    return p


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.fn(args)
    except (ParseError, UsageError) as exc:
        print(f"posmach: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())
