"""Command line interface: ``ergocap analyze|check|gen|search|simulate``."""

from __future__ import annotations

import argparse
import random
import sys as _sys
from typing import Optional

from .credal import (core_vertices, generators_span_core, is_ergodic_capacity,
                     is_invariant_capacity, is_two_alternating,
                     theta0_vertices, theta_star)
from .dynamics import analyze, birkhoff_average, birkhoff_limit
from .errors import ErgocapError, InputError
from .generate import KINDS, PROPERTIES, derive_seed, generate_instance, random_variable, search
from .io import dumps, emit_instance, parse_instance, parse_random_variable
from .measure import states_of
from .suite import EXIT_INPUT, run_suite


def _read(path: str) -> str:
    if path == "-":
        return _sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _write(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        _sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_analyze(args) -> int:
    inst = parse_instance(_read(args.instance))
    sys, cap = inst.system, inst.capacity
    st = analyze(sys)
    inv = is_invariant_capacity(cap, sys)
    erg = is_ergodic_capacity(cap, sys)
    alt = is_two_alternating(cap)
    doc = {
        "instance": inst.to_dict(),
        "invariant": {"holds": inv.holds, "witness": None if inv else states_of(inv.witness)},
        "ergodic": {"holds": erg.holds, "witness": None if erg else states_of(erg.witness)},
        "components": [list(c) for c in st.components],
        "cycles": [list(c) for c in st.cycles],
        "depth": list(st.depth),
        "preperiod": st.preperiod,
        "period": st.period,
        "two_alternating": {"holds": alt.holds,
                            "witness": None if alt else [states_of(e) for e in alt.witness]},
        "generators_span_core": generators_span_core(cap),
        "core_vertices": [P.to_strings() for P in core_vertices(cap)],
        "theta0_vertices": [P.to_strings() for P in theta0_vertices(cap, sys)],
        "theta_star": [P.to_strings() for P in theta_star(cap, sys)],
    }
    _write(dumps(doc), args.output)
    return 0


def cmd_check(args) -> int:
    inst = parse_instance(_read(args.instance))
    rvs = None
    if args.rv:
        rvs = [parse_random_variable(_read(p), inst.n) for p in args.rv]
    report, code = run_suite(inst, rvs, diagnostic=args.diagnostic, seed=args.seed,
                             num_rvs=args.num_rv)
    _write(dumps(report), args.output)
    return code


def cmd_gen(args) -> int:
    inst = generate_instance(args.n, args.k, args.seed, args.max_denominator, args.kind)
    _write(emit_instance(inst), args.output)
    return 0


def cmd_search(args) -> int:
    res = search(args.property, args.budget, args.seed, args.states, args.generators)
    _write(dumps(res.to_dict()), args.output)
    return 0 if res.found else 1


def cmd_simulate(args) -> int:
    inst = parse_instance(_read(args.instance))
    sys = inst.system
    if not 0 <= args.state < sys.n:
        raise InputError(f"state {args.state} out of range")
    if args.rv:
        xi = parse_random_variable(_read(args.rv), sys.n)
    else:
        xi = random_variable(random.Random(derive_seed(args.seed, 0)), sys.n)
    limit = birkhoff_limit(sys, xi, args.state)
    out = [f"xi = {xi.to_strings()}", f"state {args.state}, exact limit {limit}",
           f"{'horizon':>8}  {'average':>24}  {'error':>24}"]
    for p in range(args.max_power + 1):
        h = 2 ** p
        avg = birkhoff_average(sys, xi, args.state, h)
        out.append(f"{h:>8}  {str(avg):>24}  {str(avg - limit):>24}")
    _write("\n".join(out) + "\n", args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ergocap",
        description="Exact checks for ergodic upper probabilities on finite systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="components, cycles, predicates and vertex sets")
    p.add_argument("instance", help="instance JSON file, or - for stdin")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check", help="run every applicable checker and print the report")
    p.add_argument("instance")
    p.add_argument("--diagnostic", action="store_true",
                   help="evaluate conclusions even when hypotheses fail")
    p.add_argument("--rv", action="append", metavar="FILE",
                   help='random variable {"values": [...]}; may be repeated')
    p.add_argument("--seed", type=int, default=0, help="seed for generated random variables")
    p.add_argument("--num-rv", type=int, default=5)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="emit a seeded random instance")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--kind", choices=KINDS, default="random")
    p.add_argument("--max-denominator", type=int, default=12)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("search", help="look for a witness instance")
    p.add_argument("property", choices=PROPERTIES)
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--states", type=int, default=4)
    p.add_argument("--generators", type=int, default=3)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("simulate", help="finite-horizon time means against the exact limit")
    p.add_argument("instance")
    p.add_argument("--state", type=int, default=0)
    p.add_argument("--rv", metavar="FILE")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-power", type=int, default=10, help="horizons 1, 2, 4, ..., 2**max_power")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ErgocapError as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    _sys.exit(main())
