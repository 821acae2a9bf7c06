"""Command-line front end.

Exit status: 0 for successful computations (an INFEASIBLE solve is a
successful computation and is reported in the output), 1 for usage or
input errors, 2 when ``verify`` rejects an assignment.  Results go to
stdout as JSON; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from typing import Optional

from .core import (Disk, DisjointnessMode, FormatError, Instance, Point,
                   format_rational, parse_rational, verify_proper,
                   verify_uproper)
from .formula import grid_embed, validate_rep
from .reduction import reduce_sat
from .serialization import (parse_assignment, parse_formula, parse_instance,
                            parse_rep, serialize_assignment,
                            serialize_instance)
from .solvers import (collinearity_check, solve_collinear, solve_exact_mcmd,
                      solve_exact_rmcmd)
from .svg import RenderOptions, render_svg
from .transforms import PartitionInput, equalize_radii, reduce_partition


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_out(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _mode(args) -> DisjointnessMode:
    return DisjointnessMode(args.mode)


def _print_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _cmd_solve(args) -> int:
    instance = parse_instance(_read(args.instance))
    mode = _mode(args)
    if args.collinear:
        if args.relaxed:
            raise FormatError("--relaxed requires --exact")
        if collinearity_check(instance) is None:
            raise FormatError("--collinear requires collinear disk centres")
        result = solve_collinear(instance, mode)
    else:
        solver = solve_exact_rmcmd if args.relaxed else solve_exact_mcmd
        try:
            result = solver(instance, mode, max_n=args.max_n)
        except ValueError as exc:
            raise FormatError(str(exc)) from exc
    summary = {"status": result.status, "cardinality": result.cardinality}
    if result.assignment is not None:
        doc = serialize_assignment(result.assignment)
        if args.output is not None:
            _write_out(doc, args.output)
        else:
            summary["target"] = json.loads(doc)["target"]
    _print_json(summary)
    return 0


def _cmd_verify(args) -> int:
    instance = parse_instance(_read(args.instance))
    assignment = parse_assignment(_read(args.assignment))
    verifier = verify_uproper if args.relaxed else verify_proper
    report = verifier(instance, assignment, _mode(args))
    _print_json({"ok": report.ok, "cardinality": report.cardinality,
                 "violations": report.violations})
    if not report.ok:
        for v in report.violations:
            print(v, file=sys.stderr)
        return 2
    return 0


def _cmd_reduce_sat(args) -> int:
    formula = parse_formula(_read(args.formula))
    rep = parse_rep(_read(args.rep))
    validate_rep(formula, rep)
    art = reduce_sat(formula, grid_embed(formula, rep))
    _write_out(serialize_instance(art.instance, art.metadata()), args.output)
    print(f"{art.instance.n} disks, {len(art.gadgets)} gadgets",
          file=sys.stderr)
    return 0


def _cmd_reduce_partition(args) -> int:
    try:
        values = tuple(Fraction(int(v)) for v in args.values.split(","))
    except ValueError as exc:
        raise FormatError(f"bad --values list: {args.values!r}") from exc
    inp = PartitionInput(values, parse_rational(args.e))
    instance = reduce_partition(inp)
    meta = {"kind": "partition-reduction",
            "values": [str(v) for v in values],
            "e": format_rational(inp.e)}
    _write_out(serialize_instance(instance, meta), args.output)
    return 0


def _cmd_equalize(args) -> int:
    instance = parse_instance(_read(args.instance))
    eq = equalize_radii(instance, parse_rational(args.r))
    meta = {"kind": "equal-radius",
            "r": format_rational(eq.radius),
            "origin": {str(i): o for i, o in sorted(eq.origin.items())}}
    _write_out(serialize_instance(eq.instance, meta), args.output)
    return 0


def _cmd_render(args) -> int:
    instance = parse_instance(_read(args.instance))
    assignment = None
    if args.assignment is not None:
        assignment = parse_assignment(_read(args.assignment))
    svg = render_svg(instance, assignment,
                     RenderOptions(mode=_mode(args)))
    _write_out(svg, args.output)
    return 0


def generate_random(n: int, profile: str, seed: int) -> Instance:
    """Deterministic random instance for a given (n, profile, seed).

    ``collinear`` places centres at distinct small-rational x on the
    x-axis; ``planar`` places them in a bounded box.  Radii lie in
    [1/4, 2] in both profiles.
    """
    if n < 0:
        raise FormatError("n must be non-negative")
    rng = random.Random(seed)
    disks = []
    if profile == "collinear":
        xs = rng.sample(range(-8 * n, 8 * n + 1), n) if n else []
        for i, x in enumerate(xs, start=1):
            radius = Fraction(rng.randint(1, 8), 4)
            disks.append(Disk(i, Point(Fraction(x, 2), Fraction(0)), radius))
    elif profile == "planar":
        seen = set()
        for i in range(1, n + 1):
            while True:
                p = (rng.randint(-4 * n, 4 * n), rng.randint(-4 * n, 4 * n))
                if p not in seen:
                    seen.add(p)
                    break
            radius = Fraction(rng.randint(1, 8), 4)
            disks.append(Disk(i, Point(Fraction(p[0], 2), Fraction(p[1], 2)),
                              radius))
    else:
        raise FormatError(f"unknown profile {profile!r}")
    return Instance(disks)


def _cmd_gen(args) -> int:
    instance = generate_random(args.n, args.profile, args.seed)
    meta = {"kind": "random", "profile": args.profile,
            "seed": args.seed}
    _write_out(serialize_instance(instance, meta), args.output)
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="diskmerge",
                     description="centre-disjoint disk merging toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_mode(p):
        p.add_argument("--mode", choices=["max", "sum"], default="max",
                       help="centre-disjointness rule (default max)")

    def add_output(p):
        p.add_argument("-o", "--output", default=None, metavar="OUT")

    p = sub.add_parser("solve", help="find a maximum assignment")
    alg = p.add_mutually_exclusive_group(required=True)
    alg.add_argument("--collinear", action="store_true",
                     help="polynomial dynamic program (collinear centres)")
    alg.add_argument("--exact", action="store_true",
                     help="exhaustive search (small instances)")
    p.add_argument("--relaxed", action="store_true",
                   help="relaxed merge rules (with --exact)")
    p.add_argument("--max-n", type=int, default=9,
                   help="refuse exhaustive search above this size")
    add_mode(p)
    p.add_argument("instance")
    add_output(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="check an assignment")
    p.add_argument("--relaxed", action="store_true")
    add_mode(p)
    p.add_argument("instance")
    p.add_argument("assignment")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("reduce", help="hardness-reduction generators")
    rsub = p.add_subparsers(dest="reduction", required=True)
    rp = rsub.add_parser("sat", help="planar monotone 3-SAT to disks")
    rp.add_argument("formula")
    rp.add_argument("rep")
    add_output(rp)
    rp.set_defaults(func=_cmd_reduce_sat)
    rp = rsub.add_parser("partition", help="number partition to disks")
    rp.add_argument("--values", required=True,
                    help="comma-separated positive integers")
    rp.add_argument("--e", default="1/2", help="gap parameter, 0 < e < 1")
    add_output(rp)
    rp.set_defaults(func=_cmd_reduce_partition)

    p = sub.add_parser("equalize", help="rewrite to equal radii")
    p.add_argument("--r", required=True, help="common radius")
    p.add_argument("instance")
    add_output(p)
    p.set_defaults(func=_cmd_equalize)

    p = sub.add_parser("render", help="draw an instance as SVG")
    add_mode(p)
    p.add_argument("instance")
    p.add_argument("assignment", nargs="?", default=None)
    p.add_argument("-o", "--output", required=True, metavar="OUT")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--profile", choices=["collinear", "planar"],
                   default="collinear")
    p.add_argument("--seed", type=int, default=0)
    add_output(p)
    p.set_defaults(func=_cmd_gen)

    return parser


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))
