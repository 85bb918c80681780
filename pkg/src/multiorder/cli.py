"""Command-line surface.

Subcommands: ``compare``, ``poset``, ``verify``, ``search``, ``chambers``.
Exit codes are a stable scripting contract: 0 success, 2 input error, 3
non-generic character vector where genericity is required, 4 budget exceeded.
All output is a deterministic function of the arguments.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import __version__
from .chambers import (
    counterexample_search,
    default_clamp,
    enumerate_chamber_reps,
)
from .errors import BudgetExceededError, LiteralError, NonGenericChiError
from .formats import (
    dumps,
    format_char_vector,
    format_multipartition,
    order_matrix_dot,
    order_matrix_json,
    parse_char_vector,
    parse_multipartition,
    report_json,
)
from .orders import (
    KIND_GEQ,
    KIND_SANDWICH,
    ORDER_KINDS,
    build_order_matrix,
    geq,
    is_generic,
    sandwich_classify,
    triangle,
)
from .partitions import Multipartition
from .suites import SUITE_NAMES, run_suite

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NON_GENERIC = 3
EXIT_BUDGET = 4


@dataclass
class JobConfig:
    """Validated knobs shared by the commands."""

    n: int | None = None
    r: int | None = None
    chi: tuple[Fraction, ...] | None = None
    kind: str = KIND_GEQ
    suite: str | None = None
    clamp: int | None = None
    budget: int | None = None
    seed: int = 0
    out: str | None = None

    def __post_init__(self):
        if self.n is not None and self.n < 0:
            raise LiteralError("n must be non-negative")
        if self.r is not None and self.r < 1:
            raise LiteralError("r must be positive")
        if self.clamp is not None and self.clamp < 1:
            raise LiteralError("clamp must be positive")
        if self.budget is not None and self.budget < 1:
            raise LiteralError("budget must be positive")


def _config_from_args(args) -> JobConfig:
    chi = None
    if getattr(args, "chi", None):
        chi = parse_char_vector(args.chi)
    return JobConfig(
        n=getattr(args, "n", None),
        r=getattr(args, "r", None),
        chi=chi,
        kind=getattr(args, "kind", KIND_GEQ),
        suite=getattr(args, "suite", None),
        clamp=getattr(args, "clamp", None),
        budget=getattr(args, "budget", None),
        seed=getattr(args, "seed", 0),
        out=getattr(args, "out", None),
    )


def cmd_compare(args) -> int:
    config = _config_from_args(args)
    if config.chi is None:
        raise LiteralError("compare needs --chi")
    a = parse_multipartition(args.a)
    b = parse_multipartition(args.b)
    if a.r != len(config.chi) or b.r != len(config.chi):
        raise LiteralError(
            f"chi has {len(config.chi)} entries but inputs have "
            f"{a.r} and {b.r} components"
        )
    if a.n != b.n:
        raise LiteralError(f"sizes differ: {a.n} vs {b.n}")
    generic = is_generic(config.chi, a.n)
    geq_ab = geq(a, b, config.chi)
    tri_ab = triangle(a, b, config.chi)
    verdict = {
        "schema": "multiorder/1",
        "command": "compare",
        "a": format_multipartition(a),
        "b": format_multipartition(b),
        "chi": format_char_vector(config.chi),
        "generic": generic,
        "geq": geq_ab,
        "triangle": tri_ab,
    }
    print(f"a >= b: {str(geq_ab).lower()}")
    print(f"a |> b: {str(tri_ab).lower()}")
    if generic:
        tag = sandwich_classify(a, b, config.chi)
        verdict["sandwich"] = tag
        print(f"sandwich: {tag}")
    else:
        print(
            "warning: chi is not generic; sandwich tag suppressed",
            file=sys.stderr,
        )
    print(dumps(verdict))
    return EXIT_OK


def cmd_poset(args) -> int:
    config = _config_from_args(args)
    if config.n is None or config.r is None:
        raise LiteralError("poset needs --n and --r")
    if config.kind not in ORDER_KINDS:
        raise LiteralError(f"unknown kind {config.kind!r}")
    chi = config.chi
    if config.kind != "adjacency":
        if chi is None:
            raise LiteralError(f"kind {config.kind!r} needs --chi")
        if len(chi) != config.r:
            raise LiteralError("chi length must equal r")
    matrix = build_order_matrix(config.n, config.r, chi, config.kind)
    geq_reduction = None
    if config.kind == KIND_SANDWICH:
        geq_reduction = build_order_matrix(
            config.n, config.r, chi, KIND_GEQ
        ).reduction()
    dot = order_matrix_dot(matrix, geq_reduction=geq_reduction)
    payload = dumps(order_matrix_json(matrix))
    if config.out:
        dot_path = Path(config.out + ".dot")
        json_path = Path(config.out + ".json")
        dot_path.write_text(dot)
        json_path.write_text(payload + "\n")
        print(str(dot_path))
        print(str(json_path))
    else:
        print(dot, end="")
        print(payload)
    return EXIT_OK


def cmd_verify(args) -> int:
    config = _config_from_args(args)
    if config.suite not in SUITE_NAMES:
        raise LiteralError(f"unknown suite {config.suite!r}; choose from {SUITE_NAMES}")
    if config.n is None or config.r is None:
        raise LiteralError("verify needs --n and --r")
    chis = [config.chi] if config.chi is not None else None
    result = run_suite(
        config.suite,
        config.n,
        config.r,
        seed=config.seed,
        chis=chis,
        budget=config.budget,
    )
    print(dumps(result.to_json()))
    return EXIT_OK if result.passed else 1


def cmd_search(args) -> int:
    config = _config_from_args(args)
    if config.n is None or config.r is None:
        raise LiteralError("search needs --n and --r")
    reports = counterexample_search(
        config.n, config.r, clamp=config.clamp, budget=config.budget
    )
    lines = [dumps(report_json(rep)) for rep in reports]
    summary = dumps(
        {
            "schema": "multiorder/1",
            "command": "search",
            "n": config.n,
            "r": config.r,
            "clamp": config.clamp or default_clamp(config.n),
            "reports": len(reports),
        }
    )
    if config.out:
        Path(config.out).write_text("".join(line + "\n" for line in lines))
        print(summary)
    else:
        for line in lines:
            print(line)
        print(summary)
    return EXIT_OK


def cmd_chambers(args) -> int:
    config = _config_from_args(args)
    if config.n is None or config.r is None:
        raise LiteralError("chambers needs --n and --r")
    reps = enumerate_chamber_reps(config.n, config.r, clamp=config.clamp)
    if config.budget is not None and len(reps) > config.budget:
        raise BudgetExceededError(
            f"{len(reps)} chambers exceed budget {config.budget}"
        )
    for chi in reps:
        matrix = build_order_matrix(config.n, config.r, chi, KIND_GEQ)
        print(
            dumps(
                {
                    "chi": format_char_vector(chi),
                    "signature": matrix.signature(),
                }
            )
        )
    print(
        dumps(
            {
                "schema": "multiorder/1",
                "command": "chambers",
                "n": config.n,
                "r": config.r,
                "count": len(reps),
            }
        )
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multiorder",
        description="Exact orders on multipartitions and quiver fixed-point checks",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, *, n=False, r=False, chi=False, kind=False, suite=False):
        if n:
            p.add_argument("--n", type=int, required=True)
        if r:
            p.add_argument("--r", type=int, required=True)
        if chi:
            p.add_argument("--chi", help="comma-separated exact rationals, e.g. 0,1/2,17/8")
        if kind:
            p.add_argument("--kind", default=KIND_GEQ, choices=ORDER_KINDS)
        if suite:
            p.add_argument("--suite", required=True, choices=SUITE_NAMES)
        p.add_argument("--clamp", type=int)
        p.add_argument("--budget", type=int)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out")

    p = sub.add_parser("compare", help="compare two multipartitions under one chi")
    p.add_argument("--a", required=True, help="multipartition literal, e.g. '(2,1)|()|(1,1,1)|(2)'")
    p.add_argument("--b", required=True)
    add_common(p, chi=True)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("poset", help="emit a relation table as DOT and JSON")
    add_common(p, n=True, r=True, chi=True, kind=True)
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("verify", help="run an exhaustive verification suite")
    add_common(p, n=True, r=True, chi=True, suite=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="scan chambers for dominance without move-closure")
    add_common(p, n=True, r=True)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("chambers", help="list order-distinct chamber representatives")
    add_common(p, n=True, r=True)
    p.set_defaults(func=cmd_chambers)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NonGenericChiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NON_GENERIC
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (LiteralError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def console_main():
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
