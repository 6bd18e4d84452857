"""Command-line interface.

Exit codes: 0 success, 1 input error, 2 hypothesis or verification failure,
3 negative result (uncolorable, no kernel), 4 resource limit exceeded.
Results go to stdout as JSON; diagnostics and traces go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .coloring import Mode, check_hypotheses, dp_color, verify_coloring
from .correspondence import is_derangement_assignment, validate_instance
from .errors import HypothesisViolationError, MalformedInputError, OddCycleError, ResourceLimitError
from .fileformat import (
    coloring_from_dict,
    digraph_from_dict,
    instance_from_dict,
    instance_to_dict,
    load_json,
    signed_from_dict,
    signed_to_dict,
)
from .generator import GenParams, gen_certified_instance, gen_certified_signed
from .kernels import BRUTE_FORCE_MAX_N, KERNEL_PERFECT_MAX_N, brute_force_kernel, richardson_kernel
from .oracle import SearchBudget, brute_force_color, count_colorings
from .signed import reduce_to_correspondence

OK, INPUT_ERROR, HYPOTHESIS_FAILED, NEGATIVE, RESOURCE_LIMIT = 0, 1, 2, 3, 4

BUDGET_ENV = "DPCOLOR_BUDGET"


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=None)
    sys.stdout.write("\n")


def _log(msg: str) -> None:
    print(msg, file=sys.stderr)


def _load(path: str, reader):
    return reader(load_json(path))


def cmd_check(args) -> int:
    inst = _load(args.instance, instance_from_dict)
    mode = Mode(args.mode)
    report = check_hypotheses(inst, mode, max_n=args.max_n)
    _emit(report.to_dict())
    return OK if report.certified(mode) else HYPOTHESIS_FAILED


def cmd_color(args) -> int:
    inst = _load(args.instance, instance_from_dict)
    trace = [] if args.trace else None
    try:
        coloring = dp_color(inst, Mode(args.mode), override=args.override, trace=trace, max_n=args.max_n)
    except HypothesisViolationError as exc:
        _log(f"hypothesis violation: {exc}")
        if exc.report is not None:
            _log(json.dumps(exc.report.to_dict()))
        return HYPOTHESIS_FAILED
    finally:
        for rnd in trace or ():
            _log(json.dumps(rnd.to_dict()))
    problems = verify_coloring(inst, coloring)
    if problems:
        _log("internal error: produced coloring failed verification")
        for p in problems:
            _log(p)
        return HYPOTHESIS_FAILED
    _emit(coloring)
    return OK


def cmd_verify(args) -> int:
    inst = _load(args.instance, instance_from_dict)
    coloring = _load(args.coloring, coloring_from_dict)
    problems = verify_coloring(inst, coloring)
    _emit({"ok": not problems, "violations": problems})
    return OK if not problems else HYPOTHESIS_FAILED


def _budget(args) -> SearchBudget:
    limit = args.budget
    if limit is None and os.environ.get(BUDGET_ENV):
        try:
            limit = int(os.environ[BUDGET_ENV])
        except ValueError:
            raise MalformedInputError(f"{BUDGET_ENV} must be an integer") from None
    return SearchBudget(max_assignments=limit) if limit else SearchBudget()


def cmd_oracle(args) -> int:
    inst = _load(args.instance, instance_from_dict)
    budget = _budget(args)
    coloring = brute_force_color(inst, budget)
    out = {"result": "COLORABLE" if coloring is not None else "UNCOLORABLE", "coloring": coloring}
    if args.count:
        out["count"] = count_colorings(inst, budget)
    _emit(out)
    return OK if coloring is not None else NEGATIVE


def cmd_signed_reduce(args) -> int:
    signed, lists, orientation = _load(args.signed, signed_from_dict)
    inst = reduce_to_correspondence(signed, lists, orientation)
    assert not validate_instance(inst) and is_derangement_assignment(inst)[0]
    _emit(instance_to_dict(inst))
    return OK


def cmd_kernel(args) -> int:
    digraph = _load(args.digraph, digraph_from_dict)
    try:
        kernel = richardson_kernel(digraph)
    except OddCycleError as exc:
        _log(f"Richardson precondition fails: {exc}")
        if not args.brute:
            _emit({"kernel": None, "odd_cycle": exc.witness})
            return NEGATIVE
        kernel = brute_force_kernel(digraph, max_n=args.max_n)
        if kernel is None:
            _emit({"kernel": None, "odd_cycle": exc.witness, "result": "NO KERNEL"})
            return NEGATIVE
    order = {v: i for i, v in enumerate(digraph.vertices)}
    _emit({"kernel": sorted(kernel, key=order.__getitem__)})
    return OK


def cmd_gen(args) -> int:
    params = GenParams(
        n=args.n,
        straight_edge_prob=args.straight_prob,
        twisted_edge_prob=args.twisted_prob,
        extra_colors=args.extra_colors,
        seed=args.seed,
        straight_mode=args.straight_mode,
    )
    if args.signed:
        _emit(signed_to_dict(*gen_certified_signed(params)))
    else:
        _emit(instance_to_dict(gen_certified_instance(params)))
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dpcolor",
        description="DP-coloring of derangement assignments through kernel-perfect biorientations.",
        epilog=f"The oracle budget may also be set with the {BUDGET_ENV} environment variable.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def mode_opts(p):
        p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.CERTIFIED.value)
        p.add_argument("--max-n", type=int, default=KERNEL_PERFECT_MAX_N,
                       help="size guard for the exhaustive kernel-perfectness check")

    p = sub.add_parser("check", help="report whether an instance meets the coloring hypotheses")
    p.add_argument("instance")
    mode_opts(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("color", help="color an instance with the kernel algorithm")
    p.add_argument("instance")
    mode_opts(p)
    p.add_argument("--override", action="store_true", help="run even if the hypotheses are not certified")
    p.add_argument("--trace", action="store_true", help="log every round (a, V_a, U, B) to stderr")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a coloring against an instance")
    p.add_argument("instance")
    p.add_argument("coloring")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exhaustive colorability search")
    p.add_argument("instance")
    p.add_argument("--count", action="store_true", help="also count all colorings")
    p.add_argument("--budget", type=int, default=None, help="maximum number of assignments to consider")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("signed-reduce", help="turn a signed instance into a correspondence instance")
    p.add_argument("signed")
    p.set_defaults(func=cmd_signed_reduce)

    p = sub.add_parser("kernel", help="find a kernel of a digraph or instance orientation")
    p.add_argument("digraph")
    p.add_argument("--brute", action="store_true", help="fall back to exhaustive search on odd cycles")
    p.add_argument("--max-n", type=int, default=BRUTE_FORCE_MAX_N)
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("gen", help="generate a random certified instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--signed", action="store_true")
    p.add_argument("--straight-prob", type=float, default=0.3,
                   help="edge probability of the straight (positive) part")
    p.add_argument("--twisted-prob", type=float, default=0.2,
                   help="edge probability of the twisted (negative) part")
    p.add_argument("--extra-colors", type=int, default=0)
    p.add_argument("--straight-mode", choices=["dag", "bipartite"], default="dag")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MalformedInputError as exc:
        _log(f"input error: {exc}")
        return INPUT_ERROR
    except ResourceLimitError as exc:
        _log(f"resource limit: {exc}")
        return RESOURCE_LIMIT
    except ValueError as exc:
        _log(f"input error: {exc}")
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
