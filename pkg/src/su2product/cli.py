"""One-shot command-line surface for all predicates, generators and the oracle.

Verbs: identity, reachable, surjective, inequalities, derive, qh, mc,
selfcheck.  Angles are rational multiples of pi by default ("1/2" means
π/2); ``--radians`` switches to decimal radians, snapped to a bounded-
denominator rational with a note on stderr.  Exit codes: 0 when the queried
predicate holds (or the computation succeeded), 1 when it fails, 2 for
usage, parse, range or cap errors.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction
from typing import Sequence

from .angles import (
    Angle,
    AngleRangeError,
    AngleSyntaxError,
    DEFAULT_MAX_DENOMINATOR,
    angle_parse,
)
from .membership import (
    DEFAULT_CAP,
    CapExceededError,
    contains_identity,
    contains_identity_interval,
    membership_system,
    reachable,
)
from .qh import qh_system
from .selfcheck import run_selfcheck
from .su2 import empirical_reachable
from .surjectivity import (
    derive_surjectivity_from_membership,
    is_surjective,
    is_surjective_interval,
    surjectivity_system,
)

SEED_ENV_VAR = "SU2PRODUCT_SEED"


def _parse_angles(args: argparse.Namespace) -> list[Angle]:
    out = []
    for text in args.angles:
        if args.radians:
            try:
                x = float(text)
            except ValueError:
                raise AngleSyntaxError(f"cannot parse {text!r} as decimal radians")
            angle = angle_parse(f"{x!r}rad", max_denominator=args.max_denominator)
        else:
            angle = angle_parse(text, max_denominator=args.max_denominator)
        if angle.approx:
            print(
                f"note: snapped {text} rad to {angle}·π"
                f" (max denominator {args.max_denominator})",
                file=sys.stderr,
            )
        out.append(angle)
    return out


def _emit(args: argparse.Namespace, payload: dict, human: list[str]) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        for line in human:
            print(line)


def _add_angle_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("angles", nargs="+", help="class angles, 'p/q' fractions of π")
    p.add_argument("--radians", action="store_true", help="read angles as decimal radians")
    p.add_argument(
        "--max-denominator",
        type=int,
        default=DEFAULT_MAX_DENOMINATOR,
        help="snap limit for decimal radian input",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="su2product",
        description="Exact decisions about products of SU(2) conjugacy classes.",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("identity", help="does the class product contain the identity?")
    _add_angle_options(p)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument(
        "--route",
        choices=("system", "interval"),
        default="system",
        help="inequality system (capped) or interval propagation (uncapped)",
    )

    p = sub.add_parser("reachable", help="interval of class angles the product attains")
    _add_angle_options(p)

    p = sub.add_parser("surjective", help="does the class product cover all of SU(2)?")
    _add_angle_options(p)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument(
        "--route",
        choices=("system", "interval"),
        default="system",
    )
    p.add_argument(
        "--paper-literal",
        action="store_true",
        help="restrict the system to patterns with strictly fewer than n/2 minus signs",
    )

    p = sub.add_parser("inequalities", help="dump a generated inequality system")
    p.add_argument("--n", type=int, required=True, help="number of class angles")
    p.add_argument("--kind", choices=("membership", "surjectivity"), default="membership")
    p.add_argument("--paper-literal", action="store_true")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)

    p = sub.add_parser(
        "derive", help="derive the two-sided system from the membership system"
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)

    p = sub.add_parser("qh", help="derive the membership system from CP¹ word products")
    p.add_argument("--n", type=int, required=True, help="word length (system has n+1 angles)")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)

    p = sub.add_parser("mc", help="Monte Carlo probe of the reachable interval")
    _add_angle_options(p)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument(
        "--seed",
        type=int,
        default=None,
        help=f"defaults to ${SEED_ENV_VAR} or 0",
    )

    sub.add_parser("selfcheck", help="run the reduced-scale cross-validation suite")
    return parser


def _cmd_identity(args) -> int:
    angles = _parse_angles(args)
    if args.route == "interval":
        ok = contains_identity_interval(angles)
        _emit(args, {"identity": ok}, [f"contains identity: {'yes' if ok else 'no'}"])
        return 0 if ok else 1
    decision = contains_identity(angles, cap=args.cap)
    lines = [f"contains identity: {'yes' if decision.holds else 'no'}"]
    lines += [f"  violated: {ineq}" for ineq in decision.violated]
    payload: dict = {"identity": decision.holds}
    if not decision.holds:
        payload["violated"] = [i.to_json() for i in decision.violated]
    _emit(args, payload, lines)
    return 0 if decision.holds else 1


def _cmd_reachable(args) -> int:
    interval = reachable(_parse_angles(args))
    _emit(args, interval.to_json(), [f"reachable class angles: {interval}"])
    return 0


def _cmd_surjective(args) -> int:
    angles = _parse_angles(args)
    if args.route == "interval":
        ok = is_surjective_interval(angles)
        _emit(args, {"surjective": ok}, [f"surjective: {'yes' if ok else 'no'}"])
        return 0 if ok else 1
    decision = is_surjective(angles, cap=args.cap, paper_literal=args.paper_literal)
    lines = [f"surjective: {'yes' if decision.holds else 'no'}"]
    lines += [f"  violated: {ineq}" for ineq in decision.violated]
    payload: dict = {"surjective": decision.holds}
    if not decision.holds:
        payload["violated"] = [i.to_json() for i in decision.violated]
    _emit(args, payload, lines)
    return 0 if decision.holds else 1


def _cmd_inequalities(args) -> int:
    if args.kind == "membership":
        system = membership_system(args.n, cap=args.cap)
        payload = system.to_json()
        lines = [f"membership system for N={args.n} ({len(system)} inequalities):"]
        lines += [f"  {ineq}" for ineq in system]
    else:
        ineqs = surjectivity_system(args.n, cap=args.cap, paper_literal=args.paper_literal)
        payload = {"n": args.n, "ineqs": [i.to_json() for i in ineqs]}
        lines = [f"surjectivity system for n={args.n} ({len(ineqs)} inequalities):"]
        lines += [f"  {ineq}" for ineq in ineqs]
    _emit(args, payload, lines)
    return 0


def _cmd_derive(args) -> int:
    derived = derive_surjectivity_from_membership(args.n, cap=args.cap)
    direct = surjectivity_system(args.n, cap=args.cap)
    matches = set(derived) == set(direct)
    payload = {
        "n": args.n,
        "ineqs": [i.to_json() for i in derived],
        "matches": matches,
    }
    lines = [f"derived two-sided system for n={args.n}:"]
    lines += [f"  {ineq}" for ineq in derived]
    lines.append(f"matches direct generator: {'yes' if matches else 'NO'}")
    _emit(args, payload, lines)
    return 0 if matches else 1


def _cmd_qh(args) -> int:
    system = qh_system(args.n, cap=args.cap)
    matches = (
        system.as_canonical_set() == membership_system(args.n + 1, cap=args.cap + 1).as_canonical_set()
    )
    payload = system.to_json() | {"matches": matches}
    lines = [f"word-product system for n={args.n} ({len(system)} inequalities over {args.n + 1} angles):"]
    lines += [f"  {ineq}" for ineq in system]
    lines.append(f"matches membership system: {'yes' if matches else 'NO'}")
    _emit(args, payload, lines)
    return 0 if matches else 1


def _cmd_mc(args) -> int:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get(SEED_ENV_VAR, "0"))
    report = empirical_reachable(_parse_angles(args), args.samples, seed=seed)
    lines = [
        f"samples: {report.n_samples} (seed {report.seed})",
        f"predicted interval: {report.predicted}",
        f"empirical range:    [{report.empirical_lo:.6f}, {report.empirical_hi:.6f}] rad",
        f"endpoint gaps:      lo {report.endpoint_gap_lo:.6f}, hi {report.endpoint_gap_hi:.6f}",
        f"containment: {'ok' if report.containment_ok else 'VIOLATED'}",
    ]
    _emit(args, report.to_json(), lines)
    return 0 if report.containment_ok else 1


def _cmd_selfcheck(args) -> int:
    results = run_selfcheck()
    all_ok = all(ok for _, ok in results)
    lines = [f"{'ok  ' if ok else 'FAIL'} {name}" for name, ok in results]
    lines.append(f"selfcheck: {'all passed' if all_ok else 'FAILURES'}")
    payload = {
        "checks": [{"name": name, "passed": ok} for name, ok in results],
        "all_passed": all_ok,
    }
    _emit(args, payload, lines)
    return 0 if all_ok else 1


_COMMANDS = {
    "identity": _cmd_identity,
    "reachable": _cmd_reachable,
    "surjective": _cmd_surjective,
    "inequalities": _cmd_inequalities,
    "derive": _cmd_derive,
    "qh": _cmd_qh,
    "mc": _cmd_mc,
    "selfcheck": _cmd_selfcheck,
}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles --help (0) and usage errors (2)
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.verb](args)
    except (AngleSyntaxError, AngleRangeError, CapExceededError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
