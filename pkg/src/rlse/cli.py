"""Command-line front end.

Exit codes: 0 all checks pass / embeddable, 1 a check failed, 2 usage or
parse error, 3 precondition violated.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog
from .algebra import (
    OrthoLattice,
    RingLikeAlgebra,
    check_boolean_ring,
    check_characteristic_two,
    check_distributive,
    check_meet_semilattice,
    check_near_rlse,
    check_ortholattice,
    check_orthomodular,
    check_rlse,
    check_specific,
    check_w_axioms,
    check_weakly_associative,
    check_weakly_distributive,
)
from .embeddability import classify, embeddable_set, embeddable_set_two_valued
from .errors import NotClosed, NotMember, NotTwoValued, ParseError, PreconditionFailed, RlseError
from .events import check_q_structure
from .io import format_algebra, format_events, load_algebra, load_events
from .transforms import check_roundtrips, l_of_r, r_of_l

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3

RLSE_LAWS = {
    "semilattice": check_meet_semilattice,
    "rlse": check_rlse,
    "near-rlse": check_near_rlse,
    "specific": check_specific,
    "weakly-distributive": check_weakly_distributive,
    "weakly-associative": check_weakly_associative,
    "char2": check_characteristic_two,
    "w-axioms": check_w_axioms,
    "boolean-ring": check_boolean_ring,
    "roundtrip": check_roundtrips,
}
OML_LAWS = {
    "ortholattice": check_ortholattice,
    "orthomodular": check_orthomodular,
    "boolean-algebra": check_distributive,
}

Q_CONDITIONS = ("(a) two-valued", "(b) R3", "(c) R4", "(d) RLSE", "(e) Boolean ring")


class UsageError(Exception):
    pass


def _summary(payload: dict) -> str:
    return "summary: " + json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _emit(args, lines: list[str], payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in lines:
            print(line)
        print(_summary(payload))


def _write(args, text: str) -> None:
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------


def cmd_check(args) -> int:
    obj = load_algebra(args.path)
    table = RLSE_LAWS if isinstance(obj, RingLikeAlgebra) else OML_LAWS
    names = args.laws.split(",") if args.laws else list(table)
    unknown = [n for n in names if n not in table]
    if unknown:
        raise UsageError(f"unknown law(s) for this file: {', '.join(unknown)}; choose from {', '.join(table)}")
    lines, results = [], []
    for name in names:
        verdict = table[name](obj)
        lines.append(f"{name}: {verdict.describe(obj.label)}")
        d = verdict.to_dict()
        d["check"] = name
        if not verdict.passed and verdict.witness is not None:
            d["witness_names"] = [obj.label(i) for i in verdict.witness]
        results.append(d)
    failed = [r["check"] for r in results if not r["passed"]]
    payload = {"command": "check", "status": "FAIL" if failed else "PASS",
               "failed": failed, "results": results}
    _emit(args, lines, payload)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_transform(args) -> int:
    obj = load_algebra(args.path)
    if args.direction == "l-of-r":
        if not isinstance(obj, RingLikeAlgebra):
            raise UsageError("l-of-r expects an rlse file")
        out = l_of_r(obj)
    else:
        if not isinstance(obj, OrthoLattice):
            raise UsageError("r-of-l expects an oml file")
        out = r_of_l(obj)
    _write(args, format_algebra(out))
    return EXIT_OK


def cmd_catalog(args) -> int:
    name, param = args.name, args.param
    makers = {
        "boolean-ring": lambda: catalog.boolean_ring(int(param or 2)),
        "boolean-lattice": lambda: catalog.boolean_lattice(int(param or 2)),
        "mo": lambda: catalog.mo_lattice(int(param or 2)),
        "specific-mo": lambda: catalog.specific_rlse_mo(int(param or 2)),
        "wa-mo2": lambda: catalog.weakly_associative_mo2(
            catalog.mo_lattice(2).index(param if param is not None else "a'")),
        "hexagon": catalog.hexagon_lattice,
        "concrete-mo2": catalog.concrete_mo2_events,
        "power-set": lambda: catalog.power_set_events(int(param or 2)),
        "boolean-events": catalog.boolean_events,
    }
    if name not in makers:
        raise UsageError(f"unknown catalog object {name!r}; choose from {', '.join(makers)}")
    try:
        obj = makers[name]()
    except (ValueError, KeyError, IndexError) as exc:
        raise UsageError(f"bad parameter for {name}: {exc}") from None
    text = format_algebra(obj) if isinstance(obj, (RingLikeAlgebra, OrthoLattice)) else format_events(obj)
    _write(args, text)
    return EXIT_OK


def cmd_embeddable(args) -> int:
    events = load_events(args.events)
    chosen = args.subset.split(",") if args.subset else [events.label(i) for i in range(len(events))]
    try:
        picked = [events[events.index_of(n)] for n in chosen]
    except NotMember as exc:
        raise UsageError(f"unknown event {exc}") from None
    if args.two_valued:
        report = embeddable_set_two_valued(picked)
        label = lambda i: chosen[i]  # noqa: E731
    else:
        ambient = load_events(args.ambient) if args.ambient else events
        if ambient.space != events.space:
            raise UsageError("events and ambient use different state spaces")
        report = embeddable_set(ambient, picked)
        label = ambient.label
    lines = [f"mode: {report.mode}", f"ambient: {report.ambient or '-'}",
             f"events: {', '.join(chosen)}", f"k reached: {report.k_reached}"]
    payload = {"command": "embeddable", "status": "EMBEDDABLE" if report.embeddable else "NOT_EMBEDDABLE",
               **report.to_dict()}
    if report.failing_pair:
        A, B, lhs, rhs = report.failing_pair
        a = "{" + ",".join(label(i) for i in A) + "}"
        b = "{" + ",".join(label(i) for i in B) + "}"
        payload["failing_pair"]["A_names"] = [label(i) for i in A]
        payload["failing_pair"]["B_names"] = [label(i) for i in B]
        if args.two_valued:
            lines.append(f"failing condition: prod{a} (*) prod{b} != prod({a} u {b})")
        else:
            lines.append(f"failing condition: prod{a} (*) (1 - prod{b}) != prod{a} - prod{a} (*) prod{b}")
        lines.append(f"  lhs = {payload['failing_pair']['lhs']}")
        lines.append(f"  rhs = {payload['failing_pair']['rhs']}")
    lines.append(f"verdict: {classify(report)}")
    _emit(args, lines, payload)
    return EXIT_OK if report.embeddable else EXIT_FAIL


def cmd_qcheck(args) -> int:
    fam = load_events(args.path)
    verdict = check_q_structure(fam)
    near, spec, gfe, *conds = verdict.parts
    lines = [f"(i) specific near-RLSE: {'yes' if near.passed and spec.passed else 'no'}",
             f"(ii) GFE: {'yes' if gfe.passed else 'no'}", "(iii) equivalent conditions:"]
    for title, c in zip(Q_CONDITIONS, conds):
        lines.append(f"  {title:<18} {'true' if c.passed else 'false'}")
        if not c.passed and c.witness is not None and c.law in ("R3", "R4"):
            w = ", ".join(fam.label(i) for i in c.witness)
            lines.append(f"    witness ({w}): lhs={fam.label(c.lhs)} rhs={fam.label(c.rhs)}")
    lines.append(f"theorem confirmed: {'yes' if verdict.passed else 'no'}")
    payload = {"command": "qcheck", "status": "PASS" if verdict.passed else "FAIL",
               "conditions": {t: c.passed for t, c in zip(Q_CONDITIONS, conds)},
               "near_rlse": near.passed, "specific": spec.passed, "gfe": gfe.passed,
               "result": verdict.to_dict()}
    _emit(args, lines, payload)
    return EXIT_OK if verdict.passed else EXIT_FAIL


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rlse", description="Check ring-like structures of events, orthomodular lattices "
        "and numerical events.", epilog=__doc__.split("\n\n", 1)[1])
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt_flag(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("check", help="run law checks on an algebra file")
    p.add_argument("path")
    p.add_argument("--laws", help="comma-separated law names (default: all for the file kind)")
    fmt_flag(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("transform", help="convert between RLSE and orthomodular lattice files")
    p.add_argument("direction", choices=("l-of-r", "r-of-l"))
    p.add_argument("path")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("catalog", help="write a named example structure")
    p.add_argument("name")
    p.add_argument("param", nargs="?")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("embeddable", help="decide Boolean embeddability of events")
    p.add_argument("events")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--ambient", help="event file of the ambient algebra (default: the events file)")
    mode.add_argument("--two-valued", action="store_true", help="concrete two-valued reading")
    p.add_argument("--subset", help="comma-separated event names (default: all)")
    fmt_flag(p)
    p.set_defaults(func=cmd_embeddable)

    p = sub.add_parser("qcheck", help="check the max-min structure of an event family")
    p.add_argument("path")
    fmt_flag(p)
    p.set_defaults(func=cmd_qcheck)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionFailed, NotClosed, NotTwoValued, NotMember) as exc:
        print(f"precondition violated: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except RlseError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
