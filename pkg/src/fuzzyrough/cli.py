"""Command-line front end.

Exit codes are the machine contract: 0 means success (valid input, law
holds), 1 means a validation failure or a refuted law, 2 means the input
itself was unusable.  Everything else goes to the report stream on stdout;
diagnostics go to stderr.  No command leaves a partial output file behind
on exit 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import FuzzyRoughError
from .frr import (
    FuzzyRoughRelation,
    FuzzyRoughSet,
    ValidationReport,
    check_theorem_49,
    frr_combine,
    frr_compose,
    similitude_order,
    validate_frr,
    validate_frs,
)
from .fuzzy import FuzzyRelation
from .instances import Instance, dump_instance, format_grade, load_instance
from .rough import approx_set, is_rough, rect_regions
from .verify import (
    PROPOSITION_IDS,
    SearchConfig,
    render_report,
    search,
    verdicts_to_json,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


class _InputError(FuzzyRoughError):
    """Unusable input: missing relation, invalid precondition, bad config."""

FRS_CONDITIONS = (
    ("not_rough", "subset is rough (lower differs from upper)"),
    ("i", "grade 1 on the lower region"),
    ("ii", "grade 0 outside the upper region"),
    ("iii", "grade strictly inside (0, 1) on the boundary"),
)

FRR_CONDITIONS = (
    ("dominance", "grades bounded by min of the member grades"),
    ("i", "grade 1 on the lower rectangle"),
    ("ii", "grade 0 outside the upper rectangle"),
    ("iii", "grade strictly inside (0, 1) on the boundary rectangle"),
)


def _fmt_members(members) -> str:
    return "{" + ", ".join(members) + "}"


def _fmt_pairs(pairs) -> str:
    return ", ".join(f"({x}, {y})" for x, y in pairs)


def _print_report(report: ValidationReport, conditions) -> None:
    by_condition: dict[str, list] = {}
    for v in report.violations:
        by_condition.setdefault(v.condition, []).append(v)
    for cid, label in conditions:
        hits = by_condition.get(cid)
        if not hits:
            print(f"{cid}: pass ({label})")
        else:
            first = hits[0]
            where = "" if first.witness is None else f" at {first.witness!r}"
            found = "" if first.found is None else f", found {first.found}"
            print(
                f"{cid}: FAIL ({label}){where}{found}; "
                f"{len(hits)} violation(s)"
            )


def _load(path: str) -> Instance:
    return load_instance(path)


def _relation_or_exit(instance: Instance, name: str) -> FuzzyRelation:
    if name not in instance.relations:
        raise _InputError(
            f"relation {name!r} not in file; available: {sorted(instance.relations)}"
        )
    return instance.relations[name]


def _frs_or_report(instance: Instance):
    return validate_frs(instance.space, instance.members, instance.mu)


def cmd_validate(args) -> int:
    instance = _load(args.file)
    frs = _frs_or_report(instance)
    if args.set:
        if isinstance(frs, ValidationReport):
            _print_report(frs, FRS_CONDITIONS)
            print("invalid fuzzy rough set")
            return EXIT_FAILED
        _print_report(ValidationReport(()), FRS_CONDITIONS)
        print("valid fuzzy rough set")
        return EXIT_OK
    # relation mode
    if isinstance(frs, ValidationReport):
        print("context is not a valid fuzzy rough set:")
        _print_report(frs, FRS_CONDITIONS)
        return EXIT_FAILED
    relation = _relation_or_exit(instance, args.relation)
    result = validate_frr(frs, relation)
    if isinstance(result, ValidationReport):
        _print_report(result, FRR_CONDITIONS)
        print(f"invalid fuzzy rough relation {args.relation!r}")
        return EXIT_FAILED
    _print_report(ValidationReport(()), FRR_CONDITIONS)
    print(f"valid fuzzy rough relation {args.relation!r}")
    return EXIT_OK


def cmd_approx(args) -> int:
    instance = _load(args.file)
    approx = approx_set(instance.space, instance.members)
    rect = rect_regions(instance.space, instance.members)
    print(f"X = {_fmt_members(instance.members)}")
    print(f"lower = {_fmt_members(approx.lower)}")
    print(f"upper = {_fmt_members(approx.upper)}")
    print(f"boundary = {_fmt_members(approx.boundary)}")
    print(f"rough = {'yes' if is_rough(instance.space, instance.members) else 'no'}")
    print(f"lower rectangle ({len(rect.lower_rect)} pairs): {_fmt_pairs(rect.lower_rect)}")
    print(f"upper rectangle ({len(rect.upper_rect)} pairs): {_fmt_pairs(rect.upper_rect)}")
    print(f"boundary rectangle ({len(rect.boundary_rect)} pairs): {_fmt_pairs(rect.boundary_rect)}")
    return EXIT_OK


def _two_frrs_or_exit(
    instance: Instance, left: str, right: str
) -> tuple[FuzzyRoughSet, FuzzyRoughRelation, FuzzyRoughRelation]:
    frs = _frs_or_report(instance)
    if isinstance(frs, ValidationReport):
        raise _InputError("context is not a valid fuzzy rough set")
    out = []
    for name in (left, right):
        relation = _relation_or_exit(instance, name)
        result = validate_frr(frs, relation)
        if isinstance(result, ValidationReport):
            raise _InputError(
                f"relation {name!r} is not a valid fuzzy rough relation"
            )
        out.append(result)
    return frs, out[0], out[1]


def _write_with_relation(
    instance: Instance, name: str, relation: FuzzyRelation, path: str
) -> None:
    relations = dict(instance.relations)
    relations[name] = relation
    dump_instance(
        Instance(instance.space, instance.members, instance.mu, relations), path
    )


def cmd_combine(args) -> int:
    instance = _load(args.file)
    _, r1, r2 = _two_frrs_or_exit(instance, args.left, args.right)
    combined, report = frr_combine(args.op, r1, r2)
    name = f"{args.left}_{args.op}_{args.right}"
    _write_with_relation(instance, name, combined, args.out)
    print(f"wrote {name} to {args.out}")
    _print_report(report, FRR_CONDITIONS)
    if report.valid:
        print(f"combined relation {name!r} is a valid fuzzy rough relation")
        return EXIT_OK
    print(f"combined relation {name!r} violates: {', '.join(report.conditions())}")
    return EXIT_FAILED


def cmd_compose(args) -> int:
    instance = _load(args.file)
    _, r1, r2 = _two_frrs_or_exit(instance, args.left, args.right)
    try:
        composed = frr_compose(r1, r2)
    except FuzzyRoughError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    name = f"{args.left}_compose_{args.right}"
    _write_with_relation(instance, name, composed.rel, args.out)
    print(f"wrote {name} to {args.out}")
    print(f"composed relation {name!r} is a valid fuzzy rough relation")
    return EXIT_OK


def cmd_classes(args) -> int:
    instance = _load(args.file)
    frs = _frs_or_report(instance)
    if isinstance(frs, ValidationReport):
        raise _InputError("context is not a valid fuzzy rough set")
    relation = _relation_or_exit(instance, args.relation)
    result = validate_frr(frs, relation)
    if isinstance(result, ValidationReport):
        raise _InputError(
            f"relation {args.relation!r} is not a valid fuzzy rough relation"
        )
    order = similitude_order(result)
    if order is None:
        print(f"relation {args.relation!r} is not a similitude relation")
        return EXIT_FAILED
    report = check_theorem_49(result)
    print(f"order = {format_grade(order)}")
    for anchor in report.anchors:
        row = result.rel.row(anchor)
        entries = ", ".join(
            f"{el}: {format_grade(g)}"
            for el, g in zip(instance.universe.elements, row)
        )
        print(f"class({anchor}) = {{{entries}}}")
    for key, outcome in report.checks.items():
        status = "pass" if outcome.passed else "FAIL"
        note = " (vacuous)" if outcome.checked == 0 else f" ({outcome.checked} case(s))"
        witness = "" if outcome.witness is None else f" witness={outcome.witness!r}"
        print(f"property ({key}): {status}{note}{witness}")
    return EXIT_OK if report.all_passed else EXIT_FAILED


def cmd_verify(args) -> int:
    if args.props.strip() == "all":
        props = PROPOSITION_IDS
    else:
        props = tuple(p.strip() for p in args.props.split(",") if p.strip())
    config = SearchConfig(
        max_universe=args.max_n,
        denominator=args.denominator,
        relation_budget=args.budget if args.budget > 0 else None,
        seed=args.seed,
        propositions=props,
    )
    verdicts = search(config)
    sys.stdout.write(render_report(verdicts))
    if args.out:
        Path(args.out).write_text(
            json.dumps(verdicts_to_json(config, verdicts), indent=2) + "\n",
            encoding="utf-8",
        )
        print(f"wrote verdicts to {args.out}")
    return EXIT_FAILED if any(v.failed for v in verdicts) else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzyrough",
        description="Validate, combine and verify fuzzy rough relations on finite universes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate the membership map or a named relation")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--set", action="store_true", help="validate the fuzzy rough set")
    group.add_argument("--relation", metavar="NAME", help="validate one named relation")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("approx", help="print regions of X and of its product relation")
    p.add_argument("file")
    p.set_defaults(fn=cmd_approx)

    p = sub.add_parser("combine", help="pointwise-combine two relations and revalidate")
    p.add_argument("file")
    p.add_argument("--op", required=True, choices=["meet", "join", "product", "algsum"])
    p.add_argument("--left", required=True, metavar="NAME")
    p.add_argument("--right", required=True, metavar="NAME")
    p.add_argument("--out", required=True, metavar="FILE")
    p.set_defaults(fn=cmd_combine)

    p = sub.add_parser("compose", help="max-min compose two relations")
    p.add_argument("file")
    p.add_argument("--left", required=True, metavar="NAME")
    p.add_argument("--right", required=True, metavar="NAME")
    p.add_argument("--out", required=True, metavar="FILE")
    p.set_defaults(fn=cmd_compose)

    p = sub.add_parser("classes", help="similitude classes and their structure checks")
    p.add_argument("file")
    p.add_argument("--relation", required=True, metavar="NAME")
    p.set_defaults(fn=cmd_classes)

    p = sub.add_parser("verify", help="run the proposition verifier")
    p.add_argument("--max-n", type=int, default=2, dest="max_n")
    p.add_argument("--denominator", type=int, default=4)
    p.add_argument("--props", default="all", help="comma-separated ids, or 'all'")
    p.add_argument("--budget", type=int, default=50_000, help="bundle cap per context; 0 disables sampling")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except FuzzyRoughError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
