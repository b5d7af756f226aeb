"""Small-instance verification of the relation-algebra laws.

Every law the library relies on is cataloged here as an executable check
with a stable id.  ``search`` sweeps the full cross-product of enumerated
instances (spaces, rough subsets, membership grids, relation grids) and
reports, per law, how many bundles were checked, how many were filtered out
because the law's hypothesis did not apply, and every counterexample found,
fully serialized so it can be replayed.

Grade grids are multiples of ``1/d``; that keeps every enumeration finite
and every comparison exact.  Instance checks are pure and independent, and
results are accumulated in canonical enumeration order, so a run is
reproducible byte for byte given the same configuration.
"""

from __future__ import annotations

import itertools
import json
import random
import string
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from .errors import (
    ArityError,
    BoundsError,
    ContextMismatchError,
    EmptyGridError,
    NotRoughError,
    UnknownPropositionError,
)
from .frr import (
    BOUNDARY,
    LOWER,
    FuzzyRoughRelation,
    FuzzyRoughSet,
    Violation,
    check_theorem_49,
    frr_combine,
    is_reflexive_frr,
    is_symmetric_transitive,
    is_w_reflexive_frr,
    is_weakly_reflexive_frr,
    make_frr,
    make_frs,
    relation_report,
    similitude_order,
)
from .fuzzy import ONE, ZERO, FuzzyRelation, FuzzySet, maxmin_compose, pointwise
from .instances import Instance, format_grade, parse_instance, serialize_instance
from .rough import ApproximationSpace, Element, Universe, approx_set, make_space

MAX_UNIVERSE = 4
MIN_DENOMINATOR, MAX_DENOMINATOR = 2, 16
COUNTEREXAMPLE_CAP = 10


def _check_size(n: int) -> None:
    if not 1 <= n <= MAX_UNIVERSE:
        raise BoundsError(f"universe size {n} outside 1..{MAX_UNIVERSE}")


def _check_denominator(d: int) -> None:
    if not MIN_DENOMINATOR <= d <= MAX_DENOMINATOR:
        raise BoundsError(
            f"denominator {d} outside {MIN_DENOMINATOR}..{MAX_DENOMINATOR}"
        )


def _growth_strings(n: int) -> Iterator[list[int]]:
    # Restricted growth strings enumerate set partitions canonically.
    def extend(prefix: list[int], top: int) -> Iterator[list[int]]:
        if len(prefix) == n:
            yield prefix
            return
        for value in range(top + 2):
            yield from extend(prefix + [value], max(top, value))

    yield from extend([0], 0)


def enumerate_spaces(n: int) -> Iterator[ApproximationSpace]:
    """All partitions of an n-element universe, in canonical order.

    The count equals the Bell number of n.
    """
    _check_size(n)
    universe = Universe(tuple(string.ascii_lowercase[:n]))
    for rgs in _growth_strings(n):
        blocks: dict[int, list[Element]] = {}
        for i, label in enumerate(rgs):
            blocks.setdefault(label, []).append(universe.elements[i])
        yield make_space(universe, list(blocks.values()))


def enumerate_rough_contexts(
    space: ApproximationSpace,
) -> Iterator[tuple[tuple[Element, ...], tuple[Element, ...], tuple[Element, ...]]]:
    """All rough subsets of the universe, with lower and upper regions."""
    elements = space.universe.elements
    for mask in range(2 ** len(elements)):
        members = tuple(el for i, el in enumerate(elements) if mask >> i & 1)
        approx = approx_set(space, members)
        if approx.lower != approx.upper:
            yield members, approx.lower, approx.upper


def enumerate_frs(
    space: ApproximationSpace, members: Iterable[Element], d: int
) -> Iterator[FuzzyRoughSet]:
    """All membership maps on the 1/d grid for one rough subset.

    Grades are forced to 1 on the lower region and 0 outside the upper one;
    each boundary element independently ranges over 1/d .. (d-1)/d.
    """
    _check_denominator(d)
    ordered = space.universe.ordered(members)
    approx = approx_set(space, ordered)
    if approx.lower == approx.upper:
        raise NotRoughError("membership grids exist only for rough subsets")
    lower = set(approx.lower)
    upper = set(approx.upper)
    slot: dict[Element, int] = {el: i for i, el in enumerate(approx.boundary)}
    grid = tuple(Fraction(k, d) for k in range(1, d))
    for combo in itertools.product(grid, repeat=len(approx.boundary)):
        grades = tuple(
            ONE
            if el in lower
            else combo[slot[el]]
            if el in upper
            else ZERO
            for el in space.universe.elements
        )
        yield FuzzyRoughSet(space, ordered, FuzzySet(space.universe, grades))


@dataclass(frozen=True)
class FrrEnumeration:
    """Relations on the 1/d grid for one context.

    ``total`` is the exact size of the grid; when it exceeds the budget the
    ``relations`` tuple holds a seeded uniform sample instead and ``sampled``
    is set.
    """

    context: FuzzyRoughSet
    total: int
    sampled: bool
    relations: tuple[FuzzyRoughRelation, ...]


def enumerate_frr(
    frs: FuzzyRoughSet,
    d: int,
    budget: int | None = None,
    seed=None,
) -> FrrEnumeration:
    """All valid relations on the 1/d grid for one context.

    Cells are forced to 1 on the lower rectangle and 0 outside the upper
    one; each boundary cell ranges over the grid values strictly inside
    (0, 1) that also respect the dominance bound.  Raises ``EmptyGridError``
    when some boundary cell admits no grid value at all (possible when the
    context's membership grades are finer than the grid).
    """
    _check_denominator(d)
    universe = frs.space.universe
    n = len(universe)
    grid = tuple(Fraction(k, d) for k in range(1, d))
    base = [[ZERO] * n for _ in range(n)]
    cells: list[tuple[int, int]] = []
    cell_values: list[tuple[Fraction, ...]] = []
    for i in range(n):
        for j in range(n):
            code = frs.region_codes[i][j]
            if code == LOWER:
                base[i][j] = ONE
            elif code == BOUNDARY:
                bound = frs.bounds[i][j]
                admissible = tuple(g for g in grid if g <= bound)
                if not admissible:
                    raise EmptyGridError(
                        f"cell ({universe.elements[i]}, {universe.elements[j]}) "
                        f"has bound {bound}, below the smallest grid value 1/{d}"
                    )
                cells.append((i, j))
                cell_values.append(admissible)
    total = 1
    for values in cell_values:
        total *= len(values)
    sampled = budget is not None and total > budget
    if sampled:
        rng = random.Random(seed)
        assignments: Iterable[tuple[Fraction, ...]] = (
            tuple(rng.choice(values) for values in cell_values)
            for _ in range(budget)
        )
    else:
        assignments = itertools.product(*cell_values)
    relations = []
    for combo in assignments:
        rows = [list(row) for row in base]
        for (i, j), grade in zip(cells, combo):
            rows[i][j] = grade
        relations.append(
            FuzzyRoughRelation(
                frs, FuzzyRelation(universe, tuple(tuple(row) for row in rows))
            )
        )
    return FrrEnumeration(frs, total, sampled, tuple(relations))


# ---------------------------------------------------------------------------
# Proposition catalog


def _witness_from_violation(v: Violation) -> dict:
    return {
        "condition": v.condition,
        "at": list(v.witness) if isinstance(v.witness, tuple) else v.witness,
        "found": format_grade(v.found) if v.found is not None else None,
        "requirement": v.requirement,
    }


def _combine_validity_checker(op: str) -> Callable:
    def checker(bundle):
        _, report = frr_combine(op, *bundle)
        if report.valid:
            return True, None
        return False, _witness_from_violation(report.violations[0])

    return checker


def _check_algsum_conditions(bundle):
    _, report = frr_combine("algsum", *bundle)
    for v in report.violations:
        if v.condition != "dominance":
            return False, _witness_from_violation(v)
    return True, None


def _check_algsum_dominance(bundle):
    _, report = frr_combine("algsum", *bundle)
    for v in report.violations:
        if v.condition == "dominance":
            return False, _witness_from_violation(v)
    return True, None


def _diagonal_one_witness(
    rel: FuzzyRelation, context: FuzzyRoughSet
) -> dict | None:
    elements = context.space.universe.elements
    for i in context.support_indices():
        if rel.matrix[i][i] != 1:
            return {"at": [elements[i], elements[i]], "found": format_grade(rel.matrix[i][i])}
    return None


def _reflexive_combine_checker(ops: tuple[str, ...]) -> Callable:
    def checker(bundle):
        r1, r2 = bundle
        for op in ops:
            combined = pointwise(op, r1.rel, r2.rel)
            witness = _diagonal_one_witness(combined, r1.context)
            if witness is not None:
                return False, dict(witness, op=op)
        return True, None

    return checker


def _check_compose_associative(bundle):
    r1, r2, r3 = bundle
    left = maxmin_compose(maxmin_compose(r1.rel, r2.rel), r3.rel)
    right = maxmin_compose(r1.rel, maxmin_compose(r2.rel, r3.rel))
    if left.matrix == right.matrix:
        return True, None
    for (pair, a), (_, b) in zip(left.items(), right.items()):
        if a != b:
            return False, {
                "at": list(pair),
                "left": format_grade(a),
                "right": format_grade(b),
            }
    return True, None


def _check_compose_valid(bundle):
    r1, r2 = bundle
    report = relation_report(r1.context, maxmin_compose(r1.rel, r2.rel))
    if report.valid:
        return True, None
    return False, _witness_from_violation(report.violations[0])


def _check_compose_reflexive(bundle):
    r1, r2 = bundle
    witness = _diagonal_one_witness(maxmin_compose(r1.rel, r2.rel), r1.context)
    return witness is None, witness


def _check_weakly_reflexive(bundle):
    (r,) = bundle
    if is_weakly_reflexive_frr(r):
        return True, None
    elements = r.context.space.universe.elements
    m = r.rel.matrix
    for i in r.context.support_indices():
        for j, g in enumerate(m[i]):
            if m[i][i] < g:
                return False, {
                    "at": [elements[i], elements[j]],
                    "diagonal": format_grade(m[i][i]),
                    "row_grade": format_grade(g),
                }
    return True, None


def _check_join_below_composition(bundle):
    r1, r2 = bundle
    joined = pointwise("max", r1.rel, r2.rel)
    composed = maxmin_compose(r1.rel, r2.rel)
    for (pair, a), (_, b) in zip(joined.items(), composed.items()):
        if a > b:
            return False, {
                "at": list(pair),
                "join": format_grade(a),
                "composition": format_grade(b),
            }
    return True, None


def _check_class_structure(bundle):
    (r,) = bundle
    report = check_theorem_49(r)
    for key, outcome in report.checks.items():
        if not outcome.passed:
            witness = outcome.witness or ()
            return False, {"property": key, "at": [str(part) for part in witness]}
    return True, None


HYPOTHESES: dict[str, Callable[[FuzzyRoughRelation], bool]] = {
    "reflexive": is_reflexive_frr,
    "w_reflexive": is_w_reflexive_frr,
    "symmetric_transitive": is_symmetric_transitive,
    "similitude": lambda r: similitude_order(r) is not None,
}


@dataclass(frozen=True)
class Proposition:
    arity: int
    hypothesis: str | None
    summary: str
    checker: Callable


PROPOSITIONS: dict[str, Proposition] = {
    "P3_2": Proposition(2, None, "meet of two valid relations is valid", _combine_validity_checker("meet")),
    "P3_3": Proposition(2, None, "join of two valid relations is valid", _combine_validity_checker("join")),
    "P3_4": Proposition(2, None, "product of two valid relations is valid", _combine_validity_checker("product")),
    "P3_5_conditions": Proposition(2, None, "algsum preserves the region conditions", _check_algsum_conditions),
    "P3_5_dominance": Proposition(2, None, "algsum respects the dominance bound", _check_algsum_dominance),
    "P3_10": Proposition(2, "reflexive", "meet and join of reflexive relations are reflexive", _reflexive_combine_checker(("meet", "join"))),
    "P3_11": Proposition(2, "reflexive", "product of reflexive relations is reflexive", _reflexive_combine_checker(("product",))),
    "P3_12": Proposition(2, "reflexive", "algsum of reflexive relations is reflexive", _reflexive_combine_checker(("algsum",))),
    "P4_1": Proposition(3, None, "composition is associative", _check_compose_associative),
    "P4_2": Proposition(2, None, "composition of two valid relations is valid", _check_compose_valid),
    "P4_3": Proposition(2, "reflexive", "composition of reflexive relations is reflexive", _check_compose_reflexive),
    "P4_6": Proposition(1, "symmetric_transitive", "symmetric and transitive implies weakly reflexive", _check_weakly_reflexive),
    "P4_7": Proposition(2, "w_reflexive", "join of w-reflexive relations is below their composition", _check_join_below_composition),
    "T4_9": Proposition(1, "similitude", "similitude class structure holds", _check_class_structure),
}

PROPOSITION_IDS = tuple(PROPOSITIONS)


def _get_proposition(prop_id: str) -> Proposition:
    try:
        return PROPOSITIONS[prop_id]
    except KeyError:
        raise UnknownPropositionError(
            f"unknown proposition {prop_id!r}; known: {', '.join(PROPOSITION_IDS)}"
        ) from None


@dataclass(frozen=True)
class CheckOutcome:
    status: str  # "pass" | "fail" | "filtered"
    witness: dict | None = None


def check(prop_id: str, bundle: Iterable[FuzzyRoughRelation]) -> CheckOutcome:
    """Evaluate one proposition on one bundle of relations.

    Bundles whose relations do not satisfy the proposition's hypothesis are
    reported as filtered rather than passed.
    """
    prop = _get_proposition(prop_id)
    rels = tuple(bundle)
    if len(rels) != prop.arity:
        raise ArityError(
            f"{prop_id} expects {prop.arity} relation(s), got {len(rels)}"
        )
    if any(r.context != rels[0].context for r in rels[1:]):
        raise ContextMismatchError("bundle relations belong to different contexts")
    if prop.hypothesis is not None:
        predicate = HYPOTHESES[prop.hypothesis]
        if not all(predicate(r) for r in rels):
            return CheckOutcome("filtered")
    ok, witness = prop.checker(rels)
    return CheckOutcome("pass" if ok else "fail", witness)


# ---------------------------------------------------------------------------
# Search


@dataclass(frozen=True)
class SearchConfig:
    """Bounds and reproducibility knobs for one verification sweep."""

    max_universe: int = 2
    denominator: int = 4
    relation_budget: int | None = 50_000
    seed: int = 0
    propositions: tuple[str, ...] = PROPOSITION_IDS

    def __post_init__(self):
        _check_size(self.max_universe)
        _check_denominator(self.denominator)
        if self.relation_budget is not None and self.relation_budget < 1:
            raise BoundsError("relation budget must be positive")
        props = tuple(self.propositions)
        for pid in props:
            _get_proposition(pid)
        object.__setattr__(self, "propositions", props)


@dataclass(frozen=True)
class Verdict:
    """Outcome of one proposition over one searched space."""

    proposition: str
    checked: int
    filtered: int
    passed: int
    failed: int
    sampled: bool
    counterexamples: tuple[dict, ...]

    @property
    def status(self) -> str:
        if self.failed:
            return "refuted"
        if self.checked == 0:
            return "vacuous"
        return "holds"

    def summary_line(self) -> str:
        line = (
            f"{self.proposition:<16} {self.status:<8} "
            f"checked={self.checked} filtered={self.filtered} "
            f"passed={self.passed} failed={self.failed}"
        )
        if self.sampled:
            line += " sampled"
        if self.counterexamples:
            witness = self.counterexamples[0].get("witness")
            line += " first=" + json.dumps(witness, sort_keys=True, separators=(",", ":"))
        return line

    def to_json(self) -> dict:
        return {
            "proposition": self.proposition,
            "status": self.status,
            "checked": self.checked,
            "filtered": self.filtered,
            "passed": self.passed,
            "failed": self.failed,
            "sampled": self.sampled,
            "counterexamples": list(self.counterexamples),
        }


def _counterexample(
    prop_id: str, bundle: tuple[FuzzyRoughRelation, ...], witness: dict | None
) -> dict:
    context = bundle[0].context
    names = [f"R{i + 1}" for i in range(len(bundle))]
    instance = Instance(
        context.space,
        context.members,
        context.mu,
        {name: r.rel for name, r in zip(names, bundle)},
    )
    return {
        "instance": serialize_instance(instance),
        "proposition": prop_id,
        "bundle": names,
        "witness": witness,
    }


@dataclass
class _Tally:
    checked: int = 0
    filtered: int = 0
    passed: int = 0
    failed: int = 0
    sampled: bool = False
    counterexamples: list[dict] = field(default_factory=list)

    def verdict(self, prop_id: str) -> Verdict:
        return Verdict(
            prop_id,
            self.checked,
            self.filtered,
            self.passed,
            self.failed,
            self.sampled,
            tuple(self.counterexamples),
        )


class _FlagCache:
    """Per-context cache of hypothesis-eligible relations."""

    def __init__(self, relations: tuple[FuzzyRoughRelation, ...]):
        self.relations = relations
        self._eligible: dict[str, tuple[FuzzyRoughRelation, ...]] = {}

    def eligible(self, hypothesis: str) -> tuple[FuzzyRoughRelation, ...]:
        got = self._eligible.get(hypothesis)
        if got is None:
            predicate = HYPOTHESES[hypothesis]
            got = tuple(r for r in self.relations if predicate(r))
            self._eligible[hypothesis] = got
        return got


def _run_context(
    prop_id: str,
    prop: Proposition,
    flags: _FlagCache,
    relations_sampled: bool,
    tally: _Tally,
    config: SearchConfig,
    ordinal: int,
) -> None:
    if relations_sampled:
        tally.sampled = True
    arity = prop.arity
    total = len(flags.relations) ** arity
    eligible = (
        flags.eligible(prop.hypothesis) if prop.hypothesis else flags.relations
    )
    count = len(eligible)
    eligible_total = count ** arity
    tally.filtered += total - eligible_total
    if eligible_total == 0:
        return
    budget = config.relation_budget
    if budget is not None and eligible_total > budget:
        tally.sampled = True
        rng = random.Random(f"{config.seed}:{ordinal}:{prop_id}")
        bundles: Iterable[tuple[FuzzyRoughRelation, ...]] = (
            tuple(eligible[rng.randrange(count)] for _ in range(arity))
            for _ in range(budget)
        )
    else:
        bundles = itertools.product(eligible, repeat=arity)
    checker = prop.checker
    for bundle in bundles:
        ok, witness = checker(bundle)
        tally.checked += 1
        if ok:
            tally.passed += 1
        else:
            tally.failed += 1
            if len(tally.counterexamples) < COUNTEREXAMPLE_CAP:
                tally.counterexamples.append(
                    _counterexample(prop_id, bundle, witness)
                )


def search(config: SearchConfig) -> list[Verdict]:
    """Sweep all instances within the configured bounds.

    Deterministic given the configuration, including any sampling.  Verdicts
    come back in the order the propositions were requested.
    """
    tallies = {pid: _Tally() for pid in config.propositions}
    ordinal = 0
    for n in range(1, config.max_universe + 1):
        for space in enumerate_spaces(n):
            for members, _lower, _upper in enumerate_rough_contexts(space):
                for frs in enumerate_frs(space, members, config.denominator):
                    ordinal += 1
                    enum = enumerate_frr(
                        frs,
                        config.denominator,
                        budget=config.relation_budget,
                        seed=f"{config.seed}:{ordinal}:rels",
                    )
                    flags = _FlagCache(enum.relations)
                    for pid in config.propositions:
                        _run_context(
                            pid,
                            PROPOSITIONS[pid],
                            flags,
                            enum.sampled,
                            tallies[pid],
                            config,
                            ordinal,
                        )
    return [tallies[pid].verdict(pid) for pid in config.propositions]


def render_report(verdicts: Iterable[Verdict]) -> str:
    """Line-oriented report, one summary line per proposition."""
    return "".join(v.summary_line() + "\n" for v in verdicts)


def verdicts_to_json(config: SearchConfig, verdicts: Iterable[Verdict]) -> dict:
    return {
        "config": {
            "max_universe": config.max_universe,
            "denominator": config.denominator,
            "relation_budget": config.relation_budget,
            "seed": config.seed,
            "propositions": list(config.propositions),
        },
        "verdicts": [v.to_json() for v in verdicts],
    }


def replay(counterexample: dict) -> bool:
    """Re-check a serialized counterexample; True iff the failure recurs."""
    instance = parse_instance(counterexample["instance"])
    frs = make_frs(instance.space, instance.members, instance.mu)
    bundle = tuple(
        make_frr(frs, instance.relations[name])
        for name in counterexample["bundle"]
    )
    return check(counterexample["proposition"], bundle).status == "fail"


def random_bundle(
    rng: random.Random, n: int, d: int, size: int
) -> tuple[FuzzyRoughRelation, ...]:
    """A seeded random bundle of valid relations sharing one random context.

    Used for randomized spot checks at sizes where exhaustive grids are out
    of reach; grades stay on the 1/d grid so every check remains exact.
    """
    _check_size(n)
    _check_denominator(d)
    spaces = list(enumerate_spaces(n))
    while True:
        space = rng.choice(spaces)
        contexts = list(enumerate_rough_contexts(space))
        if contexts:
            break
    members, lower, upper = rng.choice(contexts)
    grid = tuple(Fraction(k, d) for k in range(1, d))
    lower_set, upper_set = set(lower), set(upper)
    grades = tuple(
        ONE
        if el in lower_set
        else rng.choice(grid)
        if el in upper_set
        else ZERO
        for el in space.universe.elements
    )
    frs = FuzzyRoughSet(space, members, FuzzySet(space.universe, grades))
    size_n = len(space.universe)
    relations = []
    for _ in range(size):
        rows = []
        for i in range(size_n):
            row = []
            for j in range(size_n):
                code = frs.region_codes[i][j]
                if code == LOWER:
                    row.append(ONE)
                elif code == BOUNDARY:
                    admissible = [g for g in grid if g <= frs.bounds[i][j]]
                    row.append(rng.choice(admissible))
                else:
                    row.append(ZERO)
            rows.append(tuple(row))
        relations.append(
            FuzzyRoughRelation(frs, FuzzyRelation(space.universe, tuple(rows)))
        )
    return tuple(relations)
