"""Fuzzy rough sets and fuzzy rough relations.

A fuzzy rough set ties a fuzzy membership map to a rough subset: grade 1 on
the lower approximation, 0 outside the upper one, strictly between on the
boundary.  A fuzzy rough relation does the same on the rectangle regions of
the product universe and is additionally dominated by the product of the
ambient membership map with itself.

Validation never accepts partially: it either returns the constructed value
or a report listing every violated condition with a witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import (
    ConditionViolation,
    ContextMismatchError,
    InternalInvariantError,
    NotRoughError,
    NotSimilitudeError,
    UniverseMismatchError,
    ZeroSupportError,
)
from .fuzzy import (
    FuzzyRelation,
    FuzzySet,
    Grade,
    maxmin_compose,
    pointwise,
)
from .rough import ApproxResult, ApproximationSpace, Element, Pair, approx_set

# Region codes for cells of the product universe.
OUTSIDE, BOUNDARY, LOWER = 0, 1, 2

COMBINE_OPS = ("meet", "join", "product", "algsum")


@dataclass(frozen=True)
class Violation:
    """One broken validation condition.

    ``condition`` is ``"not_rough"``, ``"dominance"``, ``"i"``, ``"ii"`` or
    ``"iii"``; ``witness`` is the element or pair where it failed, ``found``
    the offending grade and ``requirement`` the constraint that was missed.
    """

    condition: str
    witness: Element | Pair | None
    found: Grade | None
    requirement: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def valid(self) -> bool:
        return not self.violations

    def conditions(self) -> tuple[str, ...]:
        """Distinct violated condition ids, first-seen order."""
        seen: list[str] = []
        for v in self.violations:
            if v.condition not in seen:
                seen.append(v.condition)
        return tuple(seen)


def _frs_scan(
    space: ApproximationSpace, members: tuple[Element, ...], mu: FuzzySet
) -> tuple[ApproxResult, list[Violation]]:
    approx = approx_set(space, members)
    violations: list[Violation] = []
    if not approx.boundary:
        violations.append(
            Violation(
                "not_rough",
                None,
                None,
                "lower and upper approximations must differ",
            )
        )
    lower = set(approx.lower)
    upper = set(approx.upper)
    for el in space.universe:
        grade = mu.grade(el)
        if el in lower:
            if grade != 1:
                violations.append(
                    Violation("i", el, grade, "grade must equal 1 on the lower approximation")
                )
        elif el not in upper:
            if grade != 0:
                violations.append(
                    Violation("ii", el, grade, "grade must equal 0 outside the upper approximation")
                )
        elif not 0 < grade < 1:
            violations.append(
                Violation("iii", el, grade, "grade must lie strictly between 0 and 1 on the boundary")
            )
    return approx, violations


@dataclass(frozen=True)
class FuzzyRoughSet:
    """A rough subset together with a membership map obeying its regions.

    Construction validates; build instances through ``validate_frs`` or
    ``make_frs`` when a report (rather than an exception) is wanted.
    Region and bound tables are cached because relation validation reuses
    them for every candidate relation in the same context.
    """

    space: ApproximationSpace
    members: tuple[Element, ...]
    mu: FuzzySet
    approx: ApproxResult = field(init=False, repr=False, compare=False)
    region_codes: tuple[tuple[int, ...], ...] = field(
        init=False, repr=False, compare=False
    )
    bounds: tuple[tuple[Grade, ...], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        if self.mu.universe != self.space.universe:
            raise UniverseMismatchError("membership map uses a different universe")
        members = self.space.universe.ordered(self.members)
        object.__setattr__(self, "members", members)
        approx, violations = _frs_scan(self.space, members, self.mu)
        if violations:
            first = violations[0]
            if first.condition == "not_rough":
                raise NotRoughError(first.requirement)
            raise ConditionViolation(
                first.condition,
                first.witness,
                f"condition ({first.condition}) fails at {first.witness!r}: "
                f"{first.requirement}, found {first.found}",
            )
        object.__setattr__(self, "approx", approx)
        lower = set(approx.lower)
        upper = set(approx.upper)
        elements = self.space.universe.elements
        codes = tuple(
            tuple(
                LOWER
                if x in lower and y in lower
                else BOUNDARY
                if x in upper and y in upper
                else OUTSIDE
                for y in elements
            )
            for x in elements
        )
        grades = self.mu.grades
        bounds = tuple(tuple(min(gx, gy) for gy in grades) for gx in grades)
        object.__setattr__(self, "region_codes", codes)
        object.__setattr__(self, "bounds", bounds)

    @property
    def universe(self):
        return self.space.universe

    def support_indices(self) -> tuple[int, ...]:
        return tuple(i for i, g in enumerate(self.mu.grades) if g > 0)


def validate_frs(
    space: ApproximationSpace, members: Iterable[Element], mu: FuzzySet
) -> FuzzyRoughSet | ValidationReport:
    """Check the region conditions; return the set or a full report."""
    if mu.universe != space.universe:
        raise UniverseMismatchError("membership map uses a different universe")
    ordered = space.universe.ordered(members)
    _, violations = _frs_scan(space, ordered, mu)
    if violations:
        return ValidationReport(tuple(violations))
    return FuzzyRoughSet(space, ordered, mu)


def make_frs(
    space: ApproximationSpace, members: Iterable[Element], mu: FuzzySet
) -> FuzzyRoughSet:
    """Like ``validate_frs`` but raises on the first violation."""
    return FuzzyRoughSet(space, tuple(members), mu)


@dataclass(frozen=True)
class FuzzyRoughRelation:
    """A fuzzy relation bound to a fuzzy rough set context.

    The constructor trusts its input apart from a universe check; use
    ``validate_frr`` or ``make_frr`` to gate untrusted relations.
    """

    context: FuzzyRoughSet
    rel: FuzzyRelation

    def __post_init__(self):
        if self.rel.universe != self.context.space.universe:
            raise UniverseMismatchError("relation uses a different universe")

    def grade(self, x: Element, y: Element) -> Grade:
        return self.rel.grade(x, y)


def _frr_violations(
    context: FuzzyRoughSet, rel: FuzzyRelation
) -> list[Violation]:
    violations: list[Violation] = []
    elements = context.space.universe.elements
    codes = context.region_codes
    bounds = context.bounds
    matrix = rel.matrix
    for i, x in enumerate(elements):
        code_row = codes[i]
        bound_row = bounds[i]
        row = matrix[i]
        for j, y in enumerate(elements):
            grade = row[j]
            code = code_row[j]
            if code == LOWER:
                if grade != 1:
                    violations.append(
                        Violation("i", (x, y), grade, "grade must equal 1 on the lower rectangle")
                    )
            elif code == OUTSIDE:
                if grade != 0:
                    violations.append(
                        Violation("ii", (x, y), grade, "grade must equal 0 outside the upper rectangle")
                    )
            elif not 0 < grade < 1:
                violations.append(
                    Violation("iii", (x, y), grade, "grade must lie strictly between 0 and 1 on the boundary rectangle")
                )
            if grade > bound_row[j]:
                violations.append(
                    Violation(
                        "dominance",
                        (x, y),
                        grade,
                        f"grade must not exceed min of the member grades ({bound_row[j]})",
                    )
                )
    return violations


def relation_report(context: FuzzyRoughSet, rel: FuzzyRelation) -> ValidationReport:
    """Full validation report of a relation against a context."""
    if rel.universe != context.space.universe:
        raise UniverseMismatchError("relation uses a different universe")
    return ValidationReport(tuple(_frr_violations(context, rel)))


def validate_frr(
    context: FuzzyRoughSet, rel: FuzzyRelation
) -> FuzzyRoughRelation | ValidationReport:
    """Check dominance plus the region conditions; value or full report."""
    report = relation_report(context, rel)
    if not report.valid:
        return report
    return FuzzyRoughRelation(context, rel)


def make_frr(context: FuzzyRoughSet, rel: FuzzyRelation) -> FuzzyRoughRelation:
    """Like ``validate_frr`` but raises on the first violation."""
    result = validate_frr(context, rel)
    if isinstance(result, ValidationReport):
        first = result.violations[0]
        raise ConditionViolation(
            first.condition,
            first.witness,
            f"condition ({first.condition}) fails at {first.witness!r}: "
            f"{first.requirement}, found {first.found}",
        )
    return result


def _require_same_context(
    r1: FuzzyRoughRelation, r2: FuzzyRoughRelation
) -> FuzzyRoughSet:
    if r1.context != r2.context:
        raise ContextMismatchError("relations belong to different contexts")
    return r1.context


def frr_combine(
    op: str, r1: FuzzyRoughRelation, r2: FuzzyRoughRelation
) -> tuple[FuzzyRelation, ValidationReport]:
    """Pointwise meet/join/product/algsum plus a fresh validation report.

    Meet, join and product always revalidate cleanly.  Algsum preserves the
    region conditions but can exceed the dominance bound; the report carries
    that as data instead of raising, so callers decide what a flagged
    combination means for them.
    """
    if op not in COMBINE_OPS:
        raise ValueError(f"unknown combinator {op!r}; expected one of {COMBINE_OPS}")
    context = _require_same_context(r1, r2)
    combined = pointwise(op, r1.rel, r2.rel)
    return combined, relation_report(context, combined)


def frr_compose(
    r1: FuzzyRoughRelation, r2: FuzzyRoughRelation
) -> FuzzyRoughRelation:
    """Max-min composition, revalidated in the shared context.

    Composition of two valid relations is always valid, so a failed
    revalidation can only mean a bug and raises ``InternalInvariantError``.
    """
    context = _require_same_context(r1, r2)
    composed = maxmin_compose(r1.rel, r2.rel)
    violations = _frr_violations(context, composed)
    if violations:
        raise InternalInvariantError(
            f"composition of valid relations failed revalidation: {violations[0]}"
        )
    return FuzzyRoughRelation(context, composed)


def is_reflexive_frr(r: FuzzyRoughRelation) -> bool:
    """Diagonal grade 1 at every supported element."""
    m = r.rel.matrix
    return all(m[i][i] == 1 for i in r.context.support_indices())


def diagonal_order(r: FuzzyRoughRelation) -> Grade | None:
    """The common supported diagonal grade, if one exists."""
    m = r.rel.matrix
    support = r.context.support_indices()
    if not support:
        return None
    values = {m[i][i] for i in support}
    if len(values) == 1:
        return next(iter(values))
    return None


def is_weakly_reflexive_frr(r: FuzzyRoughRelation) -> bool:
    """Each supported diagonal grade dominates its whole row."""
    m = r.rel.matrix
    return all(
        m[i][i] >= g for i in r.context.support_indices() for g in m[i]
    )


def is_w_reflexive_frr(r: FuzzyRoughRelation) -> bool:
    """Each diagonal grade dominates the ambient membership grade."""
    m = r.rel.matrix
    return all(m[i][i] >= g for i, g in enumerate(r.context.mu.grades))


def _is_symmetric(matrix: tuple[tuple[Grade, ...], ...]) -> bool:
    n = len(matrix)
    return all(
        matrix[i][j] == matrix[j][i] for i in range(n) for j in range(i + 1, n)
    )


def _is_transitive(matrix: tuple[tuple[Grade, ...], ...]) -> bool:
    n = len(matrix)
    for i in range(n):
        row = matrix[i]
        for j in range(n):
            if max(min(row[u], matrix[u][j]) for u in range(n)) > row[j]:
                return False
    return True


def is_symmetric_transitive(r: FuzzyRoughRelation) -> bool:
    m = r.rel.matrix
    return _is_symmetric(m) and _is_transitive(m)


def similitude_order(r: FuzzyRoughRelation) -> Grade | None:
    """The order of a similitude relation, or None.

    A relation is a similitude relation of some order when its supported
    diagonal is constant and it is symmetric and transitive.  Checks run
    cheapest first so bulk enumeration can discard candidates early.
    """
    order = diagonal_order(r)
    if order is None:
        return None
    m = r.rel.matrix
    if not _is_symmetric(m) or not _is_transitive(m):
        return None
    return order


@dataclass(frozen=True)
class FrrPredicates:
    """The predicate family of a fuzzy rough relation."""

    reflexive: bool
    reflexive_order: Grade | None
    weakly_reflexive: bool
    w_reflexive: bool
    symmetric: bool
    transitive: bool
    similitude: bool
    similitude_order: Grade | None


def frr_predicates(r: FuzzyRoughRelation) -> FrrPredicates:
    """Evaluate every predicate of the family on one relation.

    ``reflexive_order`` is the common supported diagonal grade when one
    exists; ``similitude_order`` additionally requires symmetry and
    transitivity.  The predicates report what holds; none of them is an
    existence claim.
    """
    m = r.rel.matrix
    order = diagonal_order(r)
    reflexive = is_reflexive_frr(r)
    symmetric = _is_symmetric(m)
    transitive = _is_transitive(m)
    return FrrPredicates(
        reflexive=reflexive,
        reflexive_order=order,
        weakly_reflexive=is_weakly_reflexive_frr(r),
        w_reflexive=is_w_reflexive_frr(r),
        symmetric=symmetric,
        transitive=transitive,
        similitude=reflexive and symmetric and transitive,
        similitude_order=order if symmetric and transitive else None,
    )


@dataclass(frozen=True)
class RelationClass:
    """The fuzzy set a similitude relation induces at one anchor element."""

    anchor: Element
    grades: FuzzySet


def similitude_class(r: FuzzyRoughRelation, x: Element) -> RelationClass:
    """Row of the relation at a supported anchor, as a fuzzy set."""
    if similitude_order(r) is None:
        raise NotSimilitudeError("relation is not a similitude relation of any order")
    if r.context.mu.grade(x) == 0:
        raise ZeroSupportError(f"element {x!r} has zero membership grade")
    return RelationClass(x, FuzzySet(r.context.space.universe, r.rel.row(x)))


@dataclass(frozen=True)
class PropertyCheck:
    """Outcome of one class-structure property.

    ``checked`` counts the cases whose hypothesis actually fired; a passed
    property with ``checked == 0`` held vacuously.
    """

    passed: bool
    checked: int
    witness: tuple | None = None


@dataclass(frozen=True)
class ClassStructureReport:
    order: Grade
    anchors: tuple[Element, ...]
    checks: dict[str, PropertyCheck]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks.values())


def check_theorem_49(r: FuzzyRoughRelation) -> ClassStructureReport:
    """Class-structure properties of a similitude relation of order alpha.

    For anchors x, y with positive membership and any universe elements:
    (i) each anchor's class takes the order value at the anchor itself;
    (ii) classes of two anchors agree crosswise; (iii) positive overlap is
    transitive across class supports; (iv) a zero grade between an anchor
    and any element forces their classes to have empty pointwise min, where
    the class of an unsupported element is its (all-zero) relation row.
    """
    order = similitude_order(r)
    if order is None:
        raise NotSimilitudeError("relation is not a similitude relation of any order")
    elements = r.context.space.universe.elements
    m = r.rel.matrix
    n = len(elements)
    support = r.context.support_indices()
    anchors = tuple(elements[i] for i in support)

    anchor_checked = 0
    anchor_witness = None
    for i in support:
        anchor_checked += 1
        if m[i][i] != order and anchor_witness is None:
            anchor_witness = (elements[i], m[i][i])
    check_i = PropertyCheck(anchor_witness is None, anchor_checked, anchor_witness)

    sym_checked = 0
    sym_witness = None
    for i in support:
        for j in support:
            sym_checked += 1
            if m[i][j] != m[j][i] and sym_witness is None:
                sym_witness = (elements[i], elements[j], m[i][j], m[j][i])
    check_ii = PropertyCheck(sym_witness is None, sym_checked, sym_witness)

    overlap_checked = 0
    overlap_witness = None
    for i in support:
        for j in support:
            if m[i][j] == 0:
                continue
            for k in range(n):
                if m[j][k] == 0:
                    continue
                overlap_checked += 1
                if m[i][k] == 0 and overlap_witness is None:
                    overlap_witness = (elements[i], elements[j], elements[k])
    check_iii = PropertyCheck(overlap_witness is None, overlap_checked, overlap_witness)

    empty_checked = 0
    empty_witness = None
    for i in support:
        for j in range(n):
            if m[i][j] != 0:
                continue
            empty_checked += 1
            for k in range(n):
                if min(m[i][k], m[j][k]) > 0:
                    if empty_witness is None:
                        empty_witness = (elements[i], elements[j], elements[k])
                    break
    check_iv = PropertyCheck(empty_witness is None, empty_checked, empty_witness)

    return ClassStructureReport(
        order,
        anchors,
        {"i": check_i, "ii": check_ii, "iii": check_iii, "iv": check_iv},
    )
