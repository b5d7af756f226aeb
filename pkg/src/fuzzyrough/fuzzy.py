"""Fuzzy sets and fuzzy relations over a finite universe.

Membership grades are exact rationals (``fractions.Fraction``), never
floats: the predicates below test exact equalities like ``grade == 1`` and
strict inequalities like ``0 < grade < 1``, which tolerance arithmetic would
silently blur.  ``fractions.Fraction`` already stores lowest terms and
compares exactly, so it is used directly as the grade type.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .errors import GradeRangeError, UniverseMismatchError, UnknownElementError
from .rough import Element, Pair, Universe

Grade = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def as_grade(value) -> Grade:
    """Coerce ``value`` to an exact grade in [0, 1]."""
    grade = value if type(value) is Fraction else Fraction(value)
    if grade < 0 or grade > 1:
        raise GradeRangeError(f"grade {grade} is outside [0, 1]")
    return grade


def _product(a: Grade, b: Grade) -> Grade:
    return a * b


def _algsum(a: Grade, b: Grade) -> Grade:
    return a + b - a * b


GRADE_OPS: dict[str, Callable[[Grade, Grade], Grade]] = {
    "min": min,
    "max": max,
    "product": _product,
    "algsum": _algsum,
}

# Relation-level combinator names; meet/join are the lattice views of min/max.
COMBINATOR_ALIASES = {"meet": "min", "join": "max"}


def grade_combine(op: str, a: Grade, b: Grade) -> Grade:
    """Combine two grades with ``min``, ``max``, ``product`` or ``algsum``.

    All four operations are closed on [0, 1], so the result is always a
    valid grade.
    """
    fn = GRADE_OPS.get(COMBINATOR_ALIASES.get(op, op))
    if fn is None:
        raise ValueError(f"unknown grade combinator {op!r}")
    return fn(as_grade(a), as_grade(b))


@dataclass(frozen=True)
class FuzzySet:
    """A total membership map from the universe to exact grades."""

    universe: Universe
    grades: tuple[Grade, ...]

    def __post_init__(self):
        grades = tuple(as_grade(g) for g in self.grades)
        if len(grades) != len(self.universe):
            raise ValueError("one grade per universe element is required")
        object.__setattr__(self, "grades", grades)

    @classmethod
    def from_mapping(
        cls, universe: Universe, mapping: Mapping[Element, object]
    ) -> FuzzySet:
        """Build from a mapping; absent elements default to grade 0."""
        for el in mapping:
            if el not in universe:
                raise UnknownElementError(f"element {el!r} is not in the universe")
        return cls(
            universe,
            tuple(as_grade(mapping.get(el, 0)) for el in universe),
        )

    @classmethod
    def constant(cls, universe: Universe, grade) -> FuzzySet:
        return cls(universe, (as_grade(grade),) * len(universe))

    @classmethod
    def empty(cls, universe: Universe) -> FuzzySet:
        """The distinguished all-zero fuzzy set."""
        return cls.constant(universe, 0)

    def grade(self, element: Element) -> Grade:
        return self.grades[self.universe.index(element)]

    def __getitem__(self, element: Element) -> Grade:
        return self.grade(element)

    @property
    def is_empty(self) -> bool:
        return all(g == 0 for g in self.grades)

    def support(self) -> tuple[Element, ...]:
        """Elements with strictly positive grade, in universe order."""
        return tuple(
            el for el, g in zip(self.universe.elements, self.grades) if g > 0
        )

    def as_mapping(self) -> dict[Element, Grade]:
        return dict(zip(self.universe.elements, self.grades))


@dataclass(frozen=True)
class FuzzyRelation:
    """A total membership map on the product universe, stored row-major."""

    universe: Universe
    matrix: tuple[tuple[Grade, ...], ...]

    def __post_init__(self):
        n = len(self.universe)
        matrix = tuple(tuple(as_grade(g) for g in row) for row in self.matrix)
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise ValueError("matrix shape must match the universe size")
        object.__setattr__(self, "matrix", matrix)

    @classmethod
    def from_mapping(
        cls, universe: Universe, mapping: Mapping[Pair, object]
    ) -> FuzzyRelation:
        """Build from a pair mapping; absent pairs default to grade 0."""
        n = len(universe)
        rows = [[ZERO] * n for _ in range(n)]
        for (x, y), g in mapping.items():
            rows[universe.index(x)][universe.index(y)] = as_grade(g)
        return cls(universe, tuple(tuple(row) for row in rows))

    @classmethod
    def from_function(
        cls, universe: Universe, fn: Callable[[Element, Element], object]
    ) -> FuzzyRelation:
        return cls(
            universe,
            tuple(
                tuple(as_grade(fn(x, y)) for y in universe.elements)
                for x in universe.elements
            ),
        )

    @classmethod
    def constant(cls, universe: Universe, grade) -> FuzzyRelation:
        g = as_grade(grade)
        n = len(universe)
        return cls(universe, ((g,) * n,) * n)

    @classmethod
    def identity(cls, universe: Universe) -> FuzzyRelation:
        """Grade 1 on the diagonal, 0 elsewhere."""
        n = len(universe)
        return cls(
            universe,
            tuple(
                tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)
            ),
        )

    def grade(self, x: Element, y: Element) -> Grade:
        return self.matrix[self.universe.index(x)][self.universe.index(y)]

    def row(self, x: Element) -> tuple[Grade, ...]:
        return self.matrix[self.universe.index(x)]

    def items(self) -> Iterable[tuple[Pair, Grade]]:
        """All ``((x, y), grade)`` entries in row-major universe order."""
        for i, x in enumerate(self.universe.elements):
            for j, y in enumerate(self.universe.elements):
                yield (x, y), self.matrix[i][j]


@dataclass(frozen=True)
class FuzzyPredicates:
    """Classical relation predicates relative to a support set."""

    reflexive: bool
    symmetric: bool
    transitive: bool


@dataclass(frozen=True)
class DominanceCheck:
    """Outcome of a pointwise upper-bound comparison."""

    holds: bool
    witness: Pair | None = None
    found: Grade | None = None
    limit: Grade | None = None


def _require_same_universe(r1: FuzzyRelation, r2: FuzzyRelation) -> None:
    if r1.universe != r2.universe:
        raise UniverseMismatchError("relations are defined on different universes")


def pointwise(op: str, r1: FuzzyRelation, r2: FuzzyRelation) -> FuzzyRelation:
    """Combine two relations cell by cell with a grade combinator."""
    _require_same_universe(r1, r2)
    fn = GRADE_OPS.get(COMBINATOR_ALIASES.get(op, op))
    if fn is None:
        raise ValueError(f"unknown grade combinator {op!r}")
    return FuzzyRelation(
        r1.universe,
        tuple(
            tuple(fn(a, b) for a, b in zip(row1, row2))
            for row1, row2 in zip(r1.matrix, r2.matrix)
        ),
    )


def product_set(marginals: FuzzySet) -> FuzzyRelation:
    """The product relation ``(x, y) -> min(grade(x), grade(y))``."""
    grades = marginals.grades
    return FuzzyRelation(
        marginals.universe,
        tuple(tuple(min(gx, gy) for gy in grades) for gx in grades),
    )


def maxmin_compose(r1: FuzzyRelation, r2: FuzzyRelation) -> FuzzyRelation:
    """Max-min composition: sup over middle elements of the min of grades."""
    _require_same_universe(r1, r2)
    m1, m2 = r1.matrix, r2.matrix
    n = len(r1.universe)
    rows = []
    for i in range(n):
        row1 = m1[i]
        rows.append(
            tuple(
                max(min(row1[u], m2[u][j]) for u in range(n)) for j in range(n)
            )
        )
    return FuzzyRelation(r1.universe, tuple(rows))


def fuzzy_predicates(relation: FuzzyRelation, support: FuzzySet) -> FuzzyPredicates:
    """Reflexivity, symmetry and transitivity of a fuzzy relation.

    Reflexivity requires grade 1 on the diagonal at every element whose
    ``support`` grade is positive; pass a constant-1 set for the
    unconditional reading.  Transitivity means the relation dominates its
    own max-min square pointwise.
    """
    if relation.universe != support.universe:
        raise UniverseMismatchError("relation and support use different universes")
    m = relation.matrix
    n = len(relation.universe)
    reflexive = all(
        m[i][i] == 1 for i in range(n) if support.grades[i] > 0
    )
    symmetric = all(m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n))
    square = maxmin_compose(relation, relation).matrix
    transitive = all(
        m[i][j] >= square[i][j] for i in range(n) for j in range(n)
    )
    return FuzzyPredicates(reflexive, symmetric, transitive)


def dominates(relation: FuzzyRelation, bound: FuzzyRelation) -> DominanceCheck:
    """Check ``relation <= bound`` cell by cell.

    On failure, reports the first violating pair in row-major universe
    order together with both grades.
    """
    _require_same_universe(relation, bound)
    elements = relation.universe.elements
    for i, x in enumerate(elements):
        row = relation.matrix[i]
        limit_row = bound.matrix[i]
        for j, y in enumerate(elements):
            if row[j] > limit_row[j]:
                return DominanceCheck(False, (x, y), row[j], limit_row[j])
    return DominanceCheck(True)
