"""Finite approximation spaces.

A space is a finite universe together with an equivalence relation given by
its partition into blocks.  The module computes equivalence classes, lower
and upper approximations of subsets and of relations, and the rectangle
regions that a subset induces on the product universe.

Two independent routes exist for relation approximations on purpose:
``approx_relation`` evaluates the product-class definition pair by pair,
while ``rect_regions`` builds the same regions from the one-dimensional
approximations.  Tests compare them exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import (
    CoverageError,
    EmptyBlockError,
    OverlapError,
    UnknownElementError,
)

Element = str
Pair = tuple[Element, Element]


@dataclass(frozen=True)
class Universe:
    """Ordered collection of distinct element symbols.

    Iteration and every derived set output follow the declared order, which
    keeps reports and serializations deterministic.
    """

    elements: tuple[Element, ...]
    _index: dict[Element, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        elements = tuple(self.elements)
        if not elements:
            raise ValueError("universe must contain at least one element")
        index: dict[Element, int] = {}
        for i, el in enumerate(elements):
            if el in index:
                raise ValueError(f"duplicate element {el!r} in universe")
            index[el] = i
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "_index", index)

    def __iter__(self) -> Iterator[Element]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, element: object) -> bool:
        return element in self._index

    def index(self, element: Element) -> int:
        try:
            return self._index[element]
        except KeyError:
            raise UnknownElementError(
                f"element {element!r} is not in the universe"
            ) from None

    def ordered(self, members: Iterable[Element]) -> tuple[Element, ...]:
        """Deduplicate ``members`` and return them in declaration order."""
        chosen = {self.index(m) for m in members}
        return tuple(el for i, el in enumerate(self.elements) if i in chosen)

    def pairs(self) -> Iterator[Pair]:
        """All ordered pairs, row-major in declaration order."""
        for x in self.elements:
            for y in self.elements:
                yield (x, y)


@dataclass(frozen=True)
class ApproximationSpace:
    """A universe plus the partition induced by its equivalence relation."""

    universe: Universe
    blocks: tuple[tuple[Element, ...], ...]
    _block_of: dict[Element, tuple[Element, ...]] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        block_of: dict[Element, tuple[Element, ...]] = {}
        for block in self.blocks:
            for el in block:
                block_of[el] = block
        object.__setattr__(self, "_block_of", block_of)

    def block_of(self, element: Element) -> tuple[Element, ...]:
        self.universe.index(element)
        return self._block_of[element]


@dataclass(frozen=True)
class ApproxResult:
    """Lower/upper approximations of a subset, plus their difference."""

    lower: tuple[Element, ...]
    upper: tuple[Element, ...]
    boundary: tuple[Element, ...]


@dataclass(frozen=True)
class PairApprox:
    """Lower/upper approximations of a relation on the product universe."""

    lower: tuple[Pair, ...]
    upper: tuple[Pair, ...]


@dataclass(frozen=True)
class RectRegions:
    """Rectangle regions that a subset induces on the product universe."""

    lower_rect: tuple[Pair, ...]
    upper_rect: tuple[Pair, ...]
    boundary_rect: tuple[Pair, ...]


def make_space(
    universe: Universe, blocks: Iterable[Iterable[Element]]
) -> ApproximationSpace:
    """Validate a partition and build the approximation space.

    Raises ``OverlapError``, ``CoverageError``, ``EmptyBlockError`` or
    ``UnknownElementError`` when the blocks are not a partition of the
    universe.
    """
    seen: dict[Element, int] = {}
    canonical: list[tuple[int, tuple[Element, ...]]] = []
    for raw in blocks:
        members = universe.ordered(raw)  # raises UnknownElementError
        if not members:
            raise EmptyBlockError("partition blocks must be non-empty")
        for el in members:
            if el in seen:
                raise OverlapError(f"element {el!r} appears in two blocks")
            seen[el] = 1
        canonical.append((universe.index(members[0]), members))
    missing = [el for el in universe if el not in seen]
    if missing:
        raise CoverageError(f"elements {missing!r} belong to no block")
    canonical.sort()
    return ApproximationSpace(universe, tuple(b for _, b in canonical))


def eq_class(space: ApproximationSpace, x: Element) -> tuple[Element, ...]:
    """The unique partition block containing ``x``."""
    return space.block_of(x)


def approx_set(space: ApproximationSpace, members: Iterable[Element]) -> ApproxResult:
    """Lower and upper approximations of a subset of the universe.

    Lower: union of blocks contained in the subset.  Upper: union of blocks
    meeting it.
    """
    member_set = set(space.universe.ordered(members))
    lower: list[Element] = []
    upper: list[Element] = []
    for block in space.blocks:
        inside = sum(1 for el in block if el in member_set)
        if inside == len(block):
            lower.extend(block)
        if inside:
            upper.extend(block)
    lower_t = space.universe.ordered(lower)
    upper_t = space.universe.ordered(upper)
    boundary = tuple(el for el in upper_t if el not in set(lower_t))
    return ApproxResult(lower_t, upper_t, boundary)


def is_rough(space: ApproximationSpace, members: Iterable[Element]) -> bool:
    """True iff the subset's boundary region is non-empty."""
    return bool(approx_set(space, members).boundary)


def product_class(
    space: ApproximationSpace, x: Element, y: Element
) -> tuple[Pair, ...]:
    """Equivalence class of ``(x, y)`` in the product space.

    It is the Cartesian product of the blocks of ``x`` and ``y``.
    """
    bx = space.block_of(x)
    by = space.block_of(y)
    return tuple((u, v) for u in bx for v in by)


def approx_relation(
    space: ApproximationSpace, pairs: Iterable[Pair]
) -> PairApprox:
    """Lower/upper approximations of a relation, pair by pair.

    A pair is in the lower approximation when its whole product class is
    contained in the relation, and in the upper one when the class meets it.
    """
    relation = set()
    for x, y in pairs:
        space.universe.index(x)
        space.universe.index(y)
        relation.add((x, y))
    lower: list[Pair] = []
    upper: list[Pair] = []
    for x, y in space.universe.pairs():
        cls = product_class(space, x, y)
        hits = sum(1 for p in cls if p in relation)
        if hits == len(cls):
            lower.append((x, y))
        if hits:
            upper.append((x, y))
    return PairApprox(tuple(lower), tuple(upper))


def rect_regions(
    space: ApproximationSpace, members: Iterable[Element]
) -> RectRegions:
    """Rectangle regions of the product of a subset with itself.

    Because product classes are rectangles, the lower (upper) approximation
    of the product relation equals the square of the one-dimensional lower
    (upper) approximation; this route is quadratic instead of quartic.
    """
    approx = approx_set(space, members)
    lower_set = set(approx.lower)
    lower_rect: list[Pair] = []
    upper_rect: list[Pair] = []
    boundary_rect: list[Pair] = []
    upper_set = set(approx.upper)
    for x, y in space.universe.pairs():
        if x in upper_set and y in upper_set:
            upper_rect.append((x, y))
            if x in lower_set and y in lower_set:
                lower_rect.append((x, y))
            else:
                boundary_rect.append((x, y))
    return RectRegions(tuple(lower_rect), tuple(upper_rect), tuple(boundary_rect))
