"""Instance file input and output.

One JSON document carries a whole context: universe, partition, the rough
subset, the membership map and any number of named relations.  Grades are
written as exact ``"p/q"`` literals so a parse/serialize/parse cycle is
bit-identical; on input a plain decimal string such as ``"0.25"`` is also
accepted and converted exactly.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .errors import FuzzyRoughError, InstanceFormatError
from .fuzzy import FuzzyRelation, FuzzySet, Grade
from .rough import ApproximationSpace, Element, Universe, make_space

_FRACTION_RE = re.compile(r"^(\d+)/(\d+)$")
_DECIMAL_RE = re.compile(r"^\d+(\.\d+)?$")

_TOP_KEYS = {"universe", "partition", "X", "mu", "relations"}


@dataclass(frozen=True)
class Instance:
    """In-memory form of one instance file."""

    space: ApproximationSpace
    members: tuple[Element, ...]
    mu: FuzzySet
    relations: dict[str, FuzzyRelation]

    @property
    def universe(self) -> Universe:
        return self.space.universe


def parse_grade(literal) -> Grade:
    """Parse an exact grade literal: ``"p/q"`` or a decimal string."""
    if not isinstance(literal, str):
        raise InstanceFormatError(
            f"grade literal must be a string, got {literal!r}"
        )
    match = _FRACTION_RE.match(literal)
    if match:
        numerator, denominator = int(match.group(1)), int(match.group(2))
        if denominator == 0:
            raise InstanceFormatError(f"grade literal {literal!r} divides by zero")
        value = Fraction(numerator, denominator)
    elif _DECIMAL_RE.match(literal):
        value = Fraction(literal)
    else:
        raise InstanceFormatError(f"malformed grade literal {literal!r}")
    if value > 1:
        raise InstanceFormatError(f"grade literal {literal!r} is above 1")
    return value


def format_grade(grade: Grade) -> str:
    return f"{grade.numerator}/{grade.denominator}"


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise InstanceFormatError(message)


def parse_instance(data) -> Instance:
    """Build an ``Instance`` from a decoded JSON object."""
    _expect(isinstance(data, dict), "instance must be a JSON object")
    unknown = set(data) - _TOP_KEYS
    _expect(not unknown, f"unknown keys {sorted(unknown)!r} in instance")
    for key in ("universe", "partition", "X", "mu"):
        _expect(key in data, f"missing key {key!r} in instance")

    raw_universe = data["universe"]
    _expect(
        isinstance(raw_universe, list)
        and all(isinstance(el, str) for el in raw_universe),
        "universe must be a list of symbols",
    )
    try:
        universe = Universe(tuple(raw_universe))
    except ValueError as exc:
        raise InstanceFormatError(str(exc)) from None

    raw_partition = data["partition"]
    _expect(
        isinstance(raw_partition, list)
        and all(
            isinstance(block, list) and all(isinstance(el, str) for el in block)
            for block in raw_partition
        ),
        "partition must be a list of symbol lists",
    )
    space = make_space(universe, raw_partition)

    raw_members = data["X"]
    _expect(
        isinstance(raw_members, list)
        and all(isinstance(el, str) for el in raw_members),
        "X must be a list of symbols",
    )
    members = universe.ordered(raw_members)

    raw_mu = data["mu"]
    _expect(isinstance(raw_mu, dict), "mu must be an object mapping symbols to grades")
    grades = {}
    for el, literal in raw_mu.items():
        _expect(el in universe, f"mu names unknown element {el!r}")
        grades[el] = parse_grade(literal)
    mu = FuzzySet.from_mapping(universe, grades)

    relations: dict[str, FuzzyRelation] = {}
    raw_relations = data.get("relations", {})
    _expect(isinstance(raw_relations, dict), "relations must be an object")
    for name, body in raw_relations.items():
        _expect(isinstance(body, dict), f"relation {name!r} must be an object")
        extra = set(body) - {"pairs"}
        _expect(not extra, f"unknown keys {sorted(extra)!r} in relation {name!r}")
        raw_pairs = body.get("pairs", [])
        _expect(isinstance(raw_pairs, list), f"pairs of {name!r} must be a list")
        mapping: dict[tuple[str, str], Grade] = {}
        for entry in raw_pairs:
            _expect(
                isinstance(entry, list)
                and len(entry) == 3
                and isinstance(entry[0], str)
                and isinstance(entry[1], str),
                f"each pair of {name!r} must be [x, y, grade]",
            )
            x, y, literal = entry
            _expect(x in universe, f"relation {name!r} names unknown element {x!r}")
            _expect(y in universe, f"relation {name!r} names unknown element {y!r}")
            _expect(
                (x, y) not in mapping,
                f"duplicate pair ({x!r}, {y!r}) in relation {name!r}",
            )
            mapping[(x, y)] = parse_grade(literal)
        relations[name] = FuzzyRelation.from_mapping(universe, mapping)

    return Instance(space, members, mu, relations)


def serialize_instance(instance: Instance) -> dict:
    """JSON-ready form; grades in lowest terms, zero pairs omitted."""
    return {
        "universe": list(instance.universe.elements),
        "partition": [list(block) for block in instance.space.blocks],
        "X": list(instance.members),
        "mu": {
            el: format_grade(g)
            for el, g in zip(instance.universe.elements, instance.mu.grades)
        },
        "relations": {
            name: {
                "pairs": [
                    [x, y, format_grade(g)]
                    for (x, y), g in relation.items()
                    if g != 0
                ]
            }
            for name, relation in instance.relations.items()
        },
    }


def load_instance(path) -> Instance:
    """Read and parse an instance file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InstanceFormatError(f"cannot read {path}: {exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"invalid JSON in {path}: {exc}") from None
    try:
        return parse_instance(data)
    except InstanceFormatError:
        raise
    except FuzzyRoughError as exc:
        raise InstanceFormatError(f"{path}: {exc}") from None


def dump_instance(instance: Instance, path) -> None:
    """Write an instance file (two-space indent, trailing newline)."""
    Path(path).write_text(
        json.dumps(serialize_instance(instance), indent=2) + "\n",
        encoding="utf-8",
    )
