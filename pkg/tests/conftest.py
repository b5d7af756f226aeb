import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import fuzzyrough as fr

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


@pytest.fixture
def quad():
    """Four elements in two blocks, X = {a, b, c}: boundary is {c, d}."""
    universe = fr.Universe(("a", "b", "c", "d"))
    space = fr.make_space(universe, [("a", "b"), ("c", "d")])
    members = ("a", "b", "c")
    mu = fr.FuzzySet.from_mapping(
        universe, {"a": 1, "b": 1, "c": HALF, "d": QUARTER}
    )
    return space, members, mu


@pytest.fixture
def quad_frs(quad):
    space, members, mu = quad
    return fr.make_frs(space, members, mu)


@pytest.fixture
def pair_ctx():
    """One two-element block, X = {a}: everything is boundary."""
    universe = fr.Universe(("a", "b"))
    space = fr.make_space(universe, [("a", "b")])
    mu = fr.FuzzySet.constant(universe, HALF)
    frs = fr.make_frs(space, ("a",), mu)
    r1 = fr.make_frr(frs, fr.FuzzyRelation.constant(universe, HALF))
    r2 = fr.make_frr(frs, fr.FuzzyRelation.constant(universe, QUARTER))
    return frs, r1, r2
