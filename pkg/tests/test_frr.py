from fractions import Fraction

import pytest

import fuzzyrough as fr
import oracles

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)
THREE_QUARTERS = Fraction(3, 4)


def _report(result):
    assert isinstance(result, fr.ValidationReport)
    return result


def _witnesses(report):
    return {(v.condition, v.witness) for v in report.violations}


# --- membership-map validation ------------------------------------------------


def test_validate_frs_accepts_quad(quad):
    space, members, mu = quad
    result = fr.validate_frs(space, members, mu)
    assert isinstance(result, fr.FuzzyRoughSet)
    assert result.approx.lower == ("a", "b")
    assert result.approx.boundary == ("c", "d")


def test_validate_frs_flags_low_grade_on_lower_region(quad):
    space, members, _ = quad
    mu = fr.FuzzySet.from_mapping(
        space.universe, {"a": HALF, "b": 1, "c": HALF, "d": QUARTER}
    )
    report = _report(fr.validate_frs(space, members, mu))
    assert ("i", "a") in _witnesses(report)


def test_validate_frs_flags_zero_on_boundary(quad):
    space, members, _ = quad
    mu = fr.FuzzySet.from_mapping(
        space.universe, {"a": 1, "b": 1, "c": 0, "d": QUARTER}
    )
    report = _report(fr.validate_frs(space, members, mu))
    assert ("iii", "c") in _witnesses(report)


def test_validate_frs_flags_definable_subset(quad):
    space, _, _ = quad
    mu = fr.FuzzySet.from_mapping(space.universe, {"a": 1, "b": 1})
    report = _report(fr.validate_frs(space, ("a", "b"), mu))
    assert ("not_rough", None) in _witnesses(report)


def test_validate_frs_lists_every_violation(quad):
    space, members, _ = quad
    mu = fr.FuzzySet.from_mapping(
        space.universe, {"a": HALF, "b": 1, "c": 1, "d": QUARTER}
    )
    report = _report(fr.validate_frs(space, members, mu))
    assert _witnesses(report) == {("i", "a"), ("iii", "c")}


def test_make_frs_raises(quad):
    space, members, _ = quad
    with pytest.raises(fr.NotRoughError):
        fr.make_frs(space, ("a", "b"), fr.FuzzySet.from_mapping(space.universe, {"a": 1, "b": 1}))
    bad = fr.FuzzySet.from_mapping(space.universe, {"a": 1, "b": 1, "c": 0, "d": 0})
    with pytest.raises(fr.ConditionViolation) as info:
        fr.make_frs(space, members, bad)
    assert info.value.condition == "iii"
    assert info.value.witness == "c"


def test_validate_frs_rejects_foreign_universe(quad):
    space, members, _ = quad
    other = fr.FuzzySet.constant(fr.Universe(("x", "y")), HALF)
    with pytest.raises(fr.UniverseMismatchError):
        fr.validate_frs(space, members, other)


# --- relation validation -------------------------------------------------------


def test_validate_frr_accepts_half_constant(pair_ctx):
    frs, r1, _ = pair_ctx
    again = fr.validate_frr(frs, r1.rel)
    assert isinstance(again, fr.FuzzyRoughRelation)


def test_validate_frr_flags_one_on_boundary(pair_ctx):
    frs, _, _ = pair_ctx
    rel = fr.FuzzyRelation.from_mapping(
        frs.universe,
        {("a", "a"): 1, ("a", "b"): HALF, ("b", "a"): HALF, ("b", "b"): HALF},
    )
    report = _report(fr.validate_frr(frs, rel))
    assert ("iii", ("a", "a")) in _witnesses(report)
    # grade 1 also breaks the dominance bound 1/2 at the same cell
    assert ("dominance", ("a", "a")) in _witnesses(report)


def test_validate_frr_flags_dominance_only(pair_ctx):
    frs, _, _ = pair_ctx
    rel = fr.FuzzyRelation.from_mapping(
        frs.universe,
        {("a", "a"): HALF, ("a", "b"): THREE_QUARTERS, ("b", "a"): HALF, ("b", "b"): HALF},
    )
    report = _report(fr.validate_frr(frs, rel))
    assert _witnesses(report) == {("dominance", ("a", "b"))}


def test_validate_frr_quad_context(quad_frs):
    # bounds on the boundary rectangle double as admissible strict grades
    rel = fr.FuzzyRelation(
        quad_frs.universe,
        tuple(
            tuple(
                Fraction(1) if code == fr.frr.LOWER else
                quad_frs.bounds[i][j] if code == fr.frr.BOUNDARY else
                Fraction(0)
                for j, code in enumerate(row)
            )
            for i, row in enumerate(quad_frs.region_codes)
        ),
    )
    assert isinstance(fr.validate_frr(quad_frs, rel), fr.FuzzyRoughRelation)


def test_make_frr_raises_with_witness(pair_ctx):
    frs, _, _ = pair_ctx
    rel = fr.FuzzyRelation.from_mapping(frs.universe, {("a", "a"): HALF})
    with pytest.raises(fr.ConditionViolation) as info:
        fr.make_frr(frs, rel)
    assert info.value.condition == "iii"


def test_validation_matches_oracle_on_enumerated_neighbourhood():
    # every valid relation at n <= 2 plus every single-cell perturbation
    grid = oracles.grade_grid(3, closed=True)
    for space in fr.enumerate_spaces(2):
        for members, _, _ in fr.enumerate_rough_contexts(space):
            for frs in fr.enumerate_frs(space, members, 3):
                mu = frs.mu.as_mapping()
                for frr in fr.enumerate_frr(frs, 3).relations:
                    candidates = [frr.rel]
                    base = {pair: g for pair, g in frr.rel.items()}
                    for pair in space.universe.pairs():
                        for value in grid:
                            if value == base[pair]:
                                continue
                            mutated = dict(base)
                            mutated[pair] = value
                            candidates.append(
                                fr.FuzzyRelation.from_mapping(space.universe, mutated)
                            )
                    for rel in candidates:
                        expected = oracles.frr_violations(
                            space.universe.elements,
                            space.blocks,
                            frs.members,
                            mu,
                            {pair: g for pair, g in rel.items()},
                        )
                        result = fr.validate_frr(frs, rel)
                        if isinstance(result, fr.FuzzyRoughRelation):
                            assert expected == set()
                        else:
                            assert {
                                (v.condition, v.witness) for v in result.violations
                            } == expected


# --- combinators and composition ----------------------------------------------


def test_combine_meet_product_valid(pair_ctx):
    _, r1, r2 = pair_ctx
    met, report = fr.frr_combine("meet", r1, r2)
    assert report.valid
    assert all(g == QUARTER for _, g in met.items())
    times, report = fr.frr_combine("product", r1, r2)
    assert report.valid
    assert all(g == Fraction(1, 8) for _, g in times.items())


def test_combine_algsum_flags_dominance_only(pair_ctx):
    _, r1, r2 = pair_ctx
    summed, report = fr.frr_combine("algsum", r1, r2)
    assert all(g == Fraction(5, 8) for _, g in summed.items())
    assert not report.valid
    assert report.conditions() == ("dominance",)
    assert report.violations[0].witness == ("a", "a")


def test_combine_rejects_unknown_op(pair_ctx):
    _, r1, r2 = pair_ctx
    with pytest.raises(ValueError):
        fr.frr_combine("xor", r1, r2)


def test_combine_rejects_context_mismatch(pair_ctx):
    frs, r1, _ = pair_ctx
    other_mu = fr.FuzzySet.constant(frs.universe, QUARTER)
    other = fr.make_frs(frs.space, frs.members, other_mu)
    foreign = fr.make_frr(other, fr.FuzzyRelation.constant(frs.universe, QUARTER))
    with pytest.raises(fr.ContextMismatchError):
        fr.frr_combine("meet", r1, foreign)


def test_compose_constants(pair_ctx):
    _, r1, r2 = pair_ctx
    composed = fr.frr_compose(r1, r2)
    assert all(g == QUARTER for _, g in composed.rel.items())
    assert all(g == HALF for _, g in fr.frr_compose(r1, r1).rel.items())


def test_compose_keeps_lower_rectangle_at_one(quad_frs):
    rel = fr.FuzzyRelation(
        quad_frs.universe,
        tuple(
            tuple(
                Fraction(1) if code == fr.frr.LOWER else
                quad_frs.bounds[i][j] / 2 if code == fr.frr.BOUNDARY else
                Fraction(0)
                for j, code in enumerate(row)
            )
            for i, row in enumerate(quad_frs.region_codes)
        ),
    )
    frr = fr.make_frr(quad_frs, rel)
    composed = fr.frr_compose(frr, frr)
    for x in ("a", "b"):
        for y in ("a", "b"):
            assert composed.grade(x, y) == 1


def test_compose_agrees_with_oracle(pair_ctx):
    frs, r1, r2 = pair_ctx
    elements = frs.universe.elements
    expected = oracles.compose(
        elements,
        {pair: g for pair, g in r1.rel.items()},
        {pair: g for pair, g in r2.rel.items()},
    )
    composed = fr.frr_compose(r1, r2)
    assert all(composed.grade(x, y) == expected[(x, y)] for x, y in frs.universe.pairs())


# --- predicate family -----------------------------------------------------------


def test_predicates_on_half_constant(pair_ctx):
    _, r1, _ = pair_ctx
    record = fr.frr_predicates(r1)
    assert record == fr.FrrPredicates(
        reflexive=False,
        reflexive_order=HALF,
        weakly_reflexive=True,
        w_reflexive=True,
        symmetric=True,
        transitive=True,
        similitude=False,
        similitude_order=HALF,
    )


def test_predicates_detect_asymmetry(pair_ctx):
    frs, _, _ = pair_ctx
    rel = fr.FuzzyRelation.from_mapping(
        frs.universe,
        {("a", "a"): HALF, ("a", "b"): QUARTER, ("b", "a"): HALF, ("b", "b"): HALF},
    )
    record = fr.frr_predicates(fr.make_frr(frs, rel))
    assert not record.symmetric
    assert record.similitude_order is None


def test_symmetric_transitive_implies_weakly_reflexive_small_sweep():
    for space in fr.enumerate_spaces(2):
        for members, _, _ in fr.enumerate_rough_contexts(space):
            for frs in fr.enumerate_frs(space, members, 4):
                for frr in fr.enumerate_frr(frs, 4).relations:
                    if fr.is_symmetric_transitive(frr):
                        assert fr.is_weakly_reflexive_frr(frr)


def test_mixed_diagonal_has_no_order(pair_ctx):
    frs, _, _ = pair_ctx
    rel = fr.FuzzyRelation.from_mapping(
        frs.universe,
        {("a", "a"): HALF, ("a", "b"): QUARTER, ("b", "a"): QUARTER, ("b", "b"): QUARTER},
    )
    assert fr.diagonal_order(fr.make_frr(frs, rel)) is None


# --- similitude classes ----------------------------------------------------------


def test_similitude_class_rows(pair_ctx):
    _, r1, _ = pair_ctx
    cls = fr.similitude_class(r1, "a")
    assert cls.anchor == "a"
    assert cls.grades.as_mapping() == {"a": HALF, "b": HALF}
    # crosswise agreement between anchors
    assert fr.similitude_class(r1, "a").grades["b"] == fr.similitude_class(r1, "b").grades["a"]


def test_similitude_class_requires_similitude(pair_ctx):
    frs, _, _ = pair_ctx
    rel = fr.FuzzyRelation.from_mapping(
        frs.universe,
        {("a", "a"): HALF, ("a", "b"): QUARTER, ("b", "a"): HALF, ("b", "b"): HALF},
    )
    with pytest.raises(fr.NotSimilitudeError):
        fr.similitude_class(fr.make_frr(frs, rel), "a")


def _block_diagonal_context():
    """Support block {a, b} with unsupported c: zero rows across."""
    universe = fr.Universe(("a", "b", "c"))
    space = fr.make_space(universe, [("a", "b"), ("c",)])
    mu = fr.FuzzySet.from_mapping(universe, {"a": HALF, "b": HALF})
    frs = fr.make_frs(space, ("a",), mu)
    rel = fr.FuzzyRelation.from_mapping(
        universe,
        {("a", "a"): HALF, ("a", "b"): HALF, ("b", "a"): HALF, ("b", "b"): HALF},
    )
    return fr.make_frr(frs, rel)


def test_similitude_class_outside_support_raises():
    frr = _block_diagonal_context()
    with pytest.raises(fr.ZeroSupportError):
        fr.similitude_class(frr, "c")


def test_class_structure_on_half_constant(pair_ctx):
    _, r1, _ = pair_ctx
    report = fr.check_theorem_49(r1)
    assert report.order == HALF
    assert report.anchors == ("a", "b")
    assert report.all_passed
    assert report.checks["iv"].checked == 0  # no zero grades among anchors


def test_class_structure_block_diagonal_exercises_empty_overlap():
    frr = _block_diagonal_context()
    report = fr.check_theorem_49(frr)
    assert report.all_passed
    assert report.anchors == ("a", "b")
    assert report.checks["iv"].checked >= 1
    # scaled crisp-like class: order on the support block, zero outside
    cls = fr.similitude_class(frr, "a")
    assert cls.grades.as_mapping() == {"a": HALF, "b": HALF, "c": Fraction(0)}


def test_class_structure_requires_similitude(pair_ctx):
    frs, _, _ = pair_ctx
    rel = fr.FuzzyRelation.from_mapping(
        frs.universe,
        {("a", "a"): HALF, ("a", "b"): QUARTER, ("b", "a"): HALF, ("b", "b"): HALF},
    )
    with pytest.raises(fr.NotSimilitudeError):
        fr.check_theorem_49(fr.make_frr(frs, rel))


def test_regions_match_relation_approximations_cross_route():
    for n in (2, 3):
        for space in fr.enumerate_spaces(n):
            for members, _, _ in fr.enumerate_rough_contexts(space):
                rect = fr.rect_regions(space, members)
                product = [(x, y) for x in members for y in members]
                approx = fr.approx_relation(space, product)
                assert rect.lower_rect == approx.lower
                assert rect.upper_rect == approx.upper
