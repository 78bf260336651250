import pytest
from hypothesis import assume, given, strategies as st

from cobfilt.degrees import ExcludedDegreeError, decompose, is_excluded
from cobfilt.manifolds import (
    CupRecipe,
    Justification,
    RuleNotApplicableError,
    expand,
    indecomposable,
    parse_term,
    plan,
    recipe_dimension,
)


# ---------------------------------------------------------------------------
# planning


@pytest.mark.parametrize(
    "degree, base, cup2, cup1",
    [
        (2, 2, 0, 0),
        (5, 2, 0, 1),
        (6, 2, 1, 0),
        (10, 4, 1, 0),
        (13, 2, 1, 1),
        (4, 4, 0, 0),
        (19, 4, 0, 2),
    ],
)
def test_plan_known_degrees(degree, base, cup2, cup1):
    r = plan(degree)
    assert (r.base_dim, r.cup2_count, r.cup1_count) == (base, cup2, cup1)
    assert recipe_dimension(r) == degree


def test_plan_rejects_excluded_degrees():
    with pytest.raises(ExcludedDegreeError):
        plan(7)


@given(st.integers(2, 10**5))
def test_plan_reaches_its_degree(d):
    assume(not is_excluded(d))
    r = plan(d)
    assert recipe_dimension(r) == d
    t = decompose(d)
    if t.n == 1:
        assert r.base_dim == 2
    else:
        assert r.base_dim == 4 * (t.n - 1)


@given(st.integers(2, 10**5))
def test_plan_applies_cup2_only_to_even_dimensions(d):
    assume(not is_excluded(d))
    r = plan(d)
    dim = r.base_dim
    for m in r.steps:
        if m == 2:
            assert dim % 2 == 0
            dim = 2 * dim + 2
        else:
            dim = 2 * dim + 1


# ---------------------------------------------------------------------------
# dimensions


def test_recipe_dimension_base_only():
    assert recipe_dimension(CupRecipe(2)) == 2


def test_recipe_dimension_folds_both_steps():
    assert recipe_dimension(CupRecipe(2, 1, 1)) == 13
    assert recipe_dimension(CupRecipe(4, 0, 2)) == 19


@given(st.integers(1, 8), st.integers(0, 6), st.integers(0, 6))
def test_recipe_dimension_closed_form(half_base, cup2, cup1):
    base = 2 * half_base
    r = CupRecipe(base, cup2, cup1)
    after_cup2 = (base + 2) * 2**cup2 - 2
    assert recipe_dimension(r) == (after_cup2 + 1) * 2**cup1 - 1


def test_intermediate_dims_track_each_step():
    r = CupRecipe(2, 2, 1)
    assert r.intermediate_dims == (6, 14, 29)
    assert r.steps == (2, 2, 1)


# ---------------------------------------------------------------------------
# symbolic terms


def test_expand_known_recipes():
    assert expand(plan(2)) == "RP^2"
    assert expand(plan(5)) == "P(1,RP^2)"
    assert expand(plan(13)) == "P(1,P(2,RP^2))"


def test_parse_inverts_expand_on_examples():
    assert parse_term("P(1,P(2,RP^2))") == plan(13)
    assert parse_term("RP^2") == plan(2)


@given(st.integers(2, 10**4))
def test_expand_parse_round_trip(d):
    assume(not is_excluded(d))
    r = plan(d)
    assert parse_term(expand(r)) == r


def test_parse_keeps_hand_built_step_order():
    r = parse_term("P(2,P(1,RP^2))")
    assert r.steps == (1, 2)
    assert recipe_dimension(r) == 12


@pytest.mark.parametrize(
    "text",
    ["", "RP2", "RP^", "RP^02", "P(3,RP^2)", "P(1 RP^2)", "P(1,RP^2", "P(1,RP^2))", "P(1,RP^2)x"],
)
def test_parse_rejects_malformed_terms(text):
    with pytest.raises(ValueError):
        parse_term(text)


# ---------------------------------------------------------------------------
# indecomposability chains


def test_chain_for_base_only_recipe():
    assert indecomposable(plan(2)) == (Justification("base-axiom", 2),)


def test_chain_cites_the_even_dimension_cup2_uses():
    assert indecomposable(plan(6)) == (
        Justification("base-axiom", 2),
        Justification("cup-2-even", 2),
    )


def test_chain_for_mixed_recipe():
    assert indecomposable(plan(13)) == (
        Justification("base-axiom", 2),
        Justification("cup-2-even", 2),
        Justification("cup-1", 6),
    )


def test_hand_built_cup1_first_breaks_the_cup2_rule():
    # cup-1 leaves dimension 5; the cup-2 rule needs an even input
    bad = CupRecipe.from_steps(2, [1, 2])
    with pytest.raises(RuleNotApplicableError):
        indecomposable(bad)


@given(st.integers(2, 2000))
def test_every_planned_recipe_has_a_full_chain(d):
    assume(not is_excluded(d))
    r = plan(d)
    chain = indecomposable(r)
    assert len(chain) == 1 + r.cup2_count + r.cup1_count
    assert chain[0] == Justification("base-axiom", r.base_dim)


# ---------------------------------------------------------------------------
# recipe validity


def test_odd_base_rejected():
    with pytest.raises(ValueError, match="even"):
        CupRecipe(3)


def test_negative_counts_rejected():
    with pytest.raises(ValueError):
        CupRecipe(2, -1, 0)


def test_mismatched_intermediate_dims_rejected():
    with pytest.raises(ValueError, match="neither"):
        CupRecipe(2, 1, 0, intermediate_dims=(7,))


def test_counts_must_match_recorded_steps():
    # dims describe cup-1 then cup-2 but counts claim two cup-2 steps
    with pytest.raises(ValueError, match="counts"):
        CupRecipe(2, 2, 0, intermediate_dims=(5, 12))


def test_from_steps_only_accepts_cup_one_and_two():
    with pytest.raises(ValueError):
        CupRecipe.from_steps(2, [3])
