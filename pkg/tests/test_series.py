import pytest
from hypothesis import given, strategies as st

from cobfilt.series import (
    U64_MAX,
    AlgebraSpec,
    Generator,
    GeneratorKind,
    NotDivisibleError,
    TruncatedSeries,
    exact_div,
    mul,
    series_of,
    simple_system_series,
)


def brute_convolution(a, b):
    # independent oracle: direct double loop, no reuse of mul
    cap = a.cap
    out = [0] * (cap + 1)
    for t in range(cap + 1):
        out[t] = sum(a.coeffs[u] * b.coeffs[t - u] for u in range(t + 1))
    return tuple(out)


@st.composite
def series_pairs(draw, max_cap=16, max_coeff=30):
    cap = draw(st.integers(0, max_cap))
    mk = lambda: TruncatedSeries(
        cap, tuple(draw(st.lists(st.integers(0, max_coeff), min_size=cap + 1, max_size=cap + 1)))
    )
    return mk(), mk()


@st.composite
def series_triples(draw, max_cap=12, max_coeff=12):
    cap = draw(st.integers(0, max_cap))
    mk = lambda: TruncatedSeries(
        cap, tuple(draw(st.lists(st.integers(0, max_coeff), min_size=cap + 1, max_size=cap + 1)))
    )
    return mk(), mk(), mk()


@st.composite
def generators(draw, max_degree=10):
    kind = draw(st.sampled_from(list(GeneratorKind)))
    degree = draw(st.integers(1, max_degree))
    height = draw(st.integers(1, 3)) if kind is GeneratorKind.TRUNCATED else None
    return Generator(degree, kind, height)


@st.composite
def algebra_specs(draw, max_gens=6):
    return AlgebraSpec(tuple(draw(st.lists(generators(), max_size=max_gens))))


# ---------------------------------------------------------------------------
# series_of


def test_polynomial_on_one_even_generator():
    assert series_of(AlgebraSpec.polynomial(2), 6).coeffs == (1, 0, 1, 0, 1, 0, 1)


def test_unit_algebra():
    assert series_of(AlgebraSpec(), 3).coeffs == (1, 0, 0, 0)


def test_polynomial_two_generators():
    # basis through degree 7: 1; x2; x2^2; x5; x2^3; x2 x5
    assert series_of(AlgebraSpec.polynomial(2, 5), 7).coeffs == (1, 0, 1, 0, 1, 1, 1, 1)


def test_exterior_two_generators():
    # basis: 1, a3, a7, a3 a7
    assert series_of(AlgebraSpec.exterior(3, 7), 10).coeffs == (1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1)


def test_truncated_height_two():
    # 1, x, x^2 in degrees 0, 3, 6
    assert series_of(AlgebraSpec.truncated((3, 2)), 7).coeffs == (1, 0, 0, 1, 0, 0, 1, 0)


def test_exterior_normalizes_to_truncated_height_one():
    ext = Generator(5, GeneratorKind.EXTERIOR)
    assert ext.normalized() == Generator(5, GeneratorKind.TRUNCATED, 1)
    assert series_of(AlgebraSpec.exterior(5), 12).coeffs == series_of(
        AlgebraSpec.truncated((5, 1)), 12
    ).coeffs


def test_generator_above_cap_contributes_nothing():
    assert series_of(AlgebraSpec.polynomial(9), 5).coeffs == (1, 0, 0, 0, 0, 0)


@given(algebra_specs(), st.integers(0, 24))
def test_series_of_starts_at_one(spec, cap):
    assert series_of(spec, cap)[0] == 1


@given(algebra_specs(), st.integers(0, 20), st.data())
def test_tensor_factorization_over_generator_split(spec, cap, data):
    k = data.draw(st.integers(0, len(spec.generators)))
    left = AlgebraSpec(spec.generators[:k])
    right = AlgebraSpec(spec.generators[k:])
    combined = series_of(spec, cap)
    split = mul(series_of(left, cap), series_of(right, cap))
    assert combined.coeffs == split.coeffs


# ---------------------------------------------------------------------------
# mul


def test_mul_matches_hand_convolution():
    a = TruncatedSeries(4, (1, 0, 1, 0, 1))
    b = TruncatedSeries(4, (1, 1, 1, 2, 2))
    assert mul(a, b).coeffs == (1, 1, 2, 3, 4)


def test_mul_unit_is_identity():
    a = TruncatedSeries(4, (3, 1, 4, 1, 5))
    assert mul(a, TruncatedSeries.unit(4)).coeffs == a.coeffs


def test_mul_truncates():
    a = TruncatedSeries(1, (1, 1))
    assert mul(a, a).coeffs == (1, 2)


def test_mul_cap_mismatch():
    with pytest.raises(ValueError, match="cap mismatch"):
        mul(TruncatedSeries.unit(3), TruncatedSeries.unit(4))


@given(series_pairs())
def test_mul_commutative(pair):
    a, b = pair
    assert mul(a, b).coeffs == mul(b, a).coeffs


@given(series_triples())
def test_mul_associative(triple):
    a, b, c = triple
    assert mul(mul(a, b), c).coeffs == mul(a, mul(b, c)).coeffs


@given(series_pairs(max_cap=10, max_coeff=8))
def test_mul_agrees_with_brute_convolution(pair):
    a, b = pair
    assert mul(a, b).coeffs == brute_convolution(a, b)


# ---------------------------------------------------------------------------
# exact_div


def test_exact_div_inverts_the_mul_example():
    a = TruncatedSeries(4, (1, 1, 2, 3, 4))
    b = TruncatedSeries(4, (1, 1, 1, 2, 2))
    assert exact_div(a, b).coeffs == (1, 0, 1, 0, 1)


def test_exact_div_by_self_is_unit():
    b = TruncatedSeries(5, (1, 2, 0, 3, 1, 1))
    assert exact_div(b, b).coeffs == (1, 0, 0, 0, 0, 0)


def test_exact_div_detects_negative_coefficient():
    a = TruncatedSeries(2, (1, 0, 1))
    b = TruncatedSeries(2, (1, 1, 0))
    with pytest.raises(NotDivisibleError, match="degree 1"):
        exact_div(a, b)


def test_exact_div_requires_unit_constant_term():
    a = TruncatedSeries(2, (1, 0, 1))
    with pytest.raises(ValueError, match="constant coefficient"):
        exact_div(a, TruncatedSeries(2, (0, 1, 0)))


@given(series_pairs())
def test_exact_div_round_trip(pair):
    a, b = pair
    b = TruncatedSeries(b.cap, (1,) + b.coeffs[1:])
    assert exact_div(mul(a, b), b).coeffs == a.coeffs


# ---------------------------------------------------------------------------
# simple_system_series


def test_simple_system_even_base():
    assert simple_system_series(2, 8).coeffs == (1, 0, 1, 0, 1, 0, 1, 0, 1)


def test_simple_system_degree_one():
    assert simple_system_series(1, 4).coeffs == (1, 1, 1, 1, 1)


def test_simple_system_base_five():
    assert simple_system_series(5, 9).coeffs == (1, 0, 0, 0, 0, 1, 0, 0, 0, 0)


@given(st.integers(1, 32), st.integers(0, 64))
def test_simple_system_equals_polynomial_series(d, cap):
    assert simple_system_series(d, cap).coeffs == series_of(AlgebraSpec.polynomial(d), cap).coeffs


# ---------------------------------------------------------------------------
# containers and bounds


def test_coeff_length_must_match_cap():
    with pytest.raises(ValueError, match="coefficients"):
        TruncatedSeries(3, (1, 0))


def test_negative_coefficient_rejected():
    with pytest.raises(ValueError, match="negative"):
        TruncatedSeries(1, (1, -2))


def test_overflowing_coefficient_rejected():
    with pytest.raises(OverflowError):
        TruncatedSeries(1, (1, U64_MAX + 1))


def test_mul_overflow_is_detected_not_wrapped():
    a = TruncatedSeries(1, (1, U64_MAX))
    b = TruncatedSeries(1, (1, 1))
    with pytest.raises(OverflowError):
        mul(a, b)


def test_generator_degree_must_be_positive():
    with pytest.raises(ValueError, match="degree"):
        Generator(0, GeneratorKind.POLYNOMIAL)


def test_truncated_generator_needs_height():
    with pytest.raises(ValueError, match="height"):
        Generator(3, GeneratorKind.TRUNCATED)


def test_polynomial_generator_takes_no_height():
    with pytest.raises(ValueError, match="height"):
        Generator(3, GeneratorKind.POLYNOMIAL, 2)


def test_rule_generators_feed_series():
    spec = AlgebraSpec.from_rule(
        lambda bound: tuple(
            Generator(d, GeneratorKind.POLYNOMIAL) for d in (2, 6) if d <= bound
        )
    )
    assert [g.degree for g in spec.generators_below(4)] == [2]
    assert series_of(spec, 6).coeffs == series_of(AlgebraSpec.polynomial(2, 6), 6).coeffs
