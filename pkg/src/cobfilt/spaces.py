"""Graded homology models for symplectic groups, their loop spaces, and
Thom complexes, at the level of exact dimension counts.

The homology of Sp(n) is an exterior algebra on generators in degrees
4i - 1 for i = 1..n.  Looping rewrites an algebra description by the
simple-system rule: exterior generators of degree d suspend to
polynomial generators of degree d - 1, so H_*(loops on Sp(n)) is
polynomial on degrees 4i - 2.  Looping again replaces each polynomial
generator of degree e by its simple system e, 2e, 4e, ... and suspends,
giving polynomial generators in degrees e 2^a - 1.  The homology
suspension enters these rules only as the degree shift; no chain-level
structure is modelled.

Two families anchor everything:

  * the doubly looped 3-sphere, whose homology is the dual Steenrod
    algebra, polynomial on classes xi_k in degrees 2^k - 1 (an
    independent count of the same dimensions enumerates Milnor basis
    monomials directly);

  * looped truncated James products on odd spheres, here modelled as
    Z/2[x in degrees m 2^a - 1, a <= i] for the piece with 2^i cells,
    which is the unique rule matching the computed low cases and the
    degree bookkeeping of the stage filtration.

A filtration stage (n, j, i) contributes the Thom-complex homology
A_* (x) Z/2[one generator per stage up to this one], and since the
Adams spectral sequence of such a complex collapses onto its s = 0
line, the homotopy dimension count is exactly the quotient by the A_*
factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .degrees import StageTriple, stages_up_to_degree
from .series import (
    AlgebraSpec,
    Generator,
    GeneratorKind,
    TruncatedSeries,
    exact_div,
    mul,
    series_of,
)


class LoopRuleError(ValueError):
    """An algebra description does not match the looping rule applied to it."""


class NonExteriorInputError(LoopRuleError):
    pass


class NonPolynomialInputError(LoopRuleError):
    pass


class DegreeOneGeneratorError(LoopRuleError):
    """Suspending a degree-1 generator would land in degree 0."""


class EvenSphereDimensionError(LoopRuleError):
    """James piece models are defined here for odd spheres only."""


@dataclass(frozen=True)
class MilnorMonomial:
    """Exponent sequence (e_1, ..., e_k) of a monomial in the xi_k."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(e < 0 for e in self.exponents):
            raise ValueError("exponents must be non-negative")
        if self.exponents and self.exponents[-1] == 0:
            raise ValueError("trailing zero exponents are trimmed")

    @property
    def degree(self) -> int:
        return sum(e * ((1 << k) - 1) for k, e in enumerate(self.exponents, start=1))


def sp_homology(n: int) -> AlgebraSpec:
    """Exterior algebra on one generator in each degree 4i - 1, i <= n."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return AlgebraSpec.exterior(*(4 * i - 1 for i in range(1, n + 1)))


def loop_algebra(spec: AlgebraSpec) -> AlgebraSpec:
    """Simple-system rewrite for one loop: exterior d becomes polynomial d - 1."""
    if spec.rule is not None:
        raise NonExteriorInputError("loop rule needs an explicit generator list")
    degrees = []
    for gen in spec.generators:
        norm = gen.normalized()
        if norm.kind is not GeneratorKind.TRUNCATED or norm.height != 1:
            raise NonExteriorInputError(
                f"loop rule needs exterior generators, got {gen.kind.value} "
                f"in degree {gen.degree}"
            )
        if gen.degree < 2:
            raise DegreeOneGeneratorError(
                "a degree-1 exterior generator would suspend to degree 0"
            )
        degrees.append(gen.degree - 1)
    return AlgebraSpec.polynomial(*degrees)


def double_loop_algebra(spec: AlgebraSpec, cap: int) -> AlgebraSpec:
    """Two loops at once on a polynomial algebra.

    Each polynomial generator of degree e is traded for its simple
    system e 2^a and suspended, yielding polynomial generators in the
    degrees e 2^a - 1 that fit below the cap.
    """
    if spec.rule is not None:
        raise NonPolynomialInputError("double loop rule needs an explicit generator list")
    degrees = []
    for gen in spec.generators:
        if gen.kind is not GeneratorKind.POLYNOMIAL:
            raise NonPolynomialInputError(
                f"double loop rule needs polynomial generators, got {gen.kind.value} "
                f"in degree {gen.degree}"
            )
        if gen.degree < 2:
            raise DegreeOneGeneratorError(
                "a degree-1 polynomial generator would suspend to degree 0"
            )
        e = gen.degree
        while e - 1 <= cap:
            degrees.append(e - 1)
            e *= 2
    return AlgebraSpec.polynomial(*sorted(degrees))


def james_loop_homology(m: int, i: int) -> AlgebraSpec:
    """Homology of the looped James piece with 2^i cells on an odd m-sphere.

    Polynomial on generators in degrees m 2^a - 1 for 0 <= a <= i; the
    i = 0 piece is the loop space of the sphere itself.
    """
    if m % 2 == 0:
        raise EvenSphereDimensionError(f"sphere dimension must be odd, got {m}")
    if m < 3:
        raise ValueError(f"sphere dimension must be >= 3, got {m}")
    if i < 0:
        raise ValueError(f"piece index must be >= 0, got {i}")
    return AlgebraSpec.polynomial(*(m * (1 << a) - 1 for a in range(i + 1)))


def _dual_steenrod_generators(bound: int) -> tuple[Generator, ...]:
    gens = []
    k = 1
    while (1 << k) - 1 <= bound:
        gens.append(Generator((1 << k) - 1, GeneratorKind.POLYNOMIAL))
        k += 1
    return tuple(gens)


def dual_steenrod_spec() -> AlgebraSpec:
    """Polynomial on xi_k in degree 2^k - 1 for every k >= 1, as a lazy rule."""
    return AlgebraSpec.from_rule(_dual_steenrod_generators)


@lru_cache(maxsize=None)
def steenrod_series(cap: int) -> TruncatedSeries:
    """Dimension series of the dual Steenrod algebra up to cap."""
    return series_of(dual_steenrod_spec(), cap)


def milnor_monomials(t: int) -> list[MilnorMonomial]:
    """All Milnor basis monomials of degree t.

    Enumerates exponent sequences with sum e_k (2^k - 1) = t by direct
    recursion, largest xi_1 exponent first; this is the independent
    count the series route is checked against.
    """
    if t < 0:
        raise ValueError(f"degree must be >= 0, got {t}")
    results: list[MilnorMonomial] = []
    prefix: list[int] = []

    def extend(k: int, remaining: int) -> None:
        if remaining == 0:
            exps = list(prefix)
            while exps and exps[-1] == 0:
                exps.pop()
            results.append(MilnorMonomial(tuple(exps)))
            return
        weight = (1 << k) - 1
        if weight > remaining:
            return
        for e in range(remaining // weight, -1, -1):
            prefix.append(e)
            extend(k + 1, remaining - e * weight)
            prefix.pop()

    extend(1, t)
    return results


def stage_generator_degrees(t: StageTriple, bound: int) -> list[int]:
    """Degrees of all generators present at stage t, capped at bound.

    Listed in stage order, so the list for a later stage extends the
    list for an earlier one.  The base stage contributes nothing.
    """
    table = stages_up_to_degree(bound)
    return [entry.degree for entry in table.entries if entry.triple <= t]


def thom_homology_series(t: StageTriple, cap: int) -> TruncatedSeries:
    """Homology dimensions of the stage-t Thom complex.

    The dual Steenrod algebra splits off as a tensor factor, leaving
    the polynomial algebra on the generators present at the stage.
    """
    loop_factor = AlgebraSpec.polynomial(*stage_generator_degrees(t, cap))
    return mul(steenrod_series(cap), series_of(loop_factor, cap))


def adams_homotopy_series(t: StageTriple, cap: int) -> TruncatedSeries:
    """Homotopy dimensions of the stage-t Thom complex.

    The Adams spectral sequence for a complex whose homology is
    A_* (x) V collapses onto s = 0, so the homotopy count is the exact
    quotient of the homology series by the A_* series.  The division
    failing would falsify the model, hence the propagated
    NotDivisibleError instead of a fallback.
    """
    return exact_div(thom_homology_series(t, cap), steenrod_series(cap))
