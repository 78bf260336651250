"""Exact truncated power series and symbolic graded-algebra descriptions.

Dimension counts of graded vector spaces over the field with two
elements are tracked as exact integer sequences up to a degree cap.
A graded algebra is described symbolically by its generators, each
polynomial, exterior, or truncated at a height h, and is converted to
its Poincare series by multiplying one factor per generator:

    polynomial of degree d     ->  1 / (1 - t^d)
    exterior of degree d       ->  1 + t^d
    truncated, height h        ->  1 + t^d + ... + t^(h d)

An exterior generator is the same thing as a truncated generator of
height 1 and is normalized to it before conversion.

Coefficients are plain Python integers validated against the unsigned
64-bit bound at construction, so a count that outgrows the fixed-width
contract raises OverflowError instead of silently corrupting a table.
The cap is an explicit argument everywhere; there is no global
precision.

>>> series_of(AlgebraSpec.polynomial(2), cap=6).coeffs
(1, 0, 1, 0, 1, 0, 1)
>>> series_of(AlgebraSpec.exterior(3, 7), cap=10).coeffs
(1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1)
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterable

U64_MAX = 2**64 - 1


class NotDivisibleError(ArithmeticError):
    """A series quotient would need a negative coefficient."""


class GeneratorKind(enum.Enum):
    POLYNOMIAL = "polynomial"
    EXTERIOR = "exterior"
    TRUNCATED = "truncated"


@dataclass(frozen=True)
class Generator:
    """One graded algebra generator; height is meaningful only when truncated."""

    degree: int
    kind: GeneratorKind
    height: int | None = None

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValueError(f"generator degree must be >= 1, got {self.degree}")
        if self.kind is GeneratorKind.TRUNCATED:
            if self.height is None or self.height < 1:
                raise ValueError("truncated generator needs a height >= 1")
        elif self.height is not None:
            raise ValueError(f"{self.kind.value} generator takes no height")

    def normalized(self) -> Generator:
        """Rewrite an exterior generator as a truncated generator of height 1."""
        if self.kind is GeneratorKind.EXTERIOR:
            return Generator(self.degree, GeneratorKind.TRUNCATED, 1)
        return self


@dataclass(frozen=True)
class AlgebraSpec:
    """Symbolic graded algebra: explicit generators plus an optional rule.

    The rule covers infinite families.  Called with a degree bound it
    must return every rule generator of degree <= bound; local
    finiteness of the algebra is the rule's responsibility.
    """

    generators: tuple[Generator, ...] = ()
    rule: Callable[[int], Iterable[Generator]] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(self.generators))

    @classmethod
    def polynomial(cls, *degrees: int) -> AlgebraSpec:
        return cls(tuple(Generator(d, GeneratorKind.POLYNOMIAL) for d in degrees))

    @classmethod
    def exterior(cls, *degrees: int) -> AlgebraSpec:
        return cls(tuple(Generator(d, GeneratorKind.EXTERIOR) for d in degrees))

    @classmethod
    def truncated(cls, *pairs: tuple[int, int]) -> AlgebraSpec:
        return cls(tuple(Generator(d, GeneratorKind.TRUNCATED, h) for d, h in pairs))

    @classmethod
    def from_rule(cls, rule: Callable[[int], Iterable[Generator]]) -> AlgebraSpec:
        return cls((), rule)

    def generators_below(self, bound: int) -> tuple[Generator, ...]:
        """All generators of degree <= bound, explicit ones first."""
        gens = [g for g in self.generators if g.degree <= bound]
        if self.rule is not None:
            gens.extend(g for g in self.rule(bound) if g.degree <= bound)
        return tuple(gens)


@dataclass(frozen=True)
class TruncatedSeries:
    """Dimension counts up to and including degree cap; coeffs[t] is degree t."""

    cap: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.cap < 0:
            raise ValueError(f"cap must be >= 0, got {self.cap}")
        coeffs = tuple(self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) != self.cap + 1:
            raise ValueError(
                f"cap {self.cap} needs {self.cap + 1} coefficients, got {len(coeffs)}"
            )
        for t, c in enumerate(coeffs):
            if not isinstance(c, int):
                raise ValueError(f"coefficient in degree {t} is not an integer: {c!r}")
            if c < 0:
                raise ValueError(f"negative coefficient {c} in degree {t}")
            if c > U64_MAX:
                raise OverflowError(f"coefficient in degree {t} exceeds the 64-bit bound")

    @classmethod
    def unit(cls, cap: int) -> TruncatedSeries:
        """The series of the unit algebra: 1 in degree 0, nothing above."""
        return cls(cap, (1,) + (0,) * cap)

    def __getitem__(self, t: int) -> int:
        return self.coeffs[t]


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Truncated convolution: the series of a tensor product of graded spaces."""
    if a.cap != b.cap:
        raise ValueError(f"cap mismatch: {a.cap} != {b.cap}")
    cap = a.cap
    out = [0] * (cap + 1)
    for u, au in enumerate(a.coeffs):
        if au == 0:
            continue
        bcoeffs = b.coeffs
        for v in range(cap + 1 - u):
            bv = bcoeffs[v]
            if bv:
                out[u + v] += au * bv
    return TruncatedSeries(cap, tuple(out))


def exact_div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """The unique q with mul(q, b) = a, computed degree by degree.

    Requires b[0] = 1.  Raises NotDivisibleError as soon as a quotient
    coefficient would have to be negative, which is how a failed tensor
    decomposition announces itself.
    """
    if a.cap != b.cap:
        raise ValueError(f"cap mismatch: {a.cap} != {b.cap}")
    if b.coeffs[0] != 1:
        raise ValueError("divisor must have constant coefficient 1")
    cap = a.cap
    q = [0] * (cap + 1)
    for t in range(cap + 1):
        acc = a.coeffs[t]
        for u in range(1, t + 1):
            bu = b.coeffs[u]
            if bu:
                acc -= bu * q[t - u]
        if acc < 0:
            raise NotDivisibleError(
                f"quotient coefficient in degree {t} would be {acc}"
            )
        q[t] = acc
    return TruncatedSeries(cap, tuple(q))


def series_of(spec: AlgebraSpec, cap: int) -> TruncatedSeries:
    """Poincare series of a graded algebra, truncated at cap.

    Generators above the cap contribute the factor 1 and are skipped.
    """
    out = TruncatedSeries.unit(cap)
    for gen in spec.generators_below(cap):
        out = mul(out, _factor_series(gen, cap))
    return out


def simple_system_series(d: int, cap: int) -> TruncatedSeries:
    """Series of the height-1 system on degrees d, 2d, 4d, 8d, ...

    Binary expansion makes this equal to the polynomial series on one
    degree-d generator, but it is computed here as a genuine product of
    (1 + t^(d 2^a)) factors so the identity stays an honest cross-check.
    """
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    out = TruncatedSeries.unit(cap)
    e = d
    while e <= cap:
        out = mul(out, _factor_series(Generator(e, GeneratorKind.EXTERIOR), cap))
        e *= 2
    return out


def _factor_series(gen: Generator, cap: int) -> TruncatedSeries:
    gen = gen.normalized()
    d = gen.degree
    coeffs = [0] * (cap + 1)
    if gen.kind is GeneratorKind.POLYNOMIAL:
        top = cap
    else:
        top = min(gen.height * d, cap)  # type: ignore[operator]
    for t in range(0, top + 1, d):
        coeffs[t] = 1
    return TruncatedSeries(cap, tuple(coeffs))
