"""Constructive cup-construction recipes for the generator manifolds.

The cup-m construction on a manifold X is the quotient of
S^m x X x X by (u, x, y) ~ (-u, y, x); on a d-manifold it produces a
(m + 2d)-manifold, so the two steps used here act on dimensions as

    cup-2:  d  ->  2d + 2        cup-1:  d  ->  2d + 1.

Every generator degree is reached from a real projective space by some
cup-2 steps followed by some cup-1 steps: degree d with stage (n, j, i)
uses base RP^2 with j - 1 cup-2 steps when n = 1, and base RP^(4(n-1))
with j cup-2 steps when n >= 2, then i cup-1 steps either way.

Indecomposability travels along the recipe: even projective spaces
represent indecomposable classes, cup-1 preserves indecomposability
unconditionally, and cup-2 preserves it on even-dimensional inputs.
The cup-2-then-cup-1 order keeps every cup-2 input even, which is why
plan output always admits a full justification chain.

Recipes are symbolic terms only; nothing here builds an actual cell or
simplicial model.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .degrees import decompose


class RuleNotApplicableError(ValueError):
    """A step in a justification chain does not meet its rule's hypothesis."""


@dataclass(frozen=True)
class CupRecipe:
    """A base projective-space dimension plus cup-2 and cup-1 step counts.

    intermediate_dims records the dimension after each step.  Left
    unset, it is filled with the canonical order, all cup-2 steps first;
    passing it explicitly permits hand-built recipes in other step
    orders, which the indecomposability checker then vets.
    """

    base_dim: int
    cup2_count: int = 0
    cup1_count: int = 0
    intermediate_dims: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.base_dim < 2 or self.base_dim % 2:
            raise ValueError(f"base must be a positive even dimension, got {self.base_dim}")
        if self.cup2_count < 0 or self.cup1_count < 0:
            raise ValueError("step counts must be non-negative")
        if self.intermediate_dims is None:
            dims = []
            d = self.base_dim
            for _ in range(self.cup2_count):
                d = 2 * d + 2
                dims.append(d)
            for _ in range(self.cup1_count):
                d = 2 * d + 1
                dims.append(d)
            object.__setattr__(self, "intermediate_dims", tuple(dims))
            return
        dims = tuple(self.intermediate_dims)
        object.__setattr__(self, "intermediate_dims", dims)
        seen2 = seen1 = 0
        d = self.base_dim
        for nxt in dims:
            if nxt == 2 * d + 2:
                seen2 += 1
            elif nxt == 2 * d + 1:
                seen1 += 1
            else:
                raise ValueError(f"{d} -> {nxt} is neither a cup-1 nor a cup-2 step")
            d = nxt
        if (seen2, seen1) != (self.cup2_count, self.cup1_count):
            raise ValueError(
                f"step counts ({self.cup2_count}, {self.cup1_count}) do not match "
                f"the recorded dimensions"
            )

    @classmethod
    def from_steps(cls, base_dim: int, steps: Sequence[int]) -> CupRecipe:
        """Build a recipe from an explicit step order; entries are 1 or 2."""
        if any(m not in (1, 2) for m in steps):
            raise ValueError("steps must be cup-1 or cup-2")
        dims = []
        d = base_dim
        for m in steps:
            d = 2 * d + m
            dims.append(d)
        return cls(
            base_dim,
            cup2_count=sum(1 for m in steps if m == 2),
            cup1_count=sum(1 for m in steps if m == 1),
            intermediate_dims=tuple(dims),
        )

    @property
    def steps(self) -> tuple[int, ...]:
        """Cup values in application order, read off the recorded dimensions."""
        out = []
        d = self.base_dim
        for nxt in self.intermediate_dims:
            out.append(2 if nxt == 2 * d + 2 else 1)
            d = nxt
        return tuple(out)


@dataclass(frozen=True)
class Justification:
    """One link in an indecomposability argument.

    rule is "base-axiom", "cup-1", or "cup-2-even"; dim is the dimension
    of the manifold the rule is applied to.
    """

    rule: str
    dim: int


def plan(d: int) -> CupRecipe:
    """The recipe reaching generator degree d from its projective base.

    Stage (n, j, i): base RP^2 with j - 1 cup-2 steps for n = 1, base
    RP^(4(n-1)) with j cup-2 steps for n >= 2, then i cup-1 steps.
    Excluded degrees have no recipe.
    """
    t = decompose(d)
    if t.n == 1:
        return CupRecipe(2, cup2_count=t.j - 1, cup1_count=t.i)
    return CupRecipe(4 * (t.n - 1), cup2_count=t.j, cup1_count=t.i)


def recipe_dimension(r: CupRecipe) -> int:
    """Dimension of the manifold the recipe constructs."""
    if r.intermediate_dims:
        return r.intermediate_dims[-1]
    return r.base_dim


def expand(r: CupRecipe) -> str:
    """Render a recipe as its symbolic term, e.g. "P(1,P(2,RP^2))".

    Steps apply innermost first, so the base sits at the centre and the
    last step is the outermost wrapper.
    """
    term = f"RP^{r.base_dim}"
    for m in r.steps:
        term = f"P({m},{term})"
    return term


def parse_term(text: str) -> CupRecipe:
    """Inverse of expand on the term grammar RP^k | P(1,term) | P(2,term)."""
    wrappers = []
    rest = text
    while rest.startswith("P("):
        if len(rest) < 5 or rest[3] != "," or not rest.endswith(")"):
            raise ValueError(f"malformed term: {text!r}")
        m = rest[2]
        if m not in "12":
            raise ValueError(f"malformed term: {text!r}")
        wrappers.append(int(m))
        rest = rest[4:-1]
    if not rest.startswith("RP^"):
        raise ValueError(f"malformed term: {text!r}")
    base = rest[3:]
    if not base.isdigit() or (len(base) > 1 and base[0] == "0"):
        raise ValueError(f"malformed term: {text!r}")
    return CupRecipe.from_steps(int(base), list(reversed(wrappers)))


def indecomposable(r: CupRecipe) -> tuple[Justification, ...]:
    """The rule chain showing the recipe's output is indecomposable.

    Starts from the even-projective-space axiom, available for every
    recipe since bases are even by construction, and applies one rule
    per step.  Raises RuleNotApplicableError when a cup-2 step meets an
    odd dimension, which cannot happen for plan output but can for
    hand-built recipes.
    """
    chain = [Justification("base-axiom", r.base_dim)]
    d = r.base_dim
    for m in r.steps:
        if m == 2:
            if d % 2:
                raise RuleNotApplicableError(
                    f"cup-2 preserves indecomposability only in even dimension, got {d}"
                )
            chain.append(Justification("cup-2-even", d))
            d = 2 * d + 2
        else:
            chain.append(Justification("cup-1", d))
            d = 2 * d + 1
    return tuple(chain)
