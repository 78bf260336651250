"""Brute-force oracles and the cross-checks tying the modules together.

Every oracle here recomputes its target by a route the checked code
never takes: restricted-partition counting by dynamic programming
instead of series products, and exhaustive nested-loop enumeration of
stage triples instead of valuation arithmetic.  A pass means two
independent computations agree coefficient by coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from .degrees import BASE, decompose, is_excluded, stages_up_to_degree
from .series import (
    AlgebraSpec,
    NotDivisibleError,
    TruncatedSeries,
    exact_div,
    mul,
    series_of,
    simple_system_series,
)
from .spaces import adams_homotopy_series


@dataclass(frozen=True)
class Discrepancy:
    degree: int
    expected: Any
    actual: Any

    def to_json(self) -> dict:
        return {"degree": self.degree, "expected": self.expected, "actual": self.actual}


@dataclass(frozen=True)
class CheckReport:
    check_name: str
    bound: int
    passed: bool
    first_discrepancy: Discrepancy | None = None

    def __post_init__(self) -> None:
        if not self.passed and self.first_discrepancy is None:
            raise ValueError("a failing report must carry a discrepancy witness")

    def to_json(self) -> dict:
        return {
            "check": self.check_name,
            "bound": self.bound,
            "status": "pass" if self.passed else "fail",
            "first_discrepancy": (
                None if self.first_discrepancy is None else self.first_discrepancy.to_json()
            ),
        }


def partition_dp(allowed: Iterable[int], cap: int) -> TruncatedSeries:
    """Count multisets of allowed parts by total, part by part.

    This is the independent route to the series of a polynomial algebra
    on the allowed degrees; it never touches the series code beyond the
    final container.
    """
    parts = sorted(allowed)
    if any(p < 1 for p in parts):
        raise ValueError("parts must be >= 1")
    if len(set(parts)) != len(parts):
        raise ValueError("parts must be distinct")
    ways = [0] * (cap + 1)
    ways[0] = 1
    for p in parts:
        for total in range(p, cap + 1):
            ways[total] += ways[total - p]
    return TruncatedSeries(cap, tuple(ways))


def _enumerate_triples(bound: int) -> list[tuple[int, tuple[int, int, int]]]:
    # Plain nested loops over the degree formula, deliberately not shared
    # with stages_up_to_degree: this is the oracle side.
    found = []
    n = 1
    while 4 * n - 4 <= bound:
        j = 1 if n == 1 else 0
        while (4 * n - 2) * 2**j - 2 <= bound:
            odd = (4 * n - 2) * 2**j - 1
            i = 0
            while odd * 2**i - 1 <= bound:
                found.append((odd * 2**i - 1, (n, j, i)))
                i += 1
            j += 1
        n += 1
    return found


def _bijection_report(
    entries: Sequence[tuple[int, tuple[int, int, int]]], bound: int
) -> CheckReport:
    by_degree: dict[int, list[tuple[int, int, int]]] = {}
    for degree, triple in entries:
        by_degree.setdefault(degree, []).append(triple)
    for d in range(bound + 1):
        hits = by_degree.get(d, [])
        if is_excluded(d):
            if hits:
                return CheckReport(
                    "bijection", bound, False,
                    Discrepancy(d, "no stage for an excluded degree", [list(t) for t in hits]),
                )
            continue
        if len(hits) != 1:
            return CheckReport(
                "bijection", bound, False,
                Discrepancy(d, "exactly one stage", [list(t) for t in hits]),
            )
        t = decompose(d)
        if (t.n, t.j, t.i) != hits[0]:
            return CheckReport(
                "bijection", bound, False,
                Discrepancy(d, list(hits[0]), [t.n, t.j, t.i]),
            )
    stray = [d for d in by_degree if d > bound or d < 2]
    if stray:
        d = min(stray)
        return CheckReport(
            "bijection", bound, False,
            Discrepancy(d, "degree within [2, bound]", [list(t) for t in by_degree[d]]),
        )
    return CheckReport("bijection", bound, True)


def verify_bijection(bound: int) -> CheckReport:
    """Exhaustively enumerate all stages with degree <= bound and check
    they hit each non-excluded degree in [2, bound] exactly once, with
    decompose reproducing the enumerated triple."""
    return _bijection_report(_enumerate_triples(bound), bound)


def _first_mismatch(expected: TruncatedSeries, actual: TruncatedSeries) -> int | None:
    for t in range(expected.cap + 1):
        if expected.coeffs[t] != actual.coeffs[t]:
            return t
    return None


def verify_main_theorem(cap: int) -> CheckReport:
    """Three routes to the cobordism-ring dimension count must agree.

    The series of the polynomial algebra on all generator degrees, the
    partition-counting oracle on the same degree set, and the stage-by-
    stage cumulative product in stage order.
    """
    gens = [d for d in range(2, cap + 1) if not is_excluded(d)]
    via_product = series_of(AlgebraSpec.polynomial(*gens), cap)
    via_dp = partition_dp(gens, cap)
    stagewise = TruncatedSeries.unit(cap)
    for entry in stages_up_to_degree(cap).entries:
        stagewise = mul(stagewise, series_of(AlgebraSpec.polynomial(entry.degree), cap))
    for name, candidate in (("product", via_product), ("stagewise", stagewise)):
        t = _first_mismatch(via_dp, candidate)
        if t is not None:
            return CheckReport(
                "product", cap, False,
                Discrepancy(t, via_dp.coeffs[t], {name: candidate.coeffs[t]}),
            )
    return CheckReport("product", cap, True)


def verify_quotient_steps(cap: int) -> CheckReport:
    """Each stage's homotopy series must be the previous stage's times
    exactly 1/(1 - t^d) for the incoming generator degree d."""
    previous = adams_homotopy_series(BASE, cap)
    for entry in stages_up_to_degree(cap).entries:
        current = adams_homotopy_series(entry.triple, cap)
        predicted = series_of(AlgebraSpec.polynomial(entry.degree), cap)
        try:
            quotient = exact_div(current, previous)
        except NotDivisibleError as exc:
            return CheckReport(
                "quotients", cap, False,
                Discrepancy(entry.degree, list(predicted.coeffs), str(exc)),
            )
        t = _first_mismatch(predicted, quotient)
        if t is not None:
            return CheckReport(
                "quotients", cap, False,
                Discrepancy(t, predicted.coeffs[t], quotient.coeffs[t]),
            )
        previous = current
    return CheckReport("quotients", cap, True)


def verify_simple_systems(cap: int) -> CheckReport:
    """The height-1 system product on d, 2d, 4d, ... must reproduce the
    polynomial series on d, for every d up to the cap."""
    for d in range(1, cap + 1):
        expected = series_of(AlgebraSpec.polynomial(d), cap)
        actual = simple_system_series(d, cap)
        t = _first_mismatch(expected, actual)
        if t is not None:
            return CheckReport(
                "simple-system", cap, False,
                Discrepancy(d, list(expected.coeffs), list(actual.coeffs)),
            )
    return CheckReport("simple-system", cap, True)
