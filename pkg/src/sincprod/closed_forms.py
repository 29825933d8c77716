"""Closed-form values for dominant-frequency configurations.

Two families of exact shortcuts exist, both stated for the frequencies in
non-increasing order a_1 >= a_2 >= ... >= a_n:

* First frequency dominant, a_1 > a_2 + ... + a_n: the integral is pi/a_1.
  Just past that regime (a_1 still beats the first n-2 of the others but
  loses to all n-1 together) a single sign pattern flips side and the value
  picks up one explicitly computable correction term.
* First three frequencies dominant, a_2 + a_3 - a_1 > a_4 + ... + a_n: the
  sign of every signed frequency sum is decided by the first three signs,
  and the integral is a quadratic form in the frequencies over 12 a_1 a_2 a_3.

`classify_dominance` decides which regime (if any) applies, recording each
inequality it checked with exact sides. Every closed form here is verified
against the enumeration engine in the test suite, and `evaluate` re-checks
at runtime for small n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .core import FrequencyList, PiMultiple, frequency_list
from .engine import EnumerationStrategy, integral_coefficient
from .errors import ApplicabilityError, ValidationError, VerificationError

__all__ = [
    "DominanceTag",
    "InequalityCheck",
    "DominanceClass",
    "CorrectionTerm",
    "Evaluation",
    "classical_frequencies",
    "classify_dominance",
    "first_dominant_value",
    "correction_term",
    "first_dominant_correction",
    "three_dominant_value",
    "three_dominant_equal_first_two",
    "three_frequency_value",
    "factorial_frequency_family",
    "evaluate",
]

VERIFY_LIMIT = 20  # closed forms are re-checked against the engine up to here


class DominanceTag(Enum):
    FIRST_DOMINANT = "first-dominant"
    FIRST_DOMINANT_BOUNDARY = "first-dominant-boundary"
    THREE_DOMINANT = "three-dominant"
    NONE = "none"


@dataclass(frozen=True)
class InequalityCheck:
    """One strict comparison lhs > rhs with both sides kept exact."""

    label: str
    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs > self.rhs

    @property
    def tie(self) -> bool:
        return self.lhs == self.rhs

    def __str__(self) -> str:
        rel = ">" if self.holds else ("=" if self.tie else "<")
        return f"{self.label}: {self.lhs} {rel} {self.rhs}"


@dataclass(frozen=True)
class DominanceClass:
    tag: DominanceTag
    dominated_count: Optional[int]  # N for the boundary class, else None
    boundary_flags: tuple[str, ...]  # labels of comparisons that tied exactly
    checks: tuple[InequalityCheck, ...]


@dataclass(frozen=True)
class CorrectionTerm:
    """The sign pattern that breaks first-frequency dominance.

    normalized_gap = 1 - sum_{j>=2} a_j/a_1, the signed frequency sum of
    (+1, -1, ..., -1) divided by a_1; it is negative exactly when the
    pattern has flipped side. dominated_count is N = n - 1, the number of
    frequencies a_1 still beats collectively.
    """

    normalized_gap: Fraction
    dominated_count: int


def classical_frequencies(n: int) -> FrequencyList:
    """The textbook family 1, 1/3, 1/5, ..., 1/(2n-1)."""
    if n < 1:
        raise ValidationError(f"need at least one frequency, got n = {n}")
    return frequency_list([Fraction(1, 2 * j - 1) for j in range(1, n + 1)])


def classify_dominance(freqs: FrequencyList) -> DominanceClass:
    """Decide which closed-form regime the sorted frequencies fall in.

    Classes are tried in order: first dominant, first dominant boundary,
    three dominant. Every defining inequality must hold strictly; a
    comparison that lands on exact equality fails its class, is recorded
    in boundary_flags, and later classes are still considered. When no
    class holds the tag is NONE and only the engine applies.
    """
    a = freqs.sorted_entries
    n = freqs.n
    rest = sum(a[1:], start=Fraction(0))

    checks: list[InequalityCheck] = []
    flags: list[str] = []

    def record(check: InequalityCheck) -> InequalityCheck:
        checks.append(check)
        if check.tie:
            flags.append(check.label)
        return check

    first = record(InequalityCheck("a1 > a2 + ... + an", a[0], rest))
    if first.holds:
        return DominanceClass(DominanceTag.FIRST_DOMINANT, None, tuple(flags), tuple(checks))

    if n >= 3:
        head = sum(a[1:-1], start=Fraction(0))
        lower = record(InequalityCheck("a1 > a2 + ... + a(n-1)", a[0], head))
        upper = record(InequalityCheck("a2 + ... + an > a1", rest, a[0]))
        if lower.holds and upper.holds:
            return DominanceClass(
                DominanceTag.FIRST_DOMINANT_BOUNDARY, n - 1, tuple(flags), tuple(checks)
            )

        tail = sum(a[3:], start=Fraction(0))
        three = record(
            InequalityCheck("a2 + a3 - a1 > a4 + ... + an", a[1] + a[2] - a[0], tail)
        )
        if three.holds:
            return DominanceClass(DominanceTag.THREE_DOMINANT, None, tuple(flags), tuple(checks))

    return DominanceClass(DominanceTag.NONE, None, tuple(flags), tuple(checks))


def _require(condition: bool, description: str) -> None:
    if not condition:
        raise ApplicabilityError(description)


def first_dominant_value(freqs: FrequencyList) -> PiMultiple:
    """pi/a_1 when the largest frequency strictly dominates all the others."""
    a = freqs.sorted_entries
    rest = sum(a[1:], start=Fraction(0))
    _require(a[0] > rest, f"a1 > a2 + ... + an fails: {a[0]} <= {rest}")
    return PiMultiple(1 / a[0])


def _boundary_hypothesis(freqs: FrequencyList) -> None:
    # The correction formula needs the (+1, -1, ..., -1) pattern to be the
    # single sign vector on the wrong side. That holds with the first
    # inequality relaxed to >=: an exact tie there only creates zero sums,
    # which never contribute.
    a = freqs.sorted_entries
    _require(freqs.n >= 3, f"correction needs n >= 3, got n = {freqs.n}")
    head = sum(a[1:-1], start=Fraction(0))
    rest = head + a[-1]
    _require(a[0] >= head, f"a1 >= a2 + ... + a(n-1) fails: {a[0]} < {head}")
    _require(rest > a[0], f"a2 + ... + an > a1 fails: {rest} <= {a[0]}")


def correction_term(freqs: FrequencyList) -> CorrectionTerm:
    """Gap of the flipped sign pattern at the dominance boundary."""
    _boundary_hypothesis(freqs)
    a = freqs.sorted_entries
    gap = 1 - sum((x / a[0] for x in a[1:]), start=Fraction(0))
    return CorrectionTerm(gap, freqs.n - 1)


def first_dominant_correction(freqs: FrequencyList) -> PiMultiple:
    """pi/a_1 minus the single-pattern correction, exact at the boundary.

    coefficient = 1/a_1 - (1/2^(N-1)) (1/(N! prod_j a_j)) |a_1 gap|^N
    with N = n - 1.
    """
    term = correction_term(freqs)
    a = freqs.sorted_entries
    N = term.dominated_count
    correction = (
        Fraction(1, 2 ** (N - 1))
        * Fraction(1, math.factorial(N))
        / freqs.product()
        * abs(a[0] * term.normalized_gap) ** N
    )
    return PiMultiple(1 / a[0] - correction)


def _three_dominant_hypothesis(freqs: FrequencyList) -> None:
    a = freqs.sorted_entries
    _require(freqs.n >= 3, f"three-dominant form needs n >= 3, got n = {freqs.n}")
    tail = sum(a[3:], start=Fraction(0))
    _require(
        a[1] + a[2] - a[0] > tail,
        f"a2 + a3 - a1 > a4 + ... + an fails: {a[1] + a[2] - a[0]} <= {tail}",
    )


def three_dominant_value(freqs: FrequencyList) -> PiMultiple:
    """Quadratic-form value when the three largest frequencies dominate.

    coefficient = (-sum_k a_k^2 - 2(a_1^2 + a_2^2 + a_3^2)
                   + 6(a_1 a_2 + a_2 a_3 + a_1 a_3)) / (12 a_1 a_2 a_3)
    """
    _three_dominant_hypothesis(freqs)
    a = freqs.sorted_entries
    all_sq = sum((x * x for x in a), start=Fraction(0))
    top_sq = a[0] ** 2 + a[1] ** 2 + a[2] ** 2
    cross = a[0] * a[1] + a[1] * a[2] + a[0] * a[2]
    return PiMultiple((-all_sq - 2 * top_sq + 6 * cross) / (12 * a[0] * a[1] * a[2]))


def three_dominant_equal_first_two(freqs: FrequencyList) -> PiMultiple:
    """Simplified three-dominant form for a_1 = a_2.

    coefficient = 1/a_1 - a_3/(4 a_1^2) - (1/(12 a_3 a_1^2)) sum_{k>=4} a_k^2
    """
    _three_dominant_hypothesis(freqs)
    a = freqs.sorted_entries
    _require(a[0] == a[1], f"equal-pair form needs a1 = a2, got {a[0]} != {a[1]}")
    tail_sq = sum((x * x for x in a[3:]), start=Fraction(0))
    return PiMultiple(1 / a[0] - a[2] / (4 * a[0] ** 2) - tail_sq / (12 * a[2] * a[0] ** 2))


def three_frequency_value(freqs: FrequencyList) -> PiMultiple:
    """Classical three-factor value, the n = 3 case of the quadratic form.

    coefficient = (2(a_1 a_2 + a_2 a_3 + a_3 a_1) - (a_1^2 + a_2^2 + a_3^2))
                  / (4 a_1 a_2 a_3)
    """
    _require(freqs.n == 3, f"three-factor form needs n = 3, got n = {freqs.n}")
    _three_dominant_hypothesis(freqs)
    a = freqs.sorted_entries
    cross = a[0] * a[1] + a[1] * a[2] + a[2] * a[0]
    squares = a[0] ** 2 + a[1] ** 2 + a[2] ** 2
    return PiMultiple((2 * cross - squares) / (4 * a[0] * a[1] * a[2]))


def factorial_frequency_family(n_terms: int) -> tuple[FrequencyList, PiMultiple]:
    """Truncation of the reciprocal-factorial family a_j = 1/j!.

    Returns the frequency list for j = 0 .. n_terms-1 together with
    coefficient = 5/4 - (1/6) sum_j 1/(j!)^2, valid while the three largest
    frequencies dominate the truncated tail (they always do for the
    full family, whose tail sums to e - 5/2 < 1/2).
    """
    _require(n_terms >= 3, f"need at least three terms, got {n_terms}")
    freqs = frequency_list([Fraction(1, math.factorial(j)) for j in range(n_terms)])
    _three_dominant_hypothesis(freqs)
    squares = sum(
        (Fraction(1, math.factorial(j) ** 2) for j in range(n_terms)), start=Fraction(0)
    )
    return freqs, PiMultiple(Fraction(5, 4) - squares / 6)


@dataclass(frozen=True)
class Evaluation:
    value: PiMultiple
    provenance: str
    classification: DominanceClass
    verified: bool


def _engine_strategy(n: int) -> EnumerationStrategy:
    # the slowest path is the most trustworthy default at desk scale
    return EnumerationStrategy.BRUTE_FORCE if n <= 20 else EnumerationStrategy.MEET_IN_MIDDLE


def evaluate(freqs: FrequencyList, verify: bool = True) -> Evaluation:
    """Best available route to the exact value, with provenance.

    Dispatches to the matching closed form, falling back to the
    enumeration engine when none applies. While n <= VERIFY_LIMIT (and
    `verify` is left on) a chosen closed form is recomputed through the
    engine and any disagreement raises VerificationError.
    """
    classification = classify_dominance(freqs)
    tag = classification.tag
    if tag is DominanceTag.FIRST_DOMINANT:
        value, provenance = first_dominant_value(freqs), "first-dominant"
    elif tag is DominanceTag.FIRST_DOMINANT_BOUNDARY:
        value, provenance = first_dominant_correction(freqs), "first-dominant-correction"
    elif tag is DominanceTag.THREE_DOMINANT:
        value, provenance = three_dominant_value(freqs), "three-dominant"
    else:
        strategy = _engine_strategy(freqs.n)
        value = integral_coefficient(freqs, strategy)
        return Evaluation(value, f"engine:{strategy.value}", classification, False)

    verified = False
    if verify and freqs.n <= VERIFY_LIMIT:
        engine_value = integral_coefficient(freqs, _engine_strategy(freqs.n))
        if engine_value.coefficient != value.coefficient:
            raise VerificationError(
                f"{provenance} gave {value.coefficient} but the engine gave "
                f"{engine_value.coefficient} for ({freqs})"
            )
        verified = True
    return Evaluation(value, provenance, classification, verified)
