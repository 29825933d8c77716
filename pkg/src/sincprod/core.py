"""Exact arithmetic foundation: rationals, frequency lists, pi-multiples.

All numeric state is held in `fractions.Fraction`, which already guarantees
the canonical form this package relies on: positive denominator, reduced to
lowest terms, zero represented as 0/1. Everything here is an immutable value
and safe to share between threads.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable

import mpmath

from .errors import RationalParseError, ValidationError

__all__ = [
    "parse_rational",
    "format_rational",
    "double_factorial",
    "factorial",
    "FrequencyList",
    "frequency_list",
    "load_frequency_file",
    "PiMultiple",
]

# integer, fraction with explicit denominator, or finite decimal
_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+)|\.(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse an exact rational from ``n``, ``n/d`` or a finite decimal.

    Finite decimals convert exactly (``0.2`` -> 1/5). Anything else,
    including float notation like ``1e3`` and a zero denominator, is
    rejected so exactness can never silently degrade.
    """
    cleaned = text.strip().replace("−", "-")  # tolerate typographic minus
    m = _RATIONAL_RE.match(cleaned)
    if m is None:
        raise RationalParseError(f"not a rational literal: {text!r}")
    whole, den, frac = m.groups()
    if den is not None:
        if int(den) == 0:
            raise RationalParseError(f"zero denominator in {text!r}")
        return Fraction(int(whole), int(den))
    if frac is not None:
        sign = -1 if whole.lstrip().startswith("-") else 1
        scale = 10 ** len(frac)
        return Fraction(int(whole) * scale + sign * int(frac), scale)
    return Fraction(int(whole))


def format_rational(value: Fraction) -> str:
    """Canonical text form: ``n`` or ``n/d``. Round-trips through parse."""
    return str(value)


def double_factorial(k: int) -> int:
    """k!! = k (k-2) (k-4) ... down to 1 or 2; 0!! = 1 by convention."""
    if k < 0:
        raise ValidationError(f"double factorial undefined for negative {k}")
    return math.prod(range(k, 0, -2))


factorial = math.factorial


@dataclass(frozen=True)
class FrequencyList:
    """Validated list of strictly positive rational frequencies.

    `entries` keeps the order the caller gave (used for reporting),
    `sorted_entries` holds the same values in non-increasing order (all
    mathematics indexes this view), and `sort_order[i]` is the position in
    `entries` that `sorted_entries[i]` came from.
    """

    entries: tuple[Fraction, ...]
    sorted_entries: tuple[Fraction, ...]
    sort_order: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def largest(self) -> Fraction:
        return self.sorted_entries[0]

    def product(self) -> Fraction:
        return math.prod(self.sorted_entries, start=Fraction(1))

    def total(self) -> Fraction:
        return sum(self.sorted_entries, start=Fraction(0))

    def scaled(self, c: Fraction) -> "FrequencyList":
        """Same list with every frequency multiplied by c > 0."""
        return frequency_list([c * a for a in self.entries])

    def __str__(self) -> str:
        return ", ".join(format_rational(a) for a in self.entries)


def frequency_list(values: Iterable[Fraction | int]) -> FrequencyList:
    """Validate and index a frequency list; empty or non-positive input fails."""
    entries = tuple(Fraction(v) for v in values)
    if not entries:
        raise ValidationError("frequency list must not be empty")
    for i, a in enumerate(entries):
        if a <= 0:
            raise ValidationError(f"frequency at index {i} is not positive: {a}")
    order = tuple(sorted(range(len(entries)), key=lambda i: (-entries[i], i)))
    return FrequencyList(entries, tuple(entries[i] for i in order), order)


def load_frequency_file(path: str | Path) -> FrequencyList:
    """Read one rational per line; blank lines and ``#`` comments are skipped."""
    values = []
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values.append(parse_rational(line))
        except RationalParseError as exc:
            raise RationalParseError(f"{path}:{lineno}: {exc}") from None
    return frequency_list(values)


def _pi_scaled(k: int) -> int:
    """floor(pi * 10**k) computed with ample working precision."""
    with mpmath.workdps(k + 30):
        return int(mpmath.floor(mpmath.pi * (10**k)))


@dataclass(frozen=True)
class PiMultiple:
    """An exact value q*pi, stored as the rational coefficient q."""

    coefficient: Fraction

    def __float__(self) -> float:
        return float(self.coefficient) * math.pi

    def decimal(self, digits: int = 15) -> str:
        """Decimal expansion of coefficient*pi, rounded half-even.

        The coefficient is exact, so the only approximation is pi itself;
        it is taken with 20+ guard digits beyond what the output needs.
        """
        if digits < 0:
            raise ValidationError("digits must be non-negative")
        q = self.coefficient
        guard = 20 + len(str(1 + abs(q.numerator) // q.denominator))
        scaled = Fraction(q.numerator * _pi_scaled(digits + guard), q.denominator * 10**guard)
        units = round(scaled)  # Fraction rounds half-even
        sign = "-" if units < 0 else ""
        whole, frac = divmod(abs(units), 10**digits)
        if digits == 0:
            return f"{sign}{whole}"
        return f"{sign}{whole}.{str(frac).zfill(digits)}"

    def __str__(self) -> str:
        return f"{format_rational(self.coefficient)} * pi"
