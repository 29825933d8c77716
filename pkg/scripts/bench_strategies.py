#!/usr/bin/env python3
"""Time the three enumeration strategies against each other.

Usage: python scripts/bench_strategies.py [MAX_N]

Brute force is skipped once 2^n passes a few million vectors; meet in the
middle keeps going.
"""

import sys
import time

from sincprod import EnumerationStrategy, classical_frequencies, signed_moment_sum

BRUTE_LIMIT = 22
MIRROR_LIMIT = 23


def timed(freqs, strategy):
    start = time.perf_counter()
    value = signed_moment_sum(freqs, strategy)
    return value, time.perf_counter() - start


def main() -> int:
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 26
    print(f"{'n':>3}  {'brute':>10}  {'mirror':>10}  {'mitm':>10}  agree")
    for n in range(2, max_n + 1):
        freqs = classical_frequencies(n)
        cells, values = [], []
        for strategy, limit in (
            (EnumerationStrategy.BRUTE_FORCE, BRUTE_LIMIT),
            (EnumerationStrategy.MIRROR_HALVED, MIRROR_LIMIT),
            (EnumerationStrategy.MEET_IN_MIDDLE, None),
        ):
            if limit is not None and n > limit:
                cells.append(f"{'-':>10}")
                continue
            value, seconds = timed(freqs, strategy)
            values.append(value)
            cells.append(f"{seconds:>9.3f}s")
        agree = "yes" if len(set(values)) == 1 else "NO"
        print(f"{n:>3}  {cells[0]}  {cells[1]}  {cells[2]}  {agree}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
