#!/usr/bin/env python3
"""Census of standardization fibers over a finite alphabet window.

For each group element w the fiber is the set of words standardizing to
w; the fibers partition the word cube.  This script tabulates fiber sizes
by length and confirms the partition count, for all three families.

Usage: python scripts/fiber_census.py [n] [window]
"""

import sys
from collections import Counter

sys.path.insert(0, "src")

from coxkit.series import s_series  # noqa: E402
from coxkit.systems import CoxeterSystem, elements  # noqa: E402


def census(family: str, n: int, window: int) -> None:
    system = CoxeterSystem(family, n)
    by_length: Counter = Counter()
    total = 0
    for w in elements(system):
        size = len(s_series(w, window).terms)
        by_length[w.length()] += size
        total += size
    cube = (2 * window + 1) ** n
    print(f"{system}: |W| = {system.order()}, window {window}, cube {cube}")
    for length in sorted(by_length):
        print(f"  length {length}: {by_length[length]} words")
    status = "ok" if total == cube else "MISMATCH"
    print(f"  total {total} ({status})")


if __name__ == "__main__":
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    window = int(sys.argv[2]) if len(sys.argv) > 2 else n + 1
    for family in ("A", "B", "D"):
        census(family, n, window)
