"""Exact counts of balanced paths by negativity.

Three independent routes to the same numbers: brute-force enumeration
(the ground-truth oracle), the Catalan numbers, and a two-term counting
recurrence obtained by splitting a path at its first prime excursion.
The recurrence is deliberately kept self-referential -- it counts class
(n, k) in terms of smaller classes, not in terms of Catalan numbers --
so its agreement with catalan(n) is a checkable fact rather than a
built-in assumption.
"""

from __future__ import annotations

import math
from collections.abc import Iterator
from dataclasses import dataclass

from .errors import BoundExceeded, IndexOutOfRange
from .paths import DOWN, UP, LatticePath, negativity

# C(24,12) = 2,704,156 paths; enumeration above this is almost certainly
# a mistake, so it must be requested explicitly via `bound`.
DEFAULT_ENUMERATION_BOUND = 12

_catalan_table: list[int] = [1]
_recurrence_rows: list[list[int]] = [[1]]


@dataclass(frozen=True)
class CountTable:
    """Counts of the classes (n, 0) .. (n, n)."""

    n: int
    counts: dict[int, int]

    def __getitem__(self, k: int) -> int:
        return self.counts[k]

    def total(self) -> int:
        return sum(self.counts.values())

    def to_lines(self) -> list[str]:
        """One "k<TAB>count" line per class, ascending k."""
        return [f"{k}\t{self.counts[k]}" for k in sorted(self.counts)]


def catalan(n: int) -> int:
    """n-th Catalan number via the convolution recurrence, memoized."""
    global _catalan_table
    if n < 0:
        raise IndexOutOfRange(f"catalan index must be nonnegative, got {n}")
    table = _catalan_table
    if len(table) <= n:
        # extend a copy and swap: concurrent callers each see a complete table
        table = list(table)
        while len(table) <= n:
            m = len(table)
            table.append(sum(table[i] * table[m - 1 - i] for i in range(m)))
        _catalan_table = table
    return table[n]


def central_binomial(n: int) -> int:
    """C(2n, n), the number of balanced paths of length 2n."""
    return math.comb(2 * n, n)


def enumerate_balanced(
    n: int, *, bound: int = DEFAULT_ENUMERATION_BOUND
) -> Iterator[LatticePath]:
    """All C(2n,n) balanced paths of length 2n, lexicographic with U < D.

    Returns a lazy iterator; the bound is checked eagerly.
    """
    if n < 0:
        raise IndexOutOfRange(f"half-length must be nonnegative, got {n}")
    if n > bound:
        raise BoundExceeded(f"n={n} exceeds the enumeration bound {bound}")
    return _balanced_paths(n)


def _balanced_paths(n: int) -> Iterator[LatticePath]:
    steps: list[int] = []

    def extend(ups: int, downs: int) -> Iterator[LatticePath]:
        if ups == n and downs == n:
            yield LatticePath(tuple(steps))
            return
        if ups < n:
            steps.append(UP)
            yield from extend(ups + 1, downs)
            steps.pop()
        if downs < n:
            steps.append(DOWN)
            yield from extend(ups, downs + 1)
            steps.pop()

    yield from extend(0, 0)


def partition_by_negativity(
    n: int, *, bound: int = DEFAULT_ENUMERATION_BOUND
) -> CountTable:
    """Brute-force class sizes |S_0| .. |S_n| for half-length n."""
    counts = {k: 0 for k in range(n + 1)}
    for path in enumerate_balanced(n, bound=bound):
        counts[negativity(path)] += 1
    return CountTable(n, counts)


def paths_by_negativity(
    n: int, *, bound: int = DEFAULT_ENUMERATION_BOUND
) -> dict[int, list[LatticePath]]:
    """The classes themselves: k -> all paths of class (n, k), in order."""
    classes: dict[int, list[LatticePath]] = {k: [] for k in range(n + 1)}
    for path in enumerate_balanced(n, bound=bound):
        classes[negativity(path)].append(path)
    return classes


def count_recurrence(n: int, k: int) -> int:
    """Count class (n, k) by recurrence on the first prime excursion.

    A nonempty path starts with either a positive prime (up, Dyck path of
    length 2p-2, down) followed by a (n-p, k) path, or a negative prime
    (down, negative Dyck path of length 2q-2, up) followed by a
    (n-q, k-q) path:

        N(n, k) = sum_{p=1..n-k} C_{p-1} N(n-p, k)
                + sum_{q=1..k}   C_{q-1} N(n-q, k-q),    N(0, 0) = 1.
    """
    global _recurrence_rows
    if n < 0 or k < 0 or k > n:
        raise IndexOutOfRange(f"require 0 <= k <= n, got n={n}, k={k}")
    rows = _recurrence_rows
    if len(rows) <= n:
        rows = list(rows)
        while len(rows) <= n:
            m = len(rows)
            row = []
            for j in range(m + 1):
                total = sum(
                    catalan(p - 1) * rows[m - p][j] for p in range(1, m - j + 1)
                )
                total += sum(
                    catalan(q - 1) * rows[m - q][j - q] for q in range(1, j + 1)
                )
                row.append(total)
            rows.append(row)
        _recurrence_rows = rows
    return rows[n][k]
