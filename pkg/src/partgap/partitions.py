"""Exact integer partition counts and derived quantities.

The central object is :class:`PartitionTable`, an immutable cache of
p(0), ..., p(n_max) built with Euler's pentagonal-number recurrence.
Everything downstream (gap counts, power distances, scan routines)
reads from such a table instead of recomputing values.

A much slower but structurally independent counting routine,
:func:`count_partitions_oracle`, is kept for cross-checking the
recurrence; it never feeds production paths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import IO, Iterable, NamedTuple

# Hard ceiling on table length.  The recurrence itself is fine well past
# this, but the value cache for n_max ~ 5M would need several GB; reject
# early instead of thrashing.
MAX_TABLE_SIZE = 5_000_000


@dataclass(frozen=True)
class PartitionTable:
    """Values p(0..n_max) as exact integers.

    Immutable; to cover a larger range, build a new table.  ``values`` is
    a tuple so a table can be shared across threads and hashed fixtures
    without defensive copies.
    """

    values: tuple[int, ...]
    n_max: int

    def __post_init__(self) -> None:
        if len(self.values) != self.n_max + 1:
            raise ValueError(
                "table length %d does not match n_max=%d"
                % (len(self.values), self.n_max)
            )

    def p(self, n: int) -> int:
        """p(n), the number of partitions of n.  Raises on out-of-range n."""
        if n < 0 or n > self.n_max:
            raise ValueError("n=%d outside table range 0..%d" % (n, self.n_max))
        return self.values[n]


def _pentagonal_offsets(n_max: int) -> list[tuple[int, int]]:
    # Generalized pentagonal numbers g = j(3j-1)/2 and j(3j+1)/2 with the
    # shared sign (-1)^(j+1), ascending, capped at n_max.
    offsets: list[tuple[int, int]] = []
    j = 1
    while j * (3 * j - 1) // 2 <= n_max:
        sign = 1 if j % 2 == 1 else -1
        offsets.append((j * (3 * j - 1) // 2, sign))
        if j * (3 * j + 1) // 2 <= n_max:
            offsets.append((j * (3 * j + 1) // 2, sign))
        j += 1
    return offsets


def build_table(n_max: int) -> PartitionTable:
    """Build the exact table p(0..n_max) by the pentagonal recurrence.

    p(n) = sum_j (-1)^(j+1) * [p(n - j(3j-1)/2) + p(n - j(3j+1)/2)],
    one forward pass, O(n^1.5) index operations on exact integers.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0, got %d" % n_max)
    if n_max > MAX_TABLE_SIZE:
        raise ValueError(
            "n_max=%d exceeds MAX_TABLE_SIZE=%d; the value cache would not fit"
            % (n_max, MAX_TABLE_SIZE)
        )
    offsets = _pentagonal_offsets(n_max)
    vals = [0] * (n_max + 1)
    vals[0] = 1
    for n in range(1, n_max + 1):
        acc = 0
        for off, sign in offsets:
            if off > n:
                break
            if sign > 0:
                acc += vals[n - off]
            else:
                acc -= vals[n - off]
        vals[n] = acc
    return PartitionTable(values=tuple(vals), n_max=n_max)


def count_partitions_oracle(n: int, smallest_part: int = 1) -> int:
    """Count partitions of n with all parts >= smallest_part, by direct DP.

    Independent of the pentagonal recurrence: iterates over part sizes and
    accumulates coin-problem style.  Quadratic, meant for cross-checks on
    small n only (hundreds, not tens of thousands).
    """
    if n < 0:
        raise ValueError("n must be >= 0, got %d" % n)
    if smallest_part < 1:
        raise ValueError("smallest_part must be >= 1, got %d" % smallest_part)
    ways = [0] * (n + 1)
    ways[0] = 1
    for part in range(smallest_part, n + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]


def p1(table: PartitionTable, n: int) -> int:
    """Number of partitions of n with no part equal to 1.

    Equals p(n) - p(n-1) for n >= 1 (strip a 1 from any partition that
    has one), and 1 at n = 0 for the empty partition.
    """
    if n < 0 or n > table.n_max:
        raise ValueError("n=%d outside table range 0..%d" % (n, table.n_max))
    if n == 0:
        return 1
    return table.values[n] - table.values[n - 1]


def psi(table: PartitionTable, n: int) -> int:
    """Running total sum_{j=1..n} p1(j), the count of non-empty
    partitions of size <= n with no part equal to 1.

    Telescopes to p(n) - 1, which is what makes the gap analysis between
    consecutive partition numbers tractable; tests pin the identity
    against an explicit sum.  Defined for n >= 1.
    """
    if n < 1 or n > table.n_max:
        raise ValueError("n=%d outside range 1..%d" % (n, table.n_max))
    return table.values[n] - 1


def hardy_ramanujan_estimate(n: int) -> float:
    """First-order asymptotic e^(pi*sqrt(2n/3)) / (4n*sqrt(3)) for p(n).

    Evaluated in log space so the ratio check stays meaningful for n in
    the tens of thousands; returns math.inf once the value leaves float
    range.  Defined for n >= 1.
    """
    if n < 1:
        raise ValueError("estimate needs n >= 1, got %d" % n)
    log_value = math.pi * math.sqrt(2.0 * n / 3.0) - math.log(4.0 * n * math.sqrt(3.0))
    if log_value >= 709.0:  # just under log(float_max)
        return math.inf
    return math.exp(log_value)


class IndexLookup(NamedTuple):
    """Result of a membership probe against the partition sequence.

    ``index`` is the n with p(n) == v, or None if v is not a partition
    number within the table.  ``out_of_range`` flags probes where
    v > p(n_max), i.e. the table cannot decide membership either way.
    """

    index: int | None
    out_of_range: bool


def is_partition_number(table: PartitionTable, v: int) -> IndexLookup:
    """Binary-search v in the table (strictly increasing for n >= 1).

    Returns the smallest n >= 1 with p(n) == v; p(0) = p(1) = 1, so a
    probe for 1 reports index 1.  Values above p(n_max) come back
    (None, True) rather than a hard error so scan loops can decide how
    to degrade.
    """
    if v < 1:
        return IndexLookup(index=None, out_of_range=False)
    vals = table.values
    if v > vals[table.n_max]:
        return IndexLookup(index=None, out_of_range=True)
    lo, hi = 1, table.n_max
    while lo < hi:
        mid = (lo + hi) // 2
        if vals[mid] < v:
            lo = mid + 1
        else:
            hi = mid
    if vals[lo] == v:
        return IndexLookup(index=lo, out_of_range=False)
    return IndexLookup(index=None, out_of_range=False)


def dump_values(table: PartitionTable, stream: IO[str]) -> None:
    """Write p(0..n_max) as newline-delimited decimal integers."""
    stream.write("\n".join(map(str, table.values)))
    stream.write("\n")


def save_table(table: PartitionTable, path: str) -> None:
    """Persist a table: first line n_max, then one value per line."""
    with open(path, "w", encoding="ascii") as fh:
        fh.write("%d\n" % table.n_max)
        dump_values(table, fh)


def load_table(path: str) -> PartitionTable:
    """Inverse of save_table.  Validates length against the header."""
    with open(path, "r", encoding="ascii") as fh:
        header = fh.readline()
        n_max = int(header.strip())
        vals = tuple(int(line) for line in fh if line.strip())
    if len(vals) != n_max + 1:
        raise ValueError(
            "cache file %s: header says n_max=%d but %d values follow"
            % (path, n_max, len(vals))
        )
    return PartitionTable(values=vals, n_max=n_max)


def values_from_lines(lines: Iterable[str]) -> tuple[int, ...]:
    """Parse newline-delimited decimal values (blank lines ignored)."""
    return tuple(int(line) for line in lines if line.strip())
