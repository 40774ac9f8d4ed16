"""How far partition numbers stay from perfect powers.

Central quantities, all relative to a finite table p(0..n_max):

* ``m_k_d``       largest n whose p(n) lies within d of some k-th power
* ``limit_L``     largest n with p(n) - 1 <= d; every m_k_d is >= this,
                  and for k past the stabilization threshold they agree
* ``n_d``         smallest N >= 2 such that m_k_d(k, d) == limit_L(d)
                  for every k >= N

Everything is a finite-range computation: results are exact for the
given n_max and agree with the idealized (all-n) quantities only as
verified lower bounds.  The expensive unit of work is one exact root
per (n, k) pair; distance series and the near-power event sweep exist
so that work is paid once and shared by every table, figure, and N_d
query built on top.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .partitions import PartitionTable
from .roots import nearest_power_distance

DEFAULT_K_VALUES = (2, 3, 4, 5, 6, 7, 8, 50, 100)
DEFAULT_EXPONENTS = tuple(range(0, 71))
DEFAULT_N_MAX = 25000


def _effective_n_max(table: PartitionTable, n_max: int | None) -> int:
    if n_max is None:
        return table.n_max
    if n_max < 1 or n_max > table.n_max:
        raise ValueError(
            "n_max=%d outside table range 1..%d" % (n_max, table.n_max)
        )
    return n_max


def delta_series(
    table: PartitionTable, k: int, n_max: int | None = None
) -> list[int]:
    """Distances from p(n) to the nearest k-th power, for n = 0..n_max."""
    if k < 2:
        raise ValueError("k must be >= 2, got %d" % k)
    hi = _effective_n_max(table, n_max)
    return [nearest_power_distance(table.values[n], k)[1] for n in range(hi + 1)]


def _descending_records(series: Sequence[int], hi: int) -> tuple[list[int], list[int]]:
    # Scanning n = hi..0, keep positions achieving a new minimum distance.
    # The largest n with distance <= d is always one of these records, so
    # every threshold query reduces to a bisect.  Returned as parallel
    # (distances, positions), both ascending.
    dists: list[int] = []
    posns: list[int] = []
    current = None
    for n in range(hi, -1, -1):
        v = series[n]
        if current is None or v < current:
            dists.append(v)
            posns.append(n)
            current = v
            if v == 0:
                break
    dists.reverse()
    posns.reverse()
    return dists, posns


def m_k_d(
    table: PartitionTable,
    k: int,
    d: int,
    n_max: int | None = None,
    series: Sequence[int] | None = None,
) -> int:
    """Largest n <= n_max with p(n) within distance d of a k-th power.

    Always defined for d >= 0: p(1) = 1 is exactly 1^k, so the answer is
    at least 1.  Without a precomputed distance series this scans from
    the top and stops at the first qualifying n.
    """
    if d < 0:
        raise ValueError("d must be >= 0, got %d" % d)
    if k < 2:
        raise ValueError("k must be >= 2, got %d" % k)
    hi = _effective_n_max(table, n_max)
    if series is not None:
        if len(series) < hi + 1:
            raise ValueError(
                "series covers n <= %d, need n_max=%d" % (len(series) - 1, hi)
            )
        dists, posns = _descending_records(series, hi)
        # the n = 1 record has distance 0, so the bisect never misses
        return posns[bisect.bisect_right(dists, d) - 1]
    for n in range(hi, -1, -1):
        if nearest_power_distance(table.values[n], k)[1] <= d:
            return n
    raise AssertionError("unreachable: n = 1 always qualifies")


@dataclass(frozen=True)
class MkGrid:
    """m_k_d sampled at thresholds d = 10^i over a list of k.

    ``cells[j][i]`` pairs with ``k_values[j]`` and ``d_exponents[i]``;
    each per-k series is non-decreasing in i.
    """

    k_values: tuple[int, ...]
    d_exponents: tuple[int, ...]
    n_max: int
    cells: tuple[tuple[int, ...], ...]

    def series(self, k: int) -> tuple[int, ...]:
        """The (i -> m) series for one k."""
        return self.cells[self.k_values.index(k)]

    def coordinates(self, k: int) -> list[tuple[int, int]]:
        """(i, m) pairs for one k, the plot-ready form."""
        return list(zip(self.d_exponents, self.series(k)))


def _threshold_hits(
    table: PartitionTable,
    k: int,
    d_values: Sequence[int],
    hi: int,
    series: Sequence[int] | None,
) -> list[int]:
    s = series if series is not None else delta_series(table, k, hi)
    if len(s) < hi + 1:
        raise ValueError(
            "series for k=%d covers n <= %d, need n_max=%d" % (k, len(s) - 1, hi)
        )
    dists, posns = _descending_records(s, hi)
    return [posns[bisect.bisect_right(dists, d) - 1] for d in d_values]


def mk_grid(
    table: PartitionTable,
    k_values: Sequence[int] = DEFAULT_K_VALUES,
    d_exponents: Sequence[int] = DEFAULT_EXPONENTS,
    n_max: int | None = None,
    series: dict[int, Sequence[int]] | None = None,
) -> MkGrid:
    """Evaluate m_k_d over the power-of-ten grid, one root pass per k.

    ``series`` may carry precomputed distance series keyed by k; each
    cell then costs a bisect instead of n_max root extractions.
    """
    hi = _effective_n_max(table, n_max)
    if len(k_values) == 0:
        raise ValueError("k_values must be non-empty")
    if any(k < 2 for k in k_values):
        raise ValueError("every k must be >= 2")
    if any(i < 0 for i in d_exponents):
        raise ValueError("d exponents must be >= 0")
    thresholds = [10 ** i for i in d_exponents]
    cells = tuple(
        tuple(
            _threshold_hits(
                table,
                k,
                thresholds,
                hi,
                series.get(k) if series is not None else None,
            )
        )
        for k in k_values
    )
    return MkGrid(
        k_values=tuple(k_values),
        d_exponents=tuple(d_exponents),
        n_max=hi,
        cells=cells,
    )


def threshold_rows(
    table: PartitionTable,
    d_values: Sequence[int],
    k_values: Sequence[int] = DEFAULT_K_VALUES,
    n_max: int | None = None,
    series: dict[int, Sequence[int]] | None = None,
) -> list[tuple[int, tuple[int, ...]]]:
    """Rows (d, (m_k_d for each k)) at arbitrary exact thresholds.

    The published grids mix a d = 0 row with powers of ten; this is the
    row-oriented builder for those layouts.
    """
    hi = _effective_n_max(table, n_max)
    if any(k < 2 for k in k_values):
        raise ValueError("every k must be >= 2")
    if any(d < 0 for d in d_values):
        raise ValueError("thresholds must be >= 0")
    cols = [
        _threshold_hits(
            table,
            k,
            d_values,
            hi,
            series.get(k) if series is not None else None,
        )
        for k in k_values
    ]
    return [
        (d, tuple(cols[j][i] for j in range(len(k_values))))
        for i, d in enumerate(d_values)
    ]


def limit_L(table: PartitionTable, d: int) -> int:
    """Largest n with p(n) - 1 <= d.

    This is where every m_k_d series bottoms out: for n in this range,
    p(n) sits within d of the k-th power 1 for every k.  Requires
    d < p(n_max) - 1 so the maximum is attained inside the table.
    """
    if d < 0:
        raise ValueError("d must be >= 0, got %d" % d)
    if d >= table.values[table.n_max] - 1:
        raise ValueError(
            "d=%d is not below p(n_max) - 1; extend the table" % d
        )
    # values[1:] is strictly increasing and p(n) <= d + 1 iff p(n) - 1 <= d
    return bisect.bisect_right(table.values, d + 1, lo=1) - 1


@dataclass(frozen=True)
class StabilizationCert:
    """For every k >= k_threshold and 1 <= n <= n_max, the k-th power
    nearest p(n) is 1, so the distance is p(n) - 1 and m_k_d(k, d)
    equals limit_L(d) whenever limit_L(d) <= n_max."""

    n_max: int
    k_threshold: int


def stabilization_threshold(
    table: PartitionTable, n_max: int | None = None
) -> StabilizationCert:
    """Smallest K with 2^K >= 2 p(n_max), certified for the whole range.

    Once 2^k >= 2 p(n), the power below p(n) is 1^k and the power above
    is 2^k >= p(n) away, so the distance freezes at p(n) - 1.  The bound
    is monotone in n, hence driven by p(n_max) alone.
    """
    hi = _effective_n_max(table, n_max)
    return StabilizationCert(
        n_max=hi, k_threshold=(2 * table.values[hi] - 1).bit_length()
    )


class NearPowerEvent(NamedTuple):
    """A pair (n, k) with p(n) unusually close to a k-th power."""

    n: int
    k: int
    distance: int


@dataclass(frozen=True)
class EventSet:
    """All near-power events with distance <= d_cap, n in 2..n_max.

    Only k below the per-n freeze bound (2^k < 2 p(n)) are recorded.
    For larger k the distance equals p(n) - 1, and such a pair can never
    separate m_k_d from limit_L: p(n) - 1 <= d already forces
    n <= limit_L(d).
    """

    n_max: int
    d_cap: int
    events: tuple[NearPowerEvent, ...]


def near_power_events(
    table: PartitionTable, d_cap: int, n_max: int | None = None
) -> EventSet:
    """One sweep over (n, k): the only expensive step of the n_d family.

    Costs one exact root per pair, about n_max * log2(p(n_max)) / 2 of
    them; the result answers every d <= d_cap afterwards.
    """
    if d_cap < 0:
        raise ValueError("d_cap must be >= 0, got %d" % d_cap)
    hi = _effective_n_max(table, n_max)
    events: list[NearPowerEvent] = []
    for n in range(2, hi + 1):
        v = table.values[n]
        freeze = (2 * v - 1).bit_length()
        for k in range(2, freeze):
            dist = nearest_power_distance(v, k)[1]
            if dist <= d_cap:
                events.append(NearPowerEvent(n=n, k=k, distance=dist))
    return EventSet(n_max=hi, d_cap=d_cap, events=tuple(events))


def _require_events(
    table: PartitionTable, d_cap: int, n_max: int, events: EventSet | None
) -> EventSet:
    if events is None:
        return near_power_events(table, d_cap, n_max)
    if events.d_cap < d_cap:
        raise ValueError(
            "event set capped at d=%d, need %d" % (events.d_cap, d_cap)
        )
    if events.n_max != n_max:
        raise ValueError(
            "event set covers n_max=%d, need %d" % (events.n_max, n_max)
        )
    return events


def _n_d_from_events(table: PartitionTable, d: int, events: EventSet) -> int:
    limit = limit_L(table, d)
    worst = 1
    for ev in events.events:
        if ev.n > limit and ev.distance <= d and ev.k > worst:
            worst = ev.k
    return worst + 1


def n_d(
    table: PartitionTable,
    d: int,
    n_max: int | None = None,
    events: EventSet | None = None,
) -> int:
    """Smallest N >= 2 with m_k_d(k, d) == limit_L(d) for every k >= N.

    m_k_d(k, d) >= limit_L(d) for every k, since each n <= limit_L(d)
    has distance at most p(n) - 1 <= d from 1^k.  Equality fails only
    when some n > limit_L(d) has a k-th power within d, and those pairs
    are exactly the recorded events; so N is one more than the largest
    event k at this d, or 2 when no event applies.  k at or above the
    freeze bound needs no check (see EventSet), which is what makes the
    quantity finitely computable.
    """
    if d < 0:
        raise ValueError("d must be >= 0, got %d" % d)
    hi = _effective_n_max(table, n_max)
    ev = _require_events(table, d, hi, events)
    return _n_d_from_events(table, d, ev)


def n_d_batch(
    table: PartitionTable,
    d_values: Sequence[int],
    n_max: int | None = None,
    events: EventSet | None = None,
) -> dict[int, int]:
    """n_d at many thresholds off a single event sweep."""
    if len(d_values) == 0:
        return {}
    hi = _effective_n_max(table, n_max)
    ev = _require_events(table, max(d_values), hi, events)
    return {d: _n_d_from_events(table, d, ev) for d in d_values}


def n_d_intervals(
    table: PartitionTable,
    d_max: int,
    n_max: int | None = None,
    events: EventSet | None = None,
) -> list[tuple[int, int, int]]:
    """Maximal runs (d_lo, d_hi, N) with n_d constant, covering 0..d_max.

    n_d can only change where limit_L jumps (d = p(n) - 1 for some n)
    or where an event activates (d = its distance), so evaluating at
    those critical thresholds and merging equal neighbors is exact.
    """
    if d_max < 0:
        raise ValueError("d_max must be >= 0, got %d" % d_max)
    hi = _effective_n_max(table, n_max)
    ev = _require_events(table, d_max, hi, events)
    critical = {0}
    for n in range(2, hi + 1):
        gap = table.values[n] - 1
        if gap > d_max:
            break
        critical.add(gap)
    for e in ev.events:
        if e.distance <= d_max:
            critical.add(e.distance)
    out: list[tuple[int, int, int]] = []
    cuts = sorted(critical)
    for i, lo in enumerate(cuts):
        upper = cuts[i + 1] - 1 if i + 1 < len(cuts) else d_max
        value = _n_d_from_events(table, lo, ev)
        if out and out[-1][2] == value:
            out[-1] = (out[-1][0], upper, value)
        else:
            out.append((lo, upper, value))
    return out


class SampleRow(NamedTuple):
    """p(n) with its distances to the nearest powers, for a few k."""

    n: int
    p: int
    distances: tuple[int, ...]


def distance_samples(
    table: PartitionTable,
    n_values: Sequence[int] = (10, 20, 30, 40, 50),
    k_values: Sequence[int] = (2, 3, 4),
) -> list[SampleRow]:
    """Rows (n, p(n), distance for each k): the introductory table."""
    rows = []
    for n in n_values:
        if n < 0 or n > table.n_max:
            raise ValueError("n=%d outside table range 0..%d" % (n, table.n_max))
        v = table.values[n]
        rows.append(
            SampleRow(
                n=n,
                p=v,
                distances=tuple(nearest_power_distance(v, k)[1] for k in k_values),
            )
        )
    return rows


def small_threshold_table(
    table: PartitionTable,
    d_values: Sequence[int] = tuple(range(0, 7)),
    k_values: Sequence[int] = DEFAULT_K_VALUES,
    n_max: int | None = None,
    series: dict[int, Sequence[int]] | None = None,
) -> list[tuple[int, tuple[int, ...]]]:
    """m_k_d rows at small literal thresholds (default d = 0..6), the
    companion to the power-of-ten grid."""
    return threshold_rows(table, tuple(d_values), k_values, n_max, series)
