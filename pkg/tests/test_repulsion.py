import pytest

from partgap.partitions import build_table, p1
from partgap.repulsion import (
    DEFAULT_K_VALUES,
    delta_series,
    distance_samples,
    limit_L,
    m_k_d,
    mk_grid,
    n_d,
    n_d_batch,
    n_d_intervals,
    near_power_events,
    small_threshold_table,
    stabilization_threshold,
    threshold_rows,
)
from partgap.roots import delta_k

D_SAMPLES = (0, 1, 2, 5, 6, 7, 21, 22, 100, 950)


def test_delta_series_matches_pointwise(table_small):
    for k in (2, 3, 7, 50):
        series = delta_series(table_small, k, 90)
        assert len(series) == 91
        for n in range(0, 91, 7):
            assert series[n] == delta_k(table_small, n, k).distance


def brute_m_k_d(series, d):
    best = None
    for n, dist in enumerate(series):
        if dist <= d:
            best = n
    return best


def test_m_k_d_matches_brute_force(table_small):
    for k in (2, 3, 50):
        series = delta_series(table_small, k, 120)
        for d in (0, 1, 2, 5, 10, 100, 10**6, 10**40):
            assert m_k_d(table_small, k, d) == brute_m_k_d(series, d)


def test_m_k_d_witness_and_exclusion(table_small):
    for k in (2, 3, 4):
        series = delta_series(table_small, k, 120)
        for d in (0, 3, 17, 2000):
            m = m_k_d(table_small, k, d)
            assert series[m] <= d
            assert all(series[n] > d for n in range(m + 1, 121))


def test_m_k_d_monotone_in_d(table_small):
    prev = 0
    for d in (0, 1, 2, 3, 10, 50, 1000, 10**8):
        m = m_k_d(table_small, 2, d)
        assert m >= prev
        prev = m


def test_m_k_d_floor_is_one(table_small):
    # p(0) = p(1) = 1 is every k-th power, so n = 1 qualifies at d = 0
    for k in (2, 3, 11, 200):
        assert m_k_d(table_small, k, 0) >= 1


def test_m_k_d_accepts_precomputed_series(table_small):
    series = delta_series(table_small, 3, 120)
    assert m_k_d(table_small, 3, 7, series=series) == m_k_d(table_small, 3, 7)


def test_grid_cells_monotone_and_consistent(table_small):
    grid = mk_grid(table_small, (2, 3, 50), range(0, 9), 120)
    assert grid.k_values == (2, 3, 50)
    assert grid.d_exponents == tuple(range(0, 9))
    for k in grid.k_values:
        series = grid.series(k)
        assert list(series) == sorted(series)
        for i, m in grid.coordinates(k):
            assert m == m_k_d(table_small, k, 10**i, n_max=120)


def test_grid_rejects_bad_args(table_small):
    with pytest.raises(ValueError):
        mk_grid(table_small, (), range(0, 3), 120)
    with pytest.raises(ValueError):
        mk_grid(table_small, (1,), range(0, 3), 120)
    with pytest.raises(ValueError):
        mk_grid(table_small, (2,), (-1, 0), 120)


def test_threshold_rows_shape(table_small):
    rows = threshold_rows(table_small, (0, 1, 6), (2, 3), 120)
    assert [d for d, _ in rows] == [0, 1, 6]
    for d, cells in rows:
        assert cells == tuple(m_k_d(table_small, k, d) for k in (2, 3))


def test_limit_values(table_small):
    # L(d) for small d: 1, 2, then runs of length p(n+1) - p(n)
    assert limit_L(table_small, 0) == 1
    assert limit_L(table_small, 1) == 2
    for d in (2, 3):
        assert limit_L(table_small, d) == 3
    for d in (4, 5):
        assert limit_L(table_small, d) == 4
    for d in range(6, 10):
        assert limit_L(table_small, d) == 5


def test_limit_run_lengths_follow_p1(table_small):
    # the run of d values with L(d) = n has length p(n+1) - p(n) = p1(n+1)
    runs = {}
    for d in range(0, table_small.p(51) - 1):
        n = limit_L(table_small, d)
        if n > 50:
            break
        runs[n] = runs.get(n, 0) + 1
    for n in range(2, 51):
        assert runs[n] == p1(table_small, n + 1)


def test_limit_domain(table_small):
    # largest decidable d is p(n_max) - 2: answer 119, one below the top
    top = table_small.p(120) - 1
    assert limit_L(table_small, top - 1) == 119
    assert limit_L(table_small, table_small.p(119) - 1) == 119
    assert limit_L(table_small, table_small.p(119) - 2) == 118
    with pytest.raises(ValueError):
        limit_L(table_small, top)
    with pytest.raises(ValueError):
        limit_L(table_small, -1)


def test_stabilization_guarantee(table_small):
    cert = stabilization_threshold(table_small, 60)
    assert cert.n_max == 60
    for k in (cert.k_threshold, cert.k_threshold + 1, cert.k_threshold + 9):
        for n in range(0, 61):
            assert delta_k(table_small, n, k).distance == table_small.p(n) - 1


def test_events_complete_and_sound(table_small):
    events = near_power_events(table_small, 1000, n_max=90)
    cert = stabilization_threshold(table_small, 90)
    seen = {(e.n, e.k): e.distance for e in events.events}
    for n in range(2, 91):
        for k in range(2, cert.k_threshold + 1):
            d = delta_k(table_small, n, k).distance
            if d <= 1000 and d < table_small.p(n) - 1:
                assert seen[(n, k)] == d
    for e in events.events:
        assert 2 <= e.n <= 90
        assert e.distance <= 1000
        assert delta_k(table_small, e.n, e.k).distance == e.distance


def brute_n_d(table, d, n_max):
    # direct definition: largest k whose threshold exceeds the limit, plus 1
    limit = limit_L(table, d)
    best = 1
    cert = stabilization_threshold(table, n_max)
    for k in range(2, cert.k_threshold + 2):
        if m_k_d(table, k, d, n_max=n_max) > limit:
            best = k
    return best + 1 if best > 1 else 2


def test_n_d_matches_direct_definition():
    table = build_table(300)
    events = near_power_events(table, 1000)
    for d in D_SAMPLES:
        assert n_d(table, d, events=events) == brute_n_d(table, d, 300)


def test_n_d_batch_and_intervals():
    table = build_table(300)
    events = near_power_events(table, 1000)
    ds = list(D_SAMPLES)
    batch = n_d_batch(table, ds, events=events)
    assert batch == {d: n_d(table, d, events=events) for d in ds}
    intervals = n_d_intervals(table, 950, events=events)
    assert intervals[0][0] == 0
    assert intervals[-1][1] == 950
    for (lo1, hi1, v1), (lo2, hi2, v2) in zip(intervals, intervals[1:]):
        assert hi1 + 1 == lo2
        assert v1 != v2
    for lo, hi, v in intervals:
        assert n_d(table, lo, events=events) == v
        assert n_d(table, hi, events=events) == v


def test_events_argument_validation(table_small):
    events = near_power_events(table_small, 100, n_max=90)
    with pytest.raises(ValueError):
        n_d(table_small, 101, n_max=90, events=events)
    with pytest.raises(ValueError):
        n_d_intervals(table_small, 500, n_max=90, events=events)
    with pytest.raises(ValueError):
        n_d(table_small, 50, events=events)  # table covers 120, events only 90


def test_distance_samples(table_small):
    rows = distance_samples(table_small)
    assert [r.n for r in rows] == [10, 20, 30, 40, 50]
    for row in rows:
        assert row.p == table_small.p(row.n)
        assert row.distances == tuple(
            delta_k(table_small, row.n, k).distance for k in (2, 3, 4)
        )


def test_small_threshold_table(table_small):
    rows = small_threshold_table(table_small, n_max=120)
    assert [d for d, _ in rows] == list(range(0, 7))
    assert all(len(cells) == len(DEFAULT_K_VALUES) for _, cells in rows)


def test_spot_values_at_full_size(table25k, deltas25k):
    assert m_k_d(table25k, 2, 1, series=deltas25k[2]) == 35
    assert m_k_d(table25k, 50, 0, series=deltas25k[50]) == 1
    assert m_k_d(table25k, 50, 1, series=deltas25k[50]) == 2
    assert m_k_d(table25k, 100, 10**70, series=deltas25k[100]) == 4502
