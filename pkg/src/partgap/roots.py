"""Exact integer k-th roots and distances to nearest perfect powers.

All arithmetic is on arbitrary-precision ints; floats only ever seed the
Newton iteration and every candidate is corrected against the exact
sandwich r^k <= v < (r+1)^k before being returned.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .partitions import PartitionTable


class KthRootResult(NamedTuple):
    root: int
    exact: bool


def floor_kth_root(v: int, k: int) -> KthRootResult:
    """Largest r with r^k <= v, plus whether r^k == v exactly.

    v >= 0, k >= 1.  k == 2 delegates to math.isqrt.  Otherwise Newton's
    method on integers, seeded from a float log when v fits (clamped by
    the bit-length seed 2^ceil(bits/k), which is always >= the true root),
    followed by exact correction loops.  The float seed is inflated by
    1e-9 relative so rounding can only land at-or-above the true root,
    which keeps the descent monotone.
    """
    if v < 0:
        raise ValueError("v must be >= 0, got %d" % v)
    if k < 1:
        raise ValueError("k must be >= 1, got %d" % k)
    if k == 1 or v < 2:
        return KthRootResult(root=v, exact=True)
    if k == 2:
        r = math.isqrt(v)
        return KthRootResult(root=r, exact=r * r == v)
    if v.bit_length() <= k:
        # 2^k > v means the root is 1
        return KthRootResult(root=1, exact=v == 1)

    bit_seed = 1 << -(-v.bit_length() // k)
    try:
        float_seed = int(math.exp(math.log(v) / k) * (1.0 + 1e-9)) + 1
        r = float_seed if float_seed < bit_seed else bit_seed
    except OverflowError:
        r = bit_seed
    while True:
        s = ((k - 1) * r + v // r ** (k - 1)) // k
        if s >= r:
            break
        r = s
    # Newton under-/overshoot is at most a few steps here; make it exact.
    while r ** k > v:
        r -= 1
    while (r + 1) ** k <= v:
        r += 1
    return KthRootResult(root=r, exact=r ** k == v)


def nearest_power_distance(v: int, k: int) -> tuple[int, int]:
    """(base, distance) for the k-th power nearest to v >= 1.

    distance = min(v - r^k, (r+1)^k - v) with r = floor k-th root; ties
    resolve to the smaller base r.  Minimizing over bases m >= 0 is
    enough even if negative m were allowed: for odd k those powers are
    <= -1, farther from v >= 1, and for even k they mirror m >= 0.
    """
    if v < 1:
        raise ValueError("v must be >= 1, got %d" % v)
    if k < 2:
        raise ValueError("k must be >= 2, got %d" % k)
    r = floor_kth_root(v, k).root
    below = v - r ** k
    above = (r + 1) ** k - v
    if below <= above:
        return r, below
    return r + 1, above


class DistanceRecord(NamedTuple):
    """Distance from p(n) to the nearest k-th power, with the base hit."""

    n: int
    k: int
    nearest_base: int
    distance: int


def delta_k(table: PartitionTable, n: int, k: int) -> DistanceRecord:
    """Distance record for p(n) against k-th powers."""
    if n < 0 or n > table.n_max:
        raise ValueError("n=%d outside table range 0..%d" % (n, table.n_max))
    base, dist = nearest_power_distance(table.values[n], k)
    return DistanceRecord(n=n, k=k, nearest_base=base, distance=dist)


def _primes_up_to(limit: int) -> list[int]:
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, flag in enumerate(sieve) if flag]


_PRIME_CACHE: list[int] = []


def prime_exponents_up_to(limit: int) -> list[int]:
    """Primes <= limit, cached monotonically (candidate exponents)."""
    global _PRIME_CACHE
    if not _PRIME_CACHE or _PRIME_CACHE[-1] < limit:
        _PRIME_CACHE = _primes_up_to(max(limit, 64))
    return [q for q in _PRIME_CACHE if q <= limit]


class PowerWitness(NamedTuple):
    base: int
    exponent: int


def is_perfect_power(v: int) -> PowerWitness | None:
    """Some (base, exponent >= 2) with base**exponent == v, else None.

    Only prime exponents up to bit_length(v) need checking: any m^(ab)
    is (m^a)^b.  0 and 1 are 0^2 and 1^2.  Returns the witness with the
    smallest prime exponent found.
    """
    if v < 0:
        raise ValueError("v must be >= 0, got %d" % v)
    if v in (0, 1):
        return PowerWitness(base=v, exponent=2)
    for q in prime_exponents_up_to(v.bit_length()):
        root, exact = floor_kth_root(v, q)
        if exact:
            return PowerWitness(base=root, exponent=q)
    return None
