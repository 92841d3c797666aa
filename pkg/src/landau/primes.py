"""Prime generation and exact prime-counting / Chebyshev-theta evaluation.

The sieve is segmented so memory stays O(sqrt(limit) + segment).  Interval
counting uses strictly open endpoints throughout, matching the convention of
the verification modules.  Theta values are compensated natural-log sums in
ascending prime order.
"""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass, field

import numpy as np

from .constants import SIEVE_CEILING
from .errors import (
    CacheFormatError,
    DomainError,
    InsufficientSieveError,
    NoBoundError,
    ResourceLimitError,
)

_SEGMENT = 1 << 20

CACHE_MAGIC = b"LPRIM1"
CACHE_VERSION = 1


@dataclass(eq=False)
class PrimeSet:
    """All primes up to ``limit``, ascending.  Read-only after construction."""

    limit: int
    primes: np.ndarray
    _theta_prefix: np.ndarray | None = field(default=None, repr=False)

    def __len__(self) -> int:
        return int(self.primes.shape[0])

    def __iter__(self):
        return iter(int(p) for p in self.primes)

    def __contains__(self, m: int) -> bool:
        i = int(np.searchsorted(self.primes, m))
        return i < len(self.primes) and int(self.primes[i]) == m

    def pi(self, x) -> int:
        """Number of primes <= x."""
        return int(np.searchsorted(self.primes, x, side="right"))

    def theta_prefix(self) -> np.ndarray:
        """theta at each prime index: prefix[i] = sum(log p_j, j < i).

        Accumulated in extended precision, returned as float64.
        """
        if self._theta_prefix is None:
            logs = np.log(self.primes.astype(np.longdouble))
            prefix = np.concatenate(
                ([np.longdouble(0.0)], np.cumsum(logs))
            ).astype(np.float64)
            self._theta_prefix = prefix
        return self._theta_prefix


@dataclass(frozen=True)
class ThetaAccumulator:
    """Chebyshev theta at x with a conservative rounding-error budget."""

    x: float
    value: float
    error_budget: float


@dataclass(frozen=True)
class AnalyticThetaBound:
    """Table rows (x_threshold, epsilon): theta(x) >= (1-epsilon)*x for all
    x >= x_threshold.  Rows are configuration data; validity in the sieve
    range is checked by tests, validity beyond rests on the cited sources.
    """

    entries: tuple[tuple[int, float], ...]

    def __post_init__(self):
        prev_x, prev_e = 0, float("inf")
        for x0, eps in self.entries:
            if x0 <= prev_x:
                raise DomainError("thresholds must be strictly increasing")
            if eps >= prev_e:
                raise DomainError("epsilons must be strictly decreasing")
            if not 0.0 < eps < 1.0:
                raise DomainError(f"epsilon {eps} out of (0, 1)")
            prev_x, prev_e = x0, eps

    def epsilon_at(self, x: float) -> float:
        """Epsilon of the largest applicable threshold; raises below all."""
        best = None
        for x0, eps in self.entries:
            if x >= x0:
                best = eps
            else:
                break
        if best is None:
            raise NoBoundError(f"no analytic theta bound applies at x={x}")
        return best


# Consequences of the classical explicit estimate
# theta(x) > x*(1 - 1/log x) for x >= 41 (Rosser and Schoenfeld 1962),
# frozen at round thresholds with epsilon = 1/log(threshold) rounded up.
# Tests re-verify every row against the exact sieve where it is reachable.
DEFAULT_THETA_BOUND = AnalyticThetaBound(
    entries=(
        (41, 0.26929),
        (100, 0.21715),
        (10 ** 3, 0.14477),
        (10 ** 4, 0.10858),
        (10 ** 5, 0.08686),
        (10 ** 6, 0.07239),
        (10 ** 7, 0.06205),
        (10 ** 8, 0.05429),
    )
)


def sieve(limit: int, *, ceiling: int = SIEVE_CEILING) -> PrimeSet:
    """All primes <= limit via a segmented sieve of Eratosthenes."""
    if limit < 2:
        raise DomainError(f"sieve limit must be >= 2, got {limit}")
    if limit > ceiling:
        raise ResourceLimitError(f"sieve limit {limit} exceeds ceiling {ceiling}")

    root = math.isqrt(limit)
    base = _dense_sieve(max(root, 2))

    chunks = [base[base <= limit]]
    lo = max(root + 1, 3)
    while lo <= limit:
        hi = min(lo + _SEGMENT - 1, limit)
        flags = np.ones(hi - lo + 1, dtype=bool)
        for p in base:
            p = int(p)
            start = max(p * p, ((lo + p - 1) // p) * p)
            if start > hi:
                continue
            flags[start - lo :: p] = False
        chunks.append(np.flatnonzero(flags).astype(np.int64) + lo)
        lo = hi + 1
    primes = np.concatenate(chunks)
    return PrimeSet(limit=limit, primes=primes)


def _dense_sieve(limit: int) -> np.ndarray:
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags).astype(np.int64)


def count_primes_in(lo: float, hi: float, ps: PrimeSet) -> int:
    """Number of primes p with lo < p < hi (both endpoints excluded)."""
    if hi > ps.limit:
        raise InsufficientSieveError(
            f"interval end {hi} beyond sieve limit {ps.limit}"
        )
    i_lo = int(np.searchsorted(ps.primes, lo, side="right"))
    i_hi = int(np.searchsorted(ps.primes, hi, side="left"))
    return max(i_hi - i_lo, 0)


def theta(x: float, ps: PrimeSet) -> float:
    """Chebyshev theta(x): sum of log p over primes p <= x, natural logs."""
    return theta_accumulate(x, ps).value


def theta_accumulate(x: float, ps: PrimeSet) -> ThetaAccumulator:
    """theta(x) with an explicit error budget (compensated summation)."""
    if x > ps.limit:
        raise InsufficientSieveError(f"x={x} beyond sieve limit {ps.limit}")
    k = ps.pi(x)
    value = math.fsum(np.log(ps.primes[:k].astype(np.float64)))
    # fsum is correctly rounded; budget is a generous multiple of one ulp.
    budget = max(value, 1.0) * 2.0 ** -50
    return ThetaAccumulator(x=float(x), value=value, error_budget=budget)


def theta_lower_bound(x: float, tbl: AnalyticThetaBound = DEFAULT_THETA_BOUND) -> float:
    """(1 - epsilon)*x for the largest applicable table threshold."""
    return (1.0 - tbl.epsilon_at(x)) * x


def save_prime_cache(ps: PrimeSet, path) -> None:
    """Write the prime list as magic, version byte, limit, then 64-bit
    little-endian deltas between consecutive primes (first delta from 0).
    """
    deltas = np.diff(ps.primes, prepend=np.int64(0)).astype("<i8")
    with open(path, "wb") as fh:
        fh.write(CACHE_MAGIC)
        fh.write(struct.pack("<B", CACHE_VERSION))
        fh.write(struct.pack("<q", ps.limit))
        fh.write(deltas.tobytes())


def load_prime_cache(path) -> PrimeSet:
    """Read a prime cache, validating header and the first four primes."""
    with open(path, "rb") as fh:
        magic = fh.read(len(CACHE_MAGIC))
        if magic != CACHE_MAGIC:
            raise CacheFormatError(f"bad magic {magic!r}")
        (version,) = struct.unpack("<B", fh.read(1))
        if version != CACHE_VERSION:
            raise CacheFormatError(f"unsupported cache version {version}")
        (limit,) = struct.unpack("<q", fh.read(8))
        raw = fh.read()
    if len(raw) % 8:
        raise CacheFormatError("truncated delta stream")
    deltas = np.frombuffer(raw, dtype="<i8")
    if len(deltas) and int(deltas.min()) <= 0:
        raise CacheFormatError("deltas must be positive")
    primes = np.cumsum(deltas, dtype=np.int64)
    if limit >= 7 and list(primes[:4]) != [2, 3, 5, 7]:
        raise CacheFormatError("prime stream does not start 2, 3, 5, 7")
    if len(primes) and int(primes[-1]) > limit:
        raise CacheFormatError("prime exceeds recorded limit")
    return PrimeSet(limit=int(limit), primes=primes)
