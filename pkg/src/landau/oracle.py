"""Independent brute-force ground truth for small n.

Two deliberately simple computations of the maximal permutation order:
one over integer partitions (lcm of parts), one over sets of prime powers
with distinct base primes.  Neither shares code with the table builder;
both favor obviousness over speed and refuse inputs beyond their stated
ranges.
"""

from __future__ import annotations

from math import gcd

from .errors import DomainError

PARTITION_LIMIT = 30
SUBSET_LIMIT = 60


def _small_primes(n: int) -> list[int]:
    out = []
    for m in range(2, n + 1):
        if all(m % p for p in out):
            out.append(m)
    return out


def g_by_partitions(n: int) -> int:
    """Max over all integer partitions of n of lcm(parts)."""
    if not 1 <= n <= PARTITION_LIMIT:
        raise DomainError(
            f"partition oracle accepts 1 <= n <= {PARTITION_LIMIT}, got {n}"
        )
    best = 1

    def rec(remaining: int, max_part: int, cur_lcm: int) -> None:
        nonlocal best
        if remaining == 0:
            if cur_lcm > best:
                best = cur_lcm
            return
        for part in range(min(max_part, remaining), 0, -1):
            rec(remaining - part, part, cur_lcm * part // gcd(cur_lcm, part))

    rec(n, n, 1)
    return best


def g_by_prime_power_subsets(n: int) -> int:
    """Max product of prime powers with distinct bases and sum <= n."""
    if not 1 <= n <= SUBSET_LIMIT:
        raise DomainError(
            f"subset oracle accepts 1 <= n <= {SUBSET_LIMIT}, got {n}"
        )
    primes = _small_primes(n)
    best = 1

    def rec(idx: int, budget: int, product: int) -> None:
        nonlocal best
        if product > best:
            best = product
        if idx == len(primes) or primes[idx] > budget:
            return
        rec(idx + 1, budget, product)  # skip this prime
        pw = primes[idx]
        while pw <= budget:
            rec(idx + 1, budget - pw, product * pw)
            pw *= primes[idx]

    rec(0, n, 1)
    return best


def verify_reduction(n_max: int) -> bool:
    """True iff both oracles agree for every n <= n_max."""
    if n_max > PARTITION_LIMIT:
        raise DomainError(
            f"reduction check limited to n <= {PARTITION_LIMIT}, got {n_max}"
        )
    return all(
        g_by_partitions(n) == g_by_prime_power_subsets(n)
        for n in range(1, n_max + 1)
    )
