"""Exact prime-power factorizations and value-ordering utilities.

A :class:`Factorization` is the canonical representation of a candidate
value M: ascending (prime, exponent) pairs whose product is M exactly.  The
empty factorization represents M = 1.  Ordering of represented integers is
decided on log sums, escalating to exact big-integer arithmetic whenever two
log sums land inside a relative guard band.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

# Relative guard band on log comparisons; differences at or below the band
# are settled in exact integer arithmetic.  Double-precision log sums over
# realistic factorization sizes carry error far below this band, so the
# float path never misorders values outside it.
LOG_GUARD = 1e-9


def is_prime(m: int) -> bool:
    """Deterministic trial-division primality test for small integers."""
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Factorization:
    """Ascending (prime, exponent) pairs; the empty tuple represents 1."""

    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        last = 1
        for p, a in self.pairs:
            if p <= last:
                raise DomainError(f"primes must be strictly increasing, got {p} after {last}")
            if a < 1:
                raise DomainError(f"exponent for prime {p} must be >= 1, got {a}")
            if not is_prime(p):
                raise DomainError(f"{p} is not prime")
            last = p

    @classmethod
    def from_pairs(cls, pairs) -> "Factorization":
        """Build from (prime, exponent) pairs in any order, merging repeats."""
        acc: dict[int, int] = {}
        for p, a in pairs:
            acc[p] = acc.get(p, 0) + a
        return cls(tuple(sorted((p, a) for p, a in acc.items() if a != 0)))

    @classmethod
    def of_int(cls, m: int) -> "Factorization":
        """Factor a positive integer by trial division (small inputs only)."""
        if m < 1:
            raise DomainError(f"cannot factor {m}")
        pairs = []
        d = 2
        while d * d <= m:
            if m % d == 0:
                a = 0
                while m % d == 0:
                    m //= d
                    a += 1
                pairs.append((d, a))
            d += 1 if d == 2 else 2
        if m > 1:
            pairs.append((m, 1))
        return cls(tuple(pairs))

    def value(self) -> int:
        """The represented integer, exactly."""
        v = 1
        for p, a in self.pairs:
            v *= p ** a
        return v

    def log_value(self) -> float:
        """Natural log of the represented integer (compensated sum)."""
        return math.fsum(a * math.log(p) for p, a in self.pairs)

    def ell(self) -> int:
        """Sum of the prime-power components; 0 for the empty product."""
        return sum(p ** a for p, a in self.pairs)

    @property
    def largest_prime(self) -> int | None:
        return self.pairs[-1][0] if self.pairs else None

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    def exponent_of(self, p: int) -> int:
        for q, a in self.pairs:
            if q == p:
                return a
        return 0

    def __str__(self) -> str:
        if not self.pairs:
            return "1"
        return "*".join(f"{p}^{a}" if a > 1 else str(p) for p, a in self.pairs)

    def __lt__(self, other: "Factorization") -> bool:
        return compare(self, other) < 0

    def __le__(self, other: "Factorization") -> bool:
        return compare(self, other) <= 0


ONE = Factorization(())


def ell(f: Factorization) -> int:
    """Sum of prime-power components of the represented value."""
    return f.ell()


def compare(f1: Factorization, f2: Factorization) -> int:
    """Exact ordering of the represented integers: -1, 0, or +1.

    Fast path compares compensated log sums; when the difference falls
    inside the guard band, common prime powers are cancelled and the
    residual products compared in unbounded integer arithmetic.
    """
    l1 = f1.log_value()
    l2 = f2.log_value()
    d = l1 - l2
    if abs(d) > LOG_GUARD * max(abs(l1), abs(l2), 1.0):
        return 1 if d > 0 else -1
    e1 = dict(f1.pairs)
    e2 = dict(f2.pairs)
    r1 = 1
    r2 = 1
    for p in e1.keys() | e2.keys():
        da = e1.get(p, 0) - e2.get(p, 0)
        if da > 0:
            r1 *= p ** da
        elif da < 0:
            r2 *= p ** (-da)
    return (r1 > r2) - (r1 < r2)
