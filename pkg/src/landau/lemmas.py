"""Mechanical checks of the two exchange lemmas on computed data.

Lemma 1: for distinct primes p < p' with q >= p + p', if q divides g(n)
then p or p' does.  Its proof builds an explicit better value
M = p^k * p' * g(n) / q; ``construct_lemma1_witness`` materializes that
object so the proof's inequalities can be asserted on synthetic inputs
(real g(n) admits no hypothesis, which is exactly what the scan checks).

The corollary bounds non-divisors below q/2 by one; Lemma 2 does the same
on the interval (sqrt(beta)*q, (1+alpha)*q/2) whenever some prime in
(alpha*q, beta*q) divides g(n).  All interval membership below is decided
in exact integer arithmetic with strictly open endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .constants import ALPHA_BETA
from .core import LandauRecord, LandauTable
from .errors import DomainError, InsufficientSieveError, LandauError
from .factorization import Factorization, compare, is_prime
from .primes import PrimeSet


@dataclass(frozen=True)
class ExchangeWitness:
    """The exchange object M = p^k * p' * M0 / q and its bookkeeping."""

    n: int
    p: int
    p_prime: int
    q: int
    k: int
    m_fact: Factorization
    ell_m: int
    exceeds: bool

    def proof_steps(self, source: Factorization) -> list[str]:
        """Check every inequality the exchange argument relies on.

        Returns one message per violated step (expected: none).
        """
        p, pp, q, k = self.p, self.p_prime, self.q, self.k
        bad = []
        if not p ** k + pp <= q <= p ** (k + 1) + pp - 1:
            bad.append(f"k={k} does not bracket q={q}")
        ell_src = source.ell()
        if self.ell_m > ell_src + (p ** k + pp - q):
            bad.append("ell(M) exceeds ell(source) + (p^k + p' - q)")
        if p ** k + pp - q > 0:
            bad.append("p^k + p' - q is positive")
        if self.ell_m > self.n:
            bad.append("ell(M) exceeds the letter budget")
        # p^k p' - q >= p^k (p'-p) - p' + 1 >= p(p'-p) - p' + 1
        #            = (p-1)(p'-p-1) >= 0
        lhs = p ** k * pp - q
        s1 = p ** k * (pp - p) - pp + 1
        s2 = p * (pp - p) - pp + 1
        s3 = (p - 1) * (pp - p - 1)
        if not lhs >= s1:
            bad.append("p^k p' - q >= p^k(p'-p) - p' + 1 fails")
        if not s1 >= s2:
            bad.append("p^k(p'-p) - p' + 1 >= p(p'-p) - p' + 1 fails")
        if s2 != s3:
            bad.append("algebraic identity (p-1)(p'-p-1) fails")
        if s3 < 0:
            bad.append("(p-1)(p'-p-1) < 0")
        if compare(self.m_fact, source) <= 0:
            bad.append("M does not exceed the source value")
        return bad


def construct_lemma1_witness(rec: LandauRecord, p: int, p_prime: int,
                             q: int | None = None) -> ExchangeWitness:
    """Build the exchange object for source value rec.g_fact.

    The caller may supply the divisor prime q; by default the largest
    prime divisor with q >= p + p' is used.
    """
    fact = rec.g_fact
    if not (is_prime(p) and is_prime(p_prime)):
        raise DomainError("p and p' must be prime")
    if not p < p_prime:
        raise DomainError(f"need p < p', got {p} >= {p_prime}")
    if fact.exponent_of(p) or fact.exponent_of(p_prime):
        raise DomainError("p and p' must not divide the source value")
    if q is None:
        candidates = [r for r in fact.primes() if r >= p + p_prime]
        if not candidates:
            raise DomainError("no prime divisor q with q >= p + p'")
        q = candidates[-1]
    if not is_prime(q) or fact.exponent_of(q) == 0:
        raise DomainError(f"q={q} must be a prime divisor of the source")
    if q < p + p_prime:
        raise DomainError(f"need q >= p + p', got {q} < {p + p_prime}")

    k = 1
    while p ** (k + 1) + p_prime - 1 < q:
        k += 1
    if not p ** k + p_prime <= q:
        # The brackets [p^k + p', p^(k+1) + p' - 1] tile [p + p', inf), so
        # this cannot happen for valid inputs.
        raise LandauError(f"no bracketing exponent k for q={q}")

    new_pairs = dict(fact.pairs)
    new_pairs[q] -= 1
    new_pairs[p] = k
    new_pairs[p_prime] = 1
    m_fact = Factorization.from_pairs(new_pairs.items())
    return ExchangeWitness(
        n=rec.n,
        p=p,
        p_prime=p_prime,
        q=q,
        k=k,
        m_fact=m_fact,
        ell_m=m_fact.ell(),
        exceeds=compare(m_fact, fact) > 0,
    )


def lemma1_pattern(rec: LandauRecord, ps: PrimeSet):
    """A triple (p, p', q) satisfying Lemma 1's hypotheses, or None.

    A triple exists iff the two smallest primes not dividing g(n) sum to
    at most P(g(n)): any valid triple forces p1 + p2 <= p + p' <= q <=
    P(g(n)), and (p1, p2, P(g(n))) is itself valid.
    """
    q = rec.largest_prime
    if q is None:
        return None
    if ps.limit < q:
        raise InsufficientSieveError(f"need primes up to {q}")
    divisors = set(rec.g_fact.primes())
    missing = []
    for r in ps.primes[: ps.pi(q)]:
        r = int(r)
        if r not in divisors:
            missing.append(r)
            if len(missing) == 2:
                break
    if len(missing) == 2 and missing[0] + missing[1] <= q:
        return missing[0], missing[1], q
    return None


def lemma1_pattern_bruteforce(rec: LandauRecord, ps: PrimeSet):
    """Reference triple search by enumeration; test oracle for the above."""
    q_max = rec.largest_prime
    if q_max is None:
        return None
    divisors = set(rec.g_fact.primes())
    primes = [int(r) for r in ps.primes[: ps.pi(q_max)]]
    non_div = [r for r in primes if r not in divisors]
    div = [r for r in primes if r in divisors]
    for i, p in enumerate(non_div):
        for pp in non_div[i + 1 :]:
            for q in div:
                if q >= p + pp:
                    return p, pp, q
    return None


def check_corollary(rec: LandauRecord, ps: PrimeSet) -> int:
    """Count of primes below q/2 not dividing g(n); passes iff <= 1."""
    q = rec.largest_prime
    if q is None:
        raise DomainError(f"g({rec.n}) = 1 has no largest prime")
    if ps.limit < q:
        raise InsufficientSieveError(f"need primes up to {q}")
    divisors = set(rec.g_fact.primes())
    count = 0
    for r in ps.primes:
        r = int(r)
        if 2 * r >= q:
            break
        if r not in divisors:
            count += 1
    return count


def check_lemma2(rec: LandauRecord, alpha: Fraction, beta: Fraction,
                 ps: PrimeSet) -> int | None:
    """Non-divisor count in (sqrt(beta)q, (1+alpha)q/2), or None if no
    prime in (alpha q, beta q) divides g(n).  Passes iff <= 1.
    """
    if not 0 < alpha < beta < 1:
        raise DomainError(f"need 0 < alpha < beta < 1, got {alpha}, {beta}")
    q = rec.largest_prime
    if q is None:
        raise DomainError(f"g({rec.n}) = 1 has no largest prime")
    if ps.limit < q:
        raise InsufficientSieveError(f"need primes up to {q}")
    divisors = set(rec.g_fact.primes())

    a1, b1 = alpha.numerator, alpha.denominator
    a2, b2 = beta.numerator, beta.denominator
    hypothesis = any(
        a1 * q < int(r) * b1 and int(r) * b2 < a2 * q
        for r in divisors
    )
    if not hypothesis:
        return None

    count = 0
    for r in ps.primes:
        r = int(r)
        if 2 * r * b1 >= (a1 + b1) * q:  # r >= (1+alpha) q / 2
            break
        if r * r * b2 > a2 * q * q and r not in divisors:  # r > sqrt(beta) q
            count += 1
    return count


def scan_lemmas(table: LandauTable, ps: PrimeSet, n_lo: int = 5,
                n_hi: int | None = None,
                intervals=ALPHA_BETA) -> list[str]:
    """Run all three per-n checks over [n_lo, n_hi]; one line per violation."""
    n_hi = table.max_n if n_hi is None else min(n_hi, table.max_n)
    out = []
    for n in range(n_lo, n_hi + 1):
        rec = table.g_of(n)
        triple = lemma1_pattern(rec, ps)
        if triple is not None:
            out.append(
                f"n={n}: unexpected exchange hypothesis p={triple[0]} "
                f"p'={triple[1]} q={triple[2]}"
            )
        if rec.largest_prime is not None:
            c = check_corollary(rec, ps)
            if c > 1:
                out.append(f"n={n}: {c} primes below q/2 miss g(n)")
            for i, (alpha, beta) in enumerate(intervals, start=1):
                c2 = check_lemma2(rec, alpha, beta, ps)
                if c2 is not None and c2 > 1:
                    out.append(
                        f"n={n}: interval {i}: {c2} primes in the derived "
                        "window miss g(n)"
                    )
    return out
