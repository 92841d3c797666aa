"""Exact table of maximal cycle-structure orders via prime-power knapsack.

For primes p_1 < ... < p_k up to a cutoff, the builder fills
B[j][m] = max{M : M uses only p_1..p_j, ell(M) <= m} one prime at a time:

    B[j][m] = max(B[j-1][m], max_{a >= 1, p_j^a <= m} p_j^a * B[j-1][m - p_j^a])

so each prime contributes at most one power (group knapsack).  Cell values
are natural-log sums held as double-double pairs with a per-stage exponent
matrix for reconstruction; comparisons inside a relative guard band are
settled in exact big-integer arithmetic, so the result never depends on
floating-point behavior.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .constants import MAX_N_SOFT_CEILING, PRIOR_RATIO_BOUND
from .errors import DomainError, ResourceLimitError
from .factorization import Factorization, compare
from .primes import sieve

CUTOFF_MODES = ("safe", "exhaustive")


def prime_cutoff(max_n: int, cutoff_mode: str = "safe") -> int:
    """Largest prime the table builder considers.

    Safe mode leans on the prior bound P(g(n)) <= 2.86*sqrt(n log n) for
    n >= 2 (Massias, Nicolas, and Robin 1989) plus a guard of 10;
    exhaustive mode considers every prime up to max_n.
    """
    if cutoff_mode not in CUTOFF_MODES:
        raise DomainError(f"cutoff_mode must be one of {CUTOFF_MODES}")
    if cutoff_mode == "exhaustive" or max_n < 2:
        return max_n
    bound = math.ceil(float(PRIOR_RATIO_BOUND) * math.sqrt(max_n * math.log(max_n)))
    return min(max_n, bound + 10)


@dataclass(frozen=True)
class LandauRecord:
    """g(n) for one n: factorization, ell, natural log, largest prime."""

    n: int
    g_fact: Factorization
    ell: int
    log_g: float
    largest_prime: int | None


def synthetic_record(fact: Factorization, n: int | None = None) -> LandauRecord:
    """Record for an arbitrary (possibly non-optimal) value.

    Used to exercise exchange-witness construction, whose hypotheses can
    never hold on genuine table records.  Defaults the letter budget to
    ell(fact).
    """
    ell_f = fact.ell()
    if n is None:
        n = ell_f
    if ell_f > n:
        raise DomainError(f"ell={ell_f} exceeds budget n={n}")
    return LandauRecord(
        n=n,
        g_fact=fact,
        ell=ell_f,
        log_g=fact.log_value(),
        largest_prime=fact.largest_prime,
    )


def ratio(rec: LandauRecord) -> float | None:
    """largest_prime / sqrt(n ln n); None when g(n) has no prime factor."""
    if rec.n < 2:
        raise DomainError(f"ratio needs n >= 2, got {rec.n}")
    if rec.largest_prime is None:
        return None
    return rec.largest_prime / math.sqrt(rec.n * math.log(rec.n))


class LandauTable:
    """g(n) for all 1 <= n <= max_n.  Immutable after construction."""

    def __init__(self, max_n, prime_cutoff, primes, amat, log_hi, log_lo,
                 pmax, ellv, nsel, escalations):
        self.max_n = int(max_n)
        self.prime_cutoff = int(prime_cutoff)
        self.primes = primes
        self._amat = amat
        self._log_hi = log_hi
        self._log_lo = log_lo
        self._pmax = pmax
        self._ellv = ellv
        self._nsel = nsel
        self.escalations = int(escalations)

    # -- array views used by the scanning modules ---------------------------

    @property
    def largest_prime_array(self) -> np.ndarray:
        """P(g(n)) indexed by n (0 where g(n) = 1); entry 0 unused."""
        return self._pmax

    @property
    def log_g_array(self) -> np.ndarray:
        """log g(n) indexed by n; entry 0 unused."""
        return self._log_hi + self._log_lo

    @property
    def ell_array(self) -> np.ndarray:
        return self._ellv

    # -- record access -------------------------------------------------------

    def factorization_of(self, n: int) -> Factorization:
        if not 1 <= n <= self.max_n:
            raise DomainError(f"n must be in [1, {self.max_n}], got {n}")
        pairs = []
        m = n
        for j in range(len(self.primes) - 1, -1, -1):
            a = int(self._amat[j, m])
            if a:
                p = int(self.primes[j])
                pairs.append((p, a))
                m -= p ** a
        pairs.reverse()
        return Factorization(tuple(pairs))

    def g_of(self, n: int) -> LandauRecord:
        if not 1 <= n <= self.max_n:
            raise DomainError(f"n must be in [1, {self.max_n}], got {n}")
        pm = int(self._pmax[n])
        return LandauRecord(
            n=n,
            g_fact=self.factorization_of(n),
            ell=int(self._ellv[n]),
            log_g=float(self._log_hi[n] + self._log_lo[n]),
            largest_prime=pm if pm else None,
        )

    def records(self):
        for n in range(1, self.max_n + 1):
            yield self.g_of(n)

    def iter_pairs(self):
        """Yield (n, [(prime, exponent), ...]) for every n, primes ascending.

        Bulk variant of factorization_of backed by the walk kernels; meant
        for full-table export.
        """
        offsets, stage_idx, expo = _kernels.walk_pairs(
            self._amat, self.primes, self._nsel
        )
        primes = self.primes
        for n in range(1, self.max_n + 1):
            s, e = int(offsets[n]), int(offsets[n + 1])
            yield n, [
                (int(primes[stage_idx[i]]), int(expo[i])) for i in range(s, e)
            ]


def _power_logs(p: int, max_n: int):
    """Powers p, p^2, ... <= max_n with their logs as (hi, lo) pairs.

    Logs come from 80-bit extended precision so the lo word carries real
    information.
    """
    powers = []
    pw = p
    while pw <= max_n:
        powers.append(pw)
        pw *= p
    lp = np.log(np.longdouble(p))
    arr = np.array(powers, dtype=np.int64)
    exps = np.arange(1, len(powers) + 1, dtype=np.int64)
    full = exps.astype(np.longdouble) * lp
    hi = full.astype(np.float64)
    lo = (full - hi.astype(np.longdouble)).astype(np.float64)
    return arr, hi, lo


def _partial_factorization(amat, primes, j_stop: int, m: int) -> list[tuple[int, int]]:
    """Optimal pairs at budget m using only stages < j_stop (ascending)."""
    pairs = []
    for j in range(j_stop - 1, -1, -1):
        a = int(amat[j, m])
        if a:
            p = int(primes[j])
            pairs.append((p, a))
            m -= p ** a
    pairs.reverse()
    return pairs


def _dd_from_pairs(pairs) -> tuple[float, float]:
    total = np.longdouble(0.0)
    for p, a in pairs:
        total += np.longdouble(a) * np.log(np.longdouble(p))
    hi = np.float64(total)
    lo = np.float64(total - np.longdouble(hi))
    return float(hi), float(lo)


def _settle_ties(j, p, powers, amat, primes, new_hi, new_lo,
                 arow, tie_budgets) -> int:
    """Re-decide flagged budgets in exact integer arithmetic.

    All candidates at stage j read from stage j-1, whose decisions are
    final, so fixing a budget after the stage kernel ran cannot disturb any
    other budget of the same stage.
    """
    fixes = 0
    for m in map(int, tie_budgets):
        base_pairs = _partial_factorization(amat, primes, j, m)
        best_val = _value_of(base_pairs)
        best_a = 0
        best_pairs = base_pairs
        for t, pw in enumerate(map(int, powers)):
            if pw > m:
                break
            pairs = _partial_factorization(amat, primes, j, m - pw)
            val = _value_of(pairs) * pw
            if val > best_val:
                best_val = val
                best_a = t + 1
                best_pairs = pairs + [(p, t + 1)]
        if best_a != int(arow[m]):
            arow[m] = best_a
            hi, lo = _dd_from_pairs(best_pairs)
            new_hi[m] = hi
            new_lo[m] = lo
            fixes += 1
    return fixes


def _value_of(pairs) -> int:
    v = 1
    for p, a in pairs:
        v *= p ** a
    return v


def build_table(max_n: int, cutoff_mode: str = "safe", *,
                long_run: bool = False) -> LandauTable:
    """Compute g(n) for all n <= max_n.

    Raises DomainError for max_n < 1 and ResourceLimitError above the soft
    ceiling unless long_run is set.
    """
    if max_n < 1:
        raise DomainError(f"max_n must be >= 1, got {max_n}")
    if max_n > MAX_N_SOFT_CEILING and not long_run:
        raise ResourceLimitError(
            f"max_n {max_n} above soft ceiling {MAX_N_SOFT_CEILING}; "
            "pass long_run=True to proceed"
        )

    cutoff = prime_cutoff(max_n, cutoff_mode)
    primes = (
        sieve(cutoff).primes if cutoff >= 2 else np.empty(0, dtype=np.int64)
    )
    k = len(primes)

    size = max_n + 1
    old_hi = np.zeros(size)
    old_lo = np.zeros(size)
    new_hi = np.zeros(size)
    new_lo = np.zeros(size)
    amat = np.zeros((k, size), dtype=np.uint8)
    tie_mark = np.zeros(size, dtype=np.uint8)
    escalations = 0

    for j in range(k):
        p = int(primes[j])
        powers, pow_hi, pow_lo = _power_logs(p, max_n)
        _kernels.dp_stage(
            old_hi, old_lo, powers, pow_hi, pow_lo,
            new_hi, new_lo, amat[j], tie_mark,
        )
        ties = np.flatnonzero(tie_mark)
        if ties.size:
            escalations += _settle_ties(
                j, p, powers, amat, primes, new_hi, new_lo, amat[j], ties,
            )
        old_hi, new_hi = new_hi, old_hi
        old_lo, new_lo = new_lo, old_lo

    pmax, ellv, nsel = _kernels.walk_summaries(amat, primes)
    return LandauTable(
        max_n=max_n,
        prime_cutoff=cutoff,
        primes=primes,
        amat=amat,
        log_hi=old_hi,
        log_lo=old_lo,
        pmax=pmax,
        ellv=ellv,
        nsel=nsel,
        escalations=escalations,
    )


def verify_exchange_optimality(table: LandauTable, n_max: int) -> list[str]:
    """Check that no single-prime exponent change with ell <= n beats g(n).

    Returns one description per violation (expected: none).  Replacing p^e
    by p^e' multiplies the value by p^(e'-e), so only raises (e' > e) can
    beat the optimum, and the smallest raise e' = e+1 is the cheapest; the
    value comparison is exact by construction.
    """
    n_max = min(n_max, table.max_n)
    violations = []
    for n in range(1, n_max + 1):
        fact = table.factorization_of(n)
        exps = dict(fact.pairs)
        ell_g = fact.ell()
        for p in map(int, table.primes):
            if p > n:
                break
            e = exps.get(p, 0)
            removed = p ** e if e else 0
            if ell_g - removed + p ** (e + 1) <= n:
                violations.append(
                    f"n={n}: raising {p}^{e} to {p}^{e + 1} keeps "
                    f"ell within budget yet increases the value"
                )
    return violations


def compare_records(r1: LandauRecord, r2: LandauRecord) -> int:
    """Exact value ordering of two records' g values."""
    return compare(r1.g_fact, r2.g_fact)
