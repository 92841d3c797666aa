"""Exact Landau-function tables plus a bound-verification suite.

g(n) is the maximal order of a permutation of n letters, equivalently the
largest product of prime powers with distinct bases whose sum is at most n.
This package computes g(n) exactly by dynamic programming, cross-checks it
against independent brute-force oracles, and mechanically verifies the
inequality chain bounding its largest prime factor by 1.328*sqrt(n ln n).
"""

from .bounds import (
    BoundReport,
    DEFAULT_INTERVALS,
    IntervalSpec,
    ThetaLinkReport,
    build_bound_report,
    final_constant,
    residual_min_passing_q,
    residual_sum,
    theta_link_scan,
    two_primes_scan,
    verify_coverage,
    verify_theorem_on_table,
    verify_theta_link,
    verify_two_primes,
)
from .core import (
    LandauRecord,
    LandauTable,
    build_table,
    prime_cutoff,
    ratio,
    synthetic_record,
    verify_exchange_optimality,
)
from .errors import (
    CacheFormatError,
    DomainError,
    InsufficientSieveError,
    LandauError,
    NoBoundError,
    ResourceLimitError,
)
from .factorization import ONE, Factorization, compare, ell
from .lemmas import (
    ExchangeWitness,
    check_corollary,
    check_lemma2,
    construct_lemma1_witness,
    lemma1_pattern,
    scan_lemmas,
)
from .oracle import g_by_partitions, g_by_prime_power_subsets, verify_reduction
from .primes import (
    AnalyticThetaBound,
    DEFAULT_THETA_BOUND,
    PrimeSet,
    ThetaAccumulator,
    count_primes_in,
    load_prime_cache,
    save_prime_cache,
    sieve,
    theta,
    theta_accumulate,
    theta_lower_bound,
)

__version__ = "0.1.0"

__all__ = [
    "AnalyticThetaBound",
    "BoundReport",
    "CacheFormatError",
    "DEFAULT_INTERVALS",
    "DEFAULT_THETA_BOUND",
    "DomainError",
    "ExchangeWitness",
    "Factorization",
    "InsufficientSieveError",
    "IntervalSpec",
    "LandauError",
    "LandauRecord",
    "LandauTable",
    "NoBoundError",
    "ONE",
    "PrimeSet",
    "ResourceLimitError",
    "ThetaAccumulator",
    "ThetaLinkReport",
    "build_bound_report",
    "build_table",
    "check_corollary",
    "check_lemma2",
    "compare",
    "construct_lemma1_witness",
    "count_primes_in",
    "ell",
    "final_constant",
    "g_by_partitions",
    "g_by_prime_power_subsets",
    "lemma1_pattern",
    "load_prime_cache",
    "prime_cutoff",
    "ratio",
    "residual_min_passing_q",
    "residual_sum",
    "save_prime_cache",
    "scan_lemmas",
    "sieve",
    "synthetic_record",
    "theta",
    "theta_accumulate",
    "theta_link_scan",
    "theta_lower_bound",
    "two_primes_scan",
    "verify_coverage",
    "verify_exchange_optimality",
    "verify_reduction",
    "verify_theorem_on_table",
    "verify_theta_link",
    "verify_two_primes",
]
