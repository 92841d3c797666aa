"""Constants for the bound-verification chain, kept in one auditable place.

Every decimal constant is stored as an exact ``Fraction``; conversion to
float happens at the point of use.  The interval table and the inequality
coefficients below are configuration for the verifier modules, not values
derived anywhere in this package.
"""

from fractions import Fraction

# Interval endpoint pairs (alpha_i, beta_i), i = 1..9.  Each scaled interval
# (alpha_i*q, beta_i*q) is required to contain at least two primes over the
# verified q-range; the derived intervals (sqrt(beta_i)*q, (1+alpha_i)*q/2)
# then chain together to cover (q/2, COVER_END*q).
ALPHA_BETA: tuple[tuple[Fraction, Fraction], ...] = (
    (Fraction("0.2426"), Fraction("0.25")),
    (Fraction("0.3746"), Fraction("0.386")),
    (Fraction("0.4632"), Fraction("0.4723")),
    (Fraction("0.5248"), Fraction("0.5352")),
    (Fraction("0.57"), Fraction("0.5812")),
    (Fraction("0.6044"), Fraction("0.6162")),
    (Fraction("0.6312"), Fraction("0.6435")),
    (Fraction("0.6534"), Fraction("0.6652")),
    (Fraction("0.6714"), Fraction("0.6834")),
)

# Right end of the covered range as a multiple of q; equals (1+alpha_9)/2.
COVER_END = Fraction("0.8357")

# The non-theta terms subtracted in the product lower bound must stay below
# RESIDUAL_COEFF*q from the measured threshold onward.
RESIDUAL_COEFF = Fraction("0.01338")

# Chain conclusion: log g(n) >= LOG_G_LOWER_COEFF * q.
LOG_G_LOWER_COEFF = Fraction("0.79307")

# Explicit upper bound log g(n) <= LOG_G_UPPER_COEFF * sqrt(n log n), n >= 1
# (Massias 1984, rounded up in the last digit so the bound is universal).
LOG_G_UPPER_COEFF = Fraction("1.05314")

# Final bound on the largest prime factor: P(g(n)) <= FINAL_BOUND
# * sqrt(n log n) for n >= 5.  Must dominate LOG_G_UPPER_COEFF /
# LOG_G_LOWER_COEFF; checked by exact cross-multiplication in bounds.
FINAL_BOUND = Fraction("1.328")

# Prior bound P(g(n)) <= PRIOR_RATIO_BOUND * sqrt(n log n) for n >= 2
# (Massias, Nicolas, and Robin 1989).  Sizes the prime cutoff of the table
# builder's safe mode.
PRIOR_RATIO_BOUND = Fraction("2.86")

# Smallest largest-prime value relevant beyond the exactly tabulated range:
# floor(1.3 * sqrt(500000 * ln 500000)) = 3329.
Q_FLOOR = 3329

# Soft ceiling on table size; larger builds require an explicit long-run
# flag.  Desk-scale work defaults to 100,000.
MAX_N_SOFT_CEILING = 500_000
DESK_SCALE_MAX_N = 100_000

# Default hard ceiling for sieve construction (overridable per call).
SIEVE_CEILING = 10 ** 8

# Desk-scale ceiling for q-range scans; the hard ceiling sits behind a
# long-run flag.
QSCAN_DEFAULT_HI = 10 ** 6
QSCAN_CEILING = 10 ** 7
