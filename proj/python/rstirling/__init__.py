"""Exact r-associated Stirling numbers via beta-moment identities.

S_r(p, m) counts the partitions of {1, ..., p} into m blocks of size at
least r. This package computes them exactly (arbitrary precision), together
with exact rational moment bounds, Bell-number bounds, and seeded Monte
Carlo cross-checks. Exact rationals are returned as fractions.Fraction.
"""

from ._core import (
    BoundReport,
    MCEstimate,
    bell,
    bell_upper,
    berend_tassa_log,
    binomial,
    density_g,
    density_h,
    egf_coefficients,
    erlang_moment,
    expo_upper,
    factorial,
    jensen_bounds,
    majorant_constant,
    majorant_eval,
    mc_moment,
    mc_stirling,
    mc_tail_probability,
    mean_and_variance,
    moment,
    moment_from_stirling,
    raw_beta_moment,
    rennie_dobson_bounds,
    sample_beta,
    stirling,
    stirling_bounds,
    stirling_brute,
    stirling_lemma,
    tail_bounds,
    tail_density,
    tail_density_upper,
    tail_probability,
    verify,
    write_figure_csv,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "MCEstimate",
    "bell",
    "bell_upper",
    "berend_tassa_log",
    "binomial",
    "density_g",
    "density_h",
    "egf_coefficients",
    "erlang_moment",
    "expo_upper",
    "factorial",
    "jensen_bounds",
    "majorant_constant",
    "majorant_eval",
    "mc_moment",
    "mc_stirling",
    "mc_tail_probability",
    "mean_and_variance",
    "moment",
    "moment_from_stirling",
    "raw_beta_moment",
    "rennie_dobson_bounds",
    "sample_beta",
    "stirling",
    "stirling_bounds",
    "stirling_brute",
    "stirling_lemma",
    "tail_bounds",
    "tail_density",
    "tail_density_upper",
    "tail_probability",
    "verify",
    "write_figure_csv",
]
