#pragma once

#include <cstdint>

#include "rstirling/exact.hpp"
#include "rstirling/moments.hpp"
#include "rstirling/stirling.hpp"

namespace rstirling {

/// SplitMix64: the fixed 64-bit shift/multiply generator used for every
/// random draw in this library. State advances by the golden-gamma
/// constant; outputs pass through the two-round multiply-xorshift
/// finalizer. Platform generators are deliberately not used so results
/// are bit-identical across builds.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix(state_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Seed for substream i: the base seed xored with an odd multiple of
    /// the golden gamma, then finalized. Chunked runs are reproducible
    /// regardless of how chunks are scheduled.
    static std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t chunk_index) {
        return mix(seed ^ (0x9E3779B97F4A7C15ull * chunk_index));
    }

  private:
    std::uint64_t state_;
};

struct MCConfig {
    std::uint64_t seed = 0;
    std::uint64_t n_samples = 1;   // >= 1
    std::uint64_t chunk_count = 1; // >= 1 independent substreams
};

struct MCEstimate {
    double mean = 0.0;
    double std_error = 0.0;  // sample standard deviation / sqrt(n)
    std::uint64_t n = 0;
};

/// Density r(1-x)^(r-1) of beta(1, r) on [0, 1]; 0 elsewhere.
double density_g(double x, std::uint64_t r);

/// Density r x^(r-1) of 1 - X on [0, 1]; 0 elsewhere. h_r(x) = g_r(1-x).
double density_h(double x, std::uint64_t r);

/// Closed form (r!)^m/(mr-1)! (m-x)^(mr-1) of the m-fold convolution of
/// g_r, exact on [m-1, m] (rejects x outside).
double tail_density(double x, std::uint64_t m, std::uint64_t r);

/// The same expression on all of [0, m], where it is an upper bound for
/// the convolution density rather than its value.
double tail_density_upper(double x, std::uint64_t m, std::uint64_t r);

/// P(X_1+...+X_m >= x) = (r!)^m (m-x)^(mr) / (mr)! for rational
/// x in [m-1, m], exactly.
ExactRational tail_probability(const ExactRational& x, std::uint64_t m, std::uint64_t r);

/// The majorant quadratic f(x) = a^k + k a^(k-1)(x-a) + c(x-a)^2 with c
/// from majorant_constant; f >= x^k on [0, 1], f(a) = a^k, f(1) = 1.
double majorant_eval(double x, const ExactRational& a, std::uint64_t k);

/// Same quadratic evaluated in exact arithmetic (for exact dominance
/// sweeps).
ExactRational majorant_eval_exact(const ExactRational& x, const ExactRational& a, std::uint64_t k);

/// Inverse-CDF beta(1, r) variate: x = 1 - (1-u)^(1/r). Consumes exactly
/// one uniform; monotone in u; the r = 1 case is the identity.
double sample_beta(double u, std::uint64_t r);

/// Empirical mean and standard error of (X_1+...+X_m)^k over
/// cfg.n_samples draws, chunked into cfg.chunk_count substreams combined
/// in chunk order. Bit-for-bit reproducible for equal configs.
MCEstimate mc_moment(const MomentQuery& q, const MCConfig& cfg);

/// Monte Carlo estimate of S_r(p, m): the moment estimate scaled by the
/// exact prefactor p!/(m!(r!)^m (p-rm)!); the standard error scales the
/// same way.
MCEstimate mc_stirling(const StirlingQuery& q, const MCConfig& cfg);

/// Empirical frequency of {X_1+...+X_m >= x} with binomial standard
/// error; x in [m-1, m].
MCEstimate mc_tail_probability(double x, std::uint64_t m, std::uint64_t r, const MCConfig& cfg);

}  // namespace rstirling
