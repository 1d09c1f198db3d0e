#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "rstirling/exact.hpp"
#include "rstirling/moments.hpp"
#include "rstirling/stirling.hpp"

namespace rstirling {

/// Jensen-type bounds on the moment M_r(k, m):
///   lower  m^k/(r+1)^k
///   upper  lower + m^(k-1) ((r+1)^k - 1 - kr) / ((r+1)^k r (r+2))
/// For k in {0, 1} both sides equal the exact moment.
std::pair<ExactRational, ExactRational> jensen_bounds(const MomentQuery& q);

/// Leading coefficient c = (a^(k-1)(ak - a - k) + 1) / (1 - a)^2 of the
/// quadratic tangent to x^k at a that passes through (1, 1) and majorizes
/// x^k on [0, 1]. Requires 0 < a < 1 and k >= 2.
ExactRational majorant_constant(const ExactRational& a, std::uint64_t k);

/// Bounds on M_r(k, m) derived from the closed form of the convolution
/// density near the right endpoint:
///   upper  k!(r!)^m m^(k+rm) / (k+mr)!
///   lower  upper * (1 - (m-1)^k/m^(k+mr) * sum_{i=1..mr} C(k+mr, k+i)(m-1)^i)
/// Exact for m = 1.
std::pair<ExactRational, ExactRational> tail_bounds(const MomentQuery& q);

/// Exponential-comparison upper bound, r >= 2 only:
///   M_r(k, m) <= r^(-k) (r/(r-1))^(2k) (m-1+k)!/(m-1)!.
ExactRational expo_upper(const MomentQuery& q);

/// k-th moment of a sum of m standard exponentials: (m-1+k)!/(m-1)!.
Natural erlang_moment(std::uint64_t k, std::uint64_t m);

/// Every bound family evaluated at one (r, p, m), together with the exact
/// value. Construction asserts the ordering invariants; a violation is an
/// internal error, never a data condition.
struct BoundReport {
    StirlingQuery query;
    Natural exact;
    ExactRational jensen_lower;
    ExactRational jensen_upper;
    ExactRational tail_lower;
    ExactRational tail_upper;
    std::optional<ExactRational> expo_upper;  // present iff r >= 2
    std::optional<ExactRational> rd_lower;    // present iff r == 1
    std::optional<ExactRational> rd_upper;    // present iff r == 1
    ExactRational combined_L;  // max(tail_lower, jensen_lower)
    ExactRational combined_U;  // min(tail_upper, jensen_upper)
};

BoundReport stirling_bounds(const StirlingQuery& q);

/// Rennie-Dobson bounds for the r = 1 numbers:
///   lower (m^2+m+2) m^(p-m-1)/2 - 1,  upper C(p,m) m^(p-m)/2.
ExactRational rennie_dobson_lower(std::uint64_t p, std::uint64_t m);
ExactRational rennie_dobson_upper(std::uint64_t p, std::uint64_t m);

/// U(p) = sum_{m=0..p} min{m^p/m!, C(p,m)(m/2)^(p-m)(1 + (2^(p-m)+m-p-1)/(3m))},
/// an upper bound for the Bell number B(p); the m = 0 summand is 0.
ExactRational bell_upper(std::uint64_t p);

/// ln of the Berend-Tassa Bell bound (0.792 p / ln(p+1))^p. The only bound
/// in the library that is not an exact rational.
LogValue berend_tassa(std::uint64_t p);

/// Rational e + eps with 0 < eps < 1e-40, from a truncated exponential
/// series plus a remainder cap. Used for exact Dobinski-style comparisons.
ExactRational e_over_approximation();

}  // namespace rstirling
