#pragma once

#include <cstdint>
#include <utility>

#include "rstirling/exact.hpp"

namespace rstirling {

/// Moment of order k of X_1 + ... + X_m where the X_i are i.i.d.
/// beta(1, r) variables.
struct MomentQuery {
    std::uint64_t r = 1;  // beta parameter, >= 1
    std::uint64_t k = 0;  // moment order
    std::uint64_t m = 1;  // number of summands, >= 1
};

/// E(X^s) = s! r! / (s + r)! for X ~ beta(1, r).
ExactRational raw_beta_moment(std::uint64_t s, std::uint64_t r);

/// The moment expanded by the multinomial formula over weak compositions:
/// (r!)^m k! * sum 1/((r+i_1)! ... (r+i_m)!).
ExactRational moment_multinomial(const MomentQuery& q);

/// The same moment recovered from a Stirling triangle entry:
/// m! (r!)^m k! / (k + rm)! * S_r(k + rm, m). Deliberately a second,
/// independent code path from moment_multinomial.
ExactRational moment_from_stirling(const MomentQuery& q);

/// (E(X_1+...+X_m), Var(X_1+...+X_m)) = (m/(r+1), m r/((r+1)^2 (r+2))).
std::pair<ExactRational, ExactRational> mean_and_variance(const MomentQuery& q);

}  // namespace rstirling
