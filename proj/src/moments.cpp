#include "rstirling/moments.hpp"

#include <stdexcept>

#include "rstirling/compositions.hpp"
#include "rstirling/stirling.hpp"

namespace rstirling {

namespace {

void require_valid(const MomentQuery& q, const char* where) {
    if (q.r == 0 || q.m == 0) {
        throw std::invalid_argument(std::string(where) + ": requires r >= 1 and m >= 1");
    }
}

}  // namespace

ExactRational raw_beta_moment(std::uint64_t s, std::uint64_t r) {
    if (r == 0) {
        throw std::invalid_argument("raw_beta_moment: requires r >= 1");
    }
    return ExactRational(factorial(s) * factorial(r), factorial(s + r));
}

ExactRational moment_multinomial(const MomentQuery& q) {
    require_valid(q, "moment_multinomial");
    ExactRational sum;
    for_each_composition(q.k, q.m, [&](const std::vector<std::uint64_t>& parts) {
        Natural denom(1);
        for (std::uint64_t part : parts) {
            denom *= factorial(q.r + part);
        }
        sum += ExactRational(Natural(1), denom);
    });
    return ExactRational(pow(factorial(q.r), q.m) * factorial(q.k)) * sum;
}

ExactRational moment_from_stirling(const MomentQuery& q) {
    require_valid(q, "moment_from_stirling");
    const std::uint64_t p = q.k + q.r * q.m;
    const Natural s = stirling_cache().value(q.r, p, q.m);
    const Natural prefactor = factorial(q.m) * pow(factorial(q.r), q.m) * factorial(q.k);
    return ExactRational(prefactor * s, factorial(p));
}

std::pair<ExactRational, ExactRational> mean_and_variance(const MomentQuery& q) {
    require_valid(q, "mean_and_variance");
    const Natural r1 = Natural(q.r + 1);
    ExactRational mean{Natural(q.m), r1};
    ExactRational variance{Natural(q.m) * Natural(q.r), r1 * r1 * Natural(q.r + 2)};
    return {std::move(mean), std::move(variance)};
}

}  // namespace rstirling
