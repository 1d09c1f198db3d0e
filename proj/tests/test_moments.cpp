#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rstirling/moments.hpp"
#include "rstirling/stirling.hpp"

using namespace rstirling;

namespace {

ExactRational frac(long n, long d) {
    return ExactRational(mpz_class(n), mpz_class(d));
}

}  // namespace

TEST_CASE("raw beta moments") {
    CHECK(raw_beta_moment(1, 1) == frac(1, 2));
    CHECK(raw_beta_moment(2, 1) == frac(1, 3));
    // integral of x^2 * 2(1-x) over [0,1] = 2(1/3 - 1/4)
    CHECK(raw_beta_moment(2, 2) == frac(1, 6));
    CHECK(raw_beta_moment(0, 4) == ExactRational(1));
    CHECK_THROWS_AS((void)raw_beta_moment(2, 0), std::invalid_argument);
}

TEST_CASE("multinomial route") {
    CHECK(moment_multinomial({1, 2, 2}) == frac(7, 6));
    CHECK(moment_multinomial({2, 1, 3}) == ExactRational(1));
    for (std::uint64_t r = 1; r <= 4; ++r) {
        for (std::uint64_t m = 1; m <= 5; ++m) {
            REQUIRE(moment_multinomial({r, 0, m}) == ExactRational(1));
        }
    }
}

TEST_CASE("triangle route") {
    CHECK(moment_from_stirling({1, 2, 2}) == frac(7, 6));
    CHECK(moment_from_stirling({2, 0, 2}) == ExactRational(1));
    CHECK(moment_from_stirling({1, 1, 1}) == frac(1, 2));
}

TEST_CASE("both routes agree on a grid") {
    for (std::uint64_t r = 1; r <= 3; ++r) {
        for (std::uint64_t m = 1; m <= 4; ++m) {
            for (std::uint64_t k = 0; k <= 5; ++k) {
                REQUIRE(moment_multinomial({r, k, m}) == moment_from_stirling({r, k, m}));
            }
        }
    }
}

TEST_CASE("mean and variance") {
    CHECK(mean_and_variance({1, 0, 1}) == std::pair(frac(1, 2), frac(1, 12)));
    CHECK(mean_and_variance({2, 0, 1}) == std::pair(frac(1, 3), frac(1, 18)));
    CHECK(mean_and_variance({1, 0, 3}) == std::pair(frac(3, 2), frac(1, 4)));

    for (std::uint64_t r = 1; r <= 4; ++r) {
        for (std::uint64_t m = 1; m <= 6; ++m) {
            const auto mv = mean_and_variance({r, 0, m});
            REQUIRE(moment_multinomial({r, 1, m}) == mv.first);
            REQUIRE(moment_multinomial({r, 2, m}) == mv.second + mv.first * mv.first);
        }
    }
}

TEST_CASE("moments grow with the number of summands") {
    for (std::uint64_t r = 1; r <= 3; ++r) {
        for (std::uint64_t k = 0; k <= 6; ++k) {
            for (std::uint64_t m = 1; m <= 6; ++m) {
                REQUIRE(moment_multinomial({r, k, m}) <= moment_multinomial({r, k, m + 1}));
            }
        }
    }
}

TEST_CASE("Irwin-Hall moments come straight from the r=1 triangle") {
    for (std::uint64_t k = 0; k <= 6; ++k) {
        for (std::uint64_t m = 1; m <= 6; ++m) {
            const ExactRational lhs = moment_from_stirling({1, k, m});
            const ExactRational rhs(stirling_cache().value(1, m + k, m), binomial(m + k, m));
            REQUIRE(lhs == rhs);
        }
    }
}
