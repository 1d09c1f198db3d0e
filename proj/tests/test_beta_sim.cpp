#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "rstirling/beta_sim.hpp"
#include "rstirling/bounds.hpp"
#include "rstirling/moments.hpp"

using namespace rstirling;

namespace {

ExactRational frac(long n, long d) {
    return ExactRational(mpz_class(n), mpz_class(d));
}

}  // namespace

TEST_CASE("splitmix64 known-answer vectors") {
    SplitMix64 gen(42);
    CHECK(gen.next() == 0xbdd732262feb6e95ull);
    CHECK(gen.next() == 0x28efe333b266f103ull);
    CHECK(gen.next() == 0x47526757130f9f52ull);
    CHECK(gen.next() == 0x581ce1ff0e4ae394ull);

    SplitMix64 gen2(42);
    CHECK(gen2.next_unit() == doctest::Approx(0.74156487877182331).epsilon(1e-16));

    CHECK(SplitMix64::substream_seed(42, 0) == 0xa759ea27d4727622ull);
    CHECK(SplitMix64::substream_seed(42, 1) == 0xbdd732262feb6e95ull);
    CHECK(SplitMix64::substream_seed(42, 7) == 0x53ad348af3ddaf4bull);
}

TEST_CASE("densities") {
    CHECK(density_g(0.0, 1) == 1.0);
    CHECK(density_g(1.0, 2) == 0.0);
    CHECK(density_g(0.5, 3) == doctest::Approx(0.75));
    CHECK(density_g(-0.1, 1) == 0.0);
    CHECK(density_g(1.1, 1) == 0.0);

    CHECK(density_h(1.0, 2) == 2.0);
    CHECK(density_h(0.0, 1) == 1.0);
    CHECK(density_h(0.5, 4) == doctest::Approx(0.5));
    for (std::uint64_t r = 1; r <= 4; ++r) {
        for (int i = 0; i <= 20; ++i) {
            const double x = i / 20.0;
            REQUIRE(density_h(x, r) == doctest::Approx(density_g(1.0 - x, r)).epsilon(1e-12));
        }
    }
}

TEST_CASE("tail density") {
    for (int i = 0; i <= 16; ++i) {
        const double x = i / 16.0;
        REQUIRE(tail_density(x, 1, 2) == doctest::Approx(density_g(x, 2)).epsilon(1e-12));
    }
    CHECK(tail_density(3.0, 3, 2) == 0.0);
    CHECK(tail_density(1.5, 2, 1) == doctest::Approx(0.5));
    CHECK_THROWS_AS((void)tail_density(0.5, 2, 1), std::domain_error);
    CHECK(tail_density_upper(0.5, 2, 1) == doctest::Approx(1.5));
    CHECK_THROWS_AS((void)tail_density_upper(2.5, 2, 1), std::domain_error);
}

TEST_CASE("tail probability is exact") {
    CHECK(tail_probability(ExactRational(1), 2, 1) == frac(1, 2));
    CHECK(tail_probability(ExactRational(2), 2, 1) == ExactRational(0));
    CHECK(tail_probability(frac(3, 2), 2, 1) == frac(1, 8));
    CHECK_THROWS_AS((void)tail_probability(frac(1, 2), 2, 1), std::domain_error);

    // midpoint-quadrature oracle for P(U1+U2 >= 3/2)
    const int n = 2000;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double u = (i + 0.5) / n;
            const double v = (j + 0.5) / n;
            if (u + v >= 1.5) {
                acc += 1.0;
            }
        }
    }
    CHECK(acc / (double(n) * n) == doctest::Approx(0.125).epsilon(1e-3));
}

TEST_CASE("majorant evaluation") {
    CHECK(majorant_eval(1.0, frac(3, 10), 3) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(majorant_eval(0.3, frac(3, 10), 3) == doctest::Approx(0.027).epsilon(1e-12));
    CHECK(majorant_eval(0.75, frac(3, 10), 3) == doctest::Approx(0.4725).epsilon(1e-12));
    CHECK(majorant_eval(0.75, frac(3, 10), 3) >= 0.421875);

    CHECK(majorant_eval_exact(ExactRational(1), frac(3, 10), 3) == ExactRational(1));
    CHECK(majorant_eval_exact(frac(3, 10), frac(3, 10), 3) == frac(27, 1000));
    CHECK(majorant_eval_exact(frac(3, 4), frac(3, 10), 3) == frac(189, 400));

    for (std::uint64_t k = 2; k <= 8; ++k) {
        const ExactRational a{Natural(5), Natural(16)};
        for (int i = 0; i <= 500; ++i) {
            const ExactRational x{Natural(i), Natural(500)};
            REQUIRE(pow(x, static_cast<std::int64_t>(k)) <= majorant_eval_exact(x, a, k));
        }
    }
}

TEST_CASE("tangent line stays below x^k") {
    for (std::uint64_t r = 1; r <= 5; ++r) {
        const ExactRational a{Natural(1), Natural(r + 1)};
        for (std::uint64_t k = 2; k <= 8; ++k) {
            const ExactRational a_k = pow(a, static_cast<std::int64_t>(k));
            const ExactRational slope =
                ExactRational(static_cast<long>(k)) * pow(a, static_cast<std::int64_t>(k - 1));
            for (int i = 0; i <= 500; ++i) {
                const ExactRational x{Natural(i), Natural(500)};
                REQUIRE(a_k + slope * (x - a) <= pow(x, static_cast<std::int64_t>(k)));
            }
        }
    }
}

TEST_CASE("inverse-cdf sampling") {
    CHECK(sample_beta(0.0, 3) == 0.0);
    CHECK(sample_beta(0.37, 1) == 0.37);
    CHECK(sample_beta(0.75, 2) == doctest::Approx(0.5).epsilon(1e-15));
    // monotone in u
    double prev = -1.0;
    for (int i = 0; i < 50; ++i) {
        const double x = sample_beta(i / 50.0, 3);
        REQUIRE(x > prev);
        prev = x;
    }
}

TEST_CASE("mc moment estimates agree with the exact values") {
    const MCConfig cfg{42, 100000, 1};
    const MCEstimate uniform_mean = mc_moment({1, 1, 1}, cfg);
    CHECK(std::fabs(uniform_mean.mean - 0.5) < 4.0 * uniform_mean.std_error);

    const MCEstimate pair = mc_moment({1, 2, 2}, cfg);
    const double exact = moment_multinomial({1, 2, 2}).approx_double();
    CHECK(std::fabs(pair.mean - exact) < 4.0 * pair.std_error);

    const MCEstimate constant = mc_moment({2, 0, 3}, MCConfig{5, 1000, 2});
    CHECK(constant.mean == 1.0);
    CHECK(constant.std_error == 0.0);
}

TEST_CASE("mc stirling scales the moment estimate") {
    const MCEstimate exact_case = mc_stirling({2, 4, 2}, MCConfig{11, 500, 1});
    CHECK(exact_case.mean == 3.0);
    CHECK(exact_case.std_error == 0.0);

    const MCEstimate est = mc_stirling({1, 4, 2}, MCConfig{42, 100000, 1});
    CHECK(std::fabs(est.mean - 7.0) < 4.0 * est.std_error);

    const MCEstimate est2 = mc_stirling({2, 6, 2}, MCConfig{42, 100000, 1});
    CHECK(std::fabs(est2.mean - 25.0) < 4.0 * est2.std_error);
    CHECK_THROWS_AS((void)mc_stirling({2, 3, 2}, MCConfig{1, 10, 1}), std::invalid_argument);
}

TEST_CASE("mc tail probability") {
    const MCConfig cfg{42, 100000, 1};
    const MCEstimate half = mc_tail_probability(1.0, 2, 1, cfg);
    CHECK(std::fabs(half.mean - 0.5) < 4.0 * half.std_error);

    const MCEstimate eighth = mc_tail_probability(1.5, 2, 1, cfg);
    CHECK(std::fabs(eighth.mean - 0.125) < 4.0 * eighth.std_error);

    const MCEstimate zero = mc_tail_probability(2.0, 2, 2, MCConfig{3, 1000, 1});
    CHECK(zero.mean == 0.0);
    CHECK(zero.std_error == 0.0);
    CHECK_THROWS_AS((void)mc_tail_probability(0.25, 2, 1, cfg), std::domain_error);
}

TEST_CASE("identical configs reproduce identical estimates") {
    const MCConfig cfg{9001, 20011, 7};
    const MCEstimate a = mc_moment({2, 3, 2}, cfg);
    const MCEstimate b = mc_moment({2, 3, 2}, cfg);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);
    CHECK(a.n == 20011);

    // different chunking changes the stream, not the validity
    const MCEstimate c = mc_moment({2, 3, 2}, MCConfig{9001, 20011, 1});
    CHECK(c.mean != a.mean);
    const double exact = moment_multinomial({2, 3, 2}).approx_double();
    CHECK(std::fabs(a.mean - exact) < 5.0 * a.std_error);
    CHECK(std::fabs(c.mean - exact) < 5.0 * c.std_error);
}

TEST_CASE("empirical cdf of the sampler matches 1-(1-x)^r") {
    constexpr std::uint64_t n = 1000000;
    for (std::uint64_t r = 1; r <= 3; ++r) {
        SplitMix64 gen(SplitMix64::substream_seed(42, 0));
        std::vector<double> draws(n);
        for (auto& d : draws) {
            d = sample_beta(gen.next_unit(), r);
        }
        std::sort(draws.begin(), draws.end());
        double ks = 0.0;
        for (std::uint64_t i = 0; i < n; ++i) {
            const double cdf = 1.0 - std::pow(1.0 - draws[i], static_cast<double>(r));
            ks = std::max(ks, std::fabs((i + 1.0) / n - cdf));
            ks = std::max(ks, std::fabs(cdf - static_cast<double>(i) / n));
        }
        REQUIRE(ks < 0.002);
    }
}
