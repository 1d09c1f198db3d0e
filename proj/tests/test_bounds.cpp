#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rstirling/bounds.hpp"

using namespace rstirling;

namespace {

ExactRational frac(long n, long d) {
    return ExactRational(mpz_class(n), mpz_class(d));
}

}  // namespace

TEST_CASE("jensen bounds") {
    CHECK(jensen_bounds({1, 2, 2}) == std::pair(ExactRational(1), frac(7, 6)));
    CHECK(jensen_bounds({1, 0, 5}) == std::pair(ExactRational(1), ExactRational(1)));
    CHECK(jensen_bounds({2, 1, 3}) == std::pair(ExactRational(1), ExactRational(1)));
    for (std::uint64_t r = 1; r <= 6; ++r) {
        for (std::uint64_t k = 0; k <= 8; ++k) {
            for (std::uint64_t m = 1; m <= 6; ++m) {
                const auto b = jensen_bounds({r, k, m});
                const ExactRational exact = moment_multinomial({r, k, m});
                REQUIRE(b.first <= exact);
                REQUIRE(exact <= b.second);
            }
        }
    }
}

TEST_CASE("jensen upper is exact at k=2") {
    for (std::uint64_t r = 1; r <= 10; ++r) {
        for (std::uint64_t m = 1; m <= 10; ++m) {
            REQUIRE(jensen_bounds({r, 2, m}).second == moment_multinomial({r, 2, m}));
        }
    }
}

TEST_CASE("majorant constant") {
    CHECK(majorant_constant(frac(1, 2), 3) == ExactRational(2));
    CHECK(majorant_constant(frac(1, 2), 2) == ExactRational(1));
    CHECK_THROWS_AS((void)majorant_constant(ExactRational(0), 3), std::domain_error);
    CHECK_THROWS_AS((void)majorant_constant(ExactRational(1), 3), std::domain_error);
    CHECK_THROWS_AS((void)majorant_constant(frac(1, 2), 1), std::domain_error);
}

TEST_CASE("both closed forms of the majorant constant coincide at a=1/(r+1)") {
    for (std::uint64_t r = 1; r <= 8; ++r) {
        const ExactRational a{Natural(1), Natural(r + 1)};
        for (std::uint64_t k = 2; k <= 12; ++k) {
            const ExactRational ratio{Natural(r + 1), Natural(r)};
            const ExactRational proof_form =
                ratio * ratio *
                (ExactRational(1) - ExactRational(Natural(k * r + 1), pow(Natural(r + 1), k)));
            REQUIRE(majorant_constant(a, k) == proof_form);
        }
    }
}

TEST_CASE("tail-density bounds") {
    CHECK(tail_bounds({1, 2, 2}) == std::pair(frac(11, 12), frac(4, 3)));
    CHECK(tail_bounds({2, 3, 1}) == std::pair(frac(1, 10), frac(1, 10)));
    CHECK(tail_bounds({1, 0, 2}).second == ExactRational(2));
    CHECK(tail_bounds({1, 0, 2}).second >= ExactRational(1));
}

TEST_CASE("tail bounds collapse to the raw moment at m=1") {
    for (std::uint64_t r = 1; r <= 5; ++r) {
        for (std::uint64_t k = 0; k <= 10; ++k) {
            const auto b = tail_bounds({r, k, 1});
            const ExactRational raw = raw_beta_moment(k, r);
            REQUIRE(b.first == raw);
            REQUIRE(b.second == raw);
        }
    }
}

TEST_CASE("tail correction term decays below 1e-6 by k=23 at (m,r)=(2,1)") {
    const ExactRational threshold{Natural(1), pow(Natural(10), 6)};
    std::uint64_t first_k = 0;
    for (std::uint64_t k = 1; k <= 200 && first_k == 0; ++k) {
        const Natural sum = binomial(k + 2, k + 1) + binomial(k + 2, k + 2);
        if (ExactRational(sum, pow(Natural(2), k + 2)) < threshold) {
            first_k = k;
        }
    }
    CHECK(first_k == 23);
}

TEST_CASE("exponential-comparison bound") {
    CHECK(expo_upper({2, 0, 4}) == ExactRational(1));
    CHECK(expo_upper({2, 1, 1}) == ExactRational(2));
    CHECK(expo_upper({3, 2, 2}) == frac(27, 8));
    CHECK_THROWS_AS((void)expo_upper({1, 2, 2}), std::domain_error);
    for (std::uint64_t r = 2; r <= 5; ++r) {
        for (std::uint64_t k = 0; k <= 6; ++k) {
            for (std::uint64_t m = 1; m <= 4; ++m) {
                REQUIRE(moment_multinomial({r, k, m}) <= expo_upper({r, k, m}));
            }
        }
    }
}

TEST_CASE("erlang moments") {
    CHECK(erlang_moment(0, 3) == Natural(1));
    CHECK(erlang_moment(3, 2) == Natural(24));
    CHECK(erlang_moment(2, 5) == Natural(30));
    CHECK_THROWS_AS((void)erlang_moment(2, 0), std::invalid_argument);
}

TEST_CASE("r^k M_r(k,m) climbs to the Erlang moment") {
    ExactRational prev(0);
    for (std::uint64_t r : {10ull, 100ull, 1000ull, 10000ull}) {
        const ExactRational v =
            ExactRational(pow(Natural(r), 3)) * moment_multinomial({r, 3, 2});
        REQUIRE(prev < v);
        REQUIRE(v < ExactRational(24));
        prev = v;
    }
    const ExactRational gap = (ExactRational(24) - prev) / ExactRational(24);
    CHECK(gap == ExactRational(mpz_class("500070003"), mpz_class("1000500070003")));
    CHECK(gap < frac(1, 2000));
}

TEST_CASE("bound report at the reference points") {
    const BoundReport rep = stirling_bounds({1, 6, 2});
    CHECK(rep.exact == Natural(31));
    CHECK(*rep.rd_lower == ExactRational(31));
    CHECK(*rep.rd_upper == ExactRational(120));
    CHECK(rep.combined_L == frac(57, 2));
    CHECK(rep.combined_U == ExactRational(32));
    CHECK(rep.jensen_upper == frac(85, 2));
    CHECK_FALSE(rep.expo_upper.has_value());

    const BoundReport collapsed = stirling_bounds({2, 4, 2});
    CHECK(collapsed.exact == Natural(3));
    CHECK(collapsed.combined_L == ExactRational(3));
    CHECK(collapsed.combined_U == ExactRational(3));
    CHECK(collapsed.expo_upper.has_value());
    CHECK_FALSE(collapsed.rd_lower.has_value());

    const BoundReport r10 = stirling_bounds({1, 10, 3});
    CHECK(r10.combined_L <= ExactRational(r10.exact));
    CHECK(ExactRational(r10.exact) <= r10.combined_U);

    CHECK_THROWS_AS((void)stirling_bounds({2, 3, 2}), std::invalid_argument);
    CHECK_THROWS_AS((void)stirling_bounds({1, 3, 0}), std::invalid_argument);
}

TEST_CASE("rennie-dobson lower handles p = m through the signed exponent") {
    CHECK(rennie_dobson_lower(6, 2) == ExactRational(31));
    CHECK(rennie_dobson_lower(2, 2) == ExactRational(1));  // (4+2+2)/(2*2) - 1
    CHECK(rennie_dobson_upper(6, 2) == ExactRational(120));
}

TEST_CASE("sandwich and dominance on a medium grid") {
    for (std::uint64_t r = 1; r <= 3; ++r) {
        for (std::uint64_t p = r; p <= 25; ++p) {
            for (std::uint64_t m = 1; m <= p / r; ++m) {
                const BoundReport rep = stirling_bounds({r, p, m});  // asserts internally
                const ExactRational exact(rep.exact);
                REQUIRE(rep.combined_L <= exact);
                REQUIRE(exact <= rep.combined_U);
                if (r == 1 && m < p) {
                    REQUIRE(rep.combined_U <= *rep.rd_upper);
                }
            }
        }
    }
}

TEST_CASE("bell upper bound") {
    CHECK(bell_upper(1) == ExactRational(1));
    CHECK(bell_upper(2) == ExactRational(2));
    CHECK(bell_upper(5) == ExactRational(53));
    CHECK(bell_upper(5) >= ExactRational(bell(5)));
    CHECK_THROWS_AS((void)bell_upper(0), std::invalid_argument);
}

TEST_CASE("e over-approximation brackets e tightly") {
    const ExactRational e_over = e_over_approximation();
    ExactRational e_under;
    for (std::uint64_t i = 0; i <= 41; ++i) {
        e_under += ExactRational(Natural(1), factorial(i));
    }
    CHECK(e_under < e_over);
    CHECK(e_over - e_under < ExactRational(Natural(1), pow(Natural(10), 40)));
}

TEST_CASE("dobinski cap holds through p=40") {
    const ExactRational e_over = e_over_approximation();
    for (std::uint64_t p = 1; p <= 40; ++p) {
        REQUIRE(bell_upper(p) <= e_over * ExactRational(bell(p)));
    }
}

TEST_CASE("berend-tassa log values") {
    CHECK(berend_tassa(1).ln_magnitude == doctest::Approx(0.133319033414).epsilon(1e-9));
    CHECK(berend_tassa(2).ln_magnitude == doctest::Approx(0.731810931551).epsilon(1e-9));
    CHECK_FALSE(berend_tassa(1).is_zero);
    CHECK_THROWS_AS((void)berend_tassa(0), std::invalid_argument);

    // the crossover point: U overtakes the Berend-Tassa bound from p=13 on
    CHECK(berend_tassa(12).ln_magnitude - to_log(bell_upper(12)).ln_magnitude < 0.0);
    CHECK(berend_tassa(13).ln_magnitude - to_log(bell_upper(13)).ln_magnitude > 1e-9);
}
