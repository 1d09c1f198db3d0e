#include "rstirling/bounds.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rstirling {

namespace {

void require_valid(const MomentQuery& q, const char* where) {
    if (q.r == 0 || q.m == 0) {
        throw std::invalid_argument(std::string(where) + ": requires r >= 1 and m >= 1");
    }
}

ExactRational exact_low_order_moment(const MomentQuery& q) {
    // k = 0 or 1; Jensen is an equality there
    if (q.k == 0) {
        return ExactRational(1);
    }
    return ExactRational(Natural(q.m), Natural(q.r + 1));
}

}  // namespace

std::pair<ExactRational, ExactRational> jensen_bounds(const MomentQuery& q) {
    require_valid(q, "jensen_bounds");
    if (q.k <= 1) {
        const ExactRational exact = exact_low_order_moment(q);
        return {exact, exact};
    }
    const Natural r1k = pow(Natural(q.r + 1), q.k);
    const ExactRational lower(pow(Natural(q.m), q.k), r1k);
    const mpz_class correction_num =
        r1k.raw() - 1 - mpz_class(static_cast<unsigned long>(q.k)) * static_cast<unsigned long>(q.r);
    const ExactRational correction =
        ExactRational(pow(Natural(q.m), q.k - 1)) *
        ExactRational(correction_num,
                      r1k.raw() * static_cast<unsigned long>(q.r) * static_cast<unsigned long>(q.r + 2));
    return {lower, lower + correction};
}

ExactRational majorant_constant(const ExactRational& a, std::uint64_t k) {
    if (!(ExactRational(0) < a && a < ExactRational(1))) {
        throw std::domain_error("majorant_constant: requires 0 < a < 1");
    }
    if (k < 2) {
        throw std::domain_error("majorant_constant: requires k >= 2");
    }
    const ExactRational ak1 = pow(a, static_cast<std::int64_t>(k - 1));
    const ExactRational inner = a * ExactRational(static_cast<long>(k)) - a - ExactRational(static_cast<long>(k));
    const ExactRational one_minus_a = ExactRational(1) - a;
    return (ak1 * inner + ExactRational(1)) / (one_minus_a * one_minus_a);
}

std::pair<ExactRational, ExactRational> tail_bounds(const MomentQuery& q) {
    require_valid(q, "tail_bounds");
    const std::uint64_t mr = q.m * q.r;
    const ExactRational upper(factorial(q.k) * pow(factorial(q.r), q.m) * pow(Natural(q.m), q.k + mr),
                              factorial(q.k + mr));
    // (m-1)^k / m^(k+mr) * sum_{i=1..mr} C(k+mr, k+i) (m-1)^i, with 0^0 = 1
    Natural sum;
    for (std::uint64_t i = 1; i <= mr; ++i) {
        sum += binomial(q.k + mr, q.k + i) * pow(Natural(q.m - 1), i);
    }
    const ExactRational correction =
        ExactRational(pow(Natural(q.m - 1), q.k) * sum, pow(Natural(q.m), q.k + mr));
    return {upper * (ExactRational(1) - correction), upper};
}

ExactRational expo_upper(const MomentQuery& q) {
    require_valid(q, "expo_upper");
    if (q.r < 2) {
        throw std::domain_error("expo_upper: requires r >= 2");
    }
    const ExactRational scale(pow(Natural(q.r), q.k), pow(Natural(q.r - 1), 2 * q.k));
    return scale * ExactRational(erlang_moment(q.k, q.m));
}

Natural erlang_moment(std::uint64_t k, std::uint64_t m) {
    if (m == 0) {
        throw std::invalid_argument("erlang_moment: requires m >= 1");
    }
    // rising factorial m (m+1) ... (m-1+k)
    Natural out(1);
    for (std::uint64_t i = 0; i < k; ++i) {
        out *= Natural(m + i);
    }
    return out;
}

ExactRational rennie_dobson_lower(std::uint64_t p, std::uint64_t m) {
    const ExactRational head{Natural(m) * Natural(m) + Natural(m) + Natural(2), Natural(2)};
    const std::int64_t exponent =
        static_cast<std::int64_t>(p) - static_cast<std::int64_t>(m) - 1;
    return head * pow(ExactRational(Natural(m)), exponent) - ExactRational(1);
}

ExactRational rennie_dobson_upper(std::uint64_t p, std::uint64_t m) {
    return ExactRational(binomial(p, m) * pow(Natural(m), p - m), Natural(2));
}

BoundReport stirling_bounds(const StirlingQuery& q) {
    if (q.r == 0 || q.m == 0) {
        throw std::invalid_argument("stirling_bounds: requires r >= 1 and m >= 1");
    }
    if (q.p < q.r * q.m) {
        throw std::invalid_argument("stirling_bounds: requires p >= r*m");
    }
    const std::uint64_t k = q.p - q.r * q.m;
    const MomentQuery mq{q.r, k, q.m};
    const ExactRational prefactor(factorial(q.p),
                                  factorial(q.m) * pow(factorial(q.r), q.m) * factorial(k));

    BoundReport rep;
    rep.query = q;
    rep.exact = stirling_cache().value(q.r, q.p, q.m);
    const auto jensen = jensen_bounds(mq);
    rep.jensen_lower = prefactor * jensen.first;
    rep.jensen_upper = prefactor * jensen.second;
    const auto tail = tail_bounds(mq);
    rep.tail_lower = prefactor * tail.first;
    rep.tail_upper = prefactor * tail.second;
    if (q.r >= 2) {
        rep.expo_upper = prefactor * rstirling::expo_upper(mq);
    }
    if (q.r == 1) {
        rep.rd_lower = rennie_dobson_lower(q.p, q.m);
        rep.rd_upper = rennie_dobson_upper(q.p, q.m);
    }
    rep.combined_L = std::max(rep.tail_lower, rep.jensen_lower);
    rep.combined_U = std::min(rep.tail_upper, rep.jensen_upper);

    const ExactRational exact(rep.exact);
    auto fail = [&](const char* what) {
        std::ostringstream os;
        os << "stirling_bounds: invariant violated (" << what << ") at r=" << q.r
           << " p=" << q.p << " m=" << q.m << ", exact=" << rep.exact.str();
        throw std::logic_error(os.str());
    };
    if (!(rep.jensen_lower <= exact && exact <= rep.jensen_upper)) {
        fail("jensen sandwich");
    }
    if (!(rep.tail_lower <= exact && exact <= rep.tail_upper)) {
        fail("tail sandwich");
    }
    if (rep.expo_upper && !(exact <= *rep.expo_upper)) {
        fail("expo upper");
    }
    if (!(rep.combined_L <= exact && exact <= rep.combined_U)) {
        fail("combined sandwich");
    }
    return rep;
}

namespace {

// min{m^p/m!, C(p,m)(m/2)^(p-m)(1 + (2^(p-m)+m-p-1)/(3m))}; 0 for m = 0
ExactRational bell_upper_term(std::uint64_t p, std::uint64_t m) {
    if (m == 0) {
        return ExactRational(0);
    }
    const ExactRational simple(pow(Natural(m), p), factorial(m));
    const std::uint64_t k = p - m;
    // 2^k + m - p - 1 >= 0 since 2^k >= k + 1
    const mpz_class adjust_num = pow(Natural(2), k).raw() + static_cast<unsigned long>(m) -
                                 static_cast<unsigned long>(p) - 1;
    const ExactRational adjusted =
        ExactRational(binomial(p, m) * pow(Natural(m), k), pow(Natural(2), k)) *
        (ExactRational(1) + ExactRational(adjust_num, mpz_class(3 * static_cast<unsigned long>(m))));
    return std::min(simple, adjusted);
}

}  // namespace

ExactRational bell_upper(std::uint64_t p) {
    if (p == 0) {
        throw std::invalid_argument("bell_upper: requires p >= 1");
    }
    ExactRational total;
    for (std::uint64_t m = 0; m <= p; ++m) {
        total += bell_upper_term(p, m);
    }
    return total;
}

LogValue berend_tassa(std::uint64_t p) {
    if (p == 0) {
        throw std::invalid_argument("berend_tassa: requires p >= 1");
    }
    // ln U_bt(p) = p (ln(0.792 p) - ln(ln(p+1))), with 0.792 = 792/1000 exact
    const double ln_base = to_log(ExactRational(Natural(792) * Natural(p), Natural(1000))).ln_magnitude;
    const double ln_ln = std::log(std::log(static_cast<double>(p) + 1.0));
    return LogValue::from_ln(static_cast<double>(p) * (ln_base - ln_ln));
}

ExactRational e_over_approximation() {
    // sum_{i<=40} 1/i! underestimates e; the tail is below 2/41!
    ExactRational sum;
    for (std::uint64_t i = 0; i <= 40; ++i) {
        sum += ExactRational(Natural(1), factorial(i));
    }
    return sum + ExactRational(Natural(2), factorial(41));
}

}  // namespace rstirling
