#include "rstirling/exact.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace rstirling {

Natural::Natural(mpz_class v) : v_(std::move(v)) {
    if (v_ < 0) {
        throw std::domain_error("Natural: value must be non-negative");
    }
}

Natural Natural::from_decimal(const std::string& s) {
    mpz_class v;
    if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0) {
        throw std::invalid_argument("Natural: not a decimal integer: " + s);
    }
    return Natural(std::move(v));
}

std::uint64_t Natural::to_u64() const {
    if (!v_.fits_ulong_p()) {
        throw std::overflow_error("Natural: value does not fit in 64 bits");
    }
    return v_.get_ui();
}

Natural pow(const Natural& base, std::uint64_t exponent) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.raw().get_mpz_t(), exponent);
    return Natural(std::move(out));
}

Natural factorial(std::uint64_t n) {
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return Natural(std::move(out));
}

Natural binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        return Natural(0);
    }
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return Natural(std::move(out));
}

ExactRational::ExactRational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) {
        throw std::domain_error("ExactRational: zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

ExactRational::ExactRational(const Natural& num, const Natural& den)
    : ExactRational(num.raw(), den.raw()) {}

Natural ExactRational::to_natural() const {
    if (!is_integer() || is_negative()) {
        throw std::domain_error("ExactRational: not a non-negative integer: " + str());
    }
    return Natural(mpz_class(v_.get_num()));
}

std::string ExactRational::str() const {
    if (is_integer()) {
        return v_.get_num().get_str();
    }
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
    if (o.v_ == 0) {
        throw std::domain_error("ExactRational: division by zero");
    }
    v_ /= o.v_;
    return *this;
}

ExactRational ExactRational::operator-() const {
    ExactRational out;
    out.v_ = -v_;
    return out;
}

ExactRational pow(const ExactRational& base, std::int64_t exponent) {
    if (exponent == 0) {
        return ExactRational(1);
    }
    const bool negative = exponent < 0;
    // magnitude via unsigned arithmetic so INT64_MIN cannot overflow
    const std::uint64_t mag =
        negative ? ~static_cast<std::uint64_t>(exponent) + 1 : static_cast<std::uint64_t>(exponent);
    if (negative && base.is_zero()) {
        throw std::domain_error("pow: zero base with negative exponent");
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), mag);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), mag);
    return negative ? ExactRational(d, n) : ExactRational(n, d);
}

LogValue to_log(const ExactRational& x) {
    if (x.is_negative()) {
        throw std::domain_error("to_log: negative argument");
    }
    if (x.is_zero()) {
        return LogValue::zero();
    }
    // mpz_get_d_2exp yields the leading 53 bits as m in [0.5, 1) with
    // value = m * 2^e; the exponent term is accumulated in long double so
    // the result stays within 1e-12 relative even when the two exponents
    // nearly cancel.
    constexpr long double kLn2 = 0.69314718055994530941723212145818L;
    long en = 0;
    long ed = 0;
    const double mn = mpz_get_d_2exp(&en, x.num().get_mpz_t());
    const double md = mpz_get_d_2exp(&ed, x.den().get_mpz_t());
    const long double v = std::log(static_cast<long double>(mn)) -
                          std::log(static_cast<long double>(md)) +
                          static_cast<long double>(en - ed) * kLn2;
    return LogValue::from_ln(static_cast<double>(v));
}

namespace {

mpz_class pow10z(unsigned long k) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), 10, k);
    return out;
}

// %g-style placement for a digit string d[0..] scaled as d[0].d[1..] * 10^e.
std::string place_digits(const std::string& digits, long e, bool negative) {
    std::string body;
    const long ndig = static_cast<long>(digits.size());
    if (e >= -4 && e < 12) {
        if (e >= ndig - 1) {
            body = digits + std::string(e - (ndig - 1), '0');
        } else if (e >= 0) {
            body = digits.substr(0, e + 1) + "." + digits.substr(e + 1);
        } else {
            body = "0." + std::string(-e - 1, '0') + digits;
        }
    } else {
        body = digits.substr(0, 1);
        if (ndig > 1) {
            body += "." + digits.substr(1);
        }
        char exp[8];
        std::snprintf(exp, sizeof(exp), "e%+03ld", e);
        body += exp;
    }
    return negative ? "-" + body : body;
}

}  // namespace

std::string decimal12(const ExactRational& x) {
    constexpr long kDigits = 12;
    if (x.is_zero()) {
        return "0";
    }
    const bool negative = x.is_negative();
    mpz_class n = abs(x.num());
    mpz_class d = x.den();

    // decimal exponent e with 10^e <= n/d < 10^(e+1)
    long e = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 10));
    auto at_least_pow10 = [&](long ee) {
        // n/d >= 10^ee ?
        if (ee >= 0) {
            return n >= d * pow10z(ee);
        }
        return n * pow10z(-ee) >= d;
    };
    while (!at_least_pow10(e)) {
        --e;
    }
    while (at_least_pow10(e + 1)) {
        ++e;
    }

    // q = round_half_even(n/d * 10^(kDigits-1-e)), a kDigits-digit integer
    const long shift = kDigits - 1 - e;
    mpz_class scaled_n = n;
    mpz_class scaled_d = d;
    if (shift >= 0) {
        scaled_n *= pow10z(shift);
    } else {
        scaled_d *= pow10z(-shift);
    }
    mpz_class q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), scaled_n.get_mpz_t(), scaled_d.get_mpz_t());
    const int c = cmp(mpz_class(rem * 2), scaled_d);
    if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) {
        ++q;
    }
    std::string digits = q.get_str();
    if (static_cast<long>(digits.size()) > kDigits) {
        // rounded up to the next power of ten
        ++e;
        digits = "1";
    }
    const auto last = digits.find_last_not_of('0');
    digits.erase(last + 1);
    return place_digits(digits, e, negative);
}

std::string decimal12(double x) {
    if (x == 0.0) {
        return "0";
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

}  // namespace rstirling
