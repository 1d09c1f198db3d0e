#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace rstirling {

/// Arbitrary-precision non-negative integer. All combinatorial counts in
/// this library (factorials, Stirling and Bell numbers) are Naturals, so
/// nothing ever overflows.
class Natural {
  public:
    Natural() : v_(0) {}
    Natural(unsigned long n) : v_(n) {}
    explicit Natural(mpz_class v);
    static Natural from_decimal(const std::string& s);

    const mpz_class& raw() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    std::uint64_t to_u64() const;
    std::string str() const { return v_.get_str(); }

    Natural& operator+=(const Natural& o) {
        v_ += o.v_;
        return *this;
    }
    Natural& operator*=(const Natural& o) {
        v_ *= o.v_;
        return *this;
    }
    friend Natural operator+(Natural a, const Natural& b) { return a += b; }
    friend Natural operator*(Natural a, const Natural& b) { return a *= b; }

    friend bool operator==(const Natural& a, const Natural& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
        int c = cmp(a.v_, b.v_);
        return c <=> 0;
    }

  private:
    mpz_class v_;
};

Natural pow(const Natural& base, std::uint64_t exponent);  // 0^0 = 1
Natural factorial(std::uint64_t n);
Natural binomial(std::uint64_t n, std::uint64_t k);  // 0 when k > n

/// Reduced signed fraction. Always stored canonical: denominator > 0 and
/// gcd(|num|, den) = 1. All comparisons are exact integer cross
/// multiplications; no floating point is involved anywhere.
class ExactRational {
  public:
    ExactRational() : v_(0) {}
    ExactRational(long n) : v_(n) {}
    ExactRational(const Natural& n) : v_(n.raw()) {}
    ExactRational(const mpz_class& num, const mpz_class& den);
    ExactRational(const Natural& num, const Natural& den);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_zero() const { return v_ == 0; }
    bool is_negative() const { return v_ < 0; }

    /// The exact value as a Natural; requires an integral, non-negative value.
    Natural to_natural() const;

    /// Nearest double (used only where the contract is explicitly floating).
    double approx_double() const { return v_.get_d(); }

    std::string str() const;

    ExactRational& operator+=(const ExactRational& o) {
        v_ += o.v_;
        return *this;
    }
    ExactRational& operator-=(const ExactRational& o) {
        v_ -= o.v_;
        return *this;
    }
    ExactRational& operator*=(const ExactRational& o) {
        v_ *= o.v_;
        return *this;
    }
    ExactRational& operator/=(const ExactRational& o);

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
    ExactRational operator-() const;

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.v_ == b.v_; }
    friend std::weak_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
        int c = cmp(a.v_, b.v_);
        return c <=> 0;
    }

  private:
    mpq_class v_;
};

/// Integer power with signed exponent; 0^0 = 1, 0^negative is rejected.
ExactRational pow(const ExactRational& base, std::int64_t exponent);

/// Natural log of a non-negative exact value. Zero is carried as a flag
/// instead of -inf so the semantics do not depend on IEEE special values.
struct LogValue {
    bool is_zero = false;
    double ln_magnitude = 0.0;

    static LogValue zero() { return {true, 0.0}; }
    static LogValue from_ln(double ln) { return {false, ln}; }
};

/// ln(x) computed from the bit lengths and leading bits of numerator and
/// denominator, never by rounding the full integers to doubles first.
/// Relative accuracy 1e-12 (see tests against an mpfr oracle).
LogValue to_log(const ExactRational& x);

/// Correctly rounded 12-significant-digit decimal, trailing zeros trimmed,
/// with the same plain/scientific placement rules as printf "%.12g".
std::string decimal12(const ExactRational& x);

/// printf "%.12g" for doubles, normalizing "-0" to "0".
std::string decimal12(double x);

}  // namespace rstirling
