#pragma once

// Exact rational scalars backed by GMP.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace liesym {

using Integer = mpz_class;

/// Thrown for any operation that would divide by an exact zero.
class DivisionByZero : public std::domain_error {
public:
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// Arbitrary-precision rational in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
    explicit Rational(const Integer& value) : value_(value) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    /// Parses "p", "-p", "p/q" or a finite decimal "12.375".
    static Rational parse(std::string_view text) {
        std::string s(text);
        if (auto dot = s.find('.'); dot != std::string::npos) {
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            Integer den = 1;
            for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
            return Rational(Integer(digits.empty() ? "0" : digits), den);
        }
        if (auto slash = s.find('/'); slash != std::string::npos)
            return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
        return Rational(Integer(s));
    }

    [[nodiscard]] Integer numerator() const { return value_.get_num(); }
    [[nodiscard]] Integer denominator() const { return value_.get_den(); }
    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_one() const { return value_ == 1; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] Rational abs() const { return from_mpq(::abs(value_)); }

    [[nodiscard]] Rational inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero");
        return from_mpq(1 / value_);
    }

    /// Renders as "p/q", or "p" when the denominator is 1.
    [[nodiscard]] std::string str() const {
        if (is_integer()) return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return from_mpq(a.value_ + b.value_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return from_mpq(a.value_ - b.value_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return from_mpq(a.value_ * b.value_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DivisionByZero("rational division by zero");
        return from_mpq(a.value_ / b.value_);
    }
    friend Rational operator-(const Rational& a) { return from_mpq(-a.value_); }
    Rational& operator+=(const Rational& b) { value_ += b.value_; return *this; }
    Rational& operator-=(const Rational& b) { value_ -= b.value_; return *this; }
    Rational& operator*=(const Rational& b) { value_ *= b.value_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    static Rational from_mpq(mpq_class v) {
        Rational r;
        r.value_ = std::move(v);
        return r;
    }

    mpq_class value_{0};
};

/// r^n for integer n; negative n requires r != 0.
inline Rational pow(const Rational& r, long n) {
    if (n < 0) return pow(r.inverse(), -n);
    Rational result = 1;
    Rational base = r;
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

inline Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

}  // namespace liesym
