#pragma once

// Normalized quotients of polynomials with a decidable zero test.
//
// There is no multivariate gcd. Normalization only removes common monomial
// factors, divides out exact polynomial quotients, and scales the denominator
// to leading coefficient 1. Equality is decided by cross-multiplication.

#include "liesym/polynomial.hpp"

#include <optional>
#include <string>

namespace liesym {

class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(int c) : num_(c), den_(1) {}              // NOLINT(google-explicit-constructor)
    RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
        normalize();
    }

    static RationalFunction variable(Var v) { return {Polynomial::variable(v)}; }

    [[nodiscard]] const Polynomial& numerator() const { return num_; }
    [[nodiscard]] const Polynomial& denominator() const { return den_; }

    /// True iff the numerator expands to the zero polynomial.
    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
    [[nodiscard]] bool is_polynomial() const { return den_.is_constant(); }
    [[nodiscard]] bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    [[nodiscard]] Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    [[nodiscard]] std::set<Var> variables() const {
        auto vs = num_.variables();
        for (Var v : den_.variables()) vs.insert(v);
        return vs;
    }
    [[nodiscard]] bool depends_on(Var v) const { return num_.degree_in(v) > 0 || den_.degree_in(v) > 0; }
    [[nodiscard]] int max_order() const { return std::max(num_.max_order(), den_.max_order()); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
        if (a.den_.is_monomial() && b.den_.is_monomial()) {
            // Both denominators are monic monomials after normalization.
            const Monomial& ma = a.den_.leading_monomial();
            const Monomial& mb = b.den_.leading_monomial();
            Monomial l = lcm(ma, mb);
            return {a.num_.times_monomial(ma.quotient_of(l)) + b.num_.times_monomial(mb.quotient_of(l)),
                    Polynomial(l)};
        }
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a) {
        RationalFunction out = a;
        out.num_ = -out.num_;
        return out;
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return {};
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }
    RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
    RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
    RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }

    [[nodiscard]] RationalFunction inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
        return {den_, num_};
    }

    /// Decided by expanding p*s - r*q.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return a.num_ == b.num_;
        return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
    }

    /// Value at a point, or nullopt if the denominator vanishes there.
    [[nodiscard]] std::optional<Rational> evaluate(const std::function<Rational(Var)>& value_of) const {
        Rational d = den_.evaluate(value_of);
        if (d.is_zero()) return std::nullopt;
        return num_.evaluate(value_of) / d;
    }

    /// Canonical text of the normal form.
    [[nodiscard]] std::string str() const {
        if (den_.is_constant()) return num_.str();
        std::string num = num_.size() > 1 ? "(" + num_.str() + ")" : num_.str();
        bool bare_den = den_.is_monomial() && den_.leading_coefficient().is_one() &&
                        den_.leading_monomial().factors().size() == 1;
        return num + "/" + (bare_den ? den_.str() : "(" + den_.str() + ")");
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        Monomial common = gcd(num_.monomial_content(), den_.monomial_content());
        if (!common.is_one()) {
            num_ = num_.divide_monomial(common);
            den_ = den_.divide_monomial(common);
        }
        if (!den_.is_monomial()) {
            if (auto q = num_.exact_divide(den_)) {
                num_ = std::move(*q);
                den_ = 1;
                return;
            }
        }
        Rational lc = den_.leading_coefficient();
        if (!lc.is_one()) {
            Rational s = lc.inverse();
            num_ = num_ * s;
            den_ = den_ * s;
        }
    }

    Polynomial num_;
    Polynomial den_;
};

RationalFunction pow(const RationalFunction& a, long n);

inline RationalFunction pow(const RationalFunction& a, long n) {
    if (n < 0) {
        if (a.is_zero()) throw DivisionByZero("zero raised to a negative power");
        return pow(a.inverse(), -n);
    }
    auto un = static_cast<unsigned>(n);
    return {a.numerator().pow(un), a.denominator().pow(un)};
}

/// Quotient rule.
inline RationalFunction partial_derivative(const RationalFunction& e, Var v) {
    const Polynomial& p = e.numerator();
    const Polynomial& q = e.denominator();
    if (q.is_constant()) return {p.partial_derivative(v), q};
    Polynomial dq = q.partial_derivative(v);
    if (dq.is_zero()) return {p.partial_derivative(v), q};
    return {p.partial_derivative(v) * q - p * dq, q * q};
}

namespace detail {

inline RationalFunction substitute_polynomial(const Polynomial& p, Var v, const RationalFunction& r) {
    RationalFunction out;
    for (const auto& [e, cofactor] : p.collect(v)) {
        if (e == 0) {
            out += RationalFunction(cofactor);
        } else {
            out += RationalFunction(cofactor) * pow(r, static_cast<long>(e));
        }
    }
    return out;
}

}  // namespace detail

/// Replaces every occurrence of `v` by `r`; throws DivisionByZero if the
/// resulting denominator vanishes identically.
inline RationalFunction substitute(const RationalFunction& e, Var v, const RationalFunction& r) {
    if (!e.depends_on(v)) return e;
    RationalFunction num = detail::substitute_polynomial(e.numerator(), v, r);
    if (e.denominator().degree_in(v) == 0) return num * RationalFunction(Polynomial(1), e.denominator());
    RationalFunction den = detail::substitute_polynomial(e.denominator(), v, r);
    if (den.is_zero()) throw DivisionByZero("substitution makes the denominator vanish");
    return num / den;
}

inline bool is_zero(const RationalFunction& e) { return e.is_zero(); }

}  // namespace liesym
