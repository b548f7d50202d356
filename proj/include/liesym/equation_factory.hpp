#pragma once

// Coefficients and constructors for the sl(2)-invariant ODE families.
//
// For order k >= 4 the family is
//
//   y^(k) = sum_{q=1}^{k-3} a_q (y'')^q y^(k-q) / (y')^q + a_{k-2} (y'')^(k-1) / (y')^(k-2)
//
// with a_1..a_{k-2} fixed by invariance under x^2 d/dx. The coefficients come
// from a two-term linear recursion; a Gamma-function closed form is kept as a
// cross-check only.

#include "liesym/jet.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liesym {

enum class CoefficientSource { Recursion, ClosedForm };

inline std::string to_string(CoefficientSource s) {
    return s == CoefficientSource::Recursion ? "recursion" : "closed_form";
}

struct CoefficientVector {
    int order = 0;
    std::vector<Rational> values;  // a_1 .. a_{k-2}
    CoefficientSource source = CoefficientSource::Recursion;

    /// a_q, 1-based.
    [[nodiscard]] const Rational& a(int q) const { return values.at(static_cast<std::size_t>(q - 1)); }

    /// "a = [6, -6]"
    [[nodiscard]] std::string str() const {
        std::string out = "a = [";
        for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + values[i].str();
        return out + "]";
    }

    [[nodiscard]] nlohmann::json to_json() const {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& v : values) a.push_back(v.str());
        return {{"k", order}, {"a", a}, {"source", to_string(source)}};
    }
};

/// Band coefficient of the recursion, k^2 + k - 2kq - q + q^2, for 1 <= q <= k-2.
inline Rational f_value(int k, int q) {
    if (q < 1 || q > k - 2)
        throw std::out_of_range("f_value needs 1 <= q <= k-2 (k=" + std::to_string(k) + ", q=" + std::to_string(q) + ")");
    long kk = k;
    long qq = q;
    return Rational(kk * kk + kk - 2 * kk * qq - qq + qq * qq);
}

namespace detail {
inline void require_order(int k) {
    if (k < 4) throw std::invalid_argument("the coefficient family needs k >= 4 (got k=" + std::to_string(k) + ")");
}
}  // namespace detail

/// Unique solution of
///   2 a_1 = f(k,1),
///   2q a_q = -f(k,q) a_{q-1}           for 2 <= q <= k-3,
///   2(k-1) a_{k-2} = -f(k,k-2) a_{k-3}.
/// At k = 4 the middle band is empty.
inline CoefficientVector solve_recursion(int k) {
    detail::require_order(k);
    CoefficientVector cv{k, {}, CoefficientSource::Recursion};
    cv.values.push_back(f_value(k, 1) / Rational(2));
    for (int q = 2; q <= k - 3; ++q) cv.values.push_back(-f_value(k, q) * cv.values.back() / Rational(2 * q));
    cv.values.push_back(-f_value(k, k - 2) * cv.values.back() / Rational(2 * (k - 1)));
    return cv;
}

/// Re-substitutes into the linear system; exact.
inline bool satisfies_linear_system(const CoefficientVector& cv) {
    const int k = cv.order;
    if (k < 4 || cv.values.size() != static_cast<std::size_t>(k - 2)) return false;
    if (Rational(2) * cv.a(1) - f_value(k, 1) != 0) return false;
    for (int q = 2; q <= k - 3; ++q)
        if (Rational(2 * q) * cv.a(q) + f_value(k, q) * cv.a(q - 1) != 0) return false;
    return Rational(2 * (k - 1)) * cv.a(k - 2) + f_value(k, k - 2) * cv.a(k - 3) == 0;
}

/// The Gamma-function formulas evaluated exactly, with Gamma(n) = (n-1)!.
inline CoefficientVector closed_form(int k) {
    detail::require_order(k);
    auto gamma = [](int n) { return Rational(factorial(static_cast<unsigned long>(n - 1))); };
    auto sign = [](int e) { return Rational(e % 2 == 0 ? 1 : -1); };
    const Rational gk2k = gamma(k) * gamma(k) * Rational(k);
    CoefficientVector cv{k, {}, CoefficientSource::ClosedForm};
    for (int q = 1; q <= k - 3; ++q) {
        Rational num = sign(q) * pow(Rational(2), 1 - q) * gk2k;
        cv.values.push_back(num / (Rational(2) * gamma(q + 1) * gamma(k - q) * gamma(k + 1 - q)));
    }
    Rational num = sign(k - 2) * pow(Rational(2), 4 - k) * gk2k;
    cv.values.push_back(num / (Rational(8 * (k - 1)) * gamma(k - 2)));
    return cv;
}

/// The common ratio r with a_q = r * b_q for all q, if there is one.
inline std::optional<Rational> common_ratio(const CoefficientVector& a, const CoefficientVector& b) {
    if (a.values.size() != b.values.size() || a.values.empty()) return std::nullopt;
    std::optional<Rational> r;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        if (b.values[i].is_zero()) {
            if (!a.values[i].is_zero()) return std::nullopt;
            continue;
        }
        Rational ri = a.values[i] / b.values[i];
        if (r && *r != ri) return std::nullopt;
        r = ri;
    }
    return r;
}

inline bool magnitudes_agree(const CoefficientVector& a, const CoefficientVector& b) {
    if (a.values.size() != b.values.size()) return false;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        if (a.values[i].abs() != b.values[i].abs()) return false;
    return true;
}

namespace detail {

inline JetExpr yv(unsigned j) { return JetExpr::variable(Var::y(j)); }

struct FamilyTerm {
    Rational coeff;
    JetExpr value;  // without the coefficient
    Expr shape;     // without the coefficient
};

// The k-2 summands of the invariant family, each as coefficient times a monomial quotient.
inline std::vector<FamilyTerm> family_terms(int k, const CoefficientVector& coeffs) {
    if (coeffs.order != k || coeffs.values.size() != static_cast<std::size_t>(k - 2))
        throw std::invalid_argument("coefficient vector of order " + std::to_string(coeffs.order) +
                                    " does not match k=" + std::to_string(k));
    const auto uk = static_cast<unsigned>(k);
    std::vector<FamilyTerm> out;
    for (int q = 1; q <= k - 3; ++q) {
        JetExpr v = pow(yv(2), q) * yv(uk - static_cast<unsigned>(q)) * pow(yv(1), -q);
        Expr num = Expr::product({Expr::var_power(Var::y(2), q), Expr::variable(Var::y(uk - static_cast<unsigned>(q)))});
        out.push_back({coeffs.a(q), v, Expr::quotient(num, Expr::var_power(Var::y(1), q))});
    }
    JetExpr v = pow(yv(2), k - 1) * pow(yv(1), 2 - k);
    out.push_back({coeffs.a(k - 2), v,
                   Expr::quotient(Expr::var_power(Var::y(2), k - 1), Expr::var_power(Var::y(1), k - 2))});
    return out;
}

// |c| * shape, folding the coefficient into the leading product when it is not 1.
inline Expr scaled_shape(const Rational& c, const Expr& shape) {
    Rational mag = c.abs();
    if (mag.is_one()) return shape;
    if (shape.kind() == Expr::Kind::Quotient) {
        const Expr& num = shape.children()[0];
        std::vector<Expr> factors{Expr::number(mag)};
        if (num.kind() == Expr::Kind::Product) {
            factors.insert(factors.end(), num.children().begin(), num.children().end());
        } else {
            factors.push_back(num);
        }
        return Expr::quotient(Expr::product(std::move(factors)), shape.children()[1]);
    }
    return Expr::product({Expr::number(mag), shape});
}

inline JetExpr family_rhs(const std::vector<FamilyTerm>& terms) {
    JetExpr rhs;
    for (const auto& t : terms) rhs += JetExpr(t.coeff) * t.value;
    return rhs;
}

// Display terms with `sign` applied to every coefficient.
inline void append_terms(std::vector<Expr>& out, const std::vector<FamilyTerm>& terms, int sign) {
    for (const auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        Expr e = scaled_shape(t.coeff, t.shape);
        out.push_back(t.coeff.sign() * sign < 0 ? Expr::negate(e) : e);
    }
}

inline Expr sum_or_single(std::vector<Expr> terms) {
    if (terms.empty()) return Expr::number(0);
    return terms.size() == 1 ? terms.front() : Expr::sum(std::move(terms));
}

inline std::string family_id(const std::string& name, int k) { return name + "(k=" + std::to_string(k) + ")"; }

}  // namespace detail

/// y^(k) = sum of the invariant family terms, displayed in solved form.
inline OdeSpec build_eq3(int k, const CoefficientVector& coeffs) {
    detail::require_order(k);
    auto terms = detail::family_terms(k, coeffs);
    std::vector<Expr> shown;
    detail::append_terms(shown, terms, +1);
    Equation display{Expr::variable(Var::y(static_cast<unsigned>(k))), detail::sum_or_single(std::move(shown))};
    return {k, detail::family_rhs(terms), detail::family_id("eq3", k), display};
}

inline OdeSpec build_eq3(int k) { return build_eq3(k, solve_recursion(k)); }

/// 3(y'')^2 - 2 y' y''' = 0, solved as y''' = 3 (y'')^2 / (2 y').
inline OdeSpec build_eq9() {
    using detail::yv;
    JetExpr rhs = JetExpr(Rational(3, 2)) * yv(2) * yv(2) / yv(1);
    Expr lhs = Expr::sum({Expr::product({Expr::number(3), Expr::var_power(Var::y(2), 2)}),
                          Expr::negate(Expr::product({Expr::number(2), Expr::variable(Var::y(1)), Expr::variable(Var::y(3))}))});
    return {3, rhs, "eq9", Equation{lhs, Expr::number(0)}};
}

/// The symmetry-breaking summand (y + (2 y' y''' - 3 (y'')^2) / (y')^4) (y')^k.
inline JetExpr eq10_tail(int k) {
    using detail::yv;
    JetExpr inner = yv(0) + (JetExpr(2) * yv(1) * yv(3) - JetExpr(3) * yv(2) * yv(2)) * pow(yv(1), -4);
    return inner * pow(yv(1), k);
}

inline Expr eq10_tail_shape(int k) {
    Expr schwarz = Expr::sum({Expr::product({Expr::number(2), Expr::variable(Var::y(1)), Expr::variable(Var::y(3))}),
                              Expr::negate(Expr::product({Expr::number(3), Expr::var_power(Var::y(2), 2)}))});
    Expr inner = Expr::sum({Expr::variable(Var::y(0)), Expr::quotient(schwarz, Expr::var_power(Var::y(1), 4))});
    return Expr::product({inner, Expr::var_power(Var::y(1), k)});
}

/// The invariant family plus the tail, displayed as Delta = 0:
///   y^(k) - sum(...) - a_{k-2}(...) + (y + (2y'y''' - 3y''^2)/y'^4) y'^k = 0.
inline OdeSpec build_eq10(int k, const CoefficientVector& coeffs) {
    detail::require_order(k);
    auto terms = detail::family_terms(k, coeffs);
    std::vector<Expr> shown{Expr::variable(Var::y(static_cast<unsigned>(k)))};
    detail::append_terms(shown, terms, -1);
    shown.push_back(eq10_tail_shape(k));
    JetExpr rhs = detail::family_rhs(terms) - eq10_tail(k);
    return {k, rhs, detail::family_id("eq10", k), Equation{Expr::sum(std::move(shown)), Expr::number(0)}};
}

inline OdeSpec build_eq10(int k) { return build_eq10(k, solve_recursion(k)); }

/// Extra right-hand-side summand Phi(y, y', ..., y^(k-1)); never depends on x.
class PhiTerm {
public:
    explicit PhiTerm(JetExpr expr) : PhiTerm(expr, to_expr(expr)) {}
    PhiTerm(JetExpr expr, Expr shape) : expr_(std::move(expr)), shape_(std::move(shape)) {
        if (expr_.depends_on(Var::x())) throw std::invalid_argument("Phi must not depend on x explicitly");
    }
    [[nodiscard]] const JetExpr& expr() const { return expr_; }
    [[nodiscard]] const Expr& shape() const { return shape_; }

private:
    JetExpr expr_;
    Expr shape_;
};

/// y^(k) = sum of the invariant family terms + Phi. Only the form is imposed;
/// invariance of the result depends on Phi and has to be checked separately.
inline OdeSpec build_eq11(int k, const CoefficientVector& coeffs, const PhiTerm& phi) {
    detail::require_order(k);
    if (phi.expr().max_order() >= k)
        throw std::invalid_argument("Phi may only use derivatives up to order " + std::to_string(k - 1));
    auto terms = detail::family_terms(k, coeffs);
    std::vector<Expr> shown;
    detail::append_terms(shown, terms, +1);
    if (!phi.expr().is_zero()) shown.push_back(phi.shape());
    JetExpr rhs = detail::family_rhs(terms) + phi.expr();
    return {k, rhs, detail::family_id("eq11", k),
            Equation{Expr::variable(Var::y(static_cast<unsigned>(k))), detail::sum_or_single(std::move(shown))}};
}

}  // namespace liesym
