#pragma once

// Jet space: the total derivative and restriction to an ODE's solution manifold.

#include "liesym/expr.hpp"
#include "liesym/rational_function.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace liesym {

using JetExpr = RationalFunction;

/// Raised when a total derivative would need a jet order the context does not carry.
class OrderOverflow : public std::out_of_range {
public:
    explicit OrderOverflow(const std::string& what) : std::out_of_range(what) {}
};

/// Jet coordinates x, y, y', ..., y^(max_order+1). The top order is spare:
/// it only ever appears as the output of a total derivative.
class JetContext {
public:
    explicit JetContext(int max_order) : max_order_(max_order) {
        if (max_order < 1) throw std::invalid_argument("jet context needs max_order >= 1");
    }
    [[nodiscard]] int max_order() const { return max_order_; }
    [[nodiscard]] Var top() const { return Var::y(static_cast<unsigned>(max_order_ + 1)); }

private:
    int max_order_;
};

/// D_x e = de/dx + sum_j y^(j+1) de/dy^(j).
inline JetExpr total_derivative(const JetExpr& e, const JetContext& ctx) {
    if (e.max_order() > ctx.max_order())
        throw OrderOverflow("total derivative of an expression of order " + std::to_string(e.max_order()) +
                            " exceeds jet order " + std::to_string(ctx.max_order()));
    JetExpr out;
    for (Var v : e.variables()) {
        JetExpr d = partial_derivative(e, v);
        if (d.is_zero()) continue;
        if (v.is_x()) {
            out += d;
        } else {
            out += JetExpr::variable(Var::y(static_cast<unsigned>(v.order() + 1))) * d;
        }
    }
    return out;
}

namespace detail {

inline Expr polynomial_expr(const Polynomial& p) {
    if (p.is_zero()) return Expr::number(0);
    std::vector<Expr> terms;
    for (const auto& [m, c] : p.terms()) {
        std::vector<Expr> factors;
        Rational mag = c.abs();
        if (!mag.is_one() || m.is_one()) factors.push_back(Expr::number(mag));
        for (const auto& [v, e] : m.factors()) factors.push_back(Expr::var_power(v, e));
        Expr t = factors.size() == 1 ? factors.front() : Expr::product(std::move(factors));
        terms.push_back(c.sign() < 0 ? Expr::negate(t) : t);
    }
    return terms.size() == 1 ? terms.front() : Expr::sum(std::move(terms));
}

}  // namespace detail

/// Expression tree of a normal form, numerator over denominator.
inline Expr to_expr(const JetExpr& e) {
    Expr num = detail::polynomial_expr(e.numerator());
    if (e.denominator().is_constant()) return num;
    return Expr::quotient(num, detail::polynomial_expr(e.denominator()));
}

/// An ODE of order k in solved form y^(k) = rhs.
class OdeSpec {
public:
    OdeSpec(int order, JetExpr rhs, std::string id = "ode", std::optional<Equation> display = std::nullopt)
        : order_(order), rhs_(std::move(rhs)), id_(std::move(id)), display_(std::move(display)) {
        if (order_ < 1) throw std::invalid_argument("ODE order must be at least 1");
        if (rhs_.max_order() >= order_)
            throw std::invalid_argument("right-hand side of an order-" + std::to_string(order_) +
                                        " ODE may only use derivatives below order " + std::to_string(order_));
    }

    [[nodiscard]] int order() const { return order_; }
    [[nodiscard]] const JetExpr& rhs() const { return rhs_; }
    [[nodiscard]] const std::string& id() const { return id_; }
    [[nodiscard]] Var top() const { return Var::y(static_cast<unsigned>(order_)); }
    /// Display shape of the equation, if it was built from one.
    [[nodiscard]] const std::optional<Equation>& display() const { return display_; }

    /// y^(k) - rhs.
    [[nodiscard]] JetExpr delta() const { return JetExpr::variable(top()) - rhs_; }

    [[nodiscard]] Equation equation() const {
        if (display_) return *display_;
        return {Expr::variable(top()), to_expr(rhs_)};
    }

private:
    int order_;
    JetExpr rhs_;
    std::string id_;
    std::optional<Equation> display_;
};

/// Builds the solved form of an equation that is linear in its highest derivative.
inline OdeSpec ode_from_equation(const Equation& eq, std::string id = "ode") {
    JetExpr delta = eq.difference();
    int k = delta.max_order();
    if (k < 1) throw std::invalid_argument("equation contains no derivative of y");
    Var top = Var::y(static_cast<unsigned>(k));
    JetExpr coeff = partial_derivative(delta, top);
    if (coeff.depends_on(top))
        throw std::invalid_argument("equation is not linear in its highest derivative " + top.name());
    JetExpr rest = substitute(delta, top, 0);
    if (!(delta - (coeff * JetExpr::variable(top) + rest)).is_zero())
        throw std::invalid_argument("equation is not linear in its highest derivative " + top.name());
    return OdeSpec(k, -rest / coeff, std::move(id), eq);
}

/// Replaces y^(k) by the right-hand side. y^(k+1) is first replaced by D_x(rhs).
inline JetExpr reduce_on_manifold(const JetExpr& e, const OdeSpec& ode) {
    const int k = ode.order();
    if (e.max_order() > k + 1)
        throw OrderOverflow("manifold reduction supports derivatives up to order " + std::to_string(k + 1));
    JetExpr out = e;
    Var next = Var::y(static_cast<unsigned>(k + 1));
    if (out.depends_on(next)) out = substitute(out, next, total_derivative(ode.rhs(), JetContext(k)));
    return substitute(out, ode.top(), ode.rhs());
}

}  // namespace liesym
