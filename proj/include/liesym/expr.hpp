#pragma once

// Structured expression trees.
//
// An Expr keeps the shape an equation was written in (term order, grouping),
// which the canonical RationalFunction normal form does not. Equations are
// displayed from Expr trees and evaluated into RationalFunctions for any
// algebra.

#include "liesym/rational_function.hpp"

#include <nlohmann/json.hpp>

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace liesym {

class Expr {
public:
    enum class Kind { Number, Variable, Sum, Product, Quotient, Power, Negate };

    static Expr number(const Rational& value) { return Expr(Node{Kind::Number, value, {}, {}, 0}); }
    static Expr variable(Var v) { return Expr(Node{Kind::Variable, 0, v, {}, 0}); }
    static Expr sum(std::vector<Expr> terms) { return Expr(Node{Kind::Sum, 0, {}, std::move(terms), 0}); }
    static Expr product(std::vector<Expr> factors) { return Expr(Node{Kind::Product, 0, {}, std::move(factors), 0}); }
    static Expr quotient(Expr num, Expr den) { return Expr(Node{Kind::Quotient, 0, {}, {std::move(num), std::move(den)}, 0}); }
    static Expr power(Expr base, long exponent) { return Expr(Node{Kind::Power, 0, {}, {std::move(base)}, exponent}); }
    static Expr negate(Expr operand) { return Expr(Node{Kind::Negate, 0, {}, {std::move(operand)}, 0}); }

    /// v^n, collapsing to v when n == 1.
    static Expr var_power(Var v, long n) { return n == 1 ? variable(v) : power(variable(v), n); }

    [[nodiscard]] Kind kind() const { return node_->kind; }
    [[nodiscard]] const Rational& value() const { return node_->value; }
    [[nodiscard]] Var var() const { return node_->var; }
    [[nodiscard]] const std::vector<Expr>& children() const { return node_->children; }
    [[nodiscard]] long exponent() const { return node_->exponent; }

    [[nodiscard]] RationalFunction evaluate() const {
        switch (kind()) {
            case Kind::Number: return value();
            case Kind::Variable: return RationalFunction::variable(var());
            case Kind::Sum: {
                RationalFunction s;
                for (const auto& c : children()) s += c.evaluate();
                return s;
            }
            case Kind::Product: {
                RationalFunction p = 1;
                for (const auto& c : children()) p *= c.evaluate();
                return p;
            }
            case Kind::Quotient: {
                RationalFunction d = children()[1].evaluate();
                if (d.is_zero()) throw DivisionByZero("division by an expression that is identically zero");
                return children()[0].evaluate() / d;
            }
            case Kind::Power: return pow(children()[0].evaluate(), exponent());
            case Kind::Negate: return -children()[0].evaluate();
        }
        return {};
    }

    [[nodiscard]] std::string ascii() const {
        switch (kind()) {
            case Kind::Number: return value().str();
            case Kind::Variable: return var().name();
            case Kind::Sum: {
                std::string out;
                for (std::size_t i = 0; i < children().size(); ++i) {
                    const Expr& c = children()[i];
                    if (i > 0 && c.is_negative()) {
                        out += " - " + c.negated_body_ascii();
                    } else {
                        if (i > 0) out += " + ";
                        out += c.ascii();
                    }
                }
                return out;
            }
            case Kind::Product: {
                std::string out;
                for (std::size_t i = 0; i < children().size(); ++i) {
                    const Expr& c = children()[i];
                    bool wrap = c.is_compound_sum() || (i > 0 && c.is_negative());
                    if (i > 0) out += "*";
                    out += wrap ? "(" + c.ascii() + ")" : c.ascii();
                }
                return out;
            }
            case Kind::Quotient: {
                const Expr& n = children()[0];
                const Expr& d = children()[1];
                std::string ns = n.is_compound_sum() ? "(" + n.ascii() + ")" : n.ascii();
                std::string ds = d.is_atomic() || d.kind() == Kind::Power ? d.ascii() : "(" + d.ascii() + ")";
                return ns + "/" + ds;
            }
            case Kind::Power: {
                const Expr& b = children()[0];
                std::string bs = b.is_atomic() ? b.ascii() : "(" + b.ascii() + ")";
                std::string e = exponent() < 0 ? "(" + std::to_string(exponent()) + ")" : std::to_string(exponent());
                return bs + "^" + e;
            }
            case Kind::Negate: {
                const Expr& c = children()[0];
                return "-" + (c.is_compound_sum() ? "(" + c.ascii() + ")" : c.ascii());
            }
        }
        return {};
    }

    [[nodiscard]] std::string latex() const {
        switch (kind()) {
            case Kind::Number: {
                const Rational& r = value();
                if (r.is_integer()) return r.str();
                std::string frac = "\\frac{" + r.numerator().get_str().substr(r.sign() < 0 ? 1 : 0) + "}{" +
                                   r.denominator().get_str() + "}";
                return r.sign() < 0 ? "-" + frac : frac;
            }
            case Kind::Variable: return var().latex();
            case Kind::Sum: {
                std::string out;
                for (std::size_t i = 0; i < children().size(); ++i) {
                    const Expr& c = children()[i];
                    if (i > 0 && c.is_negative()) {
                        out += " - " + c.negated_body_latex();
                    } else {
                        if (i > 0) out += " + ";
                        out += c.latex();
                    }
                }
                return out;
            }
            case Kind::Product: {
                std::string out;
                for (std::size_t i = 0; i < children().size(); ++i) {
                    const Expr& c = children()[i];
                    if (i > 0 && (c.kind() == Kind::Number || c.is_negative())) out += " \\cdot ";
                    bool wrap = c.is_compound_sum() || (i > 0 && c.is_negative());
                    out += wrap ? "\\left(" + c.latex() + "\\right)" : c.latex();
                }
                return out;
            }
            case Kind::Quotient:
                return "\\frac{" + children()[0].latex() + "}{" + children()[1].latex() + "}";
            case Kind::Power: {
                const Expr& b = children()[0];
                std::string bs;
                if (b.kind() == Kind::Variable && b.var().is_y_family() && b.var().order() >= 1) {
                    bs = "(" + b.latex() + ")";
                } else if (b.is_atomic()) {
                    bs = b.latex();
                } else {
                    bs = "\\left(" + b.latex() + "\\right)";
                }
                return bs + "^{" + std::to_string(exponent()) + "}";
            }
            case Kind::Negate: {
                const Expr& c = children()[0];
                return "-" + (c.is_compound_sum() ? "\\left(" + c.latex() + "\\right)" : c.latex());
            }
        }
        return {};
    }

    [[nodiscard]] nlohmann::json to_json() const {
        using nlohmann::json;
        auto list = [this] {
            json arr = json::array();
            for (const auto& c : children()) arr.push_back(c.to_json());
            return arr;
        };
        switch (kind()) {
            case Kind::Number: return {{"type", "number"}, {"value", value().str()}};
            case Kind::Variable: return {{"type", "variable"}, {"name", var().name()}, {"order", var().order()}};
            case Kind::Sum: return {{"type", "sum"}, {"terms", list()}};
            case Kind::Product: return {{"type", "product"}, {"factors", list()}};
            case Kind::Quotient:
                return {{"type", "quotient"}, {"numerator", children()[0].to_json()}, {"denominator", children()[1].to_json()}};
            case Kind::Power: return {{"type", "power"}, {"base", children()[0].to_json()}, {"exponent", exponent()}};
            case Kind::Negate: return {{"type", "negate"}, {"operand", children()[0].to_json()}};
        }
        return {};
    }

private:
    struct Node {
        Kind kind;
        Rational value;
        Var var;
        std::vector<Expr> children;
        long exponent;
    };

    explicit Expr(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}

    [[nodiscard]] bool is_compound_sum() const { return kind() == Kind::Sum && children().size() > 1; }
    [[nodiscard]] bool is_negative() const {
        return kind() == Kind::Negate || (kind() == Kind::Number && value().sign() < 0);
    }
    // A variable or a non-negative integer literal.
    [[nodiscard]] bool is_atomic() const {
        return kind() == Kind::Variable || (kind() == Kind::Number && value().is_integer() && value().sign() >= 0);
    }
    [[nodiscard]] std::string negated_body_ascii() const {
        if (kind() == Kind::Number) return value().abs().str();
        const Expr& c = children()[0];
        return c.is_compound_sum() ? "(" + c.ascii() + ")" : c.ascii();
    }
    [[nodiscard]] std::string negated_body_latex() const {
        if (kind() == Kind::Number) return Expr::number(value().abs()).latex();
        const Expr& c = children()[0];
        return c.is_compound_sum() ? "\\left(" + c.latex() + "\\right)" : c.latex();
    }

    std::shared_ptr<const Node> node_;
};

/// An equation `lhs = rhs` kept in its display shape.
struct Equation {
    Expr lhs;
    Expr rhs;

    [[nodiscard]] std::string ascii() const { return lhs.ascii() + " = " + rhs.ascii(); }
    [[nodiscard]] std::string latex() const { return lhs.latex() + " = " + rhs.latex(); }
    [[nodiscard]] RationalFunction difference() const { return lhs.evaluate() - rhs.evaluate(); }
};

}  // namespace liesym
