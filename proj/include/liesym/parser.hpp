#pragma once

// Recursive-descent parser for expressions over x, y and its derivatives.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | '+' unary | power
//   power   := primary ('^' integer)?        integer may be signed or parenthesized
//   primary := number | variable | '(' expr ')'
//
// `^` binds tighter than unary minus, so -y^2 is -(y^2). `y^(j)` with a
// non-negative integer j names the j-th derivative; write `y^j` for a power.

#include "liesym/expr.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace liesym {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at column " + std::to_string(position + 1)), position_(position) {}
    [[nodiscard]] std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace detail {

class ExprParser {
public:
    ExprParser(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

    Expr parse_all() {
        Expr e = expr();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, offset_ + pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Expr expr() {
        std::vector<Expr> terms{term()};
        for (;;) {
            if (accept('+')) {
                terms.push_back(term());
            } else if (accept('-')) {
                terms.push_back(Expr::negate(term()));
            } else {
                break;
            }
        }
        return terms.size() == 1 ? terms.front() : Expr::sum(std::move(terms));
    }

    Expr term() {
        Expr acc = unary();
        std::vector<Expr> factors{acc};
        for (;;) {
            if (accept('*')) {
                factors.push_back(unary());
            } else if (accept('/')) {
                Expr num = factors.size() == 1 ? factors.front() : Expr::product(std::move(factors));
                factors = {Expr::quotient(num, unary())};
            } else {
                break;
            }
        }
        return factors.size() == 1 ? factors.front() : Expr::product(std::move(factors));
    }

    Expr unary() {
        if (accept('-')) return Expr::negate(unary());
        if (accept('+')) return unary();
        return power();
    }

    Expr power() {
        Expr base = primary();
        if (!accept('^')) return base;
        bool paren = accept('(');
        skip_ws();
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer exponent");
        if (pos_ - start > 9) fail("exponent too large");
        long e = std::stol(std::string(text_.substr(start, pos_ - start)));
        if (paren && !accept(')')) fail("expected ')'");
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^') fail("chained exponents need parentheses");
        return Expr::power(base, negative ? -e : e);
    }

    Expr primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Expr e = expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return variable();
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Expr number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            std::size_t frac = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (frac == pos_ && frac == start + 1) fail("malformed number");
        }
        return Expr::number(Rational::parse(text_.substr(start, pos_ - start)));
    }

    Expr variable() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
        while (pos_ < text_.size() && text_[pos_] == '\'') ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        if (name == "y" && text_.substr(pos_, 2) == "^(") {
            std::size_t q = pos_ + 2;
            std::size_t digits = q;
            while (q < text_.size() && std::isdigit(static_cast<unsigned char>(text_[q]))) ++q;
            if (q > digits && q < text_.size() && text_[q] == ')') {
                name = "y^(" + std::string(text_.substr(digits, q - digits)) + ")";
                pos_ = q + 1;
            }
        }
        auto v = parse_var_name(name);
        if (!v) {
            pos_ = start;
            fail("unknown variable '" + name + "'");
        }
        return Expr::variable(*v);
    }

    std::string_view text_;
    std::size_t offset_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Expr parse_expression(std::string_view text, std::size_t offset = 0) {
    return detail::ExprParser(text, offset).parse_all();
}

/// `lhs = rhs`; a bare expression is read as `expr = 0`.
inline Equation parse_equation(std::string_view text) {
    auto eq = text.find('=');
    if (eq == std::string_view::npos) return {parse_expression(text), Expr::number(0)};
    if (text.find('=', eq + 1) != std::string_view::npos) throw ParseError("more than one '='", text.find('=', eq + 1));
    return {parse_expression(text.substr(0, eq)), parse_expression(text.substr(eq + 1), eq + 1)};
}

/// Components of a point field written `xi=<expr>; eta=<expr>`. Either part may be omitted (it is then 0).
struct FieldText {
    Expr xi = Expr::number(0);
    Expr eta = Expr::number(0);
};

inline FieldText parse_field_text(std::string_view text) {
    FieldText out;
    bool seen_xi = false;
    bool seen_eta = false;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view part = text.substr(start, end - start);
        std::size_t lead = part.find_first_not_of(" \t");
        if (lead != std::string_view::npos) {
            auto eq = part.find('=');
            if (eq == std::string_view::npos) throw ParseError("expected 'xi=' or 'eta='", start + lead);
            std::string_view key = part.substr(lead, eq - lead);
            while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.remove_suffix(1);
            Expr value = parse_expression(part.substr(eq + 1), start + eq + 1);
            if (key == "xi" && !seen_xi) {
                out.xi = value;
                seen_xi = true;
            } else if (key == "eta" && !seen_eta) {
                out.eta = value;
                seen_eta = true;
            } else {
                throw ParseError("expected 'xi=' or 'eta=' (each at most once)", start + lead);
            }
        }
        start = end + 1;
    }
    if (!seen_xi && !seen_eta) throw ParseError("empty field specification", 0);
    return out;
}

}  // namespace liesym
