#pragma once

// Sparse multivariate polynomials over exact rationals.

#include "liesym/rational.hpp"
#include "liesym/variables.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace liesym {

/// Power product of variables. Factors are sorted by variable and carry
/// strictly positive exponents.
class Monomial {
public:
    using Factor = std::pair<Var, std::uint32_t>;

    Monomial() = default;
    Monomial(std::initializer_list<Factor> factors) {
        for (const auto& [v, e] : factors) *this = *this * Monomial(v, e);
    }
    Monomial(Var v, std::uint32_t exponent) {
        if (exponent > 0) factors_.emplace_back(v, exponent);
    }

    [[nodiscard]] const std::vector<Factor>& factors() const { return factors_; }
    [[nodiscard]] bool is_one() const { return factors_.empty(); }

    [[nodiscard]] std::uint32_t degree() const {
        std::uint32_t d = 0;
        for (const auto& f : factors_) d += f.second;
        return d;
    }

    [[nodiscard]] std::uint32_t exponent(Var v) const {
        auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                                   [](const Factor& f, Var key) { return f.first < key; });
        return (it != factors_.end() && it->first == v) ? it->second : 0;
    }

    /// Same monomial with the exponent of `v` replaced.
    [[nodiscard]] Monomial with_exponent(Var v, std::uint32_t e) const {
        Monomial out;
        bool placed = false;
        for (const auto& f : factors_) {
            if (!placed && v < f.first) {
                if (e > 0) out.factors_.emplace_back(v, e);
                placed = true;
            }
            if (f.first == v) {
                if (e > 0) out.factors_.emplace_back(v, e);
                placed = true;
            } else {
                out.factors_.push_back(f);
            }
        }
        if (!placed && e > 0) out.factors_.emplace_back(v, e);
        return out;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial out;
        out.factors_.reserve(a.factors_.size() + b.factors_.size());
        auto i = a.factors_.begin();
        auto j = b.factors_.begin();
        while (i != a.factors_.end() || j != b.factors_.end()) {
            if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
                out.factors_.push_back(*i++);
            } else if (i == a.factors_.end() || j->first < i->first) {
                out.factors_.push_back(*j++);
            } else {
                out.factors_.emplace_back(i->first, i->second + j->second);
                ++i;
                ++j;
            }
        }
        return out;
    }

    [[nodiscard]] bool divides(const Monomial& other) const {
        return std::all_of(factors_.begin(), factors_.end(),
                           [&](const Factor& f) { return other.exponent(f.first) >= f.second; });
    }

    /// other / *this; requires divides(other).
    [[nodiscard]] Monomial quotient_of(const Monomial& other) const {
        Monomial out;
        for (const auto& [v, e] : other.factors_) {
            std::uint32_t mine = exponent(v);
            if (e > mine) out.factors_.emplace_back(v, e - mine);
        }
        return out;
    }

    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial out;
        for (const auto& [v, e] : a.factors_) {
            std::uint32_t m = std::min(e, b.exponent(v));
            if (m > 0) out.factors_.emplace_back(v, m);
        }
        return out;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial out = a;
        for (const auto& [v, e] : b.factors_)
            if (e > out.exponent(v)) out = out.with_exponent(v, e);
        return out;
    }

    /// Highest derivative order among y-family factors; -1 if none.
    [[nodiscard]] int max_order() const {
        int m = -1;
        for (const auto& f : factors_)
            if (f.first.is_y_family()) m = std::max(m, f.first.order());
        return m;
    }

    [[nodiscard]] std::string str() const {
        std::string out;
        for (const auto& [v, e] : factors_) {
            if (!out.empty()) out += '*';
            out += v.name();
            if (e > 1) out += "^" + std::to_string(e);
        }
        return out.empty() ? "1" : out;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;
};

/// Graded lexicographic comparison with x > y > y' > ...; returns <0, 0, >0.
inline int grlex_compare(const Monomial& a, const Monomial& b) {
    auto da = a.degree();
    auto db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < fa.size() && j < fb.size()) {
        if (fa[i].first == fb[j].first) {
            if (fa[i].second != fb[j].second) return fa[i].second < fb[j].second ? -1 : 1;
            ++i;
            ++j;
        } else {
            return fa[i].first < fb[j].first ? 1 : -1;
        }
    }
    if (i < fa.size()) return 1;
    if (j < fb.size()) return -1;
    return 0;
}

/// Orders monomials from largest to smallest, so map iteration starts at the leading term.
struct DescendingGrlex {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, DescendingGrlex>;

    Polynomial() = default;
    Polynomial(const Rational& c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) terms_.emplace(Monomial{}, c);
    }
    Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    Polynomial(const Monomial& m, const Rational& c = 1) {
        if (!c.is_zero()) terms_.emplace(m, c);
    }
    static Polynomial variable(Var v) { return Polynomial(Monomial(v, 1)); }

    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    [[nodiscard]] bool is_monomial() const { return terms_.size() == 1; }

    [[nodiscard]] Rational constant_value() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Rational(0) : it->second;
    }
    [[nodiscard]] const Monomial& leading_monomial() const { return terms_.begin()->first; }
    [[nodiscard]] const Rational& leading_coefficient() const { return terms_.begin()->second; }

    [[nodiscard]] Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    [[nodiscard]] std::uint32_t degree_in(Var v) const {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
        return d;
    }

    [[nodiscard]] std::uint32_t total_degree() const {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    [[nodiscard]] std::set<Var> variables() const {
        std::set<Var> out;
        for (const auto& [m, c] : terms_)
            for (const auto& f : m.factors()) out.insert(f.first);
        return out;
    }

    [[nodiscard]] int max_order() const {
        int o = -1;
        for (const auto& [m, c] : terms_) o = std::max(o, m.max_order());
        return o;
    }

    /// Greatest common monomial divisor of all terms (1 for the zero polynomial).
    [[nodiscard]] Monomial monomial_content() const {
        if (terms_.empty()) return {};
        Monomial g = terms_.begin()->first;
        for (const auto& [m, c] : terms_) {
            if (g.is_one()) break;
            g = gcd(g, m);
        }
        return g;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) {
        for (auto& [m, c] : a.terms_) c = -c;
        return a;
    }

    Polynomial& operator+=(const Polynomial& b) {
        for (const auto& [m, c] : b.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& b) {
        for (const auto& [m, c] : b.terms_) add_term(m, -c);
        return *this;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
        return out;
    }

    friend Polynomial operator*(Polynomial a, const Rational& s) {
        if (s.is_zero()) return {};
        for (auto& [m, c] : a.terms_) c *= s;
        return a;
    }

    [[nodiscard]] Polynomial times_monomial(const Monomial& mono) const {
        Polynomial out;
        for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m * mono, c);
        return out;
    }

    /// Divides every term by a monomial that divides each of them.
    [[nodiscard]] Polynomial divide_monomial(const Monomial& mono) const {
        Polynomial out;
        for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), mono.quotient_of(m), c);
        return out;
    }

    [[nodiscard]] Polynomial pow(unsigned n) const {
        Polynomial result = 1;
        Polynomial base = *this;
        while (n > 0) {
            if (n & 1U) result = result * base;
            n >>= 1U;
            if (n > 0) base = base * base;
        }
        return result;
    }

    [[nodiscard]] Polynomial partial_derivative(Var v) const {
        Polynomial out;
        for (const auto& [m, c] : terms_) {
            std::uint32_t e = m.exponent(v);
            if (e == 0) continue;
            out.add_term(m.with_exponent(v, e - 1), c * Rational(static_cast<long>(e)));
        }
        return out;
    }

    /// Groups terms by the power of `v`: result[e] is the v-free cofactor of v^e.
    [[nodiscard]] std::map<std::uint32_t, Polynomial> collect(Var v) const {
        std::map<std::uint32_t, Polynomial> out;
        for (const auto& [m, c] : terms_) {
            std::uint32_t e = m.exponent(v);
            out[e].add_term(m.with_exponent(v, 0), c);
        }
        return out;
    }

    /// Exact quotient this / divisor, or nullopt if the division leaves a remainder.
    [[nodiscard]] std::optional<Polynomial> exact_divide(const Polynomial& divisor) const {
        if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
        Polynomial rem = *this;
        Polynomial quot;
        const Monomial& lm = divisor.leading_monomial();
        const Rational& lc = divisor.leading_coefficient();
        while (!rem.is_zero()) {
            const Monomial& rm = rem.leading_monomial();
            if (!lm.divides(rm)) return std::nullopt;
            Polynomial step(lm.quotient_of(rm), rem.leading_coefficient() / lc);
            quot += step;
            rem -= step * divisor;
        }
        return quot;
    }

    /// Evaluates at a point; `value_of` supplies each variable's value.
    [[nodiscard]] Rational evaluate(const std::function<Rational(Var)>& value_of) const {
        Rational sum = 0;
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (const auto& [v, e] : m.factors()) t *= liesym::pow(value_of(v), static_cast<long>(e));
            sum += t;
        }
        return sum;
    }

    /// Canonical text: terms in descending grlex order, "p/q" coefficients with "/1" dropped.
    [[nodiscard]] std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational mag = c.abs();
            if (first) {
                if (c.sign() < 0) out += "-";
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            first = false;
            if (m.is_one()) {
                out += mag.str();
            } else if (mag.is_one()) {
                out += m.str();
            } else {
                out += mag.str() + "*" + m.str();
            }
        }
        return out;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TermMap terms_;
};

}  // namespace liesym
