#pragma once

// Point vector fields xi(x,y) d/dx + eta(x,y) d/dy, their prolongations to
// jet space, commutators and structure constants.

#include "liesym/jet.hpp"
#include "liesym/linear_algebra.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liesym {

class PointVectorField {
public:
    PointVectorField(JetExpr xi, JetExpr eta, std::string label = {})
        : xi_(std::move(xi)), eta_(std::move(eta)), label_(std::move(label)) {
        if (xi_.max_order() > 0 || eta_.max_order() > 0)
            throw std::invalid_argument("point vector field components may only depend on x and y");
    }

    [[nodiscard]] const JetExpr& xi() const { return xi_; }
    [[nodiscard]] const JetExpr& eta() const { return eta_; }
    [[nodiscard]] const std::string& label() const { return label_; }
    [[nodiscard]] bool is_zero() const { return xi_.is_zero() && eta_.is_zero(); }

    /// Action as a first-order derivation on functions of x and y.
    [[nodiscard]] JetExpr act(const JetExpr& f) const {
        return xi_ * partial_derivative(f, Var::x()) + eta_ * partial_derivative(f, Var::y());
    }

    /// "xi=<expr>; eta=<expr>" in canonical text.
    [[nodiscard]] std::string str() const { return "xi=" + xi_.str() + "; eta=" + eta_.str(); }

    friend PointVectorField operator+(const PointVectorField& a, const PointVectorField& b) {
        return {a.xi_ + b.xi_, a.eta_ + b.eta_};
    }
    friend PointVectorField operator*(const Rational& s, const PointVectorField& v) {
        return {JetExpr(s) * v.xi_, JetExpr(s) * v.eta_};
    }
    /// Component-wise equality (labels ignored).
    friend bool operator==(const PointVectorField& a, const PointVectorField& b) {
        return a.xi_ == b.xi_ && a.eta_ == b.eta_;
    }

private:
    JetExpr xi_;
    JetExpr eta_;
    std::string label_;
};

/// The fields used throughout: the sl(2) realization on the line in x,
/// the affine pair in y, and y^2 d/dy which completes the second sl(2).
namespace fields {

inline JetExpr x() { return JetExpr::variable(Var::x()); }
inline JetExpr y() { return JetExpr::variable(Var::y()); }

inline PointVectorField X1() { return {x(), 0, "X1"}; }              // x d/dx
inline PointVectorField X2() { return {1, 0, "X2"}; }                // d/dx
inline PointVectorField X3() { return {x() * x(), 0, "X3"}; }        // x^2 d/dx
inline PointVectorField X4() { return {0, 1, "X4"}; }                // d/dy
inline PointVectorField X5() { return {0, y(), "X5"}; }              // y d/dy
inline PointVectorField X6() { return {0, y() * y(), "X6"}; }        // y^2 d/dy

/// Looks up one of X1..X6 by name.
inline std::optional<PointVectorField> builtin(std::string_view name) {
    if (name == "X1") return X1();
    if (name == "X2") return X2();
    if (name == "X3") return X3();
    if (name == "X4") return X4();
    if (name == "X5") return X5();
    if (name == "X6") return X6();
    return std::nullopt;
}

}  // namespace fields

/// A point field extended to jet order k: eta_coeffs[j] is the coefficient of d/dy^(j).
class ProlongedField {
public:
    [[nodiscard]] const PointVectorField& base() const { return base_; }
    [[nodiscard]] int order() const { return order_; }
    [[nodiscard]] const std::vector<JetExpr>& eta_coeffs() const { return eta_; }
    [[nodiscard]] const JetExpr& eta(int j) const { return eta_.at(static_cast<std::size_t>(j)); }

    /// Recomputes eta^(j) = D_x eta^(j-1) - y^(j) D_x xi and compares.
    [[nodiscard]] bool satisfies_recursion() const {
        JetContext ctx(order_);
        JetExpr dxi = total_derivative(base_.xi(), ctx);
        for (int j = 1; j <= order_; ++j) {
            JetExpr expected = total_derivative(eta(j - 1), ctx) - JetExpr::variable(Var::y(static_cast<unsigned>(j))) * dxi;
            if (!(expected == eta(j)) || eta(j).max_order() > j) return false;
        }
        return eta(0) == base_.eta();
    }

private:
    friend ProlongedField prolong(const PointVectorField& v, int k);
    ProlongedField(PointVectorField base, int order, std::vector<JetExpr> eta)
        : base_(std::move(base)), order_(order), eta_(std::move(eta)) {}

    PointVectorField base_;
    int order_;
    std::vector<JetExpr> eta_;
};

inline ProlongedField prolong(const PointVectorField& v, int k) {
    if (k < 1) throw std::invalid_argument("prolongation order must be at least 1");
    JetContext ctx(k);
    JetExpr dxi = total_derivative(v.xi(), ctx);
    std::vector<JetExpr> eta;
    eta.reserve(static_cast<std::size_t>(k) + 1);
    eta.push_back(v.eta());
    for (int j = 1; j <= k; ++j) {
        JetExpr next = total_derivative(eta.back(), ctx);
        if (!dxi.is_zero()) next -= JetExpr::variable(Var::y(static_cast<unsigned>(j))) * dxi;
        eta.push_back(std::move(next));
    }
    return {v, k, std::move(eta)};
}

/// xi de/dx + sum_j eta^(j) de/dy^(j).
inline JetExpr apply(const ProlongedField& pv, const JetExpr& e) {
    if (e.max_order() > pv.order())
        throw OrderOverflow("expression of order " + std::to_string(e.max_order()) +
                            " needs a prolongation of at least that order");
    JetExpr out;
    for (Var v : e.variables()) {
        const JetExpr& coeff = v.is_x() ? pv.base().xi() : pv.eta(v.order());
        if (coeff.is_zero()) continue;
        out += coeff * partial_derivative(e, v);
    }
    return out;
}

inline PointVectorField commutator(const PointVectorField& v, const PointVectorField& w) {
    return {v.act(w.xi()) - w.act(v.xi()), v.act(w.eta()) - w.act(v.eta())};
}

/// Raised when a commutator leaves the span of the proposed basis.
class NotClosed : public std::runtime_error {
public:
    explicit NotClosed(const std::string& what) : std::runtime_error(what) {}
};

/// Structure constants c[i][j][k] with [X_i, X_j] = sum_k c[i][j][k] X_k.
class StructureConstants {
public:
    explicit StructureConstants(std::size_t n)
        : n_(n), c_(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n))) {}

    [[nodiscard]] std::size_t dimension() const { return n_; }
    [[nodiscard]] const std::vector<Rational>& bracket(std::size_t i, std::size_t j) const { return c_[i][j]; }
    std::vector<Rational>& bracket(std::size_t i, std::size_t j) { return c_[i][j]; }

    [[nodiscard]] bool is_antisymmetric() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k)
                    if (c_[i][j][k] != -c_[j][i][k]) return false;
        return true;
    }

    /// [[u,v],w] + [[v,w],u] + [[w,u],v] = 0 on all basis triples.
    [[nodiscard]] bool satisfies_jacobi() const {
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                for (std::size_t d = 0; d < n_; ++d)
                    for (std::size_t m = 0; m < n_; ++m) {
                        Rational s = 0;
                        for (std::size_t l = 0; l < n_; ++l)
                            s += c_[a][b][l] * c_[l][d][m] + c_[b][d][l] * c_[l][a][m] + c_[d][a][l] * c_[l][b][m];
                        if (!s.is_zero()) return false;
                    }
        return true;
    }

    [[nodiscard]] bool is_abelian() const {
        for (const auto& row : c_)
            for (const auto& v : row)
                for (const auto& x : v)
                    if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

private:
    std::size_t n_;
    std::vector<std::vector<std::vector<Rational>>> c_;
};

namespace detail {

// Coordinates of a polynomial field: (component, monomial) -> coefficient.
struct CoordinateOrder {
    bool operator()(const std::pair<int, Monomial>& a, const std::pair<int, Monomial>& b) const {
        if (a.first != b.first) return a.first < b.first;
        return grlex_compare(a.second, b.second) > 0;
    }
};
using FieldCoordinates = std::map<std::pair<int, Monomial>, Rational, CoordinateOrder>;

inline FieldCoordinates coordinates(const PointVectorField& v) {
    FieldCoordinates out;
    int component = 0;
    for (const JetExpr* part : {&v.xi(), &v.eta()}) {
        if (!part->is_polynomial())
            throw std::invalid_argument("structure constants need polynomial vector fields");
        Rational scale = part->denominator().constant_value().inverse();
        for (const auto& [m, c] : part->numerator().terms()) out.emplace(std::make_pair(component, m), c * scale);
        ++component;
    }
    return out;
}

/// Solves sum_i c_i basis[i] = target over the union of coordinates.
inline std::optional<std::vector<Rational>> express_in_basis(const std::vector<FieldCoordinates>& basis,
                                                             const FieldCoordinates& target) {
    FieldCoordinates keys;
    for (const auto& b : basis)
        for (const auto& [k, c] : b) keys.emplace(k, 0);
    for (const auto& [k, c] : target) keys.emplace(k, 0);
    Matrix a(keys.size(), basis.size());
    std::vector<Rational> rhs(keys.size());
    std::size_t r = 0;
    for (const auto& [key, unused] : keys) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            auto it = basis[i].find(key);
            if (it != basis[i].end()) a(r, i) = it->second;
        }
        auto it = target.find(key);
        if (it != target.end()) rhs[r] = it->second;
        ++r;
    }
    return solve(a, rhs);
}

}  // namespace detail

/// Rank of a set of polynomial fields over the rationals.
inline std::size_t span_rank(const std::vector<PointVectorField>& fields) {
    std::vector<detail::FieldCoordinates> coords;
    detail::FieldCoordinates keys;
    for (const auto& f : fields) {
        coords.push_back(detail::coordinates(f));
        for (const auto& [k, c] : coords.back()) keys.emplace(k, 0);
    }
    Matrix m(fields.size(), keys.size());
    for (std::size_t i = 0; i < fields.size(); ++i) {
        std::size_t col = 0;
        for (const auto& [k, unused] : keys) {
            auto it = coords[i].find(k);
            if (it != coords[i].end()) m(i, col) = it->second;
            ++col;
        }
    }
    return rank(m);
}

/// True iff both lists span the same rational subspace.
inline bool same_span(const std::vector<PointVectorField>& a, const std::vector<PointVectorField>& b) {
    std::vector<PointVectorField> both = a;
    both.insert(both.end(), b.begin(), b.end());
    std::size_t r = span_rank(both);
    return span_rank(a) == r && span_rank(b) == r;
}

/// Exact structure constants of a linearly independent list of polynomial fields.
/// Throws NotClosed if some commutator is outside the span.
inline StructureConstants bracket_table(const std::vector<PointVectorField>& basis) {
    std::vector<detail::FieldCoordinates> coords;
    coords.reserve(basis.size());
    for (const auto& f : basis) coords.push_back(detail::coordinates(f));
    if (span_rank(basis) != basis.size()) throw std::invalid_argument("basis fields are linearly dependent");

    StructureConstants table(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            PointVectorField br = commutator(basis[i], basis[j]);
            auto c = detail::express_in_basis(coords, detail::coordinates(br));
            if (!c) throw NotClosed("commutator of basis fields " + std::to_string(i + 1) + " and " +
                                    std::to_string(j + 1) + " is not in their span: " + br.str());
            table.bracket(i, j) = *c;
            for (auto& x : *c) x = -x;
            table.bracket(j, i) = std::move(*c);
        }
    }
    return table;
}

}  // namespace liesym
