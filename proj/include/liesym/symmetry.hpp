#pragma once

// Point-symmetry verification and computation of the symmetry algebra of an
// ODE within a polynomial ansatz for xi(x,y) and eta(x,y).

#include "liesym/linear_algebra.hpp"
#include "liesym/vector_field.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace liesym {

/// pr^(k) v (Delta) restricted to Delta = 0.
inline JetExpr symmetry_residual(const PointVectorField& v, const OdeSpec& ode) {
    return reduce_on_manifold(apply(prolong(v, ode.order()), ode.delta()), ode);
}

inline bool is_symmetry(const PointVectorField& v, const OdeSpec& ode) { return symmetry_residual(v, ode).is_zero(); }

/// Thrown when a computed symmetry fails re-validation.
class InternalInconsistency : public std::logic_error {
public:
    explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

/// xi and eta range over polynomials in x, y of total degree <= degree.
class AnsatzSpace {
public:
    struct Unknown {
        int component;  // 0: xi, 1: eta
        Monomial monomial;

        [[nodiscard]] std::string name() const {
            return std::string(component == 0 ? "xi" : "eta") + "[" + monomial.str() + "]";
        }
    };

    explicit AnsatzSpace(int degree) : degree_(degree) {
        if (degree < 0) throw std::invalid_argument("ansatz degree must be non-negative");
        for (int component = 0; component < 2; ++component)
            for (int d = 0; d <= degree; ++d)
                for (int ey = 0; ey <= d; ++ey)
                    unknowns_.push_back({component, Monomial{{Var::x(), static_cast<std::uint32_t>(d - ey)},
                                                             {Var::y(), static_cast<std::uint32_t>(ey)}}});
    }

    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] const std::vector<Unknown>& unknowns() const { return unknowns_; }

    /// The field with unknown i set to 1 and the rest 0.
    [[nodiscard]] PointVectorField unit_field(std::size_t i) const {
        const Unknown& u = unknowns_.at(i);
        JetExpr m{Polynomial(u.monomial)};
        return u.component == 0 ? PointVectorField(m, 0) : PointVectorField(0, m);
    }

    /// sum_i c_i * unit_field(i)
    template <class Scalar>
    [[nodiscard]] PointVectorField field(const std::vector<Scalar>& c) const {
        Polynomial xi;
        Polynomial eta;
        for (std::size_t i = 0; i < unknowns_.size(); ++i) {
            Rational ci(c.at(i));
            if (ci.is_zero()) continue;
            (unknowns_[i].component == 0 ? xi : eta) += Polynomial(unknowns_[i].monomial, ci);
        }
        return {JetExpr(xi), JetExpr(eta)};
    }

private:
    int degree_;
    std::vector<Unknown> unknowns_;
};

/// Homogeneous linear system on the ansatz unknowns: one row per jet monomial.
struct DeterminingSystem {
    OdeSpec ode;
    AnsatzSpace ansatz;
    Matrix equations;
    std::vector<Monomial> row_monomials;
    Polynomial multiplier;  // the cleared denominator
};

/// Applies the prolonged generic ansatz field to Delta, reduces on the
/// manifold, clears the denominator and collects coefficients of jet monomials.
inline DeterminingSystem determining_system(const OdeSpec& ode, const AnsatzSpace& ansatz) {
    const std::size_t n = ansatz.unknowns().size();
    const JetExpr delta = ode.delta();

    // The prolongation is linear in (xi, eta), so the residual of the generic
    // field is the combination of the residuals of the unit fields.
    std::vector<JetExpr> residuals;
    residuals.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        residuals.push_back(reduce_on_manifold(apply(prolong(ansatz.unit_field(i), ode.order()), delta), ode));

    bool all_monomial = std::all_of(residuals.begin(), residuals.end(),
                                    [](const JetExpr& r) { return r.denominator().is_monomial(); });
    Polynomial multiplier = 1;
    if (all_monomial) {
        Monomial l;
        for (const auto& r : residuals) l = lcm(l, r.denominator().leading_monomial());
        multiplier = Polynomial(l);
    } else {
        std::vector<Polynomial> seen;
        for (const auto& r : residuals) {
            if (std::find(seen.begin(), seen.end(), r.denominator()) != seen.end()) continue;
            seen.push_back(r.denominator());
            multiplier = multiplier * r.denominator();
        }
    }

    std::map<Monomial, std::vector<Rational>, DescendingGrlex> rows;
    for (std::size_t i = 0; i < n; ++i) {
        const JetExpr& r = residuals[i];
        if (r.is_zero()) continue;
        Polynomial cleared;
        if (all_monomial) {
            cleared = r.numerator().times_monomial(r.denominator().leading_monomial().quotient_of(multiplier.leading_monomial()));
        } else {
            auto q = multiplier.exact_divide(r.denominator());
            if (!q) throw InternalInconsistency("denominator does not divide the common multiplier");
            cleared = r.numerator() * *q;
        }
        for (const auto& [m, c] : cleared.terms()) {
            auto& row = rows[m];
            if (row.empty()) row.resize(n);
            row[i] = c;
        }
    }

    DeterminingSystem sys{ode, ansatz, Matrix(0, n), {}, multiplier};
    for (const auto& [m, row] : rows) {
        sys.equations.append_row(row);
        sys.row_monomials.push_back(m);
    }
    return sys;
}

enum class AlgebraTag { SL2R, SL2R_PLUS_R2, SL2R_PLUS_SL2R, OTHER };

inline std::string to_string(AlgebraTag t) {
    switch (t) {
        case AlgebraTag::SL2R: return "SL2R";
        case AlgebraTag::SL2R_PLUS_R2: return "SL2R_PLUS_R2";
        case AlgebraTag::SL2R_PLUS_SL2R: return "SL2R_PLUS_SL2R";
        case AlgebraTag::OTHER: return "OTHER";
    }
    return "OTHER";
}

struct SymmetryReport {
    std::string ode_id;
    int order = 0;
    int degree = 0;
    std::vector<PointVectorField> basis;
    std::optional<StructureConstants> brackets;  // empty when the span is not closed under brackets
    AlgebraTag classification = AlgebraTag::OTHER;

    [[nodiscard]] std::size_t dimension() const { return basis.size(); }

    [[nodiscard]] std::string scope() const {
        return "exact within ansatz degree " + std::to_string(degree) +
               " (xi, eta polynomial in x, y of total degree <= " + std::to_string(degree) + ")";
    }

    [[nodiscard]] nlohmann::json to_json() const {
        using nlohmann::json;
        json fields = json::array();
        for (const auto& f : basis) fields.push_back({{"xi", f.xi().str()}, {"eta", f.eta().str()}});
        json table = nullptr;
        if (brackets) {
            table = json::array();
            for (std::size_t i = 0; i < brackets->dimension(); ++i) {
                json row = json::array();
                for (std::size_t j = 0; j < brackets->dimension(); ++j) {
                    json c = json::array();
                    for (const auto& v : brackets->bracket(i, j)) c.push_back(v.str());
                    row.push_back(c);
                }
                table.push_back(row);
            }
        }
        return {{"ode", ode_id},   {"k", order},       {"degree", degree},
                {"dimension", dimension()}, {"basis", fields}, {"brackets", table},
                {"classification", to_string(classification)}, {"scope", scope()}};
    }
};

namespace detail {

inline StructureConstants table_from(std::size_t n, const std::vector<std::tuple<int, int, Rational, int>>& relations) {
    // Each relation [e_i, e_j] = c e_k.
    StructureConstants t(n);
    for (const auto& [i, j, c, k] : relations) {
        t.bracket(static_cast<std::size_t>(i), static_cast<std::size_t>(j))[static_cast<std::size_t>(k)] += c;
        t.bracket(static_cast<std::size_t>(j), static_cast<std::size_t>(i))[static_cast<std::size_t>(k)] -= c;
    }
    return t;
}

// sl(2) relations on (e0, e1, e2) = (x d/dx, d/dx, x^2 d/dx) shifted by `base`.
inline void add_sl2(std::vector<std::tuple<int, int, Rational, int>>& rel, int base) {
    rel.emplace_back(base + 1, base + 2, Rational(2), base + 0);
    rel.emplace_back(base + 0, base + 1, Rational(-1), base + 1);
    rel.emplace_back(base + 0, base + 2, Rational(1), base + 2);
}

inline bool matches_up_to_permutation(const StructureConstants& actual, const StructureConstants& expected) {
    const std::size_t n = actual.dimension();
    if (expected.dimension() != n) return false;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j)
                for (std::size_t k = 0; k < n && ok; ++k)
                    ok = actual.bracket(i, j)[k] == expected.bracket(p[i], p[j])[p[k]];
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

}  // namespace detail

/// Bracket tables of the three algebras in the standard realization order.
inline StructureConstants sl2_table() {
    std::vector<std::tuple<int, int, Rational, int>> rel;
    detail::add_sl2(rel, 0);
    return detail::table_from(3, rel);
}

inline StructureConstants sl2_plus_r2_table() {
    std::vector<std::tuple<int, int, Rational, int>> rel;
    detail::add_sl2(rel, 0);
    rel.emplace_back(3, 4, Rational(1), 3);  // [d/dy, y d/dy] = d/dy
    return detail::table_from(5, rel);
}

inline StructureConstants sl2_plus_sl2_table() {
    std::vector<std::tuple<int, int, Rational, int>> rel;
    detail::add_sl2(rel, 0);
    detail::add_sl2(rel, 3);
    return detail::table_from(6, rel);
}

/// Canonical basis of the span of polynomial fields: reduced row echelon form
/// over coordinates ordered xi before eta, then by (degree in x, degree in y).
inline std::vector<PointVectorField> normalize_basis(const std::vector<PointVectorField>& fields) {
    std::vector<detail::FieldCoordinates> coords;
    std::vector<std::pair<int, Monomial>> keys;
    for (const auto& f : fields) {
        coords.push_back(detail::coordinates(f));
        for (const auto& [k, c] : coords.back())
            if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
    }
    std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        auto da = std::make_pair(a.second.exponent(Var::x()), a.second.exponent(Var::y()));
        auto db = std::make_pair(b.second.exponent(Var::x()), b.second.exponent(Var::y()));
        if (da != db) return da < db;
        return grlex_compare(a.second, b.second) > 0;
    });
    Matrix m(fields.size(), keys.size());
    for (std::size_t i = 0; i < fields.size(); ++i)
        for (std::size_t j = 0; j < keys.size(); ++j) {
            auto it = coords[i].find(keys[j]);
            if (it != coords[i].end()) m(i, j) = it->second;
        }
    auto e = rref(std::move(m));
    std::vector<PointVectorField> out;
    for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) {
        Polynomial parts[2];
        for (std::size_t j = 0; j < keys.size(); ++j)
            if (!e.reduced(r, j).is_zero()) parts[keys[j].first] += Polynomial(keys[j].second, e.reduced(r, j));
        out.emplace_back(JetExpr(parts[0]), JetExpr(parts[1]));
    }
    return out;
}

/// Matches the bracket table of the normalized basis against the expected tables.
inline AlgebraTag classify_algebra(const SymmetryReport& report) {
    if (!report.brackets || report.basis.empty()) return AlgebraTag::OTHER;
    std::vector<PointVectorField> basis = normalize_basis(report.basis);
    StructureConstants table = [&] {
        try {
            return bracket_table(basis);
        } catch (const NotClosed&) {
            return StructureConstants(0);
        }
    }();
    switch (table.dimension()) {
        case 3:
            if (detail::matches_up_to_permutation(table, sl2_table())) return AlgebraTag::SL2R;
            break;
        case 5:
            if (detail::matches_up_to_permutation(table, sl2_plus_r2_table())) return AlgebraTag::SL2R_PLUS_R2;
            break;
        case 6:
            if (detail::matches_up_to_permutation(table, sl2_plus_sl2_table())) return AlgebraTag::SL2R_PLUS_SL2R;
            break;
        default: break;
    }
    return AlgebraTag::OTHER;
}

/// Nullspace of the determining system as a report: integer-primitive basis
/// fields, each re-validated, with their bracket table and classification.
inline SymmetryReport solve_determining(const DeterminingSystem& system) {
    SymmetryReport report;
    report.ode_id = system.ode.id();
    report.order = system.ode.order();
    report.degree = system.ansatz.degree();
    for (const auto& v : nullspace(system.equations)) {
        PointVectorField f = system.ansatz.field(v);
        if (!is_symmetry(f, system.ode))
            throw InternalInconsistency("nullspace vector " + f.str() + " is not a symmetry of " + system.ode.id());
        report.basis.push_back(std::move(f));
    }
    if (!report.basis.empty()) {
        try {
            report.brackets = bracket_table(report.basis);
        } catch (const NotClosed&) {
            report.brackets.reset();
        }
    } else {
        report.brackets = StructureConstants(0);
    }
    report.classification = classify_algebra(report);
    return report;
}

/// determining_system followed by solve_determining.
inline SymmetryReport compute_symmetries(const OdeSpec& ode, int degree) {
    return solve_determining(determining_system(ode, AnsatzSpace(degree)));
}

}  // namespace liesym
