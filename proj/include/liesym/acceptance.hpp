#pragma once

// Acceptance criteria, runnable from the test suite and from `liesym selftest`.
// Every check is exact; there are no tolerances.

#include "liesym/cli.hpp"
#include "liesym/equation_factory.hpp"
#include "liesym/parser.hpp"
#include "liesym/symmetry.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace liesym::acceptance {

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    std::string detail;
};

/// One recorded CLI invocation.
struct GoldenCase {
    std::vector<std::string> args;
    int exit_code;
    std::string out;
    std::string err_contains;
};

using CliRunner = std::function<int(const std::vector<std::string>&, std::ostream&, std::ostream&)>;

/// Reads `[{"args": [...], "exit": n, "stdout": "...", "stderr_contains": "..."}, ...]`.
inline std::vector<GoldenCase> parse_golden(const std::string& json_text) {
    std::vector<GoldenCase> out;
    for (const auto& c : nlohmann::json::parse(json_text))
        out.push_back({c.at("args").get<std::vector<std::string>>(), c.at("exit").get<int>(),
                       c.value("stdout", std::string{}), c.value("stderr_contains", std::string{})});
    return out;
}

namespace detail {

class Checker {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok && failures_.size() < 5) failures_.push_back(what);
        if (!ok) ++failed_;
        ++checks_;
    }
    [[nodiscard]] bool ok() const { return failed_ == 0; }
    [[nodiscard]] std::string summary(const std::string& extra = {}) const {
        std::string s = std::to_string(checks_ - failed_) + "/" + std::to_string(checks_) + " checks";
        if (!extra.empty()) s += "; " + extra;
        for (const auto& f : failures_) s += "; FAILED: " + f;
        return s;
    }

private:
    int checks_ = 0;
    int failed_ = 0;
    std::vector<std::string> failures_;
};

inline std::string ks(int k) { return "k=" + std::to_string(k); }

inline std::vector<PointVectorField> sl2_plus_r2_fields() {
    return {fields::X2(), fields::X1(), fields::X3(), fields::X4(), fields::X5()};
}

}  // namespace detail

/// Random rational functions and evaluation points for the kernel properties.
class RandomExprs {
public:
    explicit RandomExprs(std::uint64_t seed) : rng_(seed) {}

    Rational scalar(int range = 5) {
        std::uniform_int_distribution<int> num(-range, range);
        std::uniform_int_distribution<int> den(1, 3);
        return {num(rng_), den(rng_)};
    }

    Polynomial polynomial(int max_terms = 3, unsigned max_exp = 2) {
        static const Var vars[] = {Var::x(), Var::y(0), Var::y(1), Var::y(2)};
        std::uniform_int_distribution<int> terms(1, max_terms);
        std::uniform_int_distribution<unsigned> exp(0, max_exp);
        Polynomial p;
        int n = terms(rng_);
        for (int t = 0; t < n; ++t) {
            Monomial m;
            for (Var v : vars) m = m * Monomial(v, exp(rng_) * (coin() ? 1U : 0U));
            p += Polynomial(m, scalar());
        }
        return p;
    }

    RationalFunction rational_function() {
        Polynomial den;
        while (den.is_zero()) den = coin() ? Polynomial(scalar() + Rational(7)) : polynomial(2, 1);
        return {polynomial(), den};
    }

    /// Values for x and y..y^(7).
    std::map<Var, Rational> point() {
        std::map<Var, Rational> p;
        std::uniform_int_distribution<int> num(-20, 20);
        std::uniform_int_distribution<int> den(1, 7);
        p[Var::x()] = Rational(num(rng_), den(rng_));
        for (unsigned j = 0; j <= 7; ++j) p[Var::y(j)] = Rational(num(rng_), den(rng_));
        return p;
    }

    bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }

private:
    std::mt19937_64 rng_;
};

inline std::optional<Rational> evaluate_at(const RationalFunction& e, const std::map<Var, Rational>& point) {
    return e.evaluate([&](Var v) { return point.at(v); });
}

inline CriterionResult criterion_invariance() {
    detail::Checker c;
    auto start = std::chrono::steady_clock::now();
    for (int k = 4; k <= 10; ++k) {
        OdeSpec ode = build_eq3(k, solve_recursion(k));
        for (const auto& f : {fields::X1(), fields::X2(), fields::X3()})
            c.expect(symmetry_residual(f, ode).is_zero(), f.label() + " at " + detail::ks(k));
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(secs < 10.0, "runtime under 10 s");
    std::ostringstream t;
    t.precision(3);
    t << secs << " s";
    return {1, "eq3 with recursion coefficients is invariant under X1, X2, X3 for k=4..10", c.ok(), c.summary(t.str())};
}

inline CriterionResult criterion_coefficients() {
    detail::Checker c;
    std::string relation;
    for (int k = 4; k <= 12; ++k) {
        CoefficientVector rec = solve_recursion(k);
        CoefficientVector closed = closed_form(k);
        c.expect(rec.values.size() == static_cast<std::size_t>(k - 2), "length at " + detail::ks(k));
        c.expect(satisfies_linear_system(rec), "linear system at " + detail::ks(k));
        c.expect(magnitudes_agree(rec, closed), "magnitudes at " + detail::ks(k));
        auto r = common_ratio(closed, rec);
        relation += (relation.empty() ? "" : ",") + (r ? r->str() : std::string("none"));
    }
    c.expect(solve_recursion(4).values == std::vector<Rational>{6, -6}, "anchor k=4");
    c.expect(solve_recursion(5).values == std::vector<Rational>{10, -30, Rational(45, 2)}, "anchor k=5");
    return {2, "recursion solves its linear system and matches the closed form in magnitude for k=4..12", c.ok(),
            c.summary("closed_form/recursion ratio for k=4..12: " + relation)};
}

inline CriterionResult criterion_five_symmetries() {
    detail::Checker c;
    for (int k = 4; k <= 7; ++k) {
        SymmetryReport r = compute_symmetries(build_eq3(k), 2);
        c.expect(r.dimension() == 5, "dimension 5 at " + detail::ks(k));
        c.expect(same_span(r.basis, detail::sl2_plus_r2_fields()), "span at " + detail::ks(k));
        c.expect(r.classification == AlgebraTag::SL2R_PLUS_R2, "tag at " + detail::ks(k));
    }
    for (int k = 4; k <= 5; ++k)
        for (int d = 3; d <= 4; ++d)
            c.expect(compute_symmetries(build_eq3(k), d).dimension() == 5,
                     "dimension at " + detail::ks(k) + " degree " + std::to_string(d));
    return {3, "eq3 has exactly the 5-dimensional algebra sl2+r2 (k=4..7, stable at degrees 3, 4)", c.ok(), c.summary()};
}

inline CriterionResult criterion_six_symmetries() {
    detail::Checker c;
    SymmetryReport r = compute_symmetries(build_eq9(), 2);
    c.expect(r.dimension() == 6, "dimension 6");
    c.expect(r.classification == AlgebraTag::SL2R_PLUS_SL2R, "tag");
    std::vector<PointVectorField> two_copies{fields::X1(), fields::X2(), fields::X3(),
                                             fields::X5(), fields::X4(), fields::X6()};
    c.expect(same_span(r.basis, two_copies), "span");
    c.expect(bracket_table(two_copies) == sl2_plus_sl2_table(), "two commuting sl2 tables");
    return {4, "third-order Schwarzian equation has the 6-dimensional algebra sl2+sl2", c.ok(), c.summary()};
}

inline CriterionResult criterion_exact_sl2() {
    detail::Checker c;
    for (int k = 4; k <= 7; ++k) {
        OdeSpec eq10 = build_eq10(k);
        OdeSpec eq3 = build_eq3(k);
        SymmetryReport r = compute_symmetries(eq10, 2);
        c.expect(r.dimension() == 3, "dimension 3 at " + detail::ks(k));
        c.expect(r.classification == AlgebraTag::SL2R, "tag at " + detail::ks(k));
        c.expect(same_span(r.basis, {fields::X1(), fields::X2(), fields::X3()}), "span at " + detail::ks(k));
        c.expect(!is_symmetry(fields::X4(), eq10), "X4 rejected at " + detail::ks(k));
        c.expect(!is_symmetry(fields::X5(), eq10), "X5 rejected at " + detail::ks(k));
        for (const auto& f : r.basis) c.expect(is_symmetry(f, eq3), "subset at " + detail::ks(k));
    }
    return {5, "eq10 has exactly sl2; X4, X5 fail; its symmetries are symmetries of eq3 (k=4..7)", c.ok(), c.summary()};
}

inline CriterionResult criterion_structure_constants() {
    detail::Checker c;
    using namespace fields;
    c.expect(bracket_table({X1(), X2(), X3()}) == sl2_table(), "sl2 table");
    c.expect(commutator(X2(), X3()) == Rational(2) * X1(), "[X2,X3] = 2 X1");
    c.expect(commutator(X1(), X2()) == Rational(-1) * X2(), "[X1,X2] = -X2");
    c.expect(commutator(X1(), X3()) == X3(), "[X1,X3] = X3");
    std::vector<PointVectorField> all{X1(), X2(), X3(), X4(), X5(), X6()};
    for (const auto& u : all)
        for (const auto& v : all)
            for (const auto& w : all) {
                PointVectorField j = commutator(commutator(u, v), w) + commutator(commutator(v, w), u) +
                                     commutator(commutator(w, u), v);
                c.expect(j.is_zero(), "Jacobi on " + u.label() + "," + v.label() + "," + w.label());
            }
    return {6, "sl2 structure constants of X1, X2, X3 and Jacobi on X1..X6", c.ok(), c.summary()};
}

inline CriterionResult criterion_prolongation() {
    detail::Checker c;
    ProlongedField p = prolong(fields::X3(), 10);
    JetExpr x = JetExpr::variable(Var::x());
    for (int j = 1; j <= 10; ++j) {
        auto uj = static_cast<unsigned>(j);
        JetExpr expected = JetExpr(Rational(-j * (j - 1))) * JetExpr::variable(Var::y(uj - 1)) -
                           JetExpr(Rational(2 * j)) * x * JetExpr::variable(Var::y(uj));
        c.expect(p.eta(j) == expected, "X3 coefficient j=" + std::to_string(j));
    }
    c.expect(p.satisfies_recursion(), "X3 recursion invariant");
    ProlongedField t = prolong(fields::X2(), 10);
    for (const auto& e : t.eta_coeffs()) c.expect(e.is_zero(), "d/dx coefficient zero");
    return {7, "prolongation of x^2 d/dx matches its closed form for j=1..10; d/dx prolongs to zero", c.ok(),
            c.summary()};
}

inline CriterionResult criterion_kernel(int cases = 500) {
    detail::Checker c;
    RandomExprs gen(20240611);
    JetContext ctx(4);
    for (int i = 0; i < cases; ++i) {
        RationalFunction a = gen.rational_function();
        RationalFunction b = gen.rational_function();
        RationalFunction d = gen.rational_function();
        c.expect(((a + b) + d - (a + (b + d))).is_zero(), "additive associativity");
        c.expect(((a * b) * d - a * (b * d)).is_zero(), "multiplicative associativity");
        c.expect((a * (b + d) - (a * b + a * d)).is_zero(), "distributivity");
        c.expect((a + b - (b + a)).is_zero() && (a * b - b * a).is_zero(), "commutativity");
    }
    for (int i = 0; i < cases; ++i) {
        RationalFunction e = gen.rational_function();
        RationalFunction f = gen.rational_function();
        RationalFunction lhs = total_derivative(e * f, ctx);
        RationalFunction rhs = total_derivative(e, ctx) * f + e * total_derivative(f, ctx);
        c.expect((lhs - rhs).is_zero(), "Leibniz rule");
    }
    int zero_cases = 0;
    for (int i = 0; i < cases; ++i) {
        RationalFunction a = gen.rational_function();
        RationalFunction b = gen.rational_function();
        RationalFunction e = i % 2 == 0 ? pow(a + b, 2) - a * a - RationalFunction(2) * a * b - b * b
                                        : a * b + gen.rational_function();
        bool decided_zero = e.is_zero();
        zero_cases += decided_zero ? 1 : 0;
        int evaluated = 0;
        bool saw_nonzero = false;
        for (int attempt = 0; attempt < 50 && evaluated < 3; ++attempt) {
            auto v = evaluate_at(e, gen.point());
            if (!v) continue;
            ++evaluated;
            saw_nonzero = saw_nonzero || !v->is_zero();
        }
        c.expect(evaluated >= 3, "three admissible evaluation points");
        c.expect(decided_zero != saw_nonzero, "zero test agrees with evaluation");
    }
    return {8, "kernel ring axioms, Leibniz rule, zero test vs evaluation (" + std::to_string(cases) + " cases each)",
            c.ok(), c.summary(std::to_string(zero_cases) + " identically zero")};
}

inline bool round_trips(const Expr& e) {
    return parse_expression(e.ascii()).evaluate() == e.evaluate();
}

inline CriterionResult criterion_cli(const std::vector<GoldenCase>& golden, const CliRunner& run) {
    detail::Checker c;
    for (const auto& g : golden) {
        std::string label;
        for (const auto& a : g.args) label += (label.empty() ? "" : " ") + a;
        std::ostringstream out1;
        std::ostringstream err1;
        std::ostringstream out2;
        std::ostringstream err2;
        int code1 = run(g.args, out1, err1);
        int code2 = run(g.args, out2, err2);
        c.expect(code1 == g.exit_code, "exit code of '" + label + "' is " + std::to_string(code1));
        c.expect(out1.str() == g.out, "stdout of '" + label + "'");
        c.expect(err1.str().find(g.err_contains) != std::string::npos, "stderr of '" + label + "'");
        c.expect(code1 == code2 && out1.str() == out2.str() && err1.str() == err2.str(), "determinism of '" + label + "'");
    }

    std::vector<OdeSpec> odes{build_eq9()};
    for (int k = 4; k <= 10; ++k) {
        odes.push_back(build_eq3(k));
        odes.push_back(build_eq10(k));
        odes.push_back(build_eq11(k, solve_recursion(k), PhiTerm(JetExpr::variable(Var::y()))));
    }
    for (const auto& ode : odes) {
        Equation eq = ode.equation();
        c.expect(round_trips(eq.lhs) && round_trips(eq.rhs), "round trip of " + ode.id());
        Equation reparsed = parse_equation(eq.ascii());
        c.expect((reparsed.difference() - eq.difference()).is_zero(), "equation round trip of " + ode.id());
        c.expect(round_trips(to_expr(ode.rhs())), "canonical round trip of " + ode.id());
        c.expect(round_trips(to_expr(symmetry_residual(fields::X5(), ode))), "residual round trip of " + ode.id());
    }
    return {9, "CLI golden outputs, exit codes, determinism and parser round trip", c.ok(), c.summary()};
}

inline std::vector<CriterionResult> run_all(const std::vector<GoldenCase>& golden, const CliRunner& run) {
    return {criterion_invariance(),     criterion_coefficients(),        criterion_five_symmetries(),
            criterion_six_symmetries(), criterion_exact_sl2(),           criterion_structure_constants(),
            criterion_prolongation(),   criterion_kernel(),              criterion_cli(golden, run)};
}

/// One line per criterion; returns 0 iff all passed.
inline int report(const std::vector<CriterionResult>& results, std::ostream& out) {
    int failed = 0;
    for (const auto& r : results) {
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << " -- " << r.detail << "\n";
        failed += r.passed ? 0 : 1;
    }
    out << (failed == 0 ? "all " + std::to_string(results.size()) + " criteria passed"
                        : std::to_string(failed) + " of " + std::to_string(results.size()) + " criteria failed")
        << "\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace liesym::acceptance
