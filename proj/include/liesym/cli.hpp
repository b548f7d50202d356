#pragma once

// Command-line front end. `run` is the whole program minus process setup, so
// tests can drive it in-process.
//
// Exit codes: 0 success / symmetry holds, 1 verified not a symmetry (or a
// failed self-test), 2 usage or input error, 3 internal error.

#include "liesym/equation_factory.hpp"
#include "liesym/parser.hpp"
#include "liesym/symmetry.hpp"

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace liesym::cli {

enum ExitCode : int { kOk = 0, kFalse = 1, kUsage = 2, kInternal = 3 };

/// Name of the environment variable holding the default output format.
inline constexpr const char* kFormatEnv = "LIESYM_FORMAT";

class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct RunConfig {
    std::string command;
    std::string family;
    int k = 0;
    int degree = 2;
    std::string format = "ascii";
    std::string source = "recursion";
    std::string equation;
    std::string file;
    std::string field;
    std::string phi;
    std::string output;
};

namespace detail {

inline std::string latex_coefficients(const CoefficientVector& cv) {
    std::string lhs;
    std::string rhs;
    for (std::size_t i = 0; i < cv.values.size(); ++i) {
        lhs += (i ? ", " : "") + std::string("a_{") + std::to_string(i + 1) + "}";
        rhs += (i ? ", " : "") + Expr::number(cv.values[i]).latex();
    }
    return "\\left(" + lhs + "\\right) = \\left(" + rhs + "\\right)";
}

inline CoefficientVector coefficients(int k, const std::string& source) {
    return source == "closed_form" ? closed_form(k) : solve_recursion(k);
}

inline void require_k(const RunConfig& cfg) {
    if (cfg.k < 4) throw UsageError("k must be >= 4 for " + cfg.family + " (got " + std::to_string(cfg.k) + ")");
}

inline OdeSpec family_ode(const RunConfig& cfg) {
    if (cfg.family == "eq9") {
        if (cfg.k != 0 && cfg.k != 3) throw UsageError("eq9 has fixed order 3 (got --k " + std::to_string(cfg.k) + ")");
        return build_eq9();
    }
    if (cfg.family == "eq3" || cfg.family == "eq10" || cfg.family == "eq11") {
        require_k(cfg);
        CoefficientVector c = coefficients(cfg.k, cfg.source);
        if (cfg.family == "eq3") return build_eq3(cfg.k, c);
        if (cfg.family == "eq10") return build_eq10(cfg.k, c);
        if (cfg.phi.empty()) throw UsageError("eq11 needs --phi");
        Expr shape = parse_expression(cfg.phi);
        return build_eq11(cfg.k, c, PhiTerm(shape.evaluate(), shape));
    }
    throw UsageError("unknown family '" + cfg.family + "' (expected eq3, eq9, eq10 or eq11)");
}

inline OdeSpec equation_from_text(const std::string& text, const std::string& id) {
    std::string trimmed = text;
    auto first = trimmed.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && trimmed[first] == '{') {
        auto j = nlohmann::json::parse(trimmed);
        std::string eq = j.at("equation").get<std::string>();
        return ode_from_equation(parse_equation(eq), j.value("id", id));
    }
    while (!trimmed.empty() && (trimmed.back() == '\n' || trimmed.back() == '\r')) trimmed.pop_back();
    return ode_from_equation(parse_equation(trimmed), id);
}

inline OdeSpec resolve_ode(const RunConfig& cfg) {
    int sources = !cfg.family.empty() + !cfg.equation.empty() + !cfg.file.empty();
    if (sources != 1) throw UsageError("give exactly one of --family, --equation, --file");
    if (!cfg.family.empty()) return family_ode(cfg);
    if (!cfg.equation.empty()) return equation_from_text(cfg.equation, "equation");
    std::ifstream in(cfg.file);
    if (!in) throw UsageError("cannot read " + cfg.file);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return equation_from_text(text, cfg.file);
}

inline PointVectorField resolve_field(const std::string& spec) {
    if (auto b = fields::builtin(spec)) return *b;
    FieldText ft = parse_field_text(spec);
    return {ft.xi.evaluate(), ft.eta.evaluate(), spec};
}

inline std::string linear_combination(const std::vector<Rational>& c) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        std::string v = "V" + std::to_string(i + 1);
        Rational mag = c[i].abs();
        if (out.empty()) {
            out += c[i].sign() < 0 ? "-" : "";
        } else {
            out += c[i].sign() < 0 ? " - " : " + ";
        }
        out += mag.is_one() ? v : mag.str() + "*" + v;
    }
    return out.empty() ? "0" : out;
}

inline int gen_coeffs(const RunConfig& cfg, std::ostream& out) {
    if (cfg.k < 4) throw UsageError("gen-coeffs needs k >= 4 (got " + std::to_string(cfg.k) + ")");
    if (cfg.source != "both") {
        CoefficientVector cv = coefficients(cfg.k, cfg.source);
        if (cfg.format == "json") out << cv.to_json().dump() << "\n";
        else if (cfg.format == "latex") out << latex_coefficients(cv) << "\n";
        else out << cv.str() << "\n";
        return kOk;
    }
    CoefficientVector rec = solve_recursion(cfg.k);
    CoefficientVector closed = closed_form(cfg.k);
    bool agree = magnitudes_agree(rec, closed);
    auto ratio = common_ratio(closed, rec);
    if (cfg.format == "json") {
        nlohmann::json j{{"recursion", rec.to_json()}, {"closed_form", closed.to_json()}, {"magnitudes_agree", agree}};
        j["ratio"] = ratio ? nlohmann::json(ratio->str()) : nlohmann::json(nullptr);
        out << j.dump() << "\n";
        return kOk;
    }
    if (cfg.format == "latex") {
        out << latex_coefficients(rec) << "\n" << latex_coefficients(closed) << "\n";
    } else {
        out << "recursion:   " << rec.str() << "\n";
        out << "closed_form: " << closed.str() << "\n";
    }
    out << "magnitudes agree: " << (agree ? "yes" : "no") << "\n";
    out << "sign relation: " << (ratio ? "closed_form = " + ratio->str() + " * recursion" : "no common ratio") << "\n";
    return kOk;
}

inline int gen_eq(const RunConfig& cfg, std::ostream& out) {
    OdeSpec ode = family_ode(cfg);
    Equation eq = ode.equation();
    if (cfg.format == "json") {
        nlohmann::json j{{"id", ode.id()},           {"family", cfg.family},      {"k", ode.order()},
                         {"ascii", eq.ascii()},      {"latex", eq.latex()},       {"lhs", eq.lhs.to_json()},
                         {"rhs", eq.rhs.to_json()},  {"solved_rhs", ode.rhs().str()}};
        out << j.dump() << "\n";
    } else if (cfg.format == "latex") {
        out << eq.latex() << "\n";
    } else {
        out << eq.ascii() << "\n";
    }
    return kOk;
}

inline int verify(const RunConfig& cfg, std::ostream& out) {
    if (cfg.field.empty()) throw UsageError("verify needs --field");
    OdeSpec ode = resolve_ode(cfg);
    PointVectorField v = resolve_field(cfg.field);
    JetExpr residual = symmetry_residual(v, ode);
    bool ok = residual.is_zero();
    if (cfg.format == "json") {
        nlohmann::json j{{"equation", ode.id()},
                         {"field", {{"xi", v.xi().str()}, {"eta", v.eta().str()}}},
                         {"symmetry", ok},
                         {"residual", residual.str()}};
        out << j.dump() << "\n";
    } else {
        out << (ok ? "SYMMETRY" : "NOT A SYMMETRY") << "\n";
        out << "equation: " << ode.id() << "\n";
        out << "field: " << v.str() << "\n";
        if (!ok) out << "residual: " << residual.str() << "\n";
    }
    return ok ? kOk : kFalse;
}

inline int solve(const RunConfig& cfg, std::ostream& out) {
    if (cfg.degree < 1) throw UsageError("ansatz degree must be >= 1");
    OdeSpec ode = resolve_ode(cfg);
    SymmetryReport report = compute_symmetries(ode, cfg.degree);
    if (cfg.format == "json") {
        out << report.to_json().dump() << "\n";
        return kOk;
    }
    out << "equation: " << ode.id() << "\n";
    out << "ansatz degree: " << report.degree << "\n";
    out << "dimension: " << report.dimension() << "\n";
    out << "scope: " << report.scope() << "\n";
    out << "basis:\n";
    for (std::size_t i = 0; i < report.basis.size(); ++i)
        out << "  V" << i + 1 << ": " << report.basis[i].str() << "\n";
    if (report.brackets) {
        out << "brackets:\n";
        bool any = false;
        for (std::size_t i = 0; i < report.dimension(); ++i)
            for (std::size_t j = i + 1; j < report.dimension(); ++j) {
                const auto& c = report.brackets->bracket(i, j);
                bool zero = std::all_of(c.begin(), c.end(), [](const Rational& r) { return r.is_zero(); });
                if (zero) continue;
                any = true;
                out << "  [V" << i + 1 << ", V" << j + 1 << "] = " << linear_combination(c) << "\n";
            }
        if (!any) out << "  all zero\n";
    } else {
        out << "brackets: not closed within the ansatz\n";
    }
    out << "classification: " << to_string(report.classification) << "\n";
    return kOk;
}

}  // namespace detail

/// Runs one invocation. `args` excludes the program name. `selftest` is
/// injected so the acceptance suite can live outside this header.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               const std::function<int(std::ostream&)>& selftest = {}) {
    RunConfig cfg;
    if (const char* env = std::getenv(kFormatEnv); env != nullptr && *env != '\0') cfg.format = env;

    CLI::App app{"Generate sl(2)-invariant ODE families and verify their point symmetries", "liesym"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"ascii", "latex", "json"};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format (default from " + std::string(kFormatEnv) + ")")
            ->check(CLI::IsMember(formats));
        sub->add_option("--output,-o", cfg.output, "Write the report to a file instead of standard output");
    };
    auto add_equation = [&](CLI::App* sub) {
        sub->add_option("--family", cfg.family, "Built-in family: eq3, eq9, eq10, eq11");
        sub->add_option("--k", cfg.k, "Order of the equation");
        sub->add_option("--source", cfg.source, "Coefficient source")->check(CLI::IsMember({"recursion", "closed_form"}));
        sub->add_option("--phi", cfg.phi, "Extra right-hand-side term for eq11");
        sub->add_option("--equation", cfg.equation, "Equation text, e.g. \"y''' = 3*y''^2/(2*y')\"");
        sub->add_option("--file", cfg.file, "File holding an equation (text or JSON)");
    };

    auto* coeffs = app.add_subcommand("gen-coeffs", "Print the coefficient vector for order k");
    coeffs->add_option("--k", cfg.k, "Order k >= 4")->required();
    coeffs->add_option("--source", cfg.source, "recursion, closed_form or both")
        ->check(CLI::IsMember({"recursion", "closed_form", "both"}));
    add_common(coeffs);

    auto* geneq = app.add_subcommand("gen-eq", "Render one of the equation families");
    geneq->add_option("family", cfg.family, "eq3, eq9, eq10 or eq11")->required();
    geneq->add_option("--k", cfg.k, "Order (not used by eq9)");
    geneq->add_option("--source", cfg.source, "Coefficient source")->check(CLI::IsMember({"recursion", "closed_form"}));
    geneq->add_option("--phi", cfg.phi, "Extra right-hand-side term for eq11");
    add_common(geneq);

    auto* ver = app.add_subcommand("verify", "Check whether a point field is a symmetry");
    add_equation(ver);
    ver->add_option("--field", cfg.field, "X1..X6 or \"xi=<expr>; eta=<expr>\"");
    add_common(ver);

    auto* sol = app.add_subcommand("solve", "Compute the symmetry algebra within a polynomial ansatz");
    add_equation(sol);
    sol->add_option("--degree", cfg.degree, "Total degree bound for xi and eta");
    add_common(sol);

    auto* self = app.add_subcommand("selftest", "Run the acceptance suite");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    if (std::find(formats.begin(), formats.end(), cfg.format) == formats.end()) {
        err << "error: unknown output format '" << cfg.format << "' (from " << kFormatEnv << ")\n";
        return kUsage;
    }

    std::ostringstream buffer;
    int code = kOk;
    try {
        if (coeffs->parsed()) {
            code = detail::gen_coeffs(cfg, buffer);
        } else if (geneq->parsed()) {
            code = detail::gen_eq(cfg, buffer);
        } else if (ver->parsed()) {
            code = detail::verify(cfg, buffer);
        } else if (sol->parsed()) {
            code = detail::solve(cfg, buffer);
        } else if (self->parsed()) {
            if (!selftest) {
                err << "error: self-test is not available in this build\n";
                return kInternal;
            }
            code = selftest(buffer);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InternalInconsistency& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DivisionByZero& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }

    if (!cfg.output.empty()) {
        std::ofstream file(cfg.output);
        if (!file) {
            err << "error: cannot write " << cfg.output << "\n";
            return kUsage;
        }
        file << buffer.str();
    } else {
        out << buffer.str();
    }
    return code;
}

}  // namespace liesym::cli
