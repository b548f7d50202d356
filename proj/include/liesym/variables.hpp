#pragma once

// Interned jet variables.
//
// The registry is fixed: identifier 0 is the independent variable x and
// identifier j+1 is the j-th derivative y^(j). Identifier order is the
// variable order used by the monomial ordering (x > y > y' > y'' > ...).

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace liesym {

class Var {
public:
    constexpr Var() = default;

    static constexpr Var x() { return Var(0); }
    static constexpr Var y(unsigned order = 0) { return Var(static_cast<std::uint16_t>(order + 1)); }
    static constexpr Var from_id(std::uint16_t id) { return Var(id); }

    [[nodiscard]] constexpr std::uint16_t id() const { return id_; }
    [[nodiscard]] constexpr bool is_x() const { return id_ == 0; }
    [[nodiscard]] constexpr bool is_y_family() const { return id_ > 0; }
    /// Derivative order of a y-family variable; -1 for x.
    [[nodiscard]] constexpr int order() const { return static_cast<int>(id_) - 1; }

    /// `x`, `y`, `y'`, `y''`, `y'''`, then `y^(j)`.
    [[nodiscard]] std::string name() const {
        if (is_x()) return "x";
        int j = order();
        if (j <= 3) return "y" + std::string(static_cast<std::size_t>(j), '\'');
        return "y^(" + std::to_string(j) + ")";
    }

    /// LaTeX spelling; primes up to order 3, then y^{(j)}.
    [[nodiscard]] std::string latex() const {
        if (is_x() || order() <= 3) return name();
        return "y^{(" + std::to_string(order()) + ")}";
    }

    friend constexpr auto operator<=>(Var, Var) = default;

private:
    constexpr explicit Var(std::uint16_t id) : id_(id) {}
    std::uint16_t id_ = 0;
};

/// Resolves a textual variable name: x, y, y', y'', ..., y^(j), or the yj shorthand.
inline std::optional<Var> parse_var_name(std::string_view s) {
    if (s == "x") return Var::x();
    if (s.empty() || s.front() != 'y') return std::nullopt;
    s.remove_prefix(1);
    if (s.empty()) return Var::y(0);
    if (s.find_first_not_of('\'') == std::string_view::npos) return Var::y(static_cast<unsigned>(s.size()));
    auto digits = [](std::string_view d) -> std::optional<unsigned> {
        if (d.empty() || d.size() > 4 || d.find_first_not_of("0123456789") != std::string_view::npos)
            return std::nullopt;
        return static_cast<unsigned>(std::stoul(std::string(d)));
    };
    if (s.size() > 3 && s.substr(0, 2) == "^(" && s.back() == ')') {
        if (auto j = digits(s.substr(2, s.size() - 3))) return Var::y(*j);
        return std::nullopt;
    }
    if (auto j = digits(s)) return Var::y(*j);
    return std::nullopt;
}

}  // namespace liesym
