#pragma once

#include "liesym/liesym.hpp"

#include <map>
#include <random>

namespace liesym::testing {

inline RationalFunction E(std::string_view text) { return parse_expression(text).evaluate(); }

inline Var y(unsigned j) { return Var::y(j); }

/// Deterministic sample points for x and y..y^(max_order).
inline std::vector<std::map<Var, Rational>> sample_points(int count, unsigned max_order, std::uint64_t seed = 7) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-30, 30);
    std::uniform_int_distribution<int> den(1, 9);
    std::vector<std::map<Var, Rational>> pts;
    for (int i = 0; i < count; ++i) {
        std::map<Var, Rational> p;
        p[Var::x()] = Rational(num(rng), den(rng));
        for (unsigned j = 0; j <= max_order; ++j) p[Var::y(j)] = Rational(num(rng), den(rng));
        pts.push_back(p);
    }
    return pts;
}

inline std::optional<Rational> at(const RationalFunction& e, const std::map<Var, Rational>& p) {
    return e.evaluate([&](Var v) { return p.at(v); });
}

}  // namespace liesym::testing
