#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace liesym;
using liesym::testing::E;

namespace {

/// Coefficients forced by invariance under x^2 d/dx: the residual is affine
/// in the unknowns, so sampling it at enough points gives a linear system.
std::optional<std::vector<Rational>> coefficients_from_invariance(int k) {
    const std::size_t n = static_cast<std::size_t>(k - 2);
    auto residual_for = [&](const std::vector<Rational>& a) {
        return symmetry_residual(fields::X3(), build_eq3(k, CoefficientVector{k, a, CoefficientSource::Recursion}));
    };
    JetExpr base = residual_for(std::vector<Rational>(n));
    std::vector<JetExpr> parts;
    for (std::size_t q = 0; q < n; ++q) {
        std::vector<Rational> unit(n);
        unit[q] = 1;
        parts.push_back(residual_for(unit) - base);
    }
    Matrix m;
    std::vector<Rational> rhs;
    for (const auto& p : liesym::testing::sample_points(static_cast<int>(n) + 6, static_cast<unsigned>(k))) {
        std::vector<Rational> row;
        for (const auto& part : parts) row.push_back(*liesym::testing::at(part, p));
        m.append_row(row);
        rhs.push_back(-*liesym::testing::at(base, p));
    }
    return solve(m, rhs);
}

}  // namespace

TEST(Coefficients, BandFunction) {
    EXPECT_EQ(f_value(4, 1), Rational(12));
    EXPECT_EQ(f_value(4, 2), Rational(6));
    EXPECT_EQ(f_value(5, 3), Rational(6));
    for (int k = 4; k <= 12; ++k)
        for (int q = 1; q <= k - 2; ++q) EXPECT_EQ(f_value(k, q), Rational((k - q) * (k - q + 1)));
    EXPECT_THROW((void)f_value(4, 3), std::out_of_range);
}

TEST(Coefficients, RecursionAnchors) {
    EXPECT_EQ(solve_recursion(4).str(), "a = [6, -6]");
    EXPECT_EQ(solve_recursion(5).str(), "a = [10, -30, 45/2]");
    for (int k = 4; k <= 12; ++k) {
        EXPECT_EQ(solve_recursion(k).a(1), f_value(k, 1) / Rational(2));
        EXPECT_TRUE(satisfies_linear_system(solve_recursion(k)));
    }
    EXPECT_THROW((void)solve_recursion(3), std::invalid_argument);
}

TEST(Coefficients, RecursionMatchesInvarianceOracle) {
    for (int k = 4; k <= 7; ++k) {
        auto forced = coefficients_from_invariance(k);
        ASSERT_TRUE(forced) << k;
        EXPECT_EQ(*forced, solve_recursion(k).values) << k;
    }
}

TEST(Coefficients, ClosedFormAgreesUpToSign) {
    EXPECT_EQ(closed_form(4).values, (std::vector<Rational>{-6, 6}));
    EXPECT_EQ(closed_form(5).a(2).abs(), Rational(30));
    for (int k = 4; k <= 12; ++k) {
        EXPECT_TRUE(magnitudes_agree(closed_form(k), solve_recursion(k)));
        EXPECT_EQ(common_ratio(closed_form(k), solve_recursion(k)), Rational(-1));
    }
    EXPECT_FALSE(satisfies_linear_system(closed_form(4)));
}

TEST(Coefficients, Json) {
    auto j = solve_recursion(5).to_json();
    EXPECT_EQ(j.dump(), R"({"a":["10","-30","45/2"],"k":5,"source":"recursion"})");
    EXPECT_EQ(closed_form(4).to_json()["source"], "closed_form");
}

TEST(Families, Eq3) {
    OdeSpec ode = build_eq3(4);
    EXPECT_EQ(ode.id(), "eq3(k=4)");
    EXPECT_EQ(ode.rhs(), E("6*y''*y'''/y' - 6*y''^3/y'^2"));
    EXPECT_EQ(ode.equation().ascii(), "y^(4) = 6*y''*y'''/y' - 6*y''^3/y'^2");
    EXPECT_EQ(build_eq3(5).rhs(), E("10*y''*y^(4)/y' - 30*y''^2*y'''/y'^2 + 45/2*y''^4/y'^3"));
    EXPECT_THROW((void)build_eq3(5, solve_recursion(4)), std::invalid_argument);
}

TEST(Families, Eq9) {
    OdeSpec ode = build_eq9();
    EXPECT_EQ(ode.order(), 3);
    EXPECT_EQ(ode.equation().ascii(), "3*y''^2 - 2*y'*y''' = 0");
    EXPECT_EQ(ode.rhs(), E("3*y''^2/(2*y')"));
}

TEST(Families, Eq10) {
    OdeSpec ode = build_eq10(4);
    EXPECT_EQ(ode.delta(), E("y^(4) - 6*y''*y'''/y' + 6*y''^3/y'^2 + y*y'^4 + 2*y'*y''' - 3*y''^2"));
    EXPECT_EQ(eq10_tail(5), E("y*y'^5 + (2*y'*y''' - 3*y''^2)*y'"));
    EXPECT_EQ(parse_equation(ode.equation().ascii()).difference(), ode.delta());
}

TEST(Families, Eq11Template) {
    for (int k = 4; k <= 6; ++k) {
        OdeSpec zero = build_eq11(k, solve_recursion(k), PhiTerm(JetExpr(0)));
        EXPECT_EQ(zero.rhs(), build_eq3(k).rhs());
        OdeSpec same = build_eq11(k, solve_recursion(k), PhiTerm(-eq10_tail(k)));
        EXPECT_EQ(same.rhs(), build_eq10(k).rhs());
    }
    OdeSpec with_y = build_eq11(4, solve_recursion(4), PhiTerm(E("y")));
    EXPECT_TRUE(is_symmetry(fields::X2(), with_y));
    EXPECT_FALSE(is_symmetry(fields::X1(), with_y));
    EXPECT_FALSE(is_symmetry(fields::X4(), with_y));
    EXPECT_THROW(PhiTerm(E("x*y")), std::invalid_argument);
    EXPECT_THROW((void)build_eq11(4, solve_recursion(4), PhiTerm(E("y^(4)"))), std::invalid_argument);
}
