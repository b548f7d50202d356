#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace liesym;
using liesym::testing::E;

namespace {

std::vector<PointVectorField> sl2() { return {fields::X1(), fields::X2(), fields::X3()}; }

}  // namespace

TEST(IsSymmetry, Examples) {
    EXPECT_TRUE(is_symmetry(fields::X2(), build_eq3(4)));
    EXPECT_TRUE(is_symmetry(fields::X3(), build_eq3(6)));
    EXPECT_TRUE(is_symmetry(fields::X6(), build_eq9()));
    EXPECT_FALSE(is_symmetry(fields::X6(), build_eq3(4)));
    EXPECT_FALSE(is_symmetry(fields::X5(), build_eq10(4)));
    EXPECT_EQ(symmetry_residual(fields::X5(), build_eq10(4)), E("4*y*y'^4 + 2*y'*y''' - 3*y''^2"));
    EXPECT_EQ(symmetry_residual(fields::X4(), build_eq10(5)), E("y'^5"));
}

TEST(IsSymmetry, ResidualVanishesOnSolutionsOracle) {
    // y = 1/x solves the Schwarzian equation; a symmetry maps the manifold to itself,
    // so the residual must vanish along the jet of any solution.
    OdeSpec ode = build_eq9();
    auto jet_of_inverse = [](Rational x0) {
        std::map<Var, Rational> p;
        p[Var::x()] = x0;
        Rational sign = 1;
        Rational fact = 1;
        for (unsigned j = 0; j <= 4; ++j) {
            if (j > 0) fact *= Rational(static_cast<long>(j));
            p[Var::y(j)] = sign * fact * pow(x0, -static_cast<long>(j) - 1);
            sign = -sign;
        }
        return p;
    };
    EXPECT_EQ(liesym::testing::at(ode.delta(), jet_of_inverse(Rational(3, 2))), Rational(0));
    EXPECT_NE(liesym::testing::at(symmetry_residual(PointVectorField(E("y"), JetExpr(0)), ode), jet_of_inverse(2)),
              Rational(0));
}

TEST(Ansatz, UnknownOrdering) {
    AnsatzSpace a(1);
    ASSERT_EQ(a.unknowns().size(), 6U);
    EXPECT_EQ(a.unit_field(0), fields::X2());
    EXPECT_EQ(a.unit_field(3), fields::X4());
    EXPECT_EQ(a.field(std::vector<Rational>{0, 1, 0, 0, 0, 1}), fields::X1() + fields::X5());
}

TEST(Solve, ConstantAnsatzFindsTranslations) {
    EXPECT_TRUE(same_span(compute_symmetries(build_eq3(4), 0).basis, {fields::X2(), fields::X4()}));
    OdeSpec forced = ode_from_equation(parse_equation("y'' = x*y'"));
    EXPECT_TRUE(same_span(compute_symmetries(forced, 0).basis, {fields::X4()}));
    EXPECT_THROW((void)compute_symmetries(build_eq3(4), -1), std::invalid_argument);
}

TEST(Solve, LinearAnsatz) {
    SymmetryReport r = compute_symmetries(build_eq3(4), 1);
    EXPECT_EQ(r.dimension(), 4U);
    EXPECT_EQ(r.classification, AlgebraTag::OTHER);
}

TEST(Solve, FiveDimensionalAlgebra) {
    SymmetryReport r = compute_symmetries(build_eq3(5), 2);
    EXPECT_EQ(r.dimension(), 5U);
    EXPECT_EQ(r.classification, AlgebraTag::SL2R_PLUS_R2);
    ASSERT_TRUE(r.brackets);
    EXPECT_TRUE(r.brackets->satisfies_jacobi());
    for (const auto& v : r.basis) EXPECT_TRUE(is_symmetry(v, build_eq3(5)));
    auto j = r.to_json();
    EXPECT_EQ(j["dimension"], 5);
    EXPECT_EQ(j["classification"], "SL2R_PLUS_R2");
    EXPECT_EQ(j["basis"][0]["xi"], "1");
}

TEST(Solve, DimensionIsMonotoneAndStableInDegree) {
    for (int k = 4; k <= 5; ++k) {
        std::size_t d3 = 0;
        std::size_t d10 = 0;
        for (int degree = 2; degree <= 4; ++degree) {
            SymmetryReport r3 = compute_symmetries(build_eq3(k), degree);
            SymmetryReport r10 = compute_symmetries(build_eq10(k), degree);
            EXPECT_GE(r3.dimension(), d3);
            EXPECT_GE(r10.dimension(), d10);
            d3 = r3.dimension();
            d10 = r10.dimension();
            EXPECT_EQ(d3, 5U);
            EXPECT_EQ(d10, 3U);
            EXPECT_TRUE(same_span(r10.basis, sl2()));
        }
    }
    EXPECT_EQ(compute_symmetries(build_eq9(), 3).dimension(), 6U);
}

TEST(Solve, ClosureOfComputedAlgebras) {
    for (const auto& ode : {build_eq3(6), build_eq9(), build_eq10(6)}) {
        SymmetryReport r = compute_symmetries(ode, 2);
        for (const auto& u : r.basis)
            for (const auto& v : r.basis) {
                PointVectorField w = commutator(u, v);
                EXPECT_TRUE(is_symmetry(w, ode));
                EXPECT_EQ(span_rank(r.basis), span_rank([&] {
                              auto b = r.basis;
                              b.push_back(w);
                              return b;
                          }()));
            }
    }
}

TEST(Solve, UserEquation) {
    OdeSpec ode = ode_from_equation(parse_equation("y'' = 0"), "free");
    SymmetryReport r = compute_symmetries(ode, 2);
    EXPECT_EQ(r.dimension(), 8U);
    EXPECT_EQ(r.classification, AlgebraTag::OTHER);
}

TEST(Classification, TablesUpToPermutation) {
    auto classify = [](std::vector<PointVectorField> basis) {
        SymmetryReport r{"test", 3, 2, basis, bracket_table(basis), AlgebraTag::OTHER};
        return classify_algebra(r);
    };
    EXPECT_EQ(classify({fields::X3(), fields::X1(), fields::X2()}), AlgebraTag::SL2R);
    EXPECT_EQ(classify({fields::X5(), fields::X2(), fields::X4(), fields::X3(), fields::X1()}), AlgebraTag::SL2R_PLUS_R2);
    EXPECT_EQ(classify({fields::X1(), fields::X4(), fields::X5()}), AlgebraTag::OTHER);
    EXPECT_EQ(classify({fields::X2(), fields::X1(), fields::X4()}), AlgebraTag::OTHER);
    EXPECT_TRUE(sl2_plus_sl2_table().satisfies_jacobi());
    EXPECT_TRUE(sl2_plus_r2_table().is_antisymmetric());
}
