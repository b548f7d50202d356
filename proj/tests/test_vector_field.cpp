#include "liesym/acceptance.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace liesym;
using liesym::testing::E;

TEST(Prolongation, QuadraticField) {
    ProlongedField p = prolong(fields::X3(), 2);
    EXPECT_EQ(p.eta(1), E("-2*x*y'"));
    EXPECT_EQ(p.eta(2), E("-2*y' - 4*x*y''"));
    EXPECT_TRUE(p.satisfies_recursion());
}

TEST(Prolongation, FirstOrderFormulaForGeneralFields) {
    acceptance::RandomExprs gen(31);
    for (int i = 0; i < 60; ++i) {
        JetExpr xi(gen.polynomial(3, 2));
        JetExpr eta(gen.polynomial(3, 2));
        if (xi.depends_on(Var::y(1)) || xi.depends_on(Var::y(2)) || eta.depends_on(Var::y(1)) ||
            eta.depends_on(Var::y(2)))
            continue;
        PointVectorField v(xi, eta);
        JetExpr p1 = E("y'");
        JetExpr expected = partial_derivative(eta, Var::x()) +
                           (partial_derivative(eta, Var::y()) - partial_derivative(xi, Var::x())) * p1 -
                           partial_derivative(xi, Var::y()) * p1 * p1;
        EXPECT_EQ(prolong(v, 1).eta(1), expected);
    }
}

TEST(Prolongation, ApplyExamples) {
    EXPECT_EQ(apply(prolong(fields::X1(), 1), E("y'")), E("-y'"));
    EXPECT_EQ(apply(prolong(fields::X1(), 3), E("y'''")), E("-3*y'''"));
    EXPECT_EQ(apply(prolong(fields::X3(), 1), E("x*y'")), E("x^2*y' - 2*x^2*y'"));
    EXPECT_TRUE(apply(prolong(fields::X2(), 4), E("y''*y^(4)/y'")).is_zero());
    EXPECT_EQ(apply(prolong(fields::X5(), 2), E("y*y''")), E("2*y*y''"));
}

TEST(ProlongationProperty, LinearInTheField) {
    std::vector<PointVectorField> all{fields::X1(), fields::X2(), fields::X3(),
                                      fields::X4(), fields::X5(), fields::X6()};
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j) {
            PointVectorField combo = Rational(3) * all[i] + Rational(-1, 2) * all[j];
            ProlongedField pc = prolong(combo, 5);
            ProlongedField pi = prolong(all[i], 5);
            ProlongedField pj = prolong(all[j], 5);
            for (int k = 0; k <= 5; ++k)
                EXPECT_EQ(pc.eta(k), JetExpr(3) * pi.eta(k) + JetExpr(Rational(-1, 2)) * pj.eta(k));
        }
}

TEST(Commutator, Sl2Relations) {
    EXPECT_EQ(commutator(fields::X2(), fields::X3()), Rational(2) * fields::X1());
    EXPECT_EQ(commutator(fields::X1(), fields::X2()), Rational(-1) * fields::X2());
    EXPECT_EQ(commutator(fields::X5(), fields::X6()), fields::X6());
    EXPECT_TRUE(commutator(fields::X3(), fields::X5()).is_zero());
}

TEST(Commutator, ProlongationIsAHomomorphism) {
    std::vector<PointVectorField> all{fields::X1(), fields::X3(), fields::X5(), fields::X6(),
                                      PointVectorField(E("x*y"), E("x^2"))};
    auto test_fn = E("x*y'' + y*y'^2 - y'''");
    for (const auto& u : all)
        for (const auto& v : all) {
            JetExpr lhs = apply(prolong(commutator(u, v), 3), test_fn);
            JetExpr rhs = apply(prolong(u, 4), apply(prolong(v, 3), test_fn)) -
                          apply(prolong(v, 4), apply(prolong(u, 3), test_fn));
            EXPECT_EQ(lhs, rhs);
        }
}

TEST(BracketTable, SolvableAndAbelian) {
    auto r2 = bracket_table({fields::X4(), fields::X5()});
    EXPECT_EQ(r2.bracket(0, 1), (std::vector<Rational>{1, 0}));
    EXPECT_TRUE(r2.is_antisymmetric());
    EXPECT_TRUE(bracket_table({fields::X2(), fields::X4()}).is_abelian());
    EXPECT_EQ(bracket_table({fields::X1(), fields::X2(), fields::X3()}), sl2_table());
    EXPECT_TRUE(bracket_table({fields::X1(), fields::X2(), fields::X3(), fields::X4(), fields::X5()}).satisfies_jacobi());
}

TEST(BracketTable, RejectsBadBases) {
    PointVectorField cubic(E("x^3"), JetExpr(0));
    EXPECT_THROW((void)bracket_table({fields::X2(), cubic}), NotClosed);
    EXPECT_THROW((void)bracket_table({fields::X2(), Rational(2) * fields::X2()}), std::invalid_argument);
    EXPECT_TRUE(same_span({fields::X1(), fields::X2()}, {fields::X1() + fields::X2(), fields::X2()}));
    EXPECT_EQ(span_rank({fields::X1(), fields::X2(), fields::X1() + fields::X2()}), 2U);
}

TEST(Builtins, LookupByName) {
    EXPECT_EQ(*fields::builtin("X3"), fields::X3());
    EXPECT_EQ(fields::X6().str(), "xi=0; eta=y^2");
    EXPECT_FALSE(fields::builtin("X9"));
}
