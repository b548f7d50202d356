#include "test_util.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace liesym;
using liesym::testing::E;

TEST(Parser, VariableSpellings) {
    EXPECT_EQ(E("y''''"), RationalFunction::variable(Var::y(4)));
    EXPECT_EQ(E("y^(4)"), RationalFunction::variable(Var::y(4)));
    EXPECT_EQ(E("y4"), RationalFunction::variable(Var::y(4)));
    EXPECT_EQ(E("y^(2)"), E("y''"));
    EXPECT_EQ(E("y^2"), E("y*y"));
    EXPECT_EQ(Var::y(5).name(), "y^(5)");
    EXPECT_EQ(Var::y(3).name(), "y'''");
}

TEST(Parser, Precedence) {
    EXPECT_EQ(E("-x^2"), -E("x*x"));
    EXPECT_EQ(E("2*x/3*y"), E("(2*x/3)*y"));
    EXPECT_EQ(E("1 - x - y"), E("(1 - x) - y"));
    EXPECT_EQ(E("x^-1"), E("1/x"));
    EXPECT_EQ(E("x^(-2)"), E("1/x^2"));
}

TEST(Parser, EquationsAndFields) {
    Equation eq = parse_equation("y''' = 3*y''^2/(2*y')");
    EXPECT_EQ(eq.difference(), E("y''' - 3*y''^2/(2*y')"));
    EXPECT_EQ(parse_equation("y'' + y").rhs.evaluate(), RationalFunction(0));
    FieldText ft = parse_field_text("xi=x^2; eta=x*y");
    EXPECT_EQ(ft.xi.evaluate(), E("x^2"));
    EXPECT_EQ(ft.eta.evaluate(), E("x*y"));
}

TEST(Parser, ErrorsCarryPositions) {
    try {
        (void)parse_expression("x + * y");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4U);
        EXPECT_NE(std::string(e.what()).find("column 5"), std::string::npos);
    }
    EXPECT_THROW((void)parse_expression("x^y"), ParseError);
    EXPECT_THROW((void)parse_expression("x^2^3"), ParseError);
    EXPECT_THROW((void)parse_expression("(x + 1"), ParseError);
    EXPECT_THROW((void)parse_expression("z"), ParseError);
    EXPECT_THROW((void)parse_equation("x = y = 1"), ParseError);
    EXPECT_THROW((void)parse_field_text("zeta=x"), ParseError);
    EXPECT_THROW((void)parse_field_text("xi=x; xi=y"), ParseError);
    EXPECT_TRUE(parse_field_text("xi=x").eta.evaluate().is_zero());
}

TEST(Rendering, AsciiLatexAndJson) {
    Expr e = Expr::quotient(Expr::product({Expr::number(6), Expr::variable(Var::y(2)), Expr::variable(Var::y(3))}),
                            Expr::variable(Var::y(1)));
    EXPECT_EQ(e.ascii(), "6*y''*y'''/y'");
    EXPECT_EQ(e.latex(), "\\frac{6y''y'''}{y'}");
    auto j = e.to_json();
    EXPECT_EQ(j["type"], "quotient");
    EXPECT_EQ(j["denominator"]["order"], 1);
    EXPECT_EQ(Expr::var_power(Var::y(4), 2).latex(), "(y^{(4)})^{2}");
}

namespace {

Expr random_expr(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 6);
    std::uniform_int_distribution<int> small(-4, 4);
    std::uniform_int_distribution<unsigned> order(0, 5);
    switch (pick(rng)) {
        case 0: return Expr::number(Rational(small(rng), 1 + (small(rng) + 4) % 3));
        case 1: return std::uniform_int_distribution<int>(0, 3)(rng) == 0 ? Expr::variable(Var::x())
                                                                          : Expr::variable(Var::y(order(rng)));
        case 2: return Expr::sum({random_expr(rng, depth - 1), random_expr(rng, depth - 1), random_expr(rng, depth - 1)});
        case 3: return Expr::product({random_expr(rng, depth - 1), random_expr(rng, depth - 1)});
        case 4: {
            Expr den = Expr::variable(Var::y(1 + order(rng)));
            return Expr::quotient(random_expr(rng, depth - 1), den);
        }
        case 5: return Expr::power(random_expr(rng, depth - 1), small(rng) == 0 ? 2 : small(rng) % 3 + 3);
        default: return Expr::negate(random_expr(rng, depth - 1));
    }
}

}  // namespace

TEST(RenderingProperty, AsciiRoundTrip) {
    std::mt19937_64 rng(5);
    int checked = 0;
    for (int i = 0; i < 400; ++i) {
        Expr e = random_expr(rng, 3);
        RationalFunction value;
        try {
            value = e.evaluate();
        } catch (const DivisionByZero&) {
            continue;
        }
        ++checked;
        EXPECT_EQ(parse_expression(e.ascii()).evaluate(), value) << e.ascii();
    }
    EXPECT_GT(checked, 300);
}

TEST(RenderingProperty, CanonicalStringsRoundTrip) {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 200; ++i) {
        Expr e = random_expr(rng, 3);
        RationalFunction value;
        try {
            value = e.evaluate();
        } catch (const DivisionByZero&) {
            continue;
        }
        EXPECT_EQ(E(value.str()), value) << value.str();
        EXPECT_EQ(E(to_expr(value).ascii()), value);
    }
}
