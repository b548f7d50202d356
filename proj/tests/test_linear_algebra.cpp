#include "liesym/linear_algebra.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace liesym;

namespace {

Matrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    Matrix m;
    for (const auto& r : rows) m.append_row(r);
    return m;
}

bool annihilates(const Matrix& a, const std::vector<Integer>& v) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Rational s;
        for (std::size_t c = 0; c < a.cols(); ++c) s += a(r, c) * Rational(v[c]);
        if (!s.is_zero()) return false;
    }
    return true;
}

}  // namespace

TEST(LinearAlgebra, ReducedRowEchelon) {
    Matrix m = from_rows({{2, 4, 6}, {1, 2, 4}, {0, 0, 1}});
    RowEchelon e = rref(m);
    EXPECT_EQ(e.pivot_columns, (std::vector<std::size_t>{0, 2}));
    EXPECT_EQ(e.reduced(0, 1), Rational(2));
    EXPECT_EQ(rank(m), 2U);
}

TEST(LinearAlgebra, SolveConsistentAndInconsistent) {
    Matrix a = from_rows({{1, 1}, {1, -1}});
    std::vector<Rational> b{3, 1};
    auto x = solve(a, b);
    ASSERT_TRUE(x);
    EXPECT_EQ(*x, (std::vector<Rational>{2, 1}));
    Matrix s = from_rows({{1, 1}, {2, 2}});
    std::vector<Rational> bad{1, 3};
    EXPECT_FALSE(solve(s, bad));
}

TEST(LinearAlgebra, NullspaceIsPrimitiveAndNormalized) {
    Matrix a = from_rows({{1, 2, 3}, {2, 4, 6}});
    auto ns = nullspace(a);
    ASSERT_EQ(ns.size(), 2U);
    for (const auto& v : ns) {
        EXPECT_TRUE(annihilates(a, v));
        Integer g = 0;
        for (const auto& c : v) g = gcd(g, c);
        EXPECT_EQ(g, 1);
        auto first = std::find_if(v.begin(), v.end(), [](const Integer& c) { return c != 0; });
        EXPECT_GT(*first, 0);
    }
}

TEST(LinearAlgebraProperty, RankNullityOnRandomMatrices) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> dim(1, 6);
    for (int t = 0; t < 200; ++t) {
        std::size_t rows = static_cast<std::size_t>(dim(rng));
        std::size_t cols = static_cast<std::size_t>(dim(rng));
        Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(entry(rng), 1 + (entry(rng) + 3) % 2);
        auto ns = nullspace(m);
        EXPECT_EQ(ns.size() + rank(m), cols);
        for (const auto& v : ns) EXPECT_TRUE(annihilates(m, v));
        if (!ns.empty()) {
            Matrix basis;
            for (const auto& v : ns) {
                std::vector<Rational> row(v.begin(), v.end());
                basis.append_row(row);
            }
            EXPECT_EQ(rank(basis), ns.size());
        }
    }
}
