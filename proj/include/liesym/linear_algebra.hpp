#pragma once

// Exact dense linear algebra over the rationals.

#include "liesym/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace liesym {

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void append_row(std::span<const Rational> row) {
        if (rows_ == 0 && cols_ == 0) cols_ = row.size();
        if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
        data_.insert(data_.end(), row.begin(), row.end());
        ++rows_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form by Gauss-Jordan elimination.
inline RowEchelon rref(Matrix m) {
    RowEchelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        out.pivot_columns.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivot_columns.size(); }

/// Some solution of A x = b, or nullopt if the system is inconsistent.
inline std::optional<std::vector<Rational>> solve(const Matrix& a, std::span<const Rational> b) {
    if (b.size() != a.rows()) throw std::invalid_argument("right-hand side length mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto e = rref(std::move(aug));
    std::vector<Rational> x(a.cols());
    for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) {
        std::size_t c = e.pivot_columns[i];
        if (c == a.cols()) return std::nullopt;
        x[c] = e.reduced(i, a.cols());
    }
    return x;
}

/// Divides by the integer content and makes the first nonzero entry positive.
inline void make_primitive(std::vector<Integer>& v) {
    Integer g = 0;
    for (const auto& e : v) g = gcd(g, e);
    if (g == 0) return;
    int s = 0;
    for (const auto& e : v) {
        if (e != 0) {
            s = sgn(e);
            break;
        }
    }
    if (s < 0) g = -g;
    if (g != 1)
        for (auto& e : v) e /= g;
}

/// Integer-primitive basis of the right nullspace of `m`.
///
/// Rows are scaled to integers and eliminated fraction-free (cross
/// multiplication followed by content removal), Gauss-Jordan style, so each
/// pivot row is the only one with a nonzero entry in its pivot column.
/// Basis vectors are ordered by their free column.
inline std::vector<std::vector<Integer>> nullspace(const Matrix& m) {
    const std::size_t n = m.cols();
    std::vector<std::vector<Integer>> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer den = 1;
        bool nonzero = false;
        for (std::size_t j = 0; j < n; ++j) {
            den = lcm(den, m(i, j).denominator());
            nonzero = nonzero || !m(i, j).is_zero();
        }
        if (!nonzero) continue;
        std::vector<Integer> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = m(i, j).numerator() * (den / m(i, j).denominator());
        make_primitive(row);
        rows.push_back(std::move(row));
    }

    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Integer a = rows[r][c];
            Integer b = rows[i][c];
            for (std::size_t j = 0; j < n; ++j) rows[i][j] = a * rows[i][j] - b * rows[r][j];
            make_primitive(rows[i]);
        }
        pivots.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Integer>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Integer scale = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (rows[i][f] != 0) scale = lcm(scale, abs(rows[i][pivots[i]]));
        std::vector<Integer> v(n, Integer(0));
        v[f] = scale;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (rows[i][f] != 0) v[pivots[i]] = -rows[i][f] * scale / rows[i][pivots[i]];
        make_primitive(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace liesym
