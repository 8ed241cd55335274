#pragma once

#include <vector>

#include "goodset/curve/series.hpp"

namespace goodset::curve {

using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;

/// Reduced row echelon form in place; zero rows are dropped. Returns pivot columns.
inline std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m.front().size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        const Rational inv = Rational(1) / m[row][col];
        for (std::size_t k = col; k < cols; ++k) m[row][k] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rational f = m[i][col];
            for (std::size_t k = col; k < cols; ++k)
                if (m[row][k] != 0) m[i][k] -= f * m[row][k];
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return pivots;
}

/// Rank via forward elimination only.
inline std::size_t rank(Matrix m) {
    if (m.empty()) return 0;
    const std::size_t cols = m.front().size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        for (std::size_t i = row + 1; i < m.size(); ++i) {
            if (m[i][col] == 0) continue;
            const Rational f = m[i][col] / m[row][col];
            for (std::size_t k = col; k < cols; ++k)
                if (m[row][k] != 0) m[i][k] -= f * m[row][k];
        }
        ++row;
    }
    return row;
}

/// Basis of {x : m·x = 0} for x with `cols` entries.
inline Matrix null_space(Matrix m, std::size_t cols) {
    for (const auto& r : m)
        if (r.size() != cols) throw error("null_space: ragged matrix");
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    Matrix basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Row v(cols);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Rows restricted to the given columns.
inline Matrix select_columns(const Matrix& m, const std::vector<std::size_t>& cols) {
    Matrix out;
    out.reserve(m.size());
    for (const auto& r : m) {
        Row s;
        s.reserve(cols.size());
        for (auto c : cols) s.push_back(r[c]);
        out.push_back(std::move(s));
    }
    return out;
}

/// Linear combinations coeffs[k]·rows, one output row per coefficient vector.
inline Matrix combine(const Matrix& coeffs, const Matrix& rows, std::size_t cols) {
    Matrix out;
    for (const auto& c : coeffs) {
        Row v(cols);
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (c[k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j)
                if (rows[k][j] != 0) v[j] += c[k] * rows[k][j];
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace goodset::curve
