#pragma once

#include <optional>
#include <vector>

#include "tameiso/cyclotomic.hpp"

namespace tameiso {

// Dense row-major matrix over the coefficient field.
using Matrix = std::vector<std::vector<FieldScalar>>;
using Vector = std::vector<FieldScalar>;

// In-place reduced row echelon form; returns the pivot columns in order.
// Pivot choice is deterministic: first nonzero entry scanning down.
inline std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) { sel = i; break; }
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        FieldScalar inv = m[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            FieldScalar f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Canonical nullspace basis of an n-column matrix: one vector per free
// column, with 1 at the free column and pivot entries back-filled.
inline std::vector<Vector> nullspace(Matrix m, std::size_t cols, const FieldPtr& field) {
    std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vector v(cols, FieldScalar::zero(field));
        v[free] = FieldScalar::one(field);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

struct AffineSolution {
    Vector particular;
    std::vector<Vector> homogeneous;  // canonical nullspace basis
};

// Solves A x = b exactly in `cols` unknowns; nullopt when inconsistent.
inline std::optional<AffineSolution> solve_affine(const Matrix& a, const Vector& b,
                                                  std::size_t cols, const FieldPtr& field) {
    const std::size_t rows = a.size();
    Matrix aug = a;
    for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
    std::vector<std::size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    Vector x(cols, FieldScalar::zero(field));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
    Matrix plain = a;
    return AffineSolution{std::move(x), nullspace(std::move(plain), cols, field)};
}

// Row-reduces the spanning set to a canonical basis of its row space.
inline std::vector<Vector> canonical_row_basis(Matrix m) {
    std::vector<std::size_t> pivots = rref(m);
    m.resize(pivots.size());
    return m;
}

}  // namespace tameiso
