#pragma once

// Dense matrices over a finite field and exact Gaussian elimination.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace addikit {

using Vector = std::vector<Rep>;

class Matrix {
   public:
    Matrix() = default;
    Matrix(Field field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static Matrix identity(const Field& field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// Rows given as reps; all rows must have the same length.
    static Matrix from_rows(const Field& field, const std::vector<Vector>& rows) {
        const std::size_t cols = rows.empty() ? 0 : rows.front().size();
        Matrix m(field, rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) raise(ErrorCode::DimensionMismatch, "ragged row " + std::to_string(r));
            for (std::size_t c = 0; c < cols; ++c) {
                if (!field.contains(rows[r][c])) {
                    raise(ErrorCode::InvalidParams, "entry " + std::to_string(rows[r][c]) + " outside " + field.name());
                }
                m(r, c) = rows[r][c];
            }
        }
        return m;
    }

    [[nodiscard]] const Field& field() const noexcept { return field_; }
    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    Rep& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    Rep operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    [[nodiscard]] std::span<const Rep> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    [[nodiscard]] std::span<Rep> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }

    [[nodiscard]] Vector column(std::size_t c) const {
        Vector out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    [[nodiscard]] std::vector<Vector> to_rows() const {
        std::vector<Vector> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
        return out;
    }

    [[nodiscard]] Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    void append_row(std::span<const Rep> values) {
        if (rows_ > 0 && values.size() != cols_) raise(ErrorCode::DimensionMismatch, "row length differs");
        if (rows_ == 0) cols_ = values.size();
        data_.insert(data_.end(), values.begin(), values.end());
        ++rows_;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

   private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rep> data_;
};

inline Matrix operator*(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) raise(ErrorCode::FieldMismatch, a.field().name() + " vs " + b.field().name());
    if (a.cols() != b.rows()) raise(ErrorCode::DimensionMismatch, "product of incompatible shapes");
    const Field& F = a.field();
    Matrix c(F, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rep aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = F.add(c(i, j), F.mul(aik, b(k, j)));
        }
    return c;
}

inline Matrix operator+(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) raise(ErrorCode::FieldMismatch, a.field().name() + " vs " + b.field().name());
    if (a.rows() != b.rows() || a.cols() != b.cols()) raise(ErrorCode::DimensionMismatch, "sum of different shapes");
    Matrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().add(a(i, j), b(i, j));
    return c;
}

inline Matrix scaled(const Matrix& a, Rep scalar) {
    Matrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().mul(scalar, a(i, j));
    return c;
}

inline Rep dot(const Field& F, std::span<const Rep> a, std::span<const Rep> b) {
    if (a.size() != b.size()) raise(ErrorCode::DimensionMismatch, "dot product of different lengths");
    Rep s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = F.add(s, F.mul(a[i], b[i]));
    return s;
}

/// Row vector times matrix.
inline Vector vec_mul(std::span<const Rep> v, const Matrix& m) {
    if (v.size() != m.rows()) raise(ErrorCode::DimensionMismatch, "vector length differs from row count");
    const Field& F = m.field();
    Vector out(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (v[r] == 0) continue;
        const auto row = m.row(r);
        for (std::size_t c = 0; c < m.cols(); ++c) out[c] = F.add(out[c], F.mul(v[r], row[c]));
    }
    return out;
}

/// Matrix times column vector.
inline Vector mat_vec(const Matrix& m, std::span<const Rep> x) {
    if (x.size() != m.cols()) raise(ErrorCode::DimensionMismatch, "vector length differs from column count");
    Vector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) out[r] = dot(m.field(), m.row(r), x);
    return out;
}

/// In-place reduction to reduced row-echelon form. Returns the pivot columns.
inline std::vector<std::size_t> rref_in_place(Matrix& m) {
    const Field& F = m.field();
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        std::size_t pivot = lead;
        while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != lead)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(lead, j));
        const Rep scale = F.inv(m(lead, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(lead, j) = F.mul(scale, m(lead, j));
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || m(r, c) == 0) continue;
            const Rep factor = F.neg(m(r, c));
            for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = F.add(m(r, j), F.mul(factor, m(lead, j)));
        }
        pivots.push_back(c);
        ++lead;
    }
    return pivots;
}

inline Matrix rref(Matrix m) {
    rref_in_place(m);
    return m;
}

inline std::size_t rank(Matrix m) { return rref_in_place(m).size(); }

inline Rep det(Matrix m) {
    if (m.rows() != m.cols()) raise(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
    const Field& F = m.field();
    const std::size_t n = m.rows();
    Rep d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m(pivot, c) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(c, j));
            d = F.neg(d);
        }
        d = F.mul(d, m(c, c));
        const Rep inv = F.inv(m(c, c));
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c) == 0) continue;
            const Rep factor = F.neg(F.mul(m(r, c), inv));
            for (std::size_t j = c; j < n; ++j) m(r, j) = F.add(m(r, j), F.mul(factor, m(c, j)));
        }
    }
    return d;
}

inline bool is_nonsingular(const Matrix& m) {
    if (m.rows() != m.cols()) raise(ErrorCode::DimensionMismatch, "nonsingularity of a non-square matrix");
    return rank(m) == m.rows();
}

inline Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) raise(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const auto pivots = rref_in_place(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) raise(ErrorCode::SingularMatrix, "matrix is singular");
    Matrix inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

/// Basis of {x : M x = 0}, one vector per free column, free entry set to 1.
inline std::vector<Vector> nullspace(const Matrix& m) {
    Matrix r = rref(m);
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t i = 0; i < r.rows(); ++i) {
        for (std::size_t c = 0; c < r.cols(); ++c) {
            if (r(i, c) != 0) {
                pivot_col.push_back(c);
                is_pivot[c] = true;
                break;
            }
        }
    }
    const Field& F = m.field();
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector x(m.cols(), 0);
        x[free] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = F.neg(r(i, free));
        basis.push_back(std::move(x));
    }
    return basis;
}

struct Solution {
    Vector particular;
    std::vector<Vector> nullspace;
};

/// Solves M x = b. Returns nullopt when the system is inconsistent.
inline std::optional<Solution> solve(const Matrix& m, std::span<const Rep> b) {
    if (b.size() != m.rows()) raise(ErrorCode::DimensionMismatch, "right-hand side length differs from row count");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    const auto pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Solution s;
    s.particular.assign(m.cols(), 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) s.particular[pivots[i]] = aug(i, m.cols());
    s.nullspace = nullspace(m);
    return s;
}

/// Scales v so its first nonzero entry is 1. Zero vectors are returned unchanged.
inline Vector normalized(const Field& F, Vector v) {
    for (const Rep x : v) {
        if (x != 0) {
            const Rep s = F.inv(x);
            for (auto& y : v) y = F.mul(s, y);
            break;
        }
    }
    return v;
}

}  // namespace addikit
