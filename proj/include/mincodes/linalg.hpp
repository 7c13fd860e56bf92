#pragma once

// Dense matrices over GF(q) and the handful of eliminations the rest of the library needs.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "gf.hpp"

namespace mincodes {

inline void require_same_field(const Field& a, const Field& b) {
    if (a.q() != b.q())
        throw Error(ErrorKind::SpecMismatch, "GF(" + std::to_string(a.q()) + ") vs GF(" + std::to_string(b.q()) + ")");
}

class Matrix {
public:
    Matrix(FieldRef field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

    Matrix(FieldRef field, std::size_t rows, std::size_t cols, Vec data)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) throw Error(ErrorKind::DimensionMismatch, "matrix data length");
        for (auto e : data_)
            if (!field_->contains(e)) throw Error(ErrorKind::BadParams, "entry outside field");
    }

    /// Row-major construction from raw encodings, mainly for tests and literals.
    static Matrix from_rows(FieldRef field, const std::vector<std::vector<std::uint32_t>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.front().size();
        Vec data;
        data.reserve(r * c);
        for (const auto& row : rows) {
            if (row.size() != c) throw Error(ErrorKind::DimensionMismatch, "ragged rows");
            for (auto e : row) data.push_back(field->element(e));
        }
        return Matrix(std::move(field), r, c, std::move(data));
    }

    static Matrix identity(FieldRef field, std::size_t n) {
        Matrix m(std::move(field), n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldElement{1};
        return m;
    }

    const FieldRef& field_ref() const noexcept { return field_; }
    const Field& field() const noexcept { return *field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const Vec& data() const noexcept { return data_; }

    FieldElement& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    FieldElement at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const FieldElement> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<FieldElement> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

    Vec column(std::size_t c) const {
        Vec out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
        return out;
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    /// Columns `first..first+count` as a new matrix.
    Matrix column_block(std::size_t first, std::size_t count) const {
        Matrix out(field_, rows_, count);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < count; ++c) out.at(r, c) = at(r, first + c);
        return out;
    }

    /// Horizontal concatenation (A | B).
    Matrix hconcat(const Matrix& other) const {
        require_same_field(*field_, *other.field_);
        if (rows_ != other.rows_) throw Error(ErrorKind::DimensionMismatch, "hconcat row count");
        Matrix out(field_, rows_, cols_ + other.cols_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
            for (std::size_t c = 0; c < other.cols_; ++c) out.at(r, cols_ + c) = other.at(r, c);
        }
        return out;
    }

    bool operator==(const Matrix& o) const {
        return field_->q() == o.field_->q() && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    FieldRef field_;
    std::size_t rows_;
    std::size_t cols_;
    Vec data_;
};

/// u * M for a row vector u of length rows().
inline Vec row_times(std::span<const FieldElement> u, const Matrix& m) {
    if (u.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "vector-matrix product");
    const Field& f = m.field();
    Vec out(m.cols(), f.zero());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (u[r].is_zero()) continue;
        auto row = m.row(r);
        for (std::size_t c = 0; c < m.cols(); ++c) out[c] = f.add(out[c], f.mul(u[r], row[c]));
    }
    return out;
}

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row-echelon form. Pivots are the first nonzero entry in column order.
inline RrefResult rref(Matrix m) {
    const Field& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
        std::size_t sel = lead_row;
        while (sel < m.rows() && m.at(sel, c).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != lead_row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(lead_row, j));
        const FieldElement scale = f.inv(m.at(lead_row, c));
        for (std::size_t j = c; j < m.cols(); ++j) m.at(lead_row, j) = f.mul(m.at(lead_row, j), scale);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || m.at(r, c).is_zero()) continue;
            const FieldElement factor = m.at(r, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(r, j) = f.sub(m.at(r, j), f.mul(factor, m.at(lead_row, j)));
        }
        pivots.push_back(c);
        ++lead_row;
    }
    return {std::move(m), pivots.size(), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// Coefficients x with sum_j x_j * cols[j] = target, or nullopt when target is outside the span.
/// Free variables are set to zero, so the answer is the one read off the reduced system.
inline std::optional<Vec> in_span(const FieldRef& field, std::span<const FieldElement> target, const std::vector<Vec>& cols) {
    const std::size_t len = target.size();
    for (const auto& c : cols)
        if (c.size() != len) throw Error(ErrorKind::DimensionMismatch, "in_span vector lengths differ");
    Matrix aug(field, len, cols.size() + 1);
    for (std::size_t r = 0; r < len; ++r) {
        for (std::size_t j = 0; j < cols.size(); ++j) aug.at(r, j) = cols[j][r];
        aug.at(r, cols.size()) = target[r];
    }
    const auto red = rref(std::move(aug));
    Vec x(cols.size(), field->zero());
    for (std::size_t i = 0; i < red.rank; ++i) {
        if (red.pivots[i] == cols.size()) return std::nullopt;
        x[red.pivots[i]] = red.reduced.at(i, cols.size());
    }
    return x;
}

/// Basis (as rows) of { v : M v^T = 0 }, one row per free column in increasing column order.
inline Matrix nullspace(const Matrix& m) {
    const Field& f = m.field();
    const auto red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : red.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix basis(m.field_ref(), free_cols.size(), m.cols());
    for (std::size_t b = 0; b < free_cols.size(); ++b) {
        const std::size_t fc = free_cols[b];
        basis.at(b, fc) = f.one();
        for (std::size_t i = 0; i < red.rank; ++i) basis.at(b, red.pivots[i]) = f.neg(red.reduced.at(i, fc));
    }
    return basis;
}

inline Matrix kronecker(const Matrix& a, const Matrix& b) {
    require_same_field(a.field(), b.field());
    const Field& f = a.field();
    Matrix out(a.field_ref(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar)
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const FieldElement s = a.at(ar, ac);
            for (std::size_t br = 0; br < b.rows(); ++br)
                for (std::size_t bc = 0; bc < b.cols(); ++bc)
                    out.at(ar * b.rows() + br, ac * b.cols() + bc) = f.mul(s, b.at(br, bc));
        }
    return out;
}

}  // namespace mincodes
