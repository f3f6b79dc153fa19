#pragma once

// Dense matrices over a finite field and the Gaussian elimination routines the
// code, locality and repair modules share.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lrc/gf.hpp"

namespace lrc {

class Matrix {
public:
    Matrix() = default;
    Matrix(gf::FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, gf::Elem{0}) {}

    const gf::FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    gf::Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    gf::Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const gf::Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<gf::Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

    /// Submatrix keeping the given columns in the given order.
    Matrix columns(std::span<const std::size_t> cols) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    gf::FieldPtr field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<gf::Elem> data_;
};

/// Reduced row echelon form with zero rows removed; pivots records the pivot
/// column of each remaining row.
struct RowEchelon {
    Matrix matrix;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of the right null space {x : M x = 0}, one basis vector per row.
Matrix null_space(const Matrix& m);

/// Some solution of M x = rhs, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<std::vector<gf::Elem>> solve(const Matrix& m, std::span<const gf::Elem> rhs);

/// Row vector times matrix.
std::vector<gf::Elem> vec_mul(std::span<const gf::Elem> v, const Matrix& m);

}  // namespace lrc
