#include "lrc/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace lrc {

Matrix Matrix::columns(std::span<const std::size_t> cols) const {
    Matrix out(field_, rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (cols[c] >= cols_) throw std::out_of_range("column index out of range");
            out.at(r, c) = at(r, cols[c]);
        }
    return out;
}

RowEchelon row_reduce(Matrix m) {
    const auto& f = *m.field();
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t r = pivot_row;
        while (r < m.rows() && m.at(r, col).value == 0) ++r;
        if (r == m.rows()) continue;
        if (r != pivot_row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(r, c), m.at(pivot_row, c));
        const gf::Elem scale = f.inv(m.at(pivot_row, col));
        for (std::size_t c = col; c < m.cols(); ++c) m.at(pivot_row, c) = f.mul(m.at(pivot_row, c), scale);
        for (std::size_t other = 0; other < m.rows(); ++other) {
            if (other == pivot_row) continue;
            const gf::Elem factor = m.at(other, col);
            if (factor.value == 0) continue;
            for (std::size_t c = col; c < m.cols(); ++c)
                m.at(other, c) = f.sub(m.at(other, c), f.mul(factor, m.at(pivot_row, c)));
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    Matrix reduced(m.field(), pivots.size(), m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) reduced.at(r, c) = m.at(r, c);
    return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

Matrix null_space(const Matrix& m) {
    const auto& f = *m.field();
    auto ech = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : ech.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Matrix basis(m.field(), free_cols.size(), m.cols());
    for (std::size_t b = 0; b < free_cols.size(); ++b) {
        basis.at(b, free_cols[b]) = f.one();
        for (std::size_t r = 0; r < ech.rank(); ++r)
            basis.at(b, ech.pivots[r]) = f.neg(ech.matrix.at(r, free_cols[b]));
    }
    return basis;
}

std::optional<std::vector<gf::Elem>> solve(const Matrix& m, std::span<const gf::Elem> rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("right-hand side length does not match the matrix");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = rhs[r];
    }
    auto ech = row_reduce(std::move(aug));
    std::vector<gf::Elem> x(m.cols(), gf::Elem{0});
    for (std::size_t r = 0; r < ech.rank(); ++r) {
        if (ech.pivots[r] == m.cols()) return std::nullopt;
        x[ech.pivots[r]] = ech.matrix.at(r, m.cols());
    }
    return x;
}

std::vector<gf::Elem> vec_mul(std::span<const gf::Elem> v, const Matrix& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("vector length does not match the matrix");
    const auto& f = *m.field();
    std::vector<gf::Elem> out(m.cols(), gf::Elem{0});
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (v[r].value == 0) continue;
        for (std::size_t c = 0; c < m.cols(); ++c) out[c] = f.add(out[c], f.mul(v[r], m.at(r, c)));
    }
    return out;
}

}  // namespace lrc
