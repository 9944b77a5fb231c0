#include "liesym/matrix.hpp"

#include "liesym/errors.hpp"

namespace liesym {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

Matrix Matrix::identity(std::size_t k) {
    Matrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<Rat> Matrix::row(std::size_t r) const {
    return std::vector<Rat>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

bool Matrix::is_zero() const {
    for (const auto& v : data_)
        if (sgn(v) != 0) return false;
    return true;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DomainError("matmul: shape mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rat& f = a.at(i, k);
            if (sgn(f) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Rat& g = b.at(k, j);
                if (sgn(g) != 0) out.at(i, j) += f * g;
            }
        }
    return out;
}

RrefResult rref(const Matrix& m) {
    Matrix w = m;
    const std::size_t rows = w.rows(), cols = w.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot_row = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (sgn(w.at(i, c)) != 0) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row == rows) continue;
        if (pivot_row != r)
            for (std::size_t j = c; j < cols; ++j)
                swap(w.at(r, j), w.at(pivot_row, j));
        // Normalize the pivot row, then clear the column everywhere else.
        // Trailing zeros dominate these rows, so every inner loop skips them.
        const Rat inv = Rat(1) / w.at(r, c);
        if (inv != 1)
            for (std::size_t j = c; j < cols; ++j) {
                if (sgn(w.at(r, j)) != 0) w.at(r, j) *= inv;
            }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Rat f = w.at(i, c);
            if (sgn(f) == 0) continue;
            for (std::size_t j = c; j < cols; ++j) {
                const Rat& src = w.at(r, j);
                if (sgn(src) != 0) w.at(i, j) -= f * src;
            }
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix reduced(pivots.size(), cols);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            reduced.at(i, j) = w.at(i, j);
    return {std::move(reduced), std::move(pivots)};
}

Matrix nullspace(const Matrix& m) {
    const auto red = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : red.pivot_cols) is_pivot[c] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    // One solution per free column (set it to 1, read pivots off the RREF),
    // then re-reduce the stack so the basis itself is canonical RREF.
    Matrix raw(free_cols.size(), cols);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t f = free_cols[k];
        raw.at(k, f) = 1;
        for (std::size_t i = 0; i < red.pivot_cols.size(); ++i)
            raw.at(k, red.pivot_cols[i]) = -red.reduced.at(i, f);
    }
    return rref(raw).reduced;
}

} // namespace liesym
