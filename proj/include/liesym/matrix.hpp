#pragma once

#include <cstddef>
#include <vector>

#include "liesym/rational.hpp"

namespace liesym {

// Dense exact-rational matrix. Blocks stay small (at most C(2n,n) x n! for
// n <= 7), so density costs little and keeps elimination simple.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols); // zero-filled

    static Matrix identity(std::size_t k);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    std::vector<Rat> row(std::size_t r) const;
    bool is_zero() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> data_;
};

Matrix matmul(const Matrix& a, const Matrix& b);

struct RrefResult {
    Matrix reduced;                     // zero rows trimmed
    std::vector<std::size_t> pivot_cols; // strictly increasing, one per row
};

// Gauss-Jordan over Q. The result is the canonical reduced row echelon form:
// unique for the row space, so subspaces compare by matrix equality.
RrefResult rref(const Matrix& m);

// Canonical (RREF) basis of the right nullspace {v : m v = 0}, one basis
// vector per row. Empty (0 x cols) when the kernel is trivial.
Matrix nullspace(const Matrix& m);

} // namespace liesym
