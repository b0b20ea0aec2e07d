#pragma once

#include "cliffpair/scalar.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cliffpair {

// Dense exact matrix, row major.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static Matrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Scalar& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix transposed() const;
    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool is_zero() const;

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

    // In-place reduced row echelon form; returns pivot column indices.
    std::vector<size_t> rref();
    size_t rank() const;
    std::optional<Matrix> inverse() const;
    // Basis of the right nullspace, one column vector per element.
    std::vector<std::vector<Scalar>> nullspace() const;
    // Solve A x = b exactly; nullopt when inconsistent.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;

private:
    size_t rows_, cols_;
    std::vector<Scalar> a_;
};

// Sparse row: strictly increasing column indices with nonzero coefficients.
using SparseRow = std::vector<std::pair<uint32_t, Scalar>>;

// a += c * b, keeping the sorted-sparse invariant.
void sparse_axpy(SparseRow& a, const Scalar& c, const SparseRow& b);

// Incremental exact row space with reduced pivots; used both for rank
// tracking and for kernel extraction of large sparse operators.
class SparseRowSpace {
public:
    // Reduces r against the current basis. Returns true (and absorbs the
    // remainder) when r was independent; false when r lies in the span.
    bool insert(SparseRow r);
    // Reduce without inserting; the remainder is returned.
    SparseRow residual(SparseRow r) const;
    size_t dim() const { return rows_.size(); }

private:
    std::vector<SparseRow> rows_; // each begins at its pivot column, pivot coeff 1
    std::vector<uint32_t> pivots_;
};

// Nullspace of a sparse matrix given as rows over columns 0..cols-1.
// Returns a basis of the kernel as sparse rows.
std::vector<SparseRow> sparse_nullspace(const std::vector<SparseRow>& rows, uint32_t cols);

} // namespace cliffpair
