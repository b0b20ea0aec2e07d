#include "cliffpair/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cliffpair {

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t k = 0; k < n; ++k) m.at(k, k) = Scalar(1);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix out(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const Scalar& bkj = o.at(k, j);
                if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    Matrix out(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] + o.a_[k];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    Matrix out(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] - o.a_[k];
    return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix out(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] * c;
    return out;
}

Matrix Matrix::transposed() const {
    Matrix out(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix: vector length mismatch");
    std::vector<Scalar> out(rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

std::vector<size_t> Matrix::rref() {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        size_t sel = r;
        while (sel < rows_ && at(sel, c).is_zero()) ++sel;
        if (sel == rows_) continue;
        for (size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(r, j));
        Scalar inv = at(r, c).inverse();
        for (size_t j = c; j < cols_; ++j) at(r, j) *= inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r || at(i, c).is_zero()) continue;
            Scalar f = at(i, c);
            for (size_t j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t Matrix::rank() const {
    Matrix m = *this;
    return m.rref().size();
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    Matrix aug(rows_, 2 * cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = Scalar(1);
    }
    auto pivots = aug.rref();
    if (pivots.size() != rows_ || pivots.back() != rows_ - 1) return std::nullopt;
    Matrix out(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(i, j) = aug.at(i, cols_ + j);
    return out;
}

std::vector<std::vector<Scalar>> Matrix::nullspace() const {
    Matrix m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(cols_);
        v[f] = Scalar(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Scalar>> Matrix::solve(const std::vector<Scalar>& b) const {
    if (b.size() != rows_) throw std::invalid_argument("Matrix: rhs length mismatch");
    Matrix aug(rows_, cols_ + 1);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<Scalar> x(cols_);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
    return x;
}

void sparse_axpy(SparseRow& a, const Scalar& c, const SparseRow& b) {
    if (c.is_zero() || b.empty()) return;
    SparseRow out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Scalar v = c * b[j].second;
            if (!v.is_zero()) out.emplace_back(b[j].first, std::move(v));
            ++j;
        } else {
            Scalar v = a[i].second + c * b[j].second;
            if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    a = std::move(out);
}

SparseRow SparseRowSpace::residual(SparseRow r) const {
    while (!r.empty()) {
        uint32_t lead = r.front().first;
        size_t k = 0;
        for (; k < pivots_.size(); ++k)
            if (pivots_[k] == lead) break;
        if (k == pivots_.size()) break;
        sparse_axpy(r, -r.front().second, rows_[k]);
    }
    return r;
}

bool SparseRowSpace::insert(SparseRow r) {
    r = residual(std::move(r));
    if (r.empty()) return false;
    Scalar inv = r.front().second.inverse();
    for (auto& e : r) e.second *= inv;
    pivots_.push_back(r.front().first);
    rows_.push_back(std::move(r));
    return true;
}

std::vector<SparseRow> sparse_nullspace(const std::vector<SparseRow>& rows, uint32_t cols) {
    // forward elimination into pivot-indexed rows with unit pivots
    std::map<uint32_t, SparseRow> pivot_rows;
    for (const auto& row0 : rows) {
        SparseRow r = row0;
        while (!r.empty()) {
            auto it = pivot_rows.find(r.front().first);
            if (it == pivot_rows.end()) break;
            sparse_axpy(r, -r.front().second, it->second);
        }
        if (r.empty()) continue;
        Scalar inv = r.front().second.inverse();
        for (auto& e : r) e.second *= inv;
        uint32_t piv = r.front().first;
        pivot_rows.emplace(piv, std::move(r));
    }
    // back substitution in decreasing pivot order; after this every row is
    // zero on all pivot columns other than its own
    for (auto it = pivot_rows.rbegin(); it != pivot_rows.rend(); ++it) {
        SparseRow& r = it->second;
        bool again = true;
        while (again) {
            again = false;
            for (size_t m = 1; m < r.size(); ++m) {
                auto jt = pivot_rows.find(r[m].first);
                if (jt != pivot_rows.end()) {
                    sparse_axpy(r, -r[m].second, jt->second);
                    again = true;
                    break;
                }
            }
        }
    }
    // free columns generate the kernel
    std::vector<bool> is_pivot(cols, false);
    for (const auto& [p, row] : pivot_rows) is_pivot[p] = true;
    std::vector<SparseRow> kernel;
    for (uint32_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        SparseRow v;
        for (const auto& [p, row] : pivot_rows)
            for (const auto& [c, coeff] : row)
                if (c == f) v.emplace_back(p, -coeff);
        v.emplace_back(f, Scalar(1));
        std::sort(v.begin(), v.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        kernel.push_back(std::move(v));
    }
    return kernel;
}

} // namespace cliffpair
