#include "cliffpair/lie_algebra.hpp"

#include <stdexcept>

namespace cliffpair {

namespace {

Matrix unit_matrix(size_t N, size_t i, size_t j) {
    Matrix m(N, N);
    m.at(i, j) = Scalar(1);
    return m;
}

Scalar trace_prod(const Matrix& a, const Matrix& b) {
    Scalar t;
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k)
            if (!a.at(i, k).is_zero() && !b.at(k, i).is_zero()) t += a.at(i, k) * b.at(k, i);
    return t;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
    return a * b - b * a;
}

} // namespace

LieAlgebra LieAlgebra::from_rep(std::string name, std::vector<std::string> labels,
                                std::vector<Matrix> rep) {
    LieAlgebra g;
    g.name_ = std::move(name);
    g.labels_ = std::move(labels);
    g.rep_ = std::move(rep);
    if (g.rep_.empty()) throw std::invalid_argument("LieAlgebra: empty basis");
    g.repN_ = g.rep_[0].rows();
    size_t d = g.rep_.size();
    size_t N = g.repN_;

    g.gram_ = Matrix(d, d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i; j < d; ++j) {
            Scalar t = trace_prod(g.rep_[i], g.rep_[j]);
            g.gram_.at(i, j) = t;
            g.gram_.at(j, i) = t;
        }
    auto inv = g.gram_.inverse();
    if (!inv) throw std::invalid_argument("LieAlgebra: degenerate trace form");
    g.gram_inv_ = *inv;

    // expansion operator: coords(m) = (E E^T)^{-1} E m with E the d x N^2
    // matrix of basis coordinates (E E^T is the entrywise Gram of matrices)
    Matrix EG(d, d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i; j < d; ++j) {
            Scalar s;
            for (size_t r = 0; r < N; ++r)
                for (size_t c = 0; c < N; ++c) s += g.rep_[i].at(r, c) * g.rep_[j].at(r, c);
            EG.at(i, j) = s;
            EG.at(j, i) = s;
        }
    auto EGinv = EG.inverse();
    if (!EGinv) throw std::invalid_argument("LieAlgebra: dependent basis matrices");

    auto expand = [&](const Matrix& m) {
        std::vector<Scalar> em(d);
        for (size_t i = 0; i < d; ++i) {
            Scalar s;
            for (size_t r = 0; r < N; ++r)
                for (size_t c = 0; c < N; ++c)
                    if (!g.rep_[i].at(r, c).is_zero() && !m.at(r, c).is_zero())
                        s += g.rep_[i].at(r, c) * m.at(r, c);
            em[i] = s;
        }
        std::vector<Scalar> coords = EGinv->apply(em);
        return coords;
    };

    g.bracket_.resize(d * d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i + 1; j < d; ++j) {
            Matrix c = commutator(g.rep_[i], g.rep_[j]);
            // verify the commutator lies in the span before trusting coords
            std::vector<Scalar> coords = expand(c);
            Matrix recon(N, N);
            for (size_t k = 0; k < d; ++k)
                if (!coords[k].is_zero()) recon = recon + g.rep_[k].scaled(coords[k]);
            if (!(recon == c)) throw std::logic_error("LieAlgebra: bracket leaves basis span");
            SparseRow row, neg;
            for (size_t k = 0; k < d; ++k)
                if (!coords[k].is_zero()) {
                    row.emplace_back(static_cast<uint32_t>(k), coords[k]);
                    neg.emplace_back(static_cast<uint32_t>(k), -coords[k]);
                }
            g.bracket_[i * d + j] = std::move(row);
            g.bracket_[j * d + i] = std::move(neg);
        }
    return g;
}

std::vector<Scalar> LieAlgebra::bracket_vec(const std::vector<Scalar>& x,
                                            const std::vector<Scalar>& y) const {
    size_t d = dim();
    std::vector<Scalar> out(d);
    for (size_t i = 0; i < d; ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < d; ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            for (const auto& [k, v] : bracket(i, j)) out[k] += c * v;
        }
    }
    return out;
}

Matrix LieAlgebra::ad(const std::vector<Scalar>& x) const {
    size_t d = dim();
    Matrix m(d, d);
    for (size_t i = 0; i < d; ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < d; ++j)
            for (const auto& [k, v] : bracket(i, j)) m.at(k, j) += x[i] * v;
    }
    return m;
}

Matrix LieAlgebra::ad_basis(size_t i) const {
    size_t d = dim();
    Matrix m(d, d);
    for (size_t j = 0; j < d; ++j)
        for (const auto& [k, v] : bracket(i, j)) m.at(k, j) += v;
    return m;
}

std::vector<Scalar> LieAlgebra::dual_basis_vector(size_t i) const {
    size_t d = dim();
    std::vector<Scalar> f(d);
    for (size_t j = 0; j < d; ++j) f[j] = gram_inv_.at(j, i);
    return f;
}

bool LieAlgebra::check_antisymmetry() const {
    size_t d = dim();
    for (size_t i = 0; i < d; ++i) {
        if (!bracket(i, i).empty()) return false;
        for (size_t j = 0; j < d; ++j) {
            SparseRow s = bracket(i, j);
            sparse_axpy(s, Scalar(1), bracket(j, i));
            if (!s.empty()) return false;
        }
    }
    return true;
}

bool LieAlgebra::check_jacobi() const {
    size_t d = dim();
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i + 1; j < d; ++j)
            for (size_t k = j + 1; k < d; ++k) {
                std::vector<Scalar> acc(d);
                auto add_term = [&](size_t a, size_t b, size_t c) {
                    for (const auto& [m, v] : bracket(b, c))
                        for (const auto& [l, w] : bracket(a, m)) acc[l] += v * w;
                };
                add_term(i, j, k);
                add_term(j, k, i);
                add_term(k, i, j);
                for (const auto& s : acc)
                    if (!s.is_zero()) return false;
            }
    return true;
}

bool LieAlgebra::check_invariant_form() const {
    size_t d = dim();
    for (size_t x = 0; x < d; ++x)
        for (size_t y = 0; y < d; ++y)
            for (size_t z = 0; z < d; ++z) {
                Scalar s;
                for (const auto& [k, v] : bracket(x, y)) s += v * gram_.at(k, z);
                for (const auto& [k, v] : bracket(x, z)) s += v * gram_.at(y, k);
                if (!s.is_zero()) return false;
            }
    return true;
}

LieAlgebra build_sl(size_t n) {
    if (n < 2) throw std::invalid_argument("build_sl: n must be >= 2");
    std::vector<std::string> labels;
    std::vector<Matrix> rep;
    for (size_t r = 0; r + 1 < n; ++r) {
        labels.push_back("H" + std::to_string(r + 1));
        Matrix m(n, n);
        m.at(r, r) = Scalar(1);
        m.at(r + 1, r + 1) = Scalar(-1);
        rep.push_back(std::move(m));
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            labels.push_back("E" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
            rep.push_back(unit_matrix(n, i, j));
        }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            labels.push_back("E" + std::to_string(j + 1) + "_" + std::to_string(i + 1));
            rep.push_back(unit_matrix(n, j, i));
        }
    return LieAlgebra::from_rep("sl(" + std::to_string(n) + ")", std::move(labels), std::move(rep));
}

// Antidiagonal realizations: sigma(i) = n+1-i (1-based). so(n) consists of
// matrices skew about the antidiagonal; sp(2n) uses the signed flip with
// +1 on the first n antidiagonal slots and -1 on the last n.

LieAlgebra build_so(size_t n) {
    if (n < 3) throw std::invalid_argument("build_so: n must be >= 3");
    auto sigma = [n](size_t i) { return n - 1 - i; }; // 0-based
    std::vector<std::string> labels;
    std::vector<Matrix> rep;
    for (size_t r = 0; r < n / 2; ++r) {
        labels.push_back("T" + std::to_string(r + 1));
        Matrix m(n, n);
        m.at(r, r) = Scalar(1);
        m.at(sigma(r), sigma(r)) = Scalar(-1);
        rep.push_back(std::move(m));
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j || j == sigma(i)) continue;
            // one representative per orbit {(i,j), (sigma(j), sigma(i))}
            size_t oi = sigma(j), oj = sigma(i);
            if (std::make_pair(oi, oj) < std::make_pair(i, j)) continue;
            labels.push_back("K" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
            Matrix m(n, n);
            m.at(i, j) = Scalar(1);
            m.at(oi, oj) = Scalar(-1);
            rep.push_back(std::move(m));
        }
    return LieAlgebra::from_rep("so(" + std::to_string(n) + ")", std::move(labels), std::move(rep));
}

LieAlgebra build_sp(size_t n2) {
    if (n2 < 2 || n2 % 2 != 0) throw std::invalid_argument("build_sp: argument must be even and >= 2");
    size_t n = n2;
    auto sigma = [n](size_t i) { return n - 1 - i; };
    auto sgn = [n](size_t i) { return i < n / 2 ? 1 : -1; };
    std::vector<std::string> labels;
    std::vector<Matrix> rep;
    for (size_t r = 0; r < n / 2; ++r) {
        labels.push_back("T" + std::to_string(r + 1));
        Matrix m(n, n);
        m.at(r, r) = Scalar(1);
        m.at(sigma(r), sigma(r)) = Scalar(-1);
        rep.push_back(std::move(m));
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            size_t oi = sigma(j), oj = sigma(i);
            // theta(E_ij) = eps * E_{oi,oj}; fixed points with eps = +1 are kept
            int eps = sgn(i) * sgn(sigma(j));
            if (std::make_pair(i, j) == std::make_pair(oi, oj)) {
                if (eps != 1) continue; // cannot happen; fixed pairs have eps=1
                labels.push_back("K" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
                rep.push_back(unit_matrix(n, i, j));
                continue;
            }
            if (std::make_pair(oi, oj) < std::make_pair(i, j)) continue;
            labels.push_back("K" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
            Matrix m(n, n);
            m.at(i, j) = Scalar(1);
            m.at(oi, oj) = Scalar(eps);
            rep.push_back(std::move(m));
        }
    return LieAlgebra::from_rep("sp(" + std::to_string(n) + ")", std::move(labels), std::move(rep));
}

} // namespace cliffpair
