#include "cliffpair/symmetric_pair.hpp"

#include <algorithm>
#include <stdexcept>

namespace cliffpair {

namespace {

// lexicographic sign of a rational vector: +1, -1, or 0
int lex_sign(const std::vector<Scalar>& v) {
    for (const auto& c : v) {
        if (c.re() > 0) return 1;
        if (c.re() < 0) return -1;
    }
    return 0;
}

} // namespace

SymmetricPair SymmetricPair::build(PairFamily family, size_t n) {
    if (family == PairFamily::AI && n < 3)
        throw std::invalid_argument("build_pair: AI needs n >= 3");
    if (family == PairFamily::AII && (n < 4 || n % 2 != 0))
        throw std::invalid_argument("build_pair: AII needs even n >= 4");

    auto sigma = [n](size_t i) { return n - 1 - i; }; // 0-based flip
    auto sgn = [&](size_t i) { return (family == PairFamily::AII && i >= n / 2) ? -1 : 1; };
    // theta(E_ij) = eps(i,j) * E_{sigma(j), sigma(i)}
    auto eps = [&](size_t i, size_t j) {
        return family == PairFamily::AI ? -1 : sgn(i) * sgn(sigma(j));
    };

    size_t nt = n / 2;          // dim t
    size_t na = (n + 1) / 2 - 1; // dim a

    std::vector<std::string> labels;
    std::vector<Matrix> rep;
    auto unit = [&](size_t i, size_t j) {
        Matrix m(n, n);
        m.at(i, j) = Scalar(1);
        return m;
    };

    // k block: t-basis first, then the k root vectors
    for (size_t r = 0; r < nt; ++r) {
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
            int e = eps(i, j);
            if (std::make_pair(i, j) == std::make_pair(oi, oj)) {
                // theta-fixed matrix unit: in k iff eps = +1
                if (e == 1) {
                    labels.push_back("K" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
                    rep.push_back(unit(i, j));
                }
                continue;
            }
            if (std::make_pair(oi, oj) < std::make_pair(i, j)) continue;
            Matrix m(n, n);
            m.at(i, j) = Scalar(1);
            m.at(oi, oj) = Scalar(e);
            labels.push_back("K" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
            rep.push_back(std::move(m));
        }
    size_t dimk = rep.size();

    // p block: a-basis first, then the p root vectors
    for (size_t r = 0; r < na; ++r) {
        labels.push_back("A" + std::to_string(r + 1));
        Matrix m(n, n);
        m.at(r, r) = m.at(r, r) + Scalar(1);
        m.at(sigma(r), sigma(r)) = m.at(sigma(r), sigma(r)) + Scalar(1);
        m.at(r + 1, r + 1) = m.at(r + 1, r + 1) - Scalar(1);
        m.at(sigma(r + 1), sigma(r + 1)) = m.at(sigma(r + 1), sigma(r + 1)) - Scalar(1);
        rep.push_back(std::move(m));
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            size_t oi = sigma(j), oj = sigma(i);
            int e = eps(i, j);
            if (std::make_pair(i, j) == std::make_pair(oi, oj)) {
                if (e == -1) {
                    labels.push_back("P" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
                    rep.push_back(unit(i, j));
                }
                continue;
            }
            if (std::make_pair(oi, oj) < std::make_pair(i, j)) continue;
            Matrix m(n, n);
            m.at(i, j) = Scalar(1);
            m.at(oi, oj) = Scalar(-e);
            labels.push_back("P" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
            rep.push_back(std::move(m));
        }

    SymmetricPair pair;
    pair.family_ = family;
    pair.g_ = LieAlgebra::from_rep(
        family == PairFamily::AI
            ? "sl(" + std::to_string(n) + ")/so(" + std::to_string(n) + ")"
            : "sl(" + std::to_string(n) + ")/sp(" + std::to_string(n) + ")",
        std::move(labels), std::move(rep));
    size_t dim = pair.g_.dim();

    for (size_t i = 0; i < dimk; ++i) pair.kIdx_.push_back(i);
    for (size_t i = dimk; i < dim; ++i) pair.pIdx_.push_back(i);
    for (size_t i = 0; i < nt; ++i) pair.tIdx_.push_back(i);
    for (size_t i = 0; i < na; ++i) pair.aIdx_.push_back(dimk + i);

    pair.theta_ = Matrix(dim, dim);
    for (size_t i = 0; i < dim; ++i) pair.theta_.at(i, i) = Scalar(i < dimk ? 1 : -1);

    // t-weights: each non-Cartan basis vector is an ad(T_r) eigenvector
    pair.tWeights_.assign(dim, std::vector<Scalar>(nt));
    for (size_t v = 0; v < dim; ++v) {
        for (size_t r = 0; r < nt; ++r) {
            const SparseRow& br = pair.g_.bracket(r, v);
            if (br.empty()) continue;
            if (br.size() != 1 || br.front().first != v)
                throw std::logic_error("SymmetricPair: basis is not ad(t)-diagonal");
            pair.tWeights_[v][r] = br.front().second;
        }
    }

    // positive systems: lexicographic on t-weights; for (sl(2n), o(2n)) a
    // second system with the last coordinate sign-flipped
    size_t nSystems = (family == PairFamily::AI && n % 2 == 0) ? 2 : 1;
    for (size_t w = 0; w < nSystems; ++w) {
        PosSystem ps;
        std::vector<uint32_t> minusPool;
        for (uint32_t idx : pair.pIdx_) {
            if (static_cast<size_t>(idx - dimk) < na) continue; // a-part
            std::vector<Scalar> wt = pair.tWeights_[idx];
            if (w == 1) wt[nt - 1] = -wt[nt - 1];
            int s = lex_sign(wt);
            if (s == 0) throw std::logic_error("SymmetricPair: zero-weight p root vector");
            if (s > 0) ps.plus.push_back(idx);
            else minusPool.push_back(idx);
        }
        for (uint32_t e : ps.plus) {
            uint32_t mate = 0;
            Scalar pairing;
            size_t found = 0;
            for (uint32_t f : minusPool) {
                const Scalar& b = pair.g_.gram().at(e, f);
                if (!b.is_zero()) {
                    mate = f;
                    pairing = b;
                    ++found;
                }
            }
            if (found != 1) throw std::logic_error("SymmetricPair: dual pairing is not a scaled permutation");
            ps.minus.push_back(mate);
            ps.dualScale.push_back(pairing.inverse());
        }
        pair.posSystems_.push_back(std::move(ps));
    }

    // component group of K: for (sl(2n), o(2n)) the Ad action of the
    // permutation swapping the two middle indices (the antidiagonal-form
    // conjugate of diag(1,...,1,-1)), which has determinant -1 in O(2n)
    if (family == PairFamily::AI && n % 2 == 0) {
        Matrix P = Matrix::identity(n);
        size_t m1 = n / 2 - 1, m2 = n / 2;
        P.at(m1, m1) = Scalar(0);
        P.at(m2, m2) = Scalar(0);
        P.at(m1, m2) = Scalar(1);
        P.at(m2, m1) = Scalar(1);
        // Ad(P) on g expanded in the adapted basis
        Matrix adP(dim, dim);
        // coordinates via the trace form: coeff_i = sum_j Ginv[i][j] * tr(PXP^-1 * rep_j)
        for (size_t v = 0; v < dim; ++v) {
            Matrix img = P * pair.g_.rep(v) * P; // P is an involution
            std::vector<Scalar> tr(dim);
            for (size_t j = 0; j < dim; ++j) {
                Scalar t;
                for (size_t r = 0; r < n; ++r)
                    for (size_t c = 0; c < n; ++c)
                        if (!img.at(r, c).is_zero() && !pair.g_.rep(j).at(c, r).is_zero())
                            t += img.at(r, c) * pair.g_.rep(j).at(c, r);
                tr[j] = t;
            }
            std::vector<Scalar> coords = pair.g_.gram_inverse().apply(tr);
            for (size_t i = 0; i < dim; ++i) adP.at(i, v) = coords[i];
        }
        pair.groupGenerators_.push_back(std::move(adP));
    }

    return pair;
}

std::vector<Scalar> SymmetricPair::half_weight_sum(size_t w) const {
    if (w >= posSystems_.size()) throw std::invalid_argument("half_weight_sum: no such positive system");
    std::vector<Scalar> s(dim_t());
    for (uint32_t idx : posSystems_[w].plus)
        for (size_t r = 0; r < dim_t(); ++r) s[r] += tWeights_[idx][r];
    Scalar half(1, 2);
    for (auto& c : s) c *= half;
    return s;
}

size_t SymmetricPair::p_local(uint32_t globalIdx) const {
    if (globalIdx < kIdx_.size() || globalIdx >= g_.dim())
        throw std::invalid_argument("p_local: index not in p");
    return globalIdx - kIdx_.size();
}

} // namespace cliffpair
