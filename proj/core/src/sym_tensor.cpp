#include "cliffpair/sym_tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace cliffpair {

namespace {

// polynomial in the coordinate functions, monomial multiset -> coefficient
using Poly = std::map<MultiIndex, Scalar>;

void poly_add(Poly& p, const MultiIndex& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = p.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

MultiIndex merge_sorted(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) poly_add(out, merge_sorted(ma, mb), ca * cb);
    return out;
}

} // namespace

Scalar arrangement_count(const MultiIndex& s) {
    mpq_class n = 1;
    for (size_t k = 2; k <= s.size(); ++k) n *= (long)k;
    size_t run = 1;
    mpq_class d = 1;
    for (size_t k = 1; k <= s.size(); ++k) {
        if (k < s.size() && s[k] == s[k - 1]) {
            ++run;
            d *= (long)run;
        } else {
            run = 1;
        }
    }
    return Scalar(n / d);
}

void SymmetricTensor::add_term(MultiIndex idx, const Scalar& c) {
    if (c.is_zero()) return;
    if ((int)idx.size() != degree_) throw std::invalid_argument("SymmetricTensor: degree mismatch");
    std::sort(idx.begin(), idx.end());
    auto [it, fresh] = terms_.emplace(std::move(idx), c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar SymmetricTensor::coeff(const MultiIndex& idx) const {
    MultiIndex s = idx;
    std::sort(s.begin(), s.end());
    auto it = terms_.find(s);
    return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar SymmetricTensor::poly_coeff(const MultiIndex& idx) const {
    MultiIndex s = idx;
    std::sort(s.begin(), s.end());
    auto it = terms_.find(s);
    return it == terms_.end() ? Scalar(0) : it->second * arrangement_count(s);
}

bool SymmetricTensor::is_invariant() const {
    const LieAlgebra& g = *g_;
    for (size_t b = 0; b < g.dim(); ++b) {
        // X.f = sum_i (X.x_i) d_i f with X.x_i = -sum_l (e_i component of [X, e_l]) x_l
        Poly acted;
        for (const auto& [s, t] : terms_) {
            Scalar a = t * arrangement_count(s);
            for (size_t pos = 0; pos < s.size(); ++pos) {
                if (pos > 0 && s[pos] == s[pos - 1]) continue;
                uint32_t i = s[pos];
                Scalar mult(0);
                for (uint32_t q : s)
                    if (q == i) mult += Scalar(1);
                MultiIndex rest;
                bool skipped = false;
                for (uint32_t q : s) {
                    if (q == i && !skipped) {
                        skipped = true;
                        continue;
                    }
                    rest.push_back(q);
                }
                // d_i f contributes a * mult on the monomial 'rest'
                for (size_t l = 0; l < g.dim(); ++l)
                    for (const auto& [comp, c] : g.bracket(b, l)) {
                        if (comp != i) continue;
                        MultiIndex m = rest;
                        m.push_back((uint32_t)l);
                        std::sort(m.begin(), m.end());
                        poly_add(acted, m, -(c * a * mult));
                    }
            }
        }
        if (!acted.empty()) return false;
    }
    return true;
}

SymmetricTensor SymmetricTensor::product(const SymmetricTensor& o) const {
    if (g_ != o.g_) throw std::invalid_argument("SymmetricTensor: algebra mismatch");
    SymmetricTensor out(g_, degree_ + o.degree_);
    Poly pa, pb;
    for (const auto& [s, t] : terms_) pa.emplace(s, t * arrangement_count(s));
    for (const auto& [s, t] : o.terms_) pb.emplace(s, t * arrangement_count(s));
    Poly pc = poly_mul(pa, pb);
    for (const auto& [s, c] : pc) out.add_term(s, c / arrangement_count(s));
    return out;
}

SymmetricTensor power_sum(const LieAlgebra& g, int k) {
    if (k < 2) throw std::invalid_argument("power_sum: degree must be at least 2");
    size_t N = g.rep_dim();
    // M = sum_i x_i rep(e_i) with polynomial entries; accumulate M^k and trace
    std::vector<Poly> M(N * N), P;
    for (size_t i = 0; i < g.dim(); ++i) {
        const Matrix& r = g.rep(i);
        for (size_t a = 0; a < N; ++a)
            for (size_t b = 0; b < N; ++b)
                if (!r.at(a, b).is_zero()) poly_add(M[a * N + b], MultiIndex{(uint32_t)i}, r.at(a, b));
    }
    P = M;
    for (int step = 1; step < k; ++step) {
        std::vector<Poly> Q(N * N);
        for (size_t a = 0; a < N; ++a)
            for (size_t c = 0; c < N; ++c) {
                if (P[a * N + c].empty()) continue;
                for (size_t b = 0; b < N; ++b) {
                    if (M[c * N + b].empty()) continue;
                    Poly t = poly_mul(P[a * N + c], M[c * N + b]);
                    for (const auto& [m, co] : t) poly_add(Q[a * N + b], m, co);
                }
            }
        P = std::move(Q);
    }
    Poly tr;
    for (size_t a = 0; a < N; ++a)
        for (const auto& [m, co] : P[a * N + a]) poly_add(tr, m, co);
    SymmetricTensor out(&g, k);
    for (const auto& [s, c] : tr) out.add_term(s, c / arrangement_count(s));
    return out;
}

SymmetricTensor restrict_to_k(const SymmetricPair& pair, const SymmetricTensor& P) {
    SymmetricTensor out(P.algebra(), P.degree());
    for (const auto& [s, c] : P.terms()) {
        bool allk = true;
        for (uint32_t i : s)
            if (!pair.in_k(i)) {
                allk = false;
                break;
            }
        if (allk) out.add_term(s, c);
    }
    return out;
}

SymmetricTensor theta_pullback(const SymmetricPair& pair, const SymmetricTensor& P) {
    SymmetricTensor out(P.algebra(), P.degree());
    for (const auto& [s, c] : P.terms()) {
        Scalar sign(1);
        for (uint32_t i : s) sign *= pair.theta().at(i, i);
        out.add_term(s, c * sign);
    }
    return out;
}

} // namespace cliffpair
