#include "cliffpair/clifford.hpp"

#include <bit>
#include <functional>
#include <stdexcept>

namespace cliffpair {

Multivector cliff_mul(const Multivector& a, const Multivector& b) {
    if (a.space() != b.space()) throw std::invalid_argument("cliff_mul: space mismatch");
    const QuadraticSpace* sp = a.space();
    if (!sp) return Multivector();

    std::map<Multivector::Mask, Multivector> memo;
    memo.emplace(0, b);

    std::function<const Multivector&(Multivector::Mask)> go =
        [&](Multivector::Mask m) -> const Multivector& {
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
        int i = std::countr_zero(m);
        Multivector::Mask rest = m & (m - 1);
        const Multivector X = go(rest); // copy: recursion below may insert
        std::vector<Scalar> ei(sp->dim());
        ei[i] = Scalar(1);
        Multivector Y = wedge(Multivector::basis_vector(sp, i), X);
        Y += contract_vec(ei, X);
        // subtract mul(iota_{e_i}(rest monomial), b)
        Multivector::Mask mm = rest;
        int pos = 0;
        while (mm) {
            int j = std::countr_zero(mm);
            mm &= mm - 1;
            const Scalar& g = sp->B(i, j);
            if (!g.is_zero()) {
                Scalar c = (pos & 1) ? -g : g;
                Multivector sub = go(rest & ~(Multivector::Mask(1) << j));
                sub *= c;
                Y -= sub;
            }
            ++pos;
        }
        return memo.emplace(m, std::move(Y)).first->second;
    };

    Multivector out(sp);
    for (const auto& [ma, ca] : a.terms()) {
        Multivector t = go(ma);
        t *= ca;
        out += t;
    }
    return out;
}

QuadraticSpace make_g_space(const LieAlgebra& g) {
    return QuadraticSpace(g.gram(), g.labels());
}

PairContext::PairContext(const SymmetricPair& pair) : pair_(&pair) {
    const LieAlgebra& g = pair.g();
    size_t dp = pair.dim_p(), dk = pair.dim_k();

    Matrix gp(dp, dp);
    std::vector<std::string> plabels;
    for (size_t i = 0; i < dp; ++i) {
        plabels.push_back(g.labels()[pair.pIdx()[i]]);
        for (size_t j = 0; j < dp; ++j) gp.at(i, j) = g.gram().at(pair.pIdx()[i], pair.pIdx()[j]);
    }
    pspace_ = QuadraticSpace(std::move(gp), std::move(plabels));
    gspace_ = make_g_space(g);

    for (size_t k = 0; k < dk; ++k) {
        Matrix m(dp, dp);
        for (size_t j = 0; j < dp; ++j)
            for (const auto& [l, c] : g.bracket(pair.kIdx()[k], pair.pIdx()[j])) {
                if (l < dk) throw std::logic_error("PairContext: [k,p] escapes p");
                m.at(l - dk, j) = c;
            }
        adP_.push_back(std::move(m));
    }

    // alpha(X) = 1/4 sum_i ([X, e_i]) * f_i with f_i the B|p-dual basis
    Scalar quarter(1, 4);
    for (size_t k = 0; k < dk; ++k) {
        Multivector acc(&pspace_);
        for (size_t i = 0; i < dp; ++i) {
            Multivector bx(&pspace_);
            for (size_t l = 0; l < dp; ++l) bx.add_term(Multivector::Mask(1) << l, adP_[k].at(l, i));
            if (bx.is_zero()) continue;
            Multivector fi(&pspace_);
            for (size_t l = 0; l < dp; ++l)
                fi.add_term(Multivector::Mask(1) << l, pspace_.gram_inverse().at(l, i));
            acc += cliff_mul(bx, fi);
        }
        acc *= quarter;
        alpha_.push_back(std::move(acc));
    }
}

const std::vector<Scalar>& PairContext::p_weight(size_t i) const {
    return pair_->t_weight(pair_->pIdx()[i]);
}

Multivector PairContext::alpha(const std::vector<Scalar>& xk) const {
    if (xk.size() != pair_->dim_k()) throw std::invalid_argument("alpha: expected k coordinates");
    Multivector out(&pspace_);
    for (size_t k = 0; k < xk.size(); ++k) {
        if (xk[k].is_zero()) continue;
        Multivector t = alpha_[k];
        t *= xk[k];
        out += t;
    }
    return out;
}

std::vector<Matrix> PairContext::group_generators_p() const {
    std::vector<Matrix> out;
    size_t dk = pair_->dim_k(), dp = pair_->dim_p();
    for (const Matrix& gen : pair_->group_generators()) {
        Matrix m(dp, dp);
        for (size_t i = 0; i < dp; ++i)
            for (size_t j = 0; j < dp; ++j) m.at(i, j) = gen.at(dk + i, dk + j);
        out.push_back(std::move(m));
    }
    return out;
}

Multivector cartan_three_tensor(const LieAlgebra& g, const QuadraticSpace* gspace) {
    size_t d = g.dim();
    Scalar quarter(1, 4), third(1, 3);
    auto lambda = [&](size_t i) {
        Multivector acc(gspace);
        for (size_t j = 0; j < d; ++j) {
            Multivector br(gspace);
            for (const auto& [l, c] : g.bracket(i, j)) br.add_term(Multivector::Mask(1) << l, c);
            if (br.is_zero()) continue;
            Multivector fj = Multivector::from_vector(gspace, g.dual_basis_vector(j));
            acc += wedge(br, fj);
        }
        acc *= quarter;
        return acc;
    };
    Multivector phi(gspace);
    for (size_t i = 0; i < d; ++i) {
        Multivector li = lambda(i);
        if (li.is_zero()) continue;
        Multivector fi = Multivector::from_vector(gspace, g.dual_basis_vector(i));
        phi += wedge(li, fi);
    }
    phi *= third;
    return phi;
}

} // namespace cliffpair
