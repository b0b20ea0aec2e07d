#include "cliffpair/multivector.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace cliffpair {

QuadraticSpace::QuadraticSpace(Matrix gram, std::vector<std::string> labels)
    : gram_(std::move(gram)), labels_(std::move(labels)) {
    if (gram_.rows() != labels_.size() || gram_.cols() != labels_.size())
        throw std::invalid_argument("QuadraticSpace: gram/label size mismatch");
    for (size_t i = 0; i < labels_.size(); ++i)
        for (size_t j = i + 1; j < labels_.size(); ++j)
            if (!(gram_.at(i, j) == gram_.at(j, i)))
                throw std::invalid_argument("QuadraticSpace: gram not symmetric");
    auto inv = gram_.inverse();
    if (!inv) throw std::invalid_argument("QuadraticSpace: gram degenerate");
    gram_inv_ = *inv;
}

Multivector Multivector::scalar(const QuadraticSpace* space, const Scalar& c) {
    Multivector m(space);
    m.add_term(0, c);
    return m;
}

Multivector Multivector::basis_vector(const QuadraticSpace* space, size_t i) {
    Multivector m(space);
    m.add_term(Mask(1) << i, Scalar(1));
    return m;
}

Multivector Multivector::monomial(const QuadraticSpace* space, Mask mask, const Scalar& c) {
    Multivector m(space);
    m.add_term(mask, c);
    return m;
}

Multivector Multivector::from_vector(const QuadraticSpace* space, const std::vector<Scalar>& v) {
    Multivector m(space);
    for (size_t i = 0; i < v.size(); ++i) m.add_term(Mask(1) << i, v[i]);
    return m;
}

int Multivector::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, std::popcount(m));
    return d;
}

bool Multivector::is_homogeneous() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int k = std::popcount(m);
        if (d == -1) d = k;
        else if (d != k) return false;
    }
    return true;
}

Scalar Multivector::coeff(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

Multivector Multivector::graded_part(int k) const {
    Multivector out(space_);
    for (const auto& [m, c] : terms_)
        if (std::popcount(m) == k) out.terms_.emplace(m, c);
    return out;
}

void Multivector::add_term(Mask m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Multivector& Multivector::operator+=(const Multivector& o) {
    if (!space_) space_ = o.space_;
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
    if (!space_) space_ = o.space_;
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Multivector& Multivector::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

std::string Multivector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        Mask mm = m;
        bool firstgen = true;
        while (mm) {
            int i = std::countr_zero(mm);
            mm &= mm - 1;
            os << (firstgen ? "*" : "^");
            firstgen = false;
            if (space_ && static_cast<size_t>(i) < space_->labels().size())
                os << space_->labels()[i];
            else
                os << "e" << (i + 1);
        }
    }
    return os.str();
}

int wedge_sign(Multivector::Mask a, Multivector::Mask b) {
    // parity of the number of (x in a, y in b) pairs with x > y
    int parity = 0;
    Multivector::Mask bb = b;
    while (bb) {
        int j = std::countr_zero(bb);
        bb &= bb - 1;
        parity ^= std::popcount(a >> (j + 1)) & 1;
    }
    return parity ? -1 : 1;
}

Multivector wedge(const Multivector& a, const Multivector& b) {
    if (a.space() != b.space()) throw std::invalid_argument("wedge: space mismatch");
    Multivector out(a.space());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            if (ma & mb) continue;
            Scalar c = ca * cb;
            if (wedge_sign(ma, mb) < 0) c = -c;
            out.add_term(ma | mb, c);
        }
    return out;
}

Multivector contract_vec(const std::vector<Scalar>& v, const Multivector& a) {
    const QuadraticSpace* sp = a.space();
    if (!sp) return a;
    if (v.size() != sp->dim()) throw std::invalid_argument("contract: vector length mismatch");
    // Bv[j] = B(v, e_j)
    std::vector<Scalar> Bv(sp->dim());
    for (size_t i = 0; i < sp->dim(); ++i) {
        if (v[i].is_zero()) continue;
        for (size_t j = 0; j < sp->dim(); ++j) {
            const Scalar& g = sp->B(i, j);
            if (!g.is_zero()) Bv[j] += v[i] * g;
        }
    }
    Multivector out(sp);
    for (const auto& [m, c] : a.terms()) {
        Multivector::Mask mm = m;
        int pos = 0;
        while (mm) {
            int j = std::countr_zero(mm);
            mm &= mm - 1;
            if (!Bv[j].is_zero()) {
                Scalar term = c * Bv[j];
                if (pos & 1) term = -term;
                out.add_term(m & ~(Multivector::Mask(1) << j), term);
            }
            ++pos;
        }
    }
    return out;
}

Multivector contract_ext(const Multivector& a, const Multivector& b) {
    if (a.space() != b.space()) throw std::invalid_argument("contract_ext: space mismatch");
    const QuadraticSpace* sp = a.space();
    Multivector out(sp);
    for (const auto& [ma, ca] : a.terms()) {
        // iota_{e_{i1}^...^e_{ik}} = iota_{e_{i1}} o ... o iota_{e_{ik}}:
        // apply the highest generator first
        Multivector cur = b;
        Multivector::Mask mm = ma;
        while (mm && !cur.is_zero()) {
            int top = 63 - std::countl_zero(mm);
            mm &= ~(Multivector::Mask(1) << top);
            std::vector<Scalar> v(sp->dim());
            v[top] = Scalar(1);
            cur = contract_vec(v, cur);
        }
        cur *= ca;
        out += cur;
    }
    return out;
}

Multivector transpose(const Multivector& a) {
    Multivector out(a.space());
    for (const auto& [m, c] : a.terms()) {
        int k = std::popcount(m);
        bool neg = ((k * (k - 1)) / 2) & 1;
        out.add_term(m, neg ? -c : c);
    }
    return out;
}

Scalar form_B(const Multivector& a, const Multivector& b) {
    return contract_ext(transpose(a), b).scalar_part();
}

Scalar form_Btilde(const Multivector& a, const Multivector& b) {
    return contract_ext(a, b).scalar_part();
}

Multivector derivation_extend(const Matrix& m, const Multivector& a) {
    const QuadraticSpace* sp = a.space();
    Multivector out(sp);
    for (const auto& [mask, c] : a.terms()) {
        Multivector::Mask mm = mask;
        while (mm) {
            int j = std::countr_zero(mm);
            mm &= mm - 1;
            // replace slot j by its image
            for (size_t i = 0; i < sp->dim(); ++i) {
                const Scalar& mij = m.at(i, j);
                if (mij.is_zero()) continue;
                Multivector::Mask rest = mask & ~(Multivector::Mask(1) << j);
                Multivector::Mask bit = Multivector::Mask(1) << i;
                if (rest & bit) continue;
                // pull e_j to the front, substitute e_i, and re-sort
                int pos_j = std::popcount(mask & ((Multivector::Mask(1) << j) - 1));
                int pos_i = std::popcount(rest & ((Multivector::Mask(1) << i) - 1));
                Scalar coeff = c * mij;
                if ((pos_j + pos_i) & 1) coeff = -coeff;
                out.add_term(rest | bit, coeff);
            }
        }
    }
    return out;
}

Multivector group_act(const Matrix& m, const Multivector& a) {
    const QuadraticSpace* sp = a.space();
    // automorphism precondition: M^T G M = G
    if (!(m.transposed() * sp->gram() * m == sp->gram()))
        throw std::invalid_argument("group_act: matrix does not preserve B");
    std::vector<Multivector> images;
    for (size_t j = 0; j < sp->dim(); ++j) {
        Multivector v(sp);
        for (size_t i = 0; i < sp->dim(); ++i) v.add_term(Multivector::Mask(1) << i, m.at(i, j));
        images.push_back(std::move(v));
    }
    Multivector out(sp);
    for (const auto& [mask, c] : a.terms()) {
        Multivector prod = Multivector::scalar(sp, c);
        Multivector::Mask mm = mask;
        while (mm) {
            int j = std::countr_zero(mm);
            mm &= mm - 1;
            prod = wedge(prod, images[j]);
        }
        out += prod;
    }
    return out;
}

SparseRow MonomialSpan::project(const Multivector& v, bool grow) {
    SparseRow r;
    for (const auto& [m, c] : v.terms()) {
        auto it = coord_.find(m);
        if (it == coord_.end()) {
            if (!grow) return {};
            it = coord_.emplace(m, (uint32_t)coord_.size()).first;
        }
        r.emplace_back(it->second, c);
    }
    std::sort(r.begin(), r.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
}

bool MonomialSpan::insert(const Multivector& v) { return space_.insert(project(v, true)); }

bool MonomialSpan::contains(const Multivector& v) const {
    SparseRow r;
    for (const auto& [m, c] : v.terms()) {
        auto it = coord_.find(m);
        if (it == coord_.end()) return false;
        r.emplace_back(it->second, c);
    }
    std::sort(r.begin(), r.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return space_.residual(std::move(r)).empty();
}

} // namespace cliffpair
