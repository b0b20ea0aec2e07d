#pragma once

#include "cliffpair/linalg.hpp"
#include "cliffpair/scalar.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cliffpair {

// Quadratic space: dimension, symmetric nondegenerate Gram matrix, labels.
class QuadraticSpace {
public:
    QuadraticSpace() = default;
    QuadraticSpace(Matrix gram, std::vector<std::string> labels);

    size_t dim() const { return labels_.size(); }
    const Matrix& gram() const { return gram_; }
    const Matrix& gram_inverse() const { return gram_inv_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Scalar& B(size_t i, size_t j) const { return gram_.at(i, j); }

private:
    Matrix gram_, gram_inv_;
    std::vector<std::string> labels_;
};

// Sparse multivector: bitmask (ascending basis monomial) -> coefficient.
// Also serves as the symbol of a Clifford element (Chevalley identification).
class Multivector {
public:
    using Mask = uint64_t;
    using Terms = std::map<Mask, Scalar>;

    Multivector() : space_(nullptr) {}
    explicit Multivector(const QuadraticSpace* space) : space_(space) {}
    static Multivector scalar(const QuadraticSpace* space, const Scalar& c);
    static Multivector basis_vector(const QuadraticSpace* space, size_t i);
    static Multivector monomial(const QuadraticSpace* space, Mask m, const Scalar& c);
    static Multivector from_vector(const QuadraticSpace* space, const std::vector<Scalar>& v);

    const QuadraticSpace* space() const { return space_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    // top filtration degree (max popcount); -1 when zero
    int degree() const;
    bool is_homogeneous() const;
    Scalar coeff(Mask m) const;
    Scalar scalar_part() const { return coeff(0); }
    Multivector graded_part(int k) const;

    void add_term(Mask m, const Scalar& c);
    Multivector& operator+=(const Multivector& o);
    Multivector& operator-=(const Multivector& o);
    Multivector& operator*=(const Scalar& c);
    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator*(Multivector a, const Scalar& c) { return a *= c; }
    bool operator==(const Multivector& o) const { return terms_ == o.terms_; }

    std::string str() const;

private:
    const QuadraticSpace* space_;
    Terms terms_;
};

// sign of merging monomial b past monomial a (both masks, disjoint)
int wedge_sign(Multivector::Mask a, Multivector::Mask b);

Multivector wedge(const Multivector& a, const Multivector& b);
// contraction by a vector given as coordinates
Multivector contract_vec(const std::vector<Scalar>& v, const Multivector& a);
// contraction by a degree-<=1 multivector or by a general multivector
// extended via iota_{x^y} = iota_x o iota_y
Multivector contract_ext(const Multivector& a, const Multivector& b);
// transpose anti-automorphism: (-1)^{k(k-1)/2} on degree k
Multivector transpose(const Multivector& a);
Scalar form_B(const Multivector& a, const Multivector& b);
Scalar form_Btilde(const Multivector& a, const Multivector& b);

// derivation extension of a linear map given by a matrix on the space
Multivector derivation_extend(const Matrix& m, const Multivector& a);
// algebra automorphism extension of an invertible B-preserving matrix
Multivector group_act(const Matrix& m, const Multivector& a);

// incremental span of multivectors over an on-demand monomial coordinate map
class MonomialSpan {
public:
    // eliminate against the span; true when v was independent (and kept)
    bool insert(const Multivector& v);
    bool contains(const Multivector& v) const;
    size_t dim() const { return space_.dim(); }

private:
    SparseRow project(const Multivector& v, bool grow);
    std::map<Multivector::Mask, uint32_t> coord_;
    SparseRowSpace space_;
};

} // namespace cliffpair
