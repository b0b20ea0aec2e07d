#pragma once

#include "cliffpair/lie_algebra.hpp"
#include "cliffpair/symmetric_pair.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace cliffpair {

// sorted index multiset
using MultiIndex = std::vector<uint32_t>;

// number of distinct orderings of the multiset, deg! / prod(mult!)
Scalar arrangement_count(const MultiIndex& s);

// Fully symmetrized tensor on the algebra, keyed by index multiset.
// The stored value at a multiset is the tensor evaluated on that tuple;
// the corresponding polynomial coefficient carries the arrangement count.
class SymmetricTensor {
public:
    SymmetricTensor(const LieAlgebra* g, int degree) : g_(g), degree_(degree) {}

    const LieAlgebra* algebra() const { return g_; }
    int degree() const { return degree_; }
    const std::map<MultiIndex, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(MultiIndex idx, const Scalar& c);
    Scalar coeff(const MultiIndex& idx) const;
    Scalar poly_coeff(const MultiIndex& idx) const;

    // the derivation action of every basis element annihilates the tensor
    bool is_invariant() const;

    // symmetric (polynomial) product
    SymmetricTensor product(const SymmetricTensor& o) const;

    bool operator==(const SymmetricTensor& o) const {
        return degree_ == o.degree_ && terms_ == o.terms_;
    }

private:
    const LieAlgebra* g_;
    int degree_;
    std::map<MultiIndex, Scalar> terms_;
};

// symmetrization of (i_1..i_k) -> trace(e_{i_1} ... e_{i_k}) in the
// defining representation
SymmetricTensor power_sum(const LieAlgebra& g, int k);

// polynomial restriction to k: keep multisets supported on kIdx
SymmetricTensor restrict_to_k(const SymmetricPair& pair, const SymmetricTensor& P);

// pullback along theta (diagonal signs in the adapted basis)
SymmetricTensor theta_pullback(const SymmetricPair& pair, const SymmetricTensor& P);

} // namespace cliffpair
