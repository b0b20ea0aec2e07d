#pragma once

#include "cliffpair/multivector.hpp"
#include "cliffpair/symmetric_pair.hpp"

namespace cliffpair {

// Clifford product of symbols (Chevalley identification): the recursion
// peels the least-index generator of the left factor,
//   mul(e_i^m, b) = (eps_{e_i} + iota_{e_i})(mul(m, b)) - mul(iota_{e_i}m, b).
Multivector cliff_mul(const Multivector& a, const Multivector& b);

// Cached quadratic spaces and moment-map data for one symmetric pair.
class PairContext {
public:
    explicit PairContext(const SymmetricPair& pair);

    const SymmetricPair& pair() const { return *pair_; }
    const QuadraticSpace* p_space() const { return &pspace_; }
    const QuadraticSpace* g_space() const { return &gspace_; }

    // ad of the k-basis element (local index) restricted to p, local coords
    const Matrix& ad_p(size_t kLocal) const { return adP_[kLocal]; }
    // t-weight of local p coordinate i
    const std::vector<Scalar>& p_weight(size_t i) const;

    // moment map of the k-basis element, a degree-<=2 Clifford element of Cl(p)
    const Multivector& alpha_basis(size_t kLocal) const { return alpha_[kLocal]; }
    Multivector alpha(const std::vector<Scalar>& xk) const;

    // group generator action restricted to p (local coords)
    std::vector<Matrix> group_generators_p() const;

private:
    const SymmetricPair* pair_;
    QuadraticSpace pspace_, gspace_;
    std::vector<Matrix> adP_;
    std::vector<Multivector> alpha_;
};

// phi = 1/3 sum_i lambda_g(e_i) ^ F_i, a g-invariant 3-form on g
Multivector cartan_three_tensor(const LieAlgebra& g, const QuadraticSpace* gspace);

// helper: the quadratic space of a whole Lie algebra (gram = trace form)
QuadraticSpace make_g_space(const LieAlgebra& g);

} // namespace cliffpair
