#pragma once

#include "cliffpair/clifford.hpp"
#include "cliffpair/sym_tensor.hpp"

namespace cliffpair {

enum class TransgressTarget { WEDGE, CLIFFORD };

// Transgression of an invariant tensor of degree m+1 into degree 2m+1:
//   t(P) = (m!)^2/(2m+1)! * sum over ordered entries and slot positions of
//          the product of delta-images of all slots except one plain slot,
// with delta(f_i) = -1/2 sum_{a,b} c^i_{ab} F_a ^ F_b.  For the WEDGE
// target the even delta factors commute and the sum collapses over
// multisets; for the CLIFFORD target the written slot order is kept.
Multivector transgress(const SymmetricTensor& P, TransgressTarget target,
                       const QuadraticSpace* gspace);

// fast path for t(p_k) via the matrix of delta-images in the defining
// representation; equals transgress(power_sum(g, k), WEDGE, gspace)
Multivector transgress_power_sum(const LieAlgebra& g, int k, const QuadraticSpace* gspace);

// relative transgression of p_k over p, including the -4^m rescaling;
// equals -4^m times the restriction to p of the absolute transgression
Multivector relative_transgress_power_sum(const PairContext& ctx, int k);

// primitive invariants of the pair: relative transgressions of the odd
// power sums p_3, p_5, ..., one per dimension of a, each K-invariant
std::vector<Multivector> primitives_p(const PairContext& ctx);

} // namespace cliffpair
