#pragma once

#include "cliffpair/clifford.hpp"

namespace cliffpair {

enum class InvariantFlavor { CL_K_LIE, CL_K_GROUP, WEDGE_GRADED };

struct InvariantBasis {
    InvariantFlavor flavor = InvariantFlavor::CL_K_LIE;
    std::vector<Multivector> elements;
    std::vector<size_t> gradedDims; // by exterior degree, 0..dim p
};

// Basis of the k-invariants of Cl(p) (same symbol data as the wedge
// invariants); CL_K_GROUP additionally intersects the fixed points of the
// component group generators.
InvariantBasis invariants_cl(const PairContext& ctx, InvariantFlavor flavor);

// graded invariant dimensions of (^j p)^k with a basis per degree
InvariantBasis invariants_wedge_graded(const PairContext& ctx);

// fixed points of the component group generators inside the span of the
// given k-invariants; identity when there are no generators
std::vector<Multivector> group_fixed_subspace(const PairContext& ctx,
                                              const std::vector<Multivector>& basis);

// alpha applied to the quadratic Casimir of k (dual bases under B|_k)
Multivector casimir_image(const PairContext& ctx);

struct ProjectionAlgebra {
    std::vector<Multivector> idempotents;
    std::vector<Scalar> eigenvalues;
    std::vector<std::string> labels;
};

// spectral idempotents of the Casimir image: Lagrange interpolation at the
// rational eigenvalues of its minimal polynomial; for the even orthogonal
// subalgebra the spectrum of the odd central element (the noncommutative
// Pfaffian) refines the splitting, since the Casimir takes equal values on
// k-types conjugate under the outer automorphism
ProjectionAlgebra isotypic_idempotents(const PairContext& ctx);

// Exact membership of target in the span of alpha images of words in the
// k basis. Word products are grown breadth first, pruned by linear
// dependence (products of dependent elements add nothing new), and
// compared through their components of the t-weight of the target: the
// alpha image of U(k) is t-stable, so those components stay inside it.
bool in_alpha_image(const PairContext& ctx, const Multivector& target);

} // namespace cliffpair
